#include "cubekit/canonical.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace cubekit {

namespace {

// Encoded pair line, ordered exactly like the serialized line text (cube
// indices are single digits within the guaranteed-exact range).  Facet
// rank = cube*8 + slot; map rank orders entries -1 < -2 < -3 < 1 < 2 < 3,
// matching the byte order of the textual form.
inline int map_entry_rank(int e) { return e < 0 ? (-e - 1) : (3 + e - 1); }

inline int map_rank(const SignedPerm3& p) {
  return map_entry_rank(p.img[0]) * 36 + map_entry_rank(p.img[1]) * 6 +
         map_entry_rank(p.img[2]);
}

inline uint32_t encode_line(int src_rank, int tgt_rank, int mrank) {
  return (static_cast<uint32_t>(src_rank) << 20) | (static_cast<uint32_t>(tgt_rank) << 8) |
         static_cast<uint32_t>(mrank);
}

// Induced data of every chart at every facet slot; cubulation-independent.
struct ChartTables {
  std::array<std::array<int, 8>, 384> slot_image;        // [g][slot] -> slot
  std::array<std::array<SignedPerm3, 8>, 384> induced3;  // [g][slot]
  std::array<std::array<SignedPerm3, 8>, 384> induced3_inv;

  ChartTables() {
    const auto& all4 = all_signed_perm4();
    for (int g = 0; g < 384; ++g) {
      for (int slot = 0; slot < 8; ++slot) {
        Facet f = facet_from_slot(0, slot);
        slot_image[g][slot] = apply_to_facet(all4[g], f).slot();
        induced3[g][slot] = induced_facet_map(all4[g], f);
        induced3_inv[g][slot] = invert(induced3[g][slot]);
      }
    }
  }
};

const ChartTables& chart_tables() {
  static const ChartTables t;
  return t;
}

struct Searcher {
  const Cubulation& c;
  int n;
  int group = 384;
  const std::array<std::array<int, 8>, 384>& slot_image;
  const std::array<std::array<SignedPerm3, 8>, 384>& induced3;
  // per pairing, per (source chart, target chart): encoded map ranks for
  // both directions (built only when profitable)
  bool tables = false;
  std::vector<std::vector<uint8_t>> fwd_rank, bwd_rank;  // [pair][gs*384+gt]

  explicit Searcher(const Cubulation& cub)
      : c(cub), n(cub.n), slot_image(chart_tables().slot_image),
        induced3(chart_tables().induced3) {
    if (n >= 2) {
      tables = true;
      fwd_rank.resize(c.pairings.size());
      bwd_rank.resize(c.pairings.size());
      for (size_t pi = 0; pi < c.pairings.size(); ++pi) {
        fwd_rank[pi].resize(group * group);
        bwd_rank[pi].resize(group * group);
        const Pairing& p = c.pairings[pi];
        int ss = p.source.slot(), ts = p.target.slot();
        for (int gs = 0; gs < group; ++gs) {
          SignedPerm3 left = invert(induced3[gs][ss]);
          for (int gt = 0; gt < group; ++gt) {
            SignedPerm3 m = compose(compose(left, p.map), induced3[gt][ts]);
            fwd_rank[pi][gs * group + gt] = static_cast<uint8_t>(map_rank(m));
            bwd_rank[pi][gs * group + gt] = static_cast<uint8_t>(map_rank(invert(m)));
          }
        }
      }
    }
  }

  // Candidate lines for the assignment (perm, charts); charts indexed by
  // original cube.
  void candidate(const std::vector<int>& perm, const std::vector<int>& charts,
                 std::vector<uint32_t>& out) const {
    out.clear();
    for (size_t pi = 0; pi < c.pairings.size(); ++pi) {
      const Pairing& p = c.pairings[pi];
      int ci = p.source.cube, cj = p.target.cube;
      int gi = charts[ci], gj = charts[cj];
      int ra = perm[ci] * 8 + slot_image[gi][p.source.slot()];
      int rb = perm[cj] * 8 + slot_image[gj][p.target.slot()];
      int mr;
      if (tables) {
        mr = ra < rb ? fwd_rank[pi][gi * group + gj] : bwd_rank[pi][gi * group + gj];
      } else {
        SignedPerm3 m =
            compose(compose(chart_tables().induced3_inv[gi][p.source.slot()], p.map),
                    induced3[gj][p.target.slot()]);
        mr = ra < rb ? map_rank(m) : map_rank(invert(m));
      }
      out.push_back(ra < rb ? encode_line(ra, rb, mr) : encode_line(rb, ra, mr));
    }
    std::sort(out.begin(), out.end());
  }
};

uint64_t ipow(uint64_t b, int e) {
  uint64_t r = 1;
  while (e-- > 0) {
    if (r > UINT64_MAX / b) return UINT64_MAX;
    r *= b;
  }
  return r;
}

uint64_t factorial(int n) {
  uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

std::string canonical_form(const Cubulation& c, const CanonicalOptions& opts) {
  if (!c.complete()) throw Error("canonical form requires a complete cubulation");
  {
    auto diag = validate(c);
    if (!diag.empty()) throw Error("canonical form requires a valid cubulation: " + diag[0]);
  }
  uint64_t space = ipow(384, c.n);
  if (space == UINT64_MAX || space > opts.budget / factorial(c.n))
    throw Error("canonical form budget exceeded (n=" + std::to_string(c.n) +
                "); raise --budget");

  Searcher searcher(c);
  int n = c.n;

  std::vector<std::vector<int>> perms;
  {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }

  // best over all assignments; ties cannot differ as strings
  std::vector<uint32_t> best;
  std::vector<int> best_perm, best_charts;

  auto scan_chunk = [&](const std::vector<int>& perm, int g0_lo, int g0_hi,
                        std::vector<uint32_t>& local_best, std::vector<int>& lb_perm,
                        std::vector<int>& lb_charts) {
    std::vector<int> charts(n, 0);
    std::vector<uint32_t> cand;
    cand.reserve(c.pairings.size());
    for (int g0 = g0_lo; g0 < g0_hi; ++g0) {
      charts[0] = g0;
      // odometer over the remaining cubes
      std::fill(charts.begin() + 1, charts.end(), 0);
      while (true) {
        searcher.candidate(perm, charts, cand);
        if (local_best.empty() || cand < local_best) {
          local_best = cand;
          lb_perm = perm;
          lb_charts = charts;
        }
        int pos = n - 1;
        while (pos >= 1 && charts[pos] == 383) charts[pos--] = 0;
        if (pos < 1) break;
        charts[pos]++;
      }
    }
  };

  int jobs = std::max(1, opts.jobs);
  if (jobs == 1 || n == 1) {
    for (const auto& perm : perms) scan_chunk(perm, 0, 384, best, best_perm, best_charts);
  } else {
    // split over (perm, g0 range); deterministic min-reduction
    struct Task { const std::vector<int>* perm; int lo, hi; };
    std::vector<Task> tasks;
    int step = 24;
    for (const auto& perm : perms)
      for (int lo = 0; lo < 384; lo += step) tasks.push_back({&perm, lo, std::min(384, lo + step)});
    std::vector<std::vector<uint32_t>> results(tasks.size());
    std::vector<std::vector<int>> rperm(tasks.size()), rcharts(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
      while (true) {
        size_t t = next.fetch_add(1);
        if (t >= tasks.size()) break;
        scan_chunk(*tasks[t].perm, tasks[t].lo, tasks[t].hi, results[t], rperm[t], rcharts[t]);
      }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (size_t t = 0; t < tasks.size(); ++t) {
      if (results[t].empty()) continue;
      if (best.empty() || results[t] < best) {
        best = results[t];
        best_perm = rperm[t];
        best_charts = rcharts[t];
      }
    }
  }

  const auto& all4 = all_signed_perm4();
  std::vector<SignedPerm4> charts(n);
  for (int i = 0; i < n; ++i) charts[i] = all4[best_charts[i]];
  return serialize(relabel(c, charts, best_perm));
}

bool are_equivalent(const Cubulation& a, const Cubulation& b, const CanonicalOptions& opts) {
  if (a.n != b.n) return false;
  return canonical_form(a, opts) == canonical_form(b, opts);
}

}  // namespace cubekit
