#include "cubekit/census.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>
#include <unordered_set>

namespace cubekit {

namespace {

// ---------------------------------------------------------------------------
// Static transition tables (cube-independent)
// ---------------------------------------------------------------------------

struct StepEntry {
  uint8_t local_img;  // target square, local index 0..23
  uint8_t twist;      // index into all_signed_perm2()
};

struct Tables {
  // tbl[src_slot][tgt_slot][map] over the 6 squares of the source facet
  StepEntry tbl[8][8][48][6];
  uint8_t pos_in_facet[8][24];   // 255 when not contained
  uint8_t fslots[24][2];         // the two facet slots of each square
  uint8_t comp8[8][8];           // compose (apply left first)
  uint8_t inv48[48];
  int8_t det48[48];
  MonodromyClass class8[8];
  int eps_slot[8];               // orientation sign per facet slot

  Tables() {
    const auto& all3 = all_signed_perm3();
    const auto& all2 = all_signed_perm2();
    for (int s = 0; s < 8; ++s)
      for (int q = 0; q < 24; ++q) pos_in_facet[s][q] = 255;
    for (int s = 0; s < 8; ++s) {
      Facet f = facet_from_slot(0, s);
      eps_slot[s] = facet_orientation_sign(f);
      auto squares = squares_of_facet(f);
      for (int i = 0; i < 6; ++i) pos_in_facet[s][squares[i].local_index()] = i;
    }
    for (int q = 0; q < 24; ++q) {
      SquareFace sq = square_from_local(0, q);
      fslots[q][0] = static_cast<uint8_t>(Facet{0, sq.axis_a, sq.sign_a}.slot());
      fslots[q][1] = static_cast<uint8_t>(Facet{0, sq.axis_b, sq.sign_b}.slot());
    }
    for (int a = 0; a < 8; ++a) {
      class8[a] = monodromy_class(all2[a]);
      for (int b = 0; b < 8; ++b)
        comp8[a][b] = static_cast<uint8_t>(index_of(compose(all2[a], all2[b])));
    }
    for (int m = 0; m < 48; ++m) {
      inv48[m] = static_cast<uint8_t>(index_of(invert(all3[m])));
      det48[m] = static_cast<int8_t>(all3[m].det());
    }
    for (int fs = 0; fs < 8; ++fs) {
      Facet src = facet_from_slot(0, fs);
      auto squares = squares_of_facet(src);
      for (int ts = 0; ts < 8; ++ts) {
        Facet tgt = facet_from_slot(0, ts);
        for (int m = 0; m < 48; ++m) {
          FacetPairing pairing{src, tgt, all3[m]};
          for (int i = 0; i < 6; ++i) {
            auto [img, fr] = map_square(pairing, squares[i], canonical_frame(squares[i]));
            tbl[fs][ts][m][i].local_img = static_cast<uint8_t>(img.local_index());
            tbl[fs][ts][m][i].twist = static_cast<uint8_t>(index_of(frame_coordinates(fr)));
          }
        }
      }
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

// ---------------------------------------------------------------------------
// Union-find over squares with rollback; tracks path/cycle components
// ---------------------------------------------------------------------------

struct Dsu {
  std::vector<int> parent, size;
  std::vector<uint8_t> closed;
  int open_comps = 0, closed_comps = 0;
  struct Op { uint8_t type; int a, b; };
  std::vector<Op> log;

  void init(int total) {
    parent.resize(total);
    size.assign(total, 1);
    closed.assign(total, 0);
    for (int i = 0; i < total; ++i) parent[i] = i;
    open_comps = total;
    closed_comps = 0;
    log.clear();
  }

  int find(int x) const {
    while (parent[x] != x) x = parent[x];
    return x;
  }

  void link(int u, int v) {
    int ru = find(u), rv = find(v);
    if (ru == rv) {
      closed[ru] = 1;
      ++closed_comps;
      --open_comps;
      log.push_back({1, ru, 0});
      return;
    }
    if (size[ru] > size[rv]) std::swap(ru, rv);
    parent[ru] = rv;
    size[rv] += size[ru];
    --open_comps;
    log.push_back({0, ru, rv});
  }

  size_t mark() const { return log.size(); }

  void rollback(size_t m) {
    while (log.size() > m) {
      Op op = log.back();
      log.pop_back();
      if (op.type == 0) {
        size[op.b] -= size[op.a];
        parent[op.a] = op.a;
        ++open_comps;
      } else {
        closed[op.a] = 0;
        --closed_comps;
        ++open_comps;
      }
    }
  }
};

// ---------------------------------------------------------------------------
// The enumeration engine
// ---------------------------------------------------------------------------

struct Engine {
  const SearchSpec& spec;
  const Tables& t = tables();
  int n;
  int slots;    // 8n
  int squares;  // 24n
  int target_k = -1;  // effective cusp-count filter, -1 when absent

  // admissible map indices per (src slot, tgt slot)
  std::vector<int> adm[8][8];

  // DFS state
  std::vector<std::pair<int, int>> matching;  // global slot pairs, first < second
  std::vector<int> partner, map_of;           // per global slot (directed)
  Dsu dsu;
  uint64_t nodes = 0;

  std::vector<std::pair<std::string, CensusEntry>> found;  // (canonical, entry) in order
  uint64_t emitted_classes = 0;
  std::unordered_set<std::string> seen;  // sequential dedup (early stop mode)
  bool dedup_inline = false;

  explicit Engine(const SearchSpec& s) : spec(s), n(s.n), slots(8 * s.n), squares(24 * s.n) {
    if (spec.cusp_count)
      target_k = *spec.cusp_count;
    else if (spec.monodromy_profile)
      target_k = static_cast<int>(spec.monodromy_profile->size());
    for (int fs = 0; fs < 8; ++fs)
      for (int ts = 0; ts < 8; ++ts)
        for (int m = 0; m < 48; ++m) {
          if (spec.orientable_only &&
              t.det48[m] * t.eps_slot[fs] * t.eps_slot[ts] != -1)
            continue;
          adm[fs][ts].push_back(m);
        }
    partner.assign(slots, -1);
    map_of.assign(slots, -1);
    dsu.init(squares);
  }

  bool cusp_prune() const {
    if (target_k < 0) return false;
    if (dsu.closed_comps > target_k) return true;
    if (dsu.open_comps > 0 && dsu.closed_comps >= target_k) return true;
    if (dsu.closed_comps + dsu.open_comps < target_k) return true;
    return false;
  }

  void add_links(int ga, int gb, int m) {
    int fs = ga % 8, ts = gb % 8;
    int cube_b = gb / 8;
    Facet fa = facet_from_slot(0, fs);
    auto sqs = squares_of_facet(fa);
    int cube_a = ga / 8;
    for (int i = 0; i < 6; ++i) {
      int u = cube_a * 24 + sqs[i].local_index();
      int v = cube_b * 24 + t.tbl[fs][ts][m][i].local_img;
      dsu.link(u, v);
    }
  }

  // trace the assignment; returns sorted (h, class) profile
  std::vector<std::pair<int, MonodromyClass>> trace_profile() const {
    std::vector<char> visited(squares, 0);
    std::vector<std::pair<int, MonodromyClass>> profile;
    for (int s = 0; s < squares; ++s) {
      if (visited[s]) continue;
      int start_sq = s;
      int cube = s / 24, local = s % 24;
      int slot_a = t.fslots[local][0], slot_b = t.fslots[local][1];
      int start_exit = cube * 8 + std::min(slot_a, slot_b);
      int sq = start_sq, exit = start_exit;
      int acc = 0;  // identity twist
      int h = 0;
      do {
        visited[sq] = 1;
        int m = map_of[exit];
        int tgt = partner[exit];
        int pos = t.pos_in_facet[exit % 8][sq % 24];
        const StepEntry& e = t.tbl[exit % 8][tgt % 8][m][pos];
        sq = (tgt / 8) * 24 + e.local_img;
        acc = t.comp8[acc][e.twist];
        int l = sq % 24;
        int other = (t.fslots[l][0] == tgt % 8) ? t.fslots[l][1] : t.fslots[l][0];
        exit = (tgt / 8) * 8 + other;
        ++h;
      } while (!(sq == start_sq && exit == start_exit));
      profile.push_back({h, t.class8[acc]});
    }
    std::sort(profile.begin(), profile.end());
    return profile;
  }

  bool connected() const {
    if (n <= 1) return true;
    std::vector<char> vis(n, 0);
    std::vector<int> stack{0};
    vis[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int s = 0; s < 8; ++s) {
        int p = partner[u * 8 + s];
        int v = p / 8;
        if (!vis[v]) { vis[v] = 1; ++count; stack.push_back(v); }
      }
    }
    return count == n;
  }

  Cubulation build() const {
    Cubulation c;
    c.n = n;
    for (auto [ga, gb] : matching) {
      Pairing p;
      p.source = facet_from_global_slot(ga);
      p.target = facet_from_global_slot(gb);
      p.map = all_signed_perm3()[map_of[ga]];
      c.pairings.push_back(p);
    }
    normalize(c);
    return c;
  }

  // returns false to stop the whole enumeration (limit reached)
  bool leaf() {
    if (target_k >= 0 && dsu.closed_comps != target_k) return true;
    if (!connected()) return true;
    auto profile = trace_profile();
    if (spec.monodromy_profile) {
      std::vector<MonodromyClass> want = *spec.monodromy_profile;
      std::sort(want.begin(), want.end());
      std::vector<MonodromyClass> have;
      for (auto& [h, cls] : profile) have.push_back(cls);
      std::sort(have.begin(), have.end());
      if (want != have) return true;
    }
    Cubulation c = build();
    std::string canon = canonical_form(c);
    if (dedup_inline) {
      if (!seen.insert(canon).second) return true;
    }
    CensusEntry e;
    e.canonical_form = canon;
    e.n = n;
    e.orientable = spec.orientable_only ? true : is_orientable(c);
    e.profile = profile;
    e.representative = serialize(c);
    found.push_back({canon, std::move(e)});
    if (dedup_inline) {
      ++emitted_classes;
      if (emitted_classes >= spec.limit) return false;
    }
    return true;
  }

  bool assign_maps(size_t pair_idx) {
    if (++nodes > spec.budget)
      throw Error("enumeration budget exceeded; raise --budget");
    if (pair_idx == matching.size()) return leaf();
    auto [ga, gb] = matching[pair_idx];
    for (int m : adm[ga % 8][gb % 8]) {
      size_t mk = dsu.mark();
      add_links(ga, gb, m);
      if (!cusp_prune()) {
        partner[ga] = gb;
        partner[gb] = ga;
        map_of[ga] = m;
        map_of[gb] = t.inv48[m];
        if (!assign_maps(pair_idx + 1)) return false;
        partner[ga] = partner[gb] = -1;
        map_of[ga] = map_of[gb] = -1;
      }
      dsu.rollback(mk);
    }
    return true;
  }

  // enumerate matchings extending the current prefix; `used` flags slots
  bool match_slots(std::vector<char>& used, int matched) {
    if (matched == slots) return assign_maps(0);
    int lo = 0;
    while (used[lo]) ++lo;
    used[lo] = 1;
    for (int hi = lo + 1; hi < slots; ++hi) {
      if (used[hi]) continue;
      if (spec.opposite_only) {
        // same cube, same axis, opposite sign
        if (hi / 8 != lo / 8 || hi % 4 != lo % 4 || (hi % 8 < 4) == (lo % 8 < 4)) continue;
      }
      used[hi] = 1;
      matching.push_back({lo, hi});
      bool go = match_slots(used, matched + 2);
      matching.pop_back();
      used[hi] = 0;
      if (!go) { used[lo] = 0; return false; }
    }
    used[lo] = 0;
    return true;
  }

  // run restricted to a fixed partner for slot 0 (parallel task split)
  bool run(int first_partner = -1) {
    std::vector<char> used(slots, 0);
    if (first_partner < 0) return match_slots(used, 0);
    if (spec.opposite_only &&
        !(first_partner / 8 == 0 && first_partner % 4 == 0 && first_partner % 8 >= 4))
      return true;
    used[0] = used[first_partner] = 1;
    matching.push_back({0, first_partner});
    bool go = match_slots(used, 2);
    matching.pop_back();
    used[0] = used[first_partner] = 0;
    return go;
  }
};

}  // namespace

uint64_t matching_count(int n) {
  uint64_t r = 1;
  for (int k = 8 * n - 1; k > 1; k -= 2) r *= static_cast<uint64_t>(k);
  return r;
}

std::vector<CensusEntry> enumerate_census(const SearchSpec& spec) {
  if (spec.n < 1) throw Error("search requires n >= 1");
  bool sequential = spec.jobs <= 1 || spec.limit != UINT64_MAX;
  if (sequential) {
    Engine engine(spec);
    engine.dedup_inline = true;
    engine.run();
    std::vector<CensusEntry> out;
    for (auto& [canon, e] : engine.found) out.push_back(std::move(e));
    return out;
  }
  // parallel over the partner of slot 0, merged in branch order
  int branches = 8 * spec.n;
  std::vector<std::vector<std::pair<std::string, CensusEntry>>> results(branches);
  std::atomic<int> next{1};
  std::atomic<bool> failed{false};
  std::string fail_msg;
  std::mutex fail_mutex;
  auto worker = [&]() {
    while (true) {
      int b = next.fetch_add(1);
      if (b >= branches || failed.load()) break;
      try {
        Engine engine(spec);
        engine.run(b);
        results[b] = std::move(engine.found);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(fail_mutex);
        failed = true;
        fail_msg = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int j = 0; j < spec.jobs; ++j) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failed) throw Error(fail_msg);
  std::vector<CensusEntry> out;
  std::unordered_set<std::string> seen;
  for (int b = 1; b < branches; ++b) {
    for (auto& [canon, e] : results[b]) {
      if (!seen.insert(canon).second) continue;
      out.push_back(std::move(e));
      if (out.size() >= spec.limit) return out;
    }
  }
  return out;
}

Cubulation find_one_cusp_seed() {
  SearchSpec spec;
  spec.n = 1;
  spec.orientable_only = true;
  spec.cusp_count = 1;
  spec.monodromy_profile = std::vector<MonodromyClass>{MonodromyClass::I};
  spec.limit = 1;
  auto entries = enumerate_census(spec);
  if (entries.empty())
    throw Error("no orientable one-cube single-cycle cubulation found "
                "(falsifies the construction)");
  return parse(entries[0].representative);
}

std::pair<Cubulation, Cubulation> find_two_cusp_examples() {
  auto search_profile = [&](MonodromyClass cls) {
    SearchSpec spec;
    spec.n = 1;
    spec.orientable_only = true;
    spec.cusp_count = 2;
    spec.monodromy_profile = std::vector<MonodromyClass>{cls, cls};
    spec.limit = 1;
    auto entries = enumerate_census(spec);
    if (entries.empty())
      throw Error("no two-cusp cubulation with profile {" + to_string(cls) + "," +
                  to_string(cls) + "} (falsifies the construction)");
    return parse(entries[0].representative);
  };
  return {search_profile(MonodromyClass::R4), search_profile(MonodromyClass::MinusI)};
}

std::string profile_string(const std::vector<std::pair<int, MonodromyClass>>& profile) {
  std::string out;
  for (size_t i = 0; i < profile.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(profile[i].first) + ":" + to_string(profile[i].second);
  }
  return out;
}

namespace {

std::string escape_canonical(const std::string& canon) {
  std::string out;
  for (char ch : canon) out += (ch == '\n') ? ';' : ch;
  return out;
}

std::string unescape_canonical(const std::string& text) {
  std::string out;
  for (char ch : text) out += (ch == ';') ? '\n' : ch;
  return out;
}

}  // namespace

void census_write(const std::vector<CensusEntry>& entries, std::ostream& out) {
  std::vector<const CensusEntry*> sorted;
  for (const auto& e : entries) sorted.push_back(&e);
  std::sort(sorted.begin(), sorted.end(),
            [](const CensusEntry* a, const CensusEntry* b) {
              return a->canonical_form < b->canonical_form;
            });
  for (size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i]->canonical_form == sorted[i - 1]->canonical_form)
      throw Error("duplicate canonical form in census");
  out << "#cubekit-census v1\n";
  for (const auto* e : sorted) {
    out << escape_canonical(e->canonical_form) << "\t" << e->n << "\t"
        << (e->orientable ? 1 : 0) << "\t" << profile_string(e->profile) << "\n";
  }
}

std::vector<CensusEntry> census_read(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "#cubekit-census v1")
    throw Error("census file: bad or missing version header");
  std::vector<CensusEntry> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cols;
    size_t start = 0;
    while (true) {
      size_t tab = line.find('\t', start);
      cols.push_back(line.substr(start, tab == std::string::npos ? tab : tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (cols.size() != 4) throw Error("census file: expected 4 columns");
    CensusEntry e;
    e.canonical_form = unescape_canonical(cols[0]);
    e.n = std::stoi(cols[1]);
    e.orientable = cols[2] == "1";
    if (!cols[3].empty()) {
      std::istringstream ps(cols[3]);
      std::string item;
      while (std::getline(ps, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) throw Error("census file: bad profile");
        e.profile.push_back({std::stoi(item.substr(0, colon)),
                             monodromy_class_from_string(item.substr(colon + 1))});
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace cubekit
