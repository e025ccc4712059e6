#include "cubekit/cycles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace cubekit {

namespace {

struct Walker {
  const Cubulation& c;
  const FacetIndex& index;

  // One trace step from (square, exit facet).  Returns the next square, the
  // facet we exit it through, and accumulates the frame transport.  Returns
  // false at an open facet.
  bool step(SquareFace& q, Facet& exit, SquareFrame* frame) const {
    auto pairing = index.leave(exit);
    if (!pairing) return false;
    SquareFace q2;
    if (frame) {
      auto [img, fr] = map_square(*pairing, q, *frame);
      q2 = img;
      *frame = fr;
    } else {
      q2 = map_square_only(*pairing, q);
    }
    Facet entered = pairing->target;
    exit = other_facet(q2, entered);
    q = q2;
    return true;
  }
};

std::array<Facet, 2> facets_of(const SquareFace& q) {
  Facet f1{q.cube, q.axis_a, q.sign_a};
  Facet f2{q.cube, q.axis_b, q.sign_b};
  return {f1, f2};
}

}  // namespace

std::vector<FaceCycle> trace_cycles(const Cubulation& c) {
  FacetIndex index(c);
  Walker walker{c, index};
  int total = 24 * c.n;
  std::vector<bool> visited(total, false);
  std::vector<FaceCycle> out;

  auto is_open = [&](const Facet& f) { return !index.leave(f).has_value(); };

  for (int s = 0; s < total; ++s) {
    if (visited[s]) continue;
    SquareFace start = square_from_local(s / 24, s % 24);
    auto fs = facets_of(start);
    bool open1 = is_open(fs[0]), open2 = is_open(fs[1]);

    if (!open1 && !open2) {
      // Either a closed cycle or the middle of a chain.  Walk forward from
      // the smaller facet slot; if we come back it is a cycle, if we hit an
      // open facet it is a chain and we restart from that endpoint.
      Facet exit = fs[0].slot() < fs[1].slot() ? fs[0] : fs[1];
      SquareFace q = start;
      Facet e = exit;
      bool chain = false;
      int guard = 48 * c.n + 1;
      while (guard-- > 0) {
        SquareFace q2 = q;
        Facet e2 = e;
        if (!walker.step(q2, e2, nullptr)) { chain = true; break; }
        q = q2; e = e2;
        if (q == start && e == exit) break;
      }
      if (guard < 0) throw Error("trace did not terminate; invalid cubulation?");
      if (!chain) {
        // closed: re-walk collecting steps and the frame
        FaceCycle cyc;
        cyc.closed = true;
        SquareFrame frame = canonical_frame(start);
        q = start; e = exit;
        while (true) {
          cyc.steps.push_back({q, e});
          visited[q.global_index()] = true;
          walker.step(q, e, &frame);
          if (q == start && e == exit) break;
        }
        if (frame.square != start) throw Error("trace did not return to start");
        cyc.monodromy = frame_coordinates(frame);
        out.push_back(std::move(cyc));
        continue;
      }
      // fall through: chain interior; find its endpoint by walking the other way
      q = start; e = fs[0].slot() < fs[1].slot() ? fs[1] : fs[0];
      guard = 48 * c.n + 1;
      while (guard-- > 0) {
        SquareFace q2 = q;
        Facet e2 = e;
        if (!walker.step(q2, e2, nullptr)) break;
        q = q2; e = e2;
      }
      if (guard < 0) throw Error("trace did not terminate; invalid cubulation?");
      // q now sits at an endpoint: e is the exit that failed, i.e. the
      // open facet.
      start = q;
      fs = facets_of(start);
      open1 = is_open(fs[0]);
      open2 = is_open(fs[1]);
    }

    // Chain starting at `start` (a square with at least one open facet).
    // Canonical orientation: among the chain's two endpoints pick the one
    // with the smaller (square index, open slot) key; we may be at either.
    auto walk_chain = [&](const SquareFace& from, const Facet& open_facet,
                          bool record) -> std::pair<SquareFace, Facet> {
      // enter at `from` through its open facet, exit through the other
      SquareFace q = from;
      Facet e = other_facet(q, open_facet);
      FaceCycle cyc;
      cyc.closed = false;
      int guard = 48 * c.n + 1;
      while (guard-- > 0) {
        SquareFace q2 = q;
        Facet e2 = e;
        bool more = walker.step(q2, e2, nullptr);
        if (record) {
          cyc.steps.push_back({q, e});
          visited[q.global_index()] = true;
        }
        if (!more) {
          if (record) {
            cyc.steps.back().exit = e;  // terminal exit is the open facet
            out.push_back(std::move(cyc));
          }
          return {q, e};
        }
        q = q2; e = e2;
      }
      throw Error("trace did not terminate; invalid cubulation?");
    };

    Facet my_open = open1 ? fs[0] : fs[1];
    // walk once without recording to find the far endpoint
    auto [farq, fare] = walk_chain(start, my_open, false);
    long key_here = static_cast<long>(start.global_index()) * 8 + my_open.slot();
    long key_far = static_cast<long>(farq.global_index()) * 8 + fare.slot();
    if (key_far < key_here)
      walk_chain(farq, fare, true);
    else
      walk_chain(start, my_open, true);
  }

  // sanity: exact partition of all squares
  long covered = 0;
  for (const auto& cyc : out) covered += cyc.length();
  if (covered != total) throw Error("cycle trace did not partition the squares");
  return out;
}

SignedPerm2 trace_monodromy_from(const Cubulation& c, const SquareFace& start,
                                 const Facet& exit) {
  FacetIndex index(c);
  Walker walker{c, index};
  SquareFrame frame = canonical_frame(start);
  SquareFace q = start;
  Facet e = exit;
  int guard = 24 * c.n + 1;
  while (guard-- > 0) {
    if (!walker.step(q, e, &frame)) throw Error("cycle is not closed");
    if (q == start && e == exit) return frame_coordinates(frame);
  }
  throw Error("trace exceeded square count");
}

CuspReport classify_cusp(const FaceCycle& cycle, bool cubulation_orientable) {
  if (!cycle.closed) throw Error("cannot classify an open chain");
  CuspReport r;
  r.h = cycle.length();
  r.cls = monodromy_class(cycle.monodromy);
  r.section_volume = 4L * r.h;
  if (cubulation_orientable) {
    switch (r.cls) {
      case MonodromyClass::I:
        r.shape = "T3(2x2x" + std::to_string(r.h) + ")";
        break;
      case MonodromyClass::MinusI:
        r.shape = "TB(-I," + std::to_string(r.h) + ")";
        break;
      case MonodromyClass::R4:
        r.shape = "TB(R4," + std::to_string(r.h) + ")";
        break;
      default:
        break;  // reflections cannot occur in the orientable case
    }
  }
  return r;
}

InvariantReport invariant_report(const Cubulation& c) {
  if (!c.complete()) throw Error("invariant report requires a complete cubulation");
  InvariantReport rep;
  rep.n = c.n;
  rep.chi = 4LL * c.n;
  long long num = 16LL * c.n, den = 3;
  long long g = std::gcd(num, den);
  rep.volume_coeff = {num / g, den / g};
  rep.volume = static_cast<double>(num) / static_cast<double>(den) * M_PI * M_PI;
  rep.orientable = is_orientable(c);
  auto cycles = trace_cycles(c);
  rep.k = static_cast<int>(cycles.size());
  rep.total_section_volume = 0;
  for (const auto& cyc : cycles) {
    rep.cusps.push_back(classify_cusp(cyc, rep.orientable));
    rep.total_section_volume += rep.cusps.back().section_volume;
  }
  return rep;
}

namespace {

std::string volume_string(const InvariantReport& r) {
  std::ostringstream os;
  os << r.volume_coeff.num << "/" << r.volume_coeff.den << "*pi^2 (";
  os.setf(std::ios::fixed);
  os.precision(6);
  os << r.volume << ")";
  return os.str();
}

}  // namespace

std::string report_tsv(const InvariantReport& r) {
  std::string out = "#cycle_len\tmonodromy_class\tshape\tsection_volume\n";
  for (const auto& cusp : r.cusps) {
    out += std::to_string(cusp.h) + "\t" + to_string(cusp.cls) + "\t" +
           (cusp.shape ? *cusp.shape : "-") + "\t" + std::to_string(cusp.section_volume) +
           "\n";
  }
  out += "#n\tk\tchi\tvolume\ttotal_section_volume\torientable\n";
  out += std::to_string(r.n) + "\t" + std::to_string(r.k) + "\t" + std::to_string(r.chi) +
         "\t" + volume_string(r) + "\t" + std::to_string(r.total_section_volume) + "\t" +
         (r.orientable ? "yes" : "no") + "\n";
  return out;
}

std::string report_json(const InvariantReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["chi"] = r.chi;
  j["volume_coeff"] = {r.volume_coeff.num, r.volume_coeff.den};
  j["volume"] = r.volume;
  j["total_section_volume"] = r.total_section_volume;
  j["orientable"] = r.orientable;
  j["cusps"] = nlohmann::json::array();
  for (const auto& cusp : r.cusps) {
    nlohmann::json cj;
    cj["h"] = cusp.h;
    cj["monodromy_class"] = to_string(cusp.cls);
    if (cusp.shape) cj["shape"] = *cusp.shape;
    cj["section_volume"] = cusp.section_volume;
    j["cusps"].push_back(cj);
  }
  return j.dump(2) + "\n";
}

}  // namespace cubekit
