#include "cubekit/surgery.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace cubekit {

namespace {

std::vector<SignedPerm3> or_reversing_maps(const Facet& f1, const Facet& f2) {
  int need = -facet_orientation_sign(f1) * facet_orientation_sign(f2);
  std::vector<SignedPerm3> out;
  for (const auto& p : all_signed_perm3())
    if (p.det() == need) out.push_back(p);
  return out;
}

GadgetChain chain_of(const FaceCycle& cycle) {
  GadgetChain ch;
  ch.end1 = cycle.steps.front().square;
  ch.open1 = other_facet(ch.end1, cycle.steps.front().exit);
  ch.end2 = cycle.steps.back().square;
  ch.open2 = cycle.steps.back().exit;
  ch.length = cycle.length();
  return ch;
}

// Two squares of a facet are opposite 2-faces of that 3-cube iff their
// other containing facets share an axis.
bool non_opposite_in_facet(const SquareFace& q1, const SquareFace& q2, const Facet& f) {
  return other_facet(q1, f).axis != other_facet(q2, f).axis;
}

std::string square_token(const SquareFace& q) {
  auto sgn = [](int s) { return s > 0 ? "+" : "-"; };
  return std::to_string(q.cube) + ".{" + sgn(q.sign_a) + std::to_string(q.axis_a) +
         sgn(q.sign_b) + std::to_string(q.axis_b) + "}";
}

Gadget make_gadget(int open_axis, const std::array<SignedPerm3, 3>& maps,
                   const std::string& provenance) {
  Gadget g;
  g.body.n = 1;
  g.open_a = Facet{0, open_axis, 1};
  g.open_b = Facet{0, open_axis, -1};
  g.body.open_facets = {g.open_a, g.open_b};
  int k = 0;
  for (int axis = 1; axis <= 4; ++axis) {
    if (axis == open_axis) continue;
    Pairing p;
    p.source = Facet{0, axis, 1};
    p.target = Facet{0, axis, -1};
    p.map = maps[k++];
    g.body.pairings.push_back(p);
  }
  normalize(g.body);
  g.provenance = provenance;
  return g;
}

// Classify the gadget's chains; fills same_pair_a/b and returns true iff it
// matches the merger profile: no closed cycles, 4 cross chains, one
// same-facet chain per open facet with non-opposite endpoints.
bool merger_profile(Gadget& g) {
  auto cycles = trace_cycles(g.body);
  g.chains.clear();
  int cross = 0;
  std::vector<const GadgetChain*> same_a, same_b;
  for (const auto& cyc : cycles) {
    if (cyc.closed) return false;
    g.chains.push_back(chain_of(cyc));
  }
  if (g.chains.size() != 6) return false;
  for (const auto& ch : g.chains) {
    if (ch.cross()) {
      ++cross;
    } else if (ch.open1 == g.open_a) {
      same_a.push_back(&ch);
    } else {
      same_b.push_back(&ch);
    }
  }
  if (cross != 4 || same_a.size() != 1 || same_b.size() != 1) return false;
  if (!non_opposite_in_facet(same_a[0]->end1, same_a[0]->end2, g.open_a)) return false;
  if (!non_opposite_in_facet(same_b[0]->end1, same_b[0]->end2, g.open_b)) return false;
  g.same_pair_a = {same_a[0]->end1, same_a[0]->end2};
  g.same_pair_b = {same_b[0]->end1, same_b[0]->end2};
  return true;
}

}  // namespace

const Gadget& find_merger_gadget() {
  static const Gadget cached = [] {
    for (int open_axis = 1; open_axis <= 4; ++open_axis) {
      Facet fa{0, open_axis, 1};
      std::array<std::vector<SignedPerm3>, 3> choices;
      int k = 0;
      for (int axis = 1; axis <= 4; ++axis) {
        if (axis == open_axis) continue;
        choices[k++] = or_reversing_maps(Facet{0, axis, 1}, Facet{0, axis, -1});
      }
      (void)fa;
      for (size_t i0 = 0; i0 < choices[0].size(); ++i0)
        for (size_t i1 = 0; i1 < choices[1].size(); ++i1)
          for (size_t i2 = 0; i2 < choices[2].size(); ++i2) {
            std::string prov = "open-axis " + std::to_string(open_axis) + ", maps " +
                               std::to_string(i0) + "/" + std::to_string(i1) + "/" +
                               std::to_string(i2);
            Gadget g = make_gadget(open_axis,
                                   {choices[0][i0], choices[1][i1], choices[2][i2]}, prov);
            if (merger_profile(g)) return g;
          }
    }
    throw Error("no merger gadget in the search space (falsifies the construction)");
  }();
  return cached;
}

Gadget splitter_gadget() {
  Gadget g = make_gadget(1, {SignedPerm3::identity(), SignedPerm3::identity(),
                             SignedPerm3::identity()},
                         "opposite translations, open axis 1");
  auto cycles = trace_cycles(g.body);
  for (const auto& cyc : cycles)
    if (!cyc.closed) g.chains.push_back(chain_of(cyc));
  return g;
}

namespace {

Cubulation splice(const Cubulation& c, int pairing_idx, const Gadget& g,
                  const SignedPerm3& align) {
  const Pairing edge = c.pairings[pairing_idx];
  int gadget_cube = c.n;
  Cubulation out;
  out.n = c.n + 1;
  for (int i = 0; i < static_cast<int>(c.pairings.size()); ++i)
    if (i != pairing_idx) out.pairings.push_back(c.pairings[i]);
  for (Pairing p : g.body.pairings) {
    p.source.cube = gadget_cube;
    p.target.cube = gadget_cube;
    out.pairings.push_back(p);
  }
  Facet open_a = g.open_a, open_b = g.open_b;
  open_a.cube = gadget_cube;
  open_b.cube = gadget_cube;
  out.pairings.push_back({edge.source, open_a, align});
  out.pairings.push_back({open_b, edge.target, compose(invert(align), edge.map)});
  out.open_facets = c.open_facets;
  normalize(out);
  return out;
}

std::vector<int> cycle_id_of_square(const std::vector<FaceCycle>& cycles, int total) {
  std::vector<int> id(total, -1);
  for (size_t i = 0; i < cycles.size(); ++i)
    for (const auto& step : cycles[i].steps)
      id[step.square.global_index()] = static_cast<int>(i);
  return id;
}

// True iff the partition of the pre-existing squares changed exactly by
// merging old cycles a and b, with every other cycle keeping its class.
bool merge_exact(const std::vector<FaceCycle>& old_cycles,
                 const std::vector<FaceCycle>& new_cycles, int old_squares, int a, int b) {
  std::vector<int> new_id(0);
  {
    int total = 0;
    for (const auto& cyc : new_cycles)
      for (const auto& s : cyc.steps)
        total = std::max(total, s.square.global_index() + 1);
    new_id.assign(total, -1);
    for (size_t i = 0; i < new_cycles.size(); ++i)
      for (const auto& s : new_cycles[i].steps)
        new_id[s.square.global_index()] = static_cast<int>(i);
  }
  std::vector<int> mapped(old_cycles.size(), -1);
  for (size_t o = 0; o < old_cycles.size(); ++o) {
    for (const auto& s : old_cycles[o].steps) {
      int g = s.square.global_index();
      if (g >= old_squares || g >= static_cast<int>(new_id.size())) return false;
      if (mapped[o] < 0) mapped[o] = new_id[g];
      else if (mapped[o] != new_id[g]) return false;  // old cycle split
    }
  }
  if (mapped[a] != mapped[b]) return false;
  std::set<int> images;
  for (size_t o = 0; o < old_cycles.size(); ++o) {
    if (static_cast<int>(o) == b) continue;
    if (!images.insert(mapped[o]).second) return false;  // an unintended merge
  }
  for (size_t o = 0; o < old_cycles.size(); ++o) {
    if (static_cast<int>(o) == a || static_cast<int>(o) == b) continue;
    if (monodromy_class(old_cycles[o].monodromy) !=
        monodromy_class(new_cycles[mapped[o]].monodromy))
      return false;
  }
  return true;
}

}  // namespace

std::pair<Cubulation, MergerCertificate> insert_flower(const Cubulation& c,
                                                       std::optional<int> edge_index) {
  if (!c.complete()) throw Error("flower insertion requires a complete cubulation");
  if (!is_orientable(c)) throw Error("flower insertion requires an orientable cubulation");
  auto cycles = trace_cycles(c);
  int k = static_cast<int>(cycles.size());
  if (k <= 1) throw Error("flower insertion requires more than one cusp");
  auto cid = cycle_id_of_square(cycles, 24 * c.n);

  const Gadget& gadget = find_merger_gadget();

  std::vector<int> edges;
  if (edge_index) {
    if (*edge_index < 0 || *edge_index >= static_cast<int>(c.pairings.size()))
      throw Error("edge index out of range");
    edges.push_back(*edge_index);
  } else {
    for (int e = 0; e < static_cast<int>(c.pairings.size()); ++e) edges.push_back(e);
  }

  for (int e : edges) {
    const Pairing& edge = c.pairings[e];
    // qualification: two non-opposite squares of the edge's cube in
    // distinct cycles
    auto squares = squares_of_facet(edge.source);
    bool qualifies = false;
    for (int i = 0; i < 6 && !qualifies; ++i)
      for (int j = i + 1; j < 6 && !qualifies; ++j)
        if (non_opposite_in_facet(squares[i], squares[j], edge.source) &&
            cid[squares[i].global_index()] != cid[squares[j].global_index()])
          qualifies = true;
    if (!qualifies) continue;

    auto try_alignments = [&](bool strong) -> std::optional<std::pair<Cubulation, MergerCertificate>> {
      for (const auto& align : or_reversing_maps(edge.source, gadget.open_a)) {
        FacetPairing back{gadget.open_a, edge.source, invert(align)};
        SquareFace q1 = map_square_only(back, gadget.same_pair_a.first);
        SquareFace q2 = map_square_only(back, gadget.same_pair_a.second);
        int c1 = cid[q1.global_index()], c2 = cid[q2.global_index()];
        if (c1 == c2) continue;
        Cubulation candidate = splice(c, e, gadget, align);
        auto new_cycles = trace_cycles(candidate);
        if (static_cast<int>(new_cycles.size()) != k - 1) continue;
        bool exact = merge_exact(cycles, new_cycles, 24 * c.n, c1, c2);
        if (strong && !exact) continue;
        MergerCertificate cert;
        cert.edge_source = facet_token(edge.source);
        cert.edge_target = facet_token(edge.target);
        cert.merged_square_1 = square_token(q1);
        cert.merged_square_2 = square_token(q2);
        cert.align_map = perm3_to_string(align);
        cert.completion_map = perm3_to_string(compose(invert(align), edge.map));
        cert.cusps_before = k;
        cert.cusps_after = k - 1;
        cert.strand_exact = exact;
        return std::make_pair(std::move(candidate), cert);
      }
      return std::nullopt;
    };

    if (auto hit = try_alignments(true)) return *hit;
    if (auto hit = try_alignments(false)) return *hit;
  }
  throw Error(edge_index ? "no alignment at the given edge reaches k-1 cusps"
                         : "no qualifying edge found (falsifies the flower argument)");
}

namespace {

int find_pairing_with(const Cubulation& c, const Facet& f) {
  for (int i = 0; i < static_cast<int>(c.pairings.size()); ++i)
    if (c.pairings[i].source == f || c.pairings[i].target == f) return i;
  throw Error("no pairing at facet " + facet_token(f));
}

}  // namespace

Cubulation insert_splitter(const Cubulation& c, std::optional<int> edge_index, int count,
                           std::vector<std::string>* move_log) {
  if (!c.complete()) throw Error("splitter insertion requires a complete cubulation");
  if (!is_orientable(c)) throw Error("splitter insertion requires an orientable cubulation");
  if (count < 0) throw Error("splitter count must be >= 0");
  int e = edge_index.value_or(0);
  if (e < 0 || e >= static_cast<int>(c.pairings.size()))
    throw Error("edge index out of range");
  Cubulation cur = c;
  if (count == 0) {
    normalize(cur);
    return cur;
  }
  Gadget gadget = splitter_gadget();
  for (int step = 0; step < count; ++step) {
    int before = static_cast<int>(trace_cycles(cur).size());
    Pairing edge = cur.pairings[e];
    auto maps = or_reversing_maps(edge.source, gadget.open_a);
    Cubulation next = splice(cur, e, gadget, maps.front());
    int gadget_cube = cur.n;
    int after = static_cast<int>(trace_cycles(next).size());
    if (move_log) {
      nlohmann::json j;
      j["op"] = "split";
      j["edge"] = {facet_token(edge.source), facet_token(edge.target)};
      j["new_cube"] = gadget_cube;
      j["cusps_before"] = before;
      j["cusps_after"] = after;
      move_log->push_back(j.dump());
    }
    cur = std::move(next);
    // the next insertion in the series goes on the downstream half-edge
    Facet open_b = gadget.open_b;
    open_b.cube = gadget_cube;
    e = find_pairing_with(cur, open_b);
    // insert at the side facing the original target facet
    if (!(cur.pairings[e].source == open_b || cur.pairings[e].target == open_b))
      throw Error("internal: lost the series edge");
  }
  return cur;
}

Cubulation reduce_to_k(const Cubulation& c, int k, std::vector<std::string>* move_log) {
  if (k < 1) throw Error("target cusp count must be >= 1");
  if (!c.complete()) throw Error("reduce requires a complete cubulation");
  if (!is_orientable(c)) throw Error("reduce requires an orientable cubulation");
  Cubulation cur = c;
  normalize(cur);
  int cusps = static_cast<int>(trace_cycles(cur).size());
  while (cusps < k) {
    cur = insert_splitter(cur, 0, 1, move_log);
    int now = static_cast<int>(trace_cycles(cur).size());
    if (now <= cusps) throw Error("splitter failed to raise the cusp count");
    cusps = now;
  }
  while (cusps > k) {
    auto [next, cert] = insert_flower(cur);
    if (move_log) {
      nlohmann::json j;
      j["op"] = "flower";
      j["edge"] = {cert.edge_source, cert.edge_target};
      j["merged"] = {cert.merged_square_1, cert.merged_square_2};
      j["align"] = cert.align_map;
      j["cusps_before"] = cert.cusps_before;
      j["cusps_after"] = cert.cusps_after;
      j["strand_exact"] = cert.strand_exact;
      move_log->push_back(j.dump());
    }
    cur = std::move(next);
    cusps = cert.cusps_after;
  }
  return cur;
}

Cubulation cyclic_unroll(const Cubulation& c, int edge_index, int count) {
  if (count < 1) throw Error("cover degree must be >= 1");
  if (edge_index < 0 || edge_index >= static_cast<int>(c.pairings.size()))
    throw Error("edge index out of range");
  Cubulation out = c;
  if (count == 1) {
    normalize(out);
    return out;
  }
  out = Cubulation{};
  out.n = c.n * count;
  for (int copy = 0; copy < count; ++copy) {
    int off = copy * c.n;
    for (int i = 0; i < static_cast<int>(c.pairings.size()); ++i) {
      Pairing p = c.pairings[i];
      p.source.cube += off;
      if (i == edge_index)
        p.target.cube += ((copy + 1) % count) * c.n;
      else
        p.target.cube += off;
      out.pairings.push_back(p);
    }
    for (Facet f : c.open_facets) {
      f.cube += off;
      out.open_facets.push_back(f);
    }
  }
  normalize(out);
  return out;
}

std::vector<int> edge_windings(const Cubulation& c, int edge_index) {
  if (edge_index < 0 || edge_index >= static_cast<int>(c.pairings.size()))
    throw Error("edge index out of range");
  FacetIndex index(c);
  auto cycles = trace_cycles(c);
  const Pairing& edge = c.pairings[edge_index];
  std::vector<int> windings;
  for (const auto& cyc : cycles) {
    int w = 0;
    for (const auto& step : cyc.steps) {
      if (!cyc.closed) continue;
      if (index.pairing_index(step.exit) != edge_index) continue;
      w += (step.exit == edge.source) ? 1 : -1;
    }
    windings.push_back(w);
  }
  return windings;
}

}  // namespace cubekit
