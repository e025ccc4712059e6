#include "cubekit/cubulation.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace cubekit {

std::string pair_line(const Pairing& p) {
  return "pair " + facet_token(p.source) + " " + facet_token(p.target) + " " +
         perm3_to_string(p.map);
}

namespace {

Pairing normalized(const Pairing& p) {
  if (facet_token(p.target) < facet_token(p.source))
    return Pairing{p.target, p.source, invert(p.map)};
  return p;
}

}  // namespace

void normalize(Cubulation& c) {
  for (auto& p : c.pairings) p = normalized(p);
  std::sort(c.pairings.begin(), c.pairings.end(), [](const Pairing& a, const Pairing& b) {
    return pair_line(a) < pair_line(b);
  });
  std::sort(c.open_facets.begin(), c.open_facets.end(), [](const Facet& a, const Facet& b) {
    return facet_token(a) < facet_token(b);
  });
}

std::string serialize(const Cubulation& c) {
  Cubulation copy = c;
  normalize(copy);
  std::string out = "cubes " + std::to_string(copy.n) + "\n";
  for (const auto& p : copy.pairings) out += pair_line(p) + "\n";
  for (const auto& f : copy.open_facets) out += "open " + facet_token(f) + "\n";
  return out;
}

Cubulation parse(const std::string& text, const ParseOptions& opts) {
  Cubulation c;
  bool have_cubes = false;
  std::vector<int> seen;  // global slots claimed so far, for error reporting
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  auto check_facet = [&](const Facet& f, int line) {
    if (f.cube >= c.n)
      throw ParseError(line, "facet " + facet_token(f) + " out of range (cubes " +
                                 std::to_string(c.n) + ")");
    int slot = f.global_slot();
    if (std::find(seen.begin(), seen.end(), slot) != seen.end())
      throw ParseError(line, "facet " + facet_token(f) + " already used");
    seen.push_back(slot);
  };
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "cubes") {
      if (have_cubes) throw ParseError(lineno, "duplicate 'cubes' line");
      if (!(ls >> c.n) || c.n < 1) throw ParseError(lineno, "bad cube count");
      have_cubes = true;
    } else if (word == "pair") {
      if (!have_cubes) throw ParseError(lineno, "'pair' before 'cubes'");
      std::string t1, t2;
      int m1, m2, m3;
      if (!(ls >> t1 >> t2 >> m1 >> m2 >> m3))
        throw ParseError(lineno, "expected 'pair <facet> <facet> <m1> <m2> <m3>'");
      std::string rest;
      if (ls >> rest) throw ParseError(lineno, "trailing tokens");
      Pairing p;
      try {
        p.source = parse_facet_token(t1);
        p.target = parse_facet_token(t2);
        p.map = perm3_from_string(std::to_string(m1) + " " + std::to_string(m2) + " " +
                                  std::to_string(m3));
      } catch (const Error& e) {
        throw ParseError(lineno, e.what());
      }
      if (p.source == p.target)
        throw ParseError(lineno, "facet " + t1 + " paired with itself");
      check_facet(p.source, lineno);
      check_facet(p.target, lineno);
      c.pairings.push_back(p);
    } else if (word == "open") {
      if (!have_cubes) throw ParseError(lineno, "'open' before 'cubes'");
      std::string t1;
      if (!(ls >> t1)) throw ParseError(lineno, "expected 'open <facet>'");
      std::string rest;
      if (ls >> rest) throw ParseError(lineno, "trailing tokens");
      Facet f;
      try {
        f = parse_facet_token(t1);
      } catch (const Error& e) {
        throw ParseError(lineno, e.what());
      }
      check_facet(f, lineno);
      c.open_facets.push_back(f);
    } else {
      throw ParseError(lineno, "unknown directive '" + word + "'");
    }
  }
  if (!have_cubes) throw ParseError(lineno ? lineno : 1, "missing 'cubes' line");
  if (static_cast<int>(seen.size()) != 8 * c.n) {
    for (int g = 0; g < 8 * c.n; ++g)
      if (std::find(seen.begin(), seen.end(), g) == seen.end())
        throw ParseError(lineno, "unmatched facet " + facet_token(facet_from_global_slot(g)));
  }
  normalize(c);
  if (!opts.allow_disconnected && !is_connected(c))
    throw ParseError(lineno, "incidence graph is disconnected");
  return c;
}

std::vector<std::string> validate(const Cubulation& c) {
  std::vector<std::string> diag;
  if (c.n < 1) {
    diag.push_back("cube count must be >= 1");
    return diag;
  }
  std::vector<int> uses(8 * c.n, 0);
  auto touch = [&](const Facet& f) {
    if (f.cube < 0 || f.cube >= c.n || f.axis < 1 || f.axis > 4) {
      diag.push_back("facet " + facet_token(f) + " out of range");
      return;
    }
    uses[f.global_slot()]++;
  };
  for (const auto& p : c.pairings) {
    if (p.source == p.target)
      diag.push_back("facet " + facet_token(p.source) + " paired with itself");
    touch(p.source);
    touch(p.target);
  }
  for (const auto& f : c.open_facets) touch(f);
  for (int g = 0; g < 8 * c.n; ++g) {
    if (uses[g] == 0)
      diag.push_back("unmatched facet " + facet_token(facet_from_global_slot(g)));
    else if (uses[g] > 1)
      diag.push_back("facet " + facet_token(facet_from_global_slot(g)) + " used " +
                     std::to_string(uses[g]) + " times");
  }
  if (!is_connected(c)) diag.push_back("incidence graph is disconnected");
  return diag;
}

bool is_orientable(const Cubulation& c) {
  for (const auto& p : c.pairings) {
    int character = p.map.det() * facet_orientation_sign(p.source) *
                    facet_orientation_sign(p.target);
    if (character != -1) return false;
  }
  return true;
}

IncidenceGraph incidence_graph(const Cubulation& c) {
  IncidenceGraph g;
  g.n = c.n;
  for (size_t i = 0; i < c.pairings.size(); ++i)
    g.edges.push_back({c.pairings[i].source.cube, c.pairings[i].target.cube,
                       static_cast<int>(i)});
  return g;
}

bool is_connected(const Cubulation& c) {
  if (c.n <= 1) return true;
  std::vector<std::vector<int>> adj(c.n);
  for (const auto& p : c.pairings) {
    adj[p.source.cube].push_back(p.target.cube);
    adj[p.target.cube].push_back(p.source.cube);
  }
  std::vector<bool> vis(c.n, false);
  std::vector<int> stack{0};
  vis[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u])
      if (!vis[v]) { vis[v] = true; ++count; stack.push_back(v); }
  }
  return count == c.n;
}

std::string to_dot(const Cubulation& c) {
  std::string out = "graph cubulation {\n";
  for (int i = 0; i < c.n; ++i)
    out += "  " + std::to_string(i) + " [label=\"H" + std::to_string(i) + "\"];\n";
  for (const auto& p : c.pairings) {
    out += "  " + std::to_string(p.source.cube) + " -- " + std::to_string(p.target.cube) +
           " [label=\"" + facet_token(p.source) + "|" + facet_token(p.target) + "|" +
           perm3_to_string(p.map) + "\"];\n";
  }
  for (const auto& f : c.open_facets) {
    out += "  // open " + facet_token(f) + "\n";
  }
  out += "}\n";
  return out;
}

Cubulation relabel(const Cubulation& c, const std::vector<SignedPerm4>& charts,
                   const std::vector<int>& perm) {
  if (static_cast<int>(charts.size()) != c.n || static_cast<int>(perm.size()) != c.n)
    throw Error("relabel: need one chart and one image index per cube");
  std::vector<bool> hit(c.n, false);
  for (int v : perm) {
    if (v < 0 || v >= c.n || hit[v]) throw Error("relabel: not a permutation");
    hit[v] = true;
  }
  auto move_facet = [&](const Facet& f) {
    Facet out = apply_to_facet(charts[f.cube], f);
    out.cube = perm[f.cube];
    return out;
  };
  Cubulation out;
  out.n = c.n;
  for (const auto& p : c.pairings) {
    Pairing np;
    np.source = move_facet(p.source);
    np.target = move_facet(p.target);
    SignedPerm3 src_ind = induced_facet_map(charts[p.source.cube], p.source);
    SignedPerm3 tgt_ind = induced_facet_map(charts[p.target.cube], p.target);
    // new map: intr(g.source) -> intr(source) -> intr(target) -> intr(g.target)
    np.map = compose(compose(invert(src_ind), p.map), tgt_ind);
    out.pairings.push_back(np);
  }
  for (const auto& f : c.open_facets) out.open_facets.push_back(move_facet(f));
  normalize(out);
  return out;
}

FacetIndex::FacetIndex(const Cubulation& c)
    : c_(&c), pairing_of_slot_(8 * c.n, -1), is_source_(8 * c.n, false) {
  for (size_t i = 0; i < c.pairings.size(); ++i) {
    const auto& p = c.pairings[i];
    pairing_of_slot_[p.source.global_slot()] = static_cast<int>(i);
    is_source_[p.source.global_slot()] = true;
    pairing_of_slot_[p.target.global_slot()] = static_cast<int>(i);
  }
}

std::optional<FacetPairing> FacetIndex::leave(const Facet& f) const {
  int idx = pairing_of_slot_[f.global_slot()];
  if (idx < 0) return std::nullopt;
  const Pairing& p = c_->pairings[idx];
  return is_source_[f.global_slot()] ? p.forward() : p.backward();
}

}  // namespace cubekit
