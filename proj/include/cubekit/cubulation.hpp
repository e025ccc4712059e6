#ifndef CUBEKIT_CUBULATION_HPP
#define CUBEKIT_CUBULATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "cubekit/hypercube.hpp"

// The cubulation data model: n hypercubes plus a perfect matching of the 8n
// facets with a cube isometry per pair.  Partial cubulations leave some
// facets open.

namespace cubekit {

struct Pairing {
  Facet source, target;
  SignedPerm3 map;  // intrinsic(source) -> intrinsic(target)

  FacetPairing forward() const { return {source, target, map}; }
  FacetPairing backward() const { return {target, source, invert(map)}; }
};

struct Cubulation {
  int n = 0;
  std::vector<Pairing> pairings;    // normalized (source token < target token), sorted
  std::vector<Facet> open_facets;   // sorted by token

  bool complete() const { return open_facets.empty(); }
};

class ParseError : public Error {
public:
  ParseError(int line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

struct ParseOptions {
  bool allow_disconnected = false;
};

// Line-oriented UTF-8 format, '#' comments:
//   cubes <n>
//   pair <i>.<±a> <j>.<±b> <m1> <m2> <m3>
//   open <i>.<±a>
Cubulation parse(const std::string& text, const ParseOptions& opts = {});

// Canonical serialization: "cubes n", then pair lines sorted byte-wise,
// then open lines sorted, LF endings, single spaces.
std::string serialize(const Cubulation& c);

std::string pair_line(const Pairing& p);

// Normalize direction (smaller facet token first) and sort; throws on
// structural contradictions it cannot represent (same facet twice etc. are
// reported by validate instead).
void normalize(Cubulation& c);

// Structural diagnostics: facet coverage, connectivity, index ranges.
// Never checks any topological condition beyond the facet partition.
std::vector<std::string> validate(const Cubulation& c);

// True iff every pairing reverses the induced boundary orientation:
// det(map) * eps(source) * eps(target) == -1.  Open facets are ignored.
bool is_orientable(const Cubulation& c);

struct IncidenceGraph {
  int n = 0;
  struct Edge { int u, v; int pairing_index; };
  std::vector<Edge> edges;
};

IncidenceGraph incidence_graph(const Cubulation& c);
bool is_connected(const Cubulation& c);

// DOT export of the incidence multigraph, edges labelled with the pairing.
std::string to_dot(const Cubulation& c);

// Relabel by a per-cube isometry and a cube permutation: cube i becomes
// cube perm[i] with chart g_i applied.  charts.size() == perm.size() == n.
Cubulation relabel(const Cubulation& c, const std::vector<SignedPerm4>& charts,
                   const std::vector<int>& perm);

// Fast facet-slot lookup: pairing index per slot, or -1 for open slots.
struct FacetIndex {
  explicit FacetIndex(const Cubulation& c);
  // Pairing crossing this facet slot, oriented to leave through it;
  // nullopt for open facets.
  std::optional<FacetPairing> leave(const Facet& f) const;
  int pairing_index(const Facet& f) const { return pairing_of_slot_[f.global_slot()]; }

private:
  const Cubulation* c_;
  std::vector<int> pairing_of_slot_;  // -1 open
  std::vector<bool> is_source_;
};

}  // namespace cubekit

#endif
