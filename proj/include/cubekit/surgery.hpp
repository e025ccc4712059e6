#ifndef CUBEKIT_SURGERY_HPP
#define CUBEKIT_SURGERY_HPP

#include <optional>
#include <string>
#include <vector>

#include "cubekit/cubulation.hpp"
#include "cubekit/cycles.hpp"

// Cubulation surgeries: the merger gadget and flower insertion (cusp count
// k -> k-1), the splitter insertion (raising the count), the reduce-to-k
// driver and cyclic covers.

namespace cubekit {

struct GadgetChain {
  SquareFace end1, end2;  // endpoint squares
  Facet open1, open2;     // the open facets they sit on
  int length = 0;
  bool cross() const { return open1 != open2; }
};

struct Gadget {
  Cubulation body;     // one cube, three pairs glued, one opposite pair open
  Facet open_a, open_b;
  std::vector<GadgetChain> chains;
  // the same-facet chain endpoints per open facet (merger profile)
  std::pair<SquareFace, SquareFace> same_pair_a, same_pair_b;
  std::string provenance;
};

// Exhaustive search over the 24^3 orientation-reversing gluings of the
// three closed opposite pairs (per open-pair choice) for the merger
// profile: 4 cross chains plus one same-facet chain per open facet whose
// endpoints are non-opposite squares.  The first hit is cached.
const Gadget& find_merger_gadget();

// One cube with three opposite pairs glued by translations and one pair
// open; its inner cycles raise the cusp count on insertion.
Gadget splitter_gadget();

struct MergerCertificate {
  std::string edge_source, edge_target;
  std::string merged_square_1, merged_square_2;
  std::string align_map, completion_map;  // F1->gadget and gadget->F2
  int cusps_before = 0, cusps_after = 0;
  bool strand_exact = false;  // old cycles changed exactly by the one merge
};

// Replace one pairing by a path through a fresh merger-gadget cube so that
// two cycles through that edge fuse: cusp count drops by exactly one.
// Without an edge index the lexicographically first qualifying edge is
// used.  Throws when k == 1 or when no edge/alignment achieves k-1.
std::pair<Cubulation, MergerCertificate> insert_flower(
    const Cubulation& c, std::optional<int> edge_index = std::nullopt);

// Insert `count` splitter copies in series at the edge (default: first
// pairing).  Each insertion appends one cube.  count == 0 is the identity.
Cubulation insert_splitter(const Cubulation& c, std::optional<int> edge_index,
                           int count, std::vector<std::string>* move_log = nullptr);

// Splitters until the cusp count reaches at least k, then flowers down to
// exactly k.
Cubulation reduce_to_k(const Cubulation& c, int k,
                       std::vector<std::string>* move_log = nullptr);

// n copies of c with the designated pairing rethreaded cyclically
// copy i -> copy i+1 (mod n); all other pairings duplicated per copy.
Cubulation cyclic_unroll(const Cubulation& c, int edge_index, int count);

// Net winding of the cycles across a pairing: +1 per forward traversal,
// -1 per backward, listed per cycle of trace_cycles(c).
std::vector<int> edge_windings(const Cubulation& c, int edge_index);

}  // namespace cubekit

#endif
