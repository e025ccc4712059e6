#ifndef CUBEKIT_CENSUS_HPP
#define CUBEKIT_CENSUS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cubekit/canonical.hpp"
#include "cubekit/cubulation.hpp"

// Exhaustive enumeration over small cubulations up to combinatorial
// equivalence: all perfect matchings of the 8n facets times all admissible
// gluing maps, with incremental cycle-count pruning and canonical-form
// deduplication.

namespace cubekit {

struct SearchSpec {
  int n = 1;
  bool orientable_only = true;
  bool opposite_only = false;  // restrict the matching to opposite facets
  std::optional<int> cusp_count;
  std::optional<std::vector<MonodromyClass>> monodromy_profile;  // multiset
  uint64_t limit = UINT64_MAX;       // emitted equivalence classes
  uint64_t budget = 400'000'000;     // map-assignment leaves examined
  int jobs = 1;
};

struct CensusEntry {
  std::string canonical_form;
  int n = 0;
  bool orientable = false;
  std::vector<std::pair<int, MonodromyClass>> profile;  // sorted (h, class)
  std::string representative;  // serialized first-found representative
};

// Emits one entry per equivalence class, in the order the first
// representative is discovered (lexicographic over matching, then maps).
std::vector<CensusEntry> enumerate_census(const SearchSpec& spec);

// Number of perfect matchings of the 8n facet slots (no constraint).
uint64_t matching_count(int n);

// First orientable one-cube cubulation whose squares form a single cycle
// of length 24 with trivial monodromy.  Throws if none exists.
Cubulation find_one_cusp_seed();

// First orientable one-cube cubulations with cusp monodromy profiles
// {-I,-I} and {R4,R4} respectively.  Throws if either is unrealizable.
std::pair<Cubulation, Cubulation> find_two_cusp_examples();

// TSV census file, header "#cubekit-census v1", sorted by canonical form.
void census_write(const std::vector<CensusEntry>& entries, std::ostream& out);
std::vector<CensusEntry> census_read(std::istream& in);

std::string profile_string(const std::vector<std::pair<int, MonodromyClass>>& profile);

}  // namespace cubekit

#endif
