#ifndef CUBEKIT_CANONICAL_HPP
#define CUBEKIT_CANONICAL_HPP

#include <cstdint>
#include <string>

#include "cubekit/cubulation.hpp"

// Combinatorial equivalence via canonical forms: the minimal serialization
// over the relabeling group (SignedPerm4)^n x S_n.  Exact for every input
// the budget admits; n <= 3 fits the default budget.

namespace cubekit {

struct CanonicalOptions {
  uint64_t budget = 600'000'000;  // candidate relabelings examined
  int jobs = 1;
};

// Canonical byte string of the equivalence class: equal strings iff
// equivalent cubulations.  Requires a valid complete cubulation.  Throws
// Error when the relabeling space exceeds the budget.
std::string canonical_form(const Cubulation& c, const CanonicalOptions& opts = {});

bool are_equivalent(const Cubulation& a, const Cubulation& b,
                    const CanonicalOptions& opts = {});

}  // namespace cubekit

#endif
