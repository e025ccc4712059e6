#ifndef CUBEKIT_FIXTURES_HPP
#define CUBEKIT_FIXTURES_HPP

#include "cubekit/cubulation.hpp"

// The named cubulations used throughout the tests and the CLI fixture
// seeder.

namespace cubekit {

// One hypercube, opposite facets paired by translations: 6 cusps, each a
// cycle of 4 squares with trivial monodromy.
Cubulation example1();

// Two hypercubes glued along all corresponding facets (the double).  The
// second copy carries the mirrored chart so that every pairing reverses
// the induced boundary orientation: 24 cusps, each a cycle of 2 squares
// with trivial monodromy.
Cubulation example2();

// The frozen single-cusp seed: first orientable one-cube cubulation (in
// enumeration order) whose 24 squares form one cycle with trivial
// monodromy.  census::find_one_cusp_seed re-derives it by search.
Cubulation one_cusp_seed();

// Frozen two-cusp examples: monodromy profile {-I,-I} and {R4,R4}.
Cubulation two_cusp_minus_i();
Cubulation two_cusp_r4();

}  // namespace cubekit

#endif
