#include "cubekit/fixtures.hpp"

namespace cubekit {

Cubulation example1() {
  Cubulation c;
  c.n = 1;
  for (int axis = 1; axis <= 4; ++axis) {
    Pairing p;
    p.source = Facet{0, axis, 1};
    p.target = Facet{0, axis, -1};
    p.map = SignedPerm3::identity();
    c.pairings.push_back(p);
  }
  normalize(c);
  return c;
}

Cubulation example2() {
  Cubulation c;
  c.n = 2;
  // axis-1 facets: translation-style gluing between the copies
  for (int s : {1, -1}) {
    Pairing p;
    p.source = Facet{0, 1, s};
    p.target = Facet{1, 1, -s};
    p.map = SignedPerm3::identity();
    c.pairings.push_back(p);
  }
  // remaining facets: corresponding facets, chart mirrored in x1
  SignedPerm3 mirror;
  mirror.img = {-1, 2, 3};
  for (int axis = 2; axis <= 4; ++axis) {
    for (int s : {1, -1}) {
      Pairing p;
      p.source = Facet{0, axis, s};
      p.target = Facet{1, axis, s};
      p.map = mirror;
      c.pairings.push_back(p);
    }
  }
  normalize(c);
  return c;
}

namespace {

// Placeholders frozen from the census search; see tests/test_census.cpp
// which re-derives them.
constexpr const char* kOneCuspSeed = "";
constexpr const char* kTwoCuspMinusI = "";
constexpr const char* kTwoCuspR4 = "";

}  // namespace

Cubulation one_cusp_seed() {
  return parse(kOneCuspSeed);
}

Cubulation two_cusp_minus_i() {
  return parse(kTwoCuspMinusI);
}

Cubulation two_cusp_r4() {
  return parse(kTwoCuspR4);
}

}  // namespace cubekit
