#ifndef CUBEKIT_LATTICE_HPP
#define CUBEKIT_LATTICE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "cubekit/hypercube.hpp"

// Recovering the cusp parameter h from the translation lattice of a flat
// 3-manifold: find the shortest orthogonal equal-length pair (v1, v2) in
// the lattice for which h = 2 Vol / l^3 is a positive integer.  Exact
// rational arithmetic throughout.

namespace cubekit {

struct Rat {
  long long num = 0;
  long long den = 1;  // > 0, gcd(|num|, den) == 1

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(long long n, long long d);

  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  friend Rat operator/(const Rat& a, const Rat& b);
  friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b);
  friend bool operator<=(const Rat& a, const Rat& b) { return a == b || a < b; }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
};

using Vec3 = std::array<Rat, 3>;

struct LatticeBasis {
  std::array<Vec3, 3> gens;  // linearly independent generators
  // Marker distinguishing Gamma = T from Gamma != T in the source flat
  // manifold; informational only, the recovery operates on T and Vol(X).
  std::optional<MonodromyClass> monodromy_marker;
};

Rat dot(const Vec3& a, const Vec3& b);
Rat det3(const std::array<Vec3, 3>& m);

// h = 2 Vol / l^3 for the shortest orthogonal equal-length pair (v1, v2)
// in the lattice for which h is a positive integer.  The search radius is
// derived from vol: any qualifying pair has l^3 <= 2 Vol, so (l^2)^3 <=
// (2 Vol)^2 bounds the squared length exactly.  Throws if no qualifying
// pair exists within the bound.
int recover_h(const LatticeBasis& basis, const Rat& vol);

}  // namespace cubekit

#endif
