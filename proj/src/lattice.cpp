#include "cubekit/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <vector>

namespace cubekit {

namespace {

long long checked_mul(long long a, long long b) {
  __int128 r = static_cast<__int128>(a) * b;
  if (r > INT64_MAX || r < INT64_MIN) throw Error("rational overflow");
  return static_cast<long long>(r);
}

}  // namespace

Rat::Rat(long long n, long long d) {
  if (d == 0) throw Error("division by zero");
  if (d < 0) { n = -n; d = -d; }
  long long g = std::gcd(n < 0 ? -n : n, d);
  if (g == 0) g = 1;
  num = n / g;
  den = d / g;
}

Rat operator+(const Rat& a, const Rat& b) {
  return Rat(checked_mul(a.num, b.den) + checked_mul(b.num, a.den), checked_mul(a.den, b.den));
}
Rat operator-(const Rat& a, const Rat& b) {
  return Rat(checked_mul(a.num, b.den) - checked_mul(b.num, a.den), checked_mul(a.den, b.den));
}
Rat operator*(const Rat& a, const Rat& b) {
  return Rat(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
}
Rat operator/(const Rat& a, const Rat& b) {
  if (b.num == 0) throw Error("division by zero");
  return Rat(checked_mul(a.num, b.den), checked_mul(a.den, b.num));
}
bool operator<(const Rat& a, const Rat& b) {
  return checked_mul(a.num, b.den) < checked_mul(b.num, a.den);
}

std::string Rat::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rat dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Rat det3(const std::array<Vec3, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

namespace {

// Positive integer h with h^2 == 4 vol^2 / (l2)^3, if it exists.
std::optional<int> integral_h(const Rat& vol, const Rat& l2) {
  Rat h2 = (Rat(4) * vol * vol) / (l2 * l2 * l2);
  if (h2.den != 1 || h2.num <= 0) return std::nullopt;
  long long r = std::llround(std::sqrt(static_cast<double>(h2.num)));
  for (long long cand : {r - 1, r, r + 1})
    if (cand > 0 && cand * cand == h2.num) return static_cast<int>(cand);
  return std::nullopt;
}

}  // namespace

int recover_h(const LatticeBasis& basis, const Rat& vol) {
  if (!(Rat(0) < vol)) throw Error("volume must be positive");
  if (det3(basis.gens) == Rat(0)) throw Error("generators are not independent");

  // Exact cap on qualifying squared lengths: (l^2)^3 <= (2 vol)^2.
  Rat cap2 = Rat(4) * vol * vol;  // bound on (l^2)^3
  double l2_bound = std::cbrt(cap2.value()) * (1.0 + 1e-9);
  double radius = std::sqrt(l2_bound);

  // Coefficient box: |c_i| = |<v, d_i>| <= |d_i| * |v| for the dual basis d_i.
  std::array<Vec3, 3> dual;
  {
    const auto& g = basis.gens;
    Rat d = det3(g);
    auto cross = [](const Vec3& a, const Vec3& b) {
      return Vec3{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                  a[0] * b[1] - a[1] * b[0]};
    };
    Vec3 rows[3] = {cross(g[1], g[2]), cross(g[2], g[0]), cross(g[0], g[1])};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) dual[i][j] = rows[i][j] / d;
  }
  std::array<long, 3> cmax{};
  for (int i = 0; i < 3; ++i) {
    double norm = std::sqrt(dot(dual[i], dual[i]).value());
    cmax[i] = static_cast<long>(std::floor(norm * radius)) + 1;
    if (cmax[i] > 200) throw Error("lattice enumeration bound too large");
  }

  // All nonzero vectors with squared length within the cap, one of each
  // antipodal pair, grouped by exact squared length.
  std::map<std::pair<long long, long long>, std::vector<Vec3>> by_len;
  {
    for (long c0 = -cmax[0]; c0 <= cmax[0]; ++c0)
      for (long c1 = -cmax[1]; c1 <= cmax[1]; ++c1)
        for (long c2 = -cmax[2]; c2 <= cmax[2]; ++c2) {
          if (c0 == 0 && c1 == 0 && c2 == 0) continue;
          if (std::make_tuple(c0, c1, c2) < std::make_tuple(-c0, -c1, -c2)) continue;
          Vec3 v;
          for (int j = 0; j < 3; ++j)
            v[j] = Rat(c0) * basis.gens[0][j] + Rat(c1) * basis.gens[1][j] +
                   Rat(c2) * basis.gens[2][j];
          Rat l2 = dot(v, v);
          if (cap2 < l2 * l2 * l2) continue;
          by_len[{l2.num, l2.den}].push_back(v);
        }
  }

  // std::map with (num, den) keys is not ordered by value; sort explicitly.
  std::vector<std::pair<Rat, const std::vector<Vec3>*>> lengths;
  for (const auto& [key, vecs] : by_len)
    lengths.push_back({Rat(key.first, key.second), &vecs});
  std::sort(lengths.begin(), lengths.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  for (const auto& [l2, vecs] : lengths) {
    auto h = integral_h(vol, l2);
    if (!h) continue;
    for (size_t i = 0; i < vecs->size(); ++i)
      for (size_t j = i + 1; j < vecs->size(); ++j)
        if (dot((*vecs)[i], (*vecs)[j]) == Rat(0)) return *h;
  }
  throw Error("no orthogonal equal-length pair with integral h within the bound");
}

}  // namespace cubekit
