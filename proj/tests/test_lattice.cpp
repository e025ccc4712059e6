#include <doctest.h>

#include <cmath>
#include <random>

#include "cubekit/lattice.hpp"

using namespace cubekit;

namespace {

// Brute-force oracle: clear denominators, enumerate all integer-coefficient
// vectors in a generous fixed box, collect orthogonal equal-length pairs
// ordered by length and take the shortest one giving an integral h.
// Independent of the production search (no dual-basis radius logic).
long oracle_h(const LatticeBasis& basis, const Rat& vol) {
  long long scale = 1;
  for (const auto& v : basis.gens)
    for (const auto& x : v) scale = std::lcm(scale, x.den);
  // integer lattice L = scale * T, volumes scale by scale^3
  long long iv[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rat scaled = basis.gens[i][j] * Rat(scale);
      REQUIRE(scaled.den == 1);
      iv[i][j] = scaled.num;
    }
  const int box = 12;
  struct Vec { long long x[3]; long long n2; };
  std::vector<Vec> vecs;
  for (int a = -box; a <= box; ++a)
    for (int b = -box; b <= box; ++b)
      for (int c = -box; c <= box; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        Vec v{};
        for (int j = 0; j < 3; ++j)
          v.x[j] = a * iv[0][j] + b * iv[1][j] + c * iv[2][j];
        v.n2 = v.x[0] * v.x[0] + v.x[1] * v.x[1] + v.x[2] * v.x[2];
        vecs.push_back(v);
      }
  std::sort(vecs.begin(), vecs.end(), [](const Vec& a, const Vec& b) { return a.n2 < b.n2; });
  // scaled volume: vol * scale^3; h^2 = 4 vol_s^2 / (l2)^3 must be a square
  Rat vol_s = vol * Rat(scale) * Rat(scale) * Rat(scale);
  long long best_n2 = -1;
  long best_h = -1;
  for (size_t i = 0; i < vecs.size(); ++i) {
    if (best_n2 > 0 && vecs[i].n2 > best_n2) break;
    for (size_t j = i + 1; j < vecs.size() && vecs[j].n2 == vecs[i].n2; ++j) {
      long long dot = 0;
      for (int k = 0; k < 3; ++k) dot += vecs[i].x[k] * vecs[j].x[k];
      if (dot != 0) continue;
      Rat l2(vecs[i].n2);
      Rat h2 = (Rat(4) * vol_s * vol_s) / (l2 * l2 * l2);
      if (h2.den != 1 || h2.num <= 0) continue;
      long long r = std::llround(std::sqrt(static_cast<double>(h2.num)));
      if (r * r != h2.num) continue;
      best_n2 = vecs[i].n2;
      best_h = static_cast<long>(r);
      break;
    }
    if (best_h > 0) break;
  }
  REQUIRE(best_h > 0);
  return best_h;
}

LatticeBasis family(int kind, int h) {
  // the four generator families (2,0,0),(0,2,0),(x,y,h)
  LatticeBasis b;
  b.gens[0] = {Rat(2), Rat(0), Rat(0)};
  b.gens[1] = {Rat(0), Rat(2), Rat(0)};
  switch (kind) {
    case 0: b.gens[2] = {Rat(0), Rat(0), Rat(h)}; break;
    case 1: b.gens[2] = {Rat(1), Rat(0), Rat(h)}; break;
    case 2: b.gens[2] = {Rat(0), Rat(1), Rat(h)}; break;
    default: b.gens[2] = {Rat(1), Rat(1), Rat(h)}; break;
  }
  return b;
}

}  // namespace

TEST_CASE("recover_h on the listed generator families") {
  // (2,0,0),(0,2,0),(0,0,5), vol 20 -> 5
  CHECK(recover_h(family(0, 5), Rat(20)) == 5);

  // (2,0,0),(0,2,0),(1,0,1), vol 4 -> 1, rejecting the l = sqrt(2) pair
  CHECK(recover_h(family(1, 1), Rat(4)) == 1);

  // scale invariance: scaling the lattice by 3 scales vol by 27
  LatticeBasis scaled = family(1, 1);
  for (auto& v : scaled.gens)
    for (auto& x : v) x = x * Rat(3);
  CHECK(recover_h(scaled, Rat(108)) == 1);

  // rational scaling too
  LatticeBasis rscaled = family(0, 5);
  for (auto& v : rscaled.gens)
    for (auto& x : v) x = x * Rat(1, 2);
  CHECK(recover_h(rscaled, Rat(20, 8)) == 5);
}

TEST_CASE("recover_h matches the brute-force oracle on random family instances") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 100; ++trial) {
    int kind = static_cast<int>(rng() % 4);
    int h = 1 + static_cast<int>(rng() % 10);
    LatticeBasis b = family(kind, h);
    Rat vol = Rat(4 * h);  // covolume of every family lattice
    int got = recover_h(b, vol);
    long want = oracle_h(b, vol);
    CHECK(got == want);
    CHECK(got == h);
  }
}

TEST_CASE("recover_h error paths") {
  // degenerate basis
  LatticeBasis bad = family(0, 2);
  bad.gens[2] = bad.gens[0];
  CHECK_THROWS_AS(recover_h(bad, Rat(8)), Error);

  // no qualifying pair: a lattice with no orthogonal equal-length pair
  // within the bound (vol too small for any integral h)
  LatticeBasis b = family(0, 3);
  CHECK_THROWS_AS(recover_h(b, Rat(1, 100)), Error);

  CHECK_THROWS_AS(recover_h(family(0, 2), Rat(0)), Error);
}
