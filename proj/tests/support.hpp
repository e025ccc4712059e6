#ifndef CUBEKIT_TESTS_SUPPORT_HPP
#define CUBEKIT_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "cubekit/cubulation.hpp"

namespace cubekit::testing {

using Rng = std::mt19937_64;

inline SignedPerm4 random_perm4(Rng& rng) {
  const auto& all = all_signed_perm4();
  return all[std::uniform_int_distribution<size_t>(0, all.size() - 1)(rng)];
}

inline std::vector<int> random_permutation(Rng& rng, int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline Cubulation random_relabel(Rng& rng, const Cubulation& c) {
  std::vector<SignedPerm4> charts(c.n);
  for (auto& g : charts) g = random_perm4(rng);
  return relabel(c, charts, random_permutation(rng, c.n));
}

// Uniform valid cubulation: random perfect matching of the 8n slots plus a
// random map per pair (orientation-reversing maps only when `orientable`),
// resampled until the incidence graph is connected.
inline Cubulation random_cubulation(Rng& rng, int n, bool orientable) {
  while (true) {
    std::vector<int> slots(8 * n);
    for (int i = 0; i < 8 * n; ++i) slots[i] = i;
    std::shuffle(slots.begin(), slots.end(), rng);
    Cubulation c;
    c.n = n;
    for (int i = 0; i < 8 * n; i += 2) {
      Pairing p;
      p.source = facet_from_global_slot(std::min(slots[i], slots[i + 1]));
      p.target = facet_from_global_slot(std::max(slots[i], slots[i + 1]));
      const auto& all = all_signed_perm3();
      if (orientable) {
        int need = -facet_orientation_sign(p.source) * facet_orientation_sign(p.target);
        std::vector<SignedPerm3> adm;
        for (const auto& m : all)
          if (m.det() == need) adm.push_back(m);
        p.map = adm[std::uniform_int_distribution<size_t>(0, adm.size() - 1)(rng)];
      } else {
        p.map = all[std::uniform_int_distribution<size_t>(0, all.size() - 1)(rng)];
      }
      c.pairings.push_back(p);
    }
    normalize(c);
    if (is_connected(c)) return c;
  }
}

}  // namespace cubekit::testing

#endif
