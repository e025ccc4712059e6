#ifndef CUBEKIT_FILL_HPP
#define CUBEKIT_FILL_HPP

#include <string>
#include <vector>

#include "cubekit/cubulation.hpp"
#include "cubekit/cycles.hpp"

// Dehn-filling bookkeeping on 3-torus cusps: slope lengths, the 2pi
// criterion and the filled manifold's invariants.

namespace cubekit {

// Volume of the ideal regular hyperbolic 4-simplex; enters only the Gromov
// norm bound.  The literature value is ~0.26889; configurable everywhere
// it is used.
inline constexpr double kDefaultSimplexVolume4 = 0.26889;

// Coprime triple on a 3-torus cusp with section sides (2, 2, h), in the
// basis (side-2, side-2, side-h).
struct FillingSlope {
  long long p = 0, q = 0, r = 1;
};

// l^2 = (2p)^2 + (2q)^2 + (hr)^2, exact.  Throws on a non-coprime triple.
long long slope_length_sq(const FillingSlope& s, int h);
double slope_length(const FillingSlope& s, int h);

struct SlopeRow {
  int cusp = 0;
  int h = 0;
  FillingSlope slope;
  long long length_sq = 0;
  double length = 0.0;
  bool pass = false;  // meets the 2pi threshold
};

struct FilledReport {
  std::vector<SlopeRow> rows;
  bool all_pass = false;
  bool strict = false;      // pass requires l > 2pi instead of l >= 2pi
  long long chi = 0;        // 4n, unchanged by the filling
  int sigma = 0;            // always 0
  double v4 = kDefaultSimplexVolume4;
  double norm_bound = 0.0;  // 16 n pi^2 / (3 v4)
};

// One slope per cusp, cusps in trace order; every cusp must be a 3-torus
// (monodromy class I).
FilledReport check_2pi(const Cubulation& c, const std::vector<FillingSlope>& slopes,
                       bool strict = false, double v4 = kDefaultSimplexVolume4);

struct FilledInvariants {
  long long chi = 0;
  int sigma = 0;
  double norm_bound = 0.0;
};

FilledInvariants filled_invariants(const Cubulation& c,
                                   double v4 = kDefaultSimplexVolume4);

std::string filled_tsv(const FilledReport& r);
std::string filled_json(const FilledReport& r);

// "p,q,r;p,q,r;..." -> slopes
std::vector<FillingSlope> parse_slopes(const std::string& text);

}  // namespace cubekit

#endif
