#ifndef CUBEKIT_CYCLES_HPP
#define CUBEKIT_CYCLES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubekit/cubulation.hpp"

// Tracing the cycles of square 2-faces, transporting frames to compute
// monodromies, cusp classification and the global invariant report.

namespace cubekit {

struct CycleStep {
  SquareFace square;
  Facet exit;  // facet through which the trace leaves this square;
               // for the last step of an open chain this is the open facet
};

struct FaceCycle {
  std::vector<CycleStep> steps;
  bool closed = true;
  SignedPerm2 monodromy = SignedPerm2::identity();  // meaningful iff closed
  int length() const { return static_cast<int>(steps.size()); }
};

// Partition of the 24n squares into cycles (and open chains when the
// cubulation is partial).  Deterministic: components are discovered in
// increasing order of their least square, chains are oriented from their
// least endpoint, closed cycles start at their least square and leave it
// through its smaller facet slot.
std::vector<FaceCycle> trace_cycles(const Cubulation& c);

// Monodromy of the closed cycle through `start`, leaving through `exit`.
SignedPerm2 trace_monodromy_from(const Cubulation& c, const SquareFace& start,
                                 const Facet& exit);

struct CuspReport {
  int h = 0;
  MonodromyClass cls = MonodromyClass::I;
  std::optional<std::string> shape;  // flat 3-manifold label, orientable case only
  long section_volume = 0;           // 4h
};

// Shape labels: "T3(2x2xh)" for class I, "TB(-I,h)" and "TB(R4,h)" for the
// two torus-bundle classes.
CuspReport classify_cusp(const FaceCycle& cycle, bool cubulation_orientable);

struct Rational {
  long long num = 0, den = 1;
};

struct InvariantReport {
  int n = 0;
  int k = 0;                      // number of cusps
  long long chi = 0;              // 4n
  Rational volume_coeff;          // volume = coeff * pi^2, reduced
  double volume = 0.0;
  long long total_section_volume = 0;  // 96n
  bool orientable = false;
  std::vector<CuspReport> cusps;
};

// Requires a valid complete cubulation; throws on partial input.
InvariantReport invariant_report(const Cubulation& c);

// TSV rendering used by the `analyze` command: one row per cusp, then a
// global line.
std::string report_tsv(const InvariantReport& r);
std::string report_json(const InvariantReport& r);

}  // namespace cubekit

#endif
