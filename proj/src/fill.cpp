#include "cubekit/fill.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace cubekit {

namespace {

void require_coprime(const FillingSlope& s) {
  long long g = std::gcd(std::gcd(std::llabs(s.p), std::llabs(s.q)), std::llabs(s.r));
  if (g != 1)
    throw Error("slope (" + std::to_string(s.p) + "," + std::to_string(s.q) + "," +
                std::to_string(s.r) + ") is not a coprime triple");
}

bool passes(long long length_sq, bool strict) {
  const long double four_pi_sq = 4.0L * M_PIl * M_PIl;
  long double l2 = static_cast<long double>(length_sq);
  return strict ? (l2 > four_pi_sq) : (l2 >= four_pi_sq);
}

}  // namespace

long long slope_length_sq(const FillingSlope& s, int h) {
  require_coprime(s);
  if (h < 1) throw Error("cusp length h must be >= 1");
  return 4 * s.p * s.p + 4 * s.q * s.q +
         static_cast<long long>(h) * h * s.r * s.r;
}

double slope_length(const FillingSlope& s, int h) {
  return std::sqrt(static_cast<double>(slope_length_sq(s, h)));
}

FilledReport check_2pi(const Cubulation& c, const std::vector<FillingSlope>& slopes,
                       bool strict, double v4) {
  auto rep = invariant_report(c);
  if (static_cast<int>(slopes.size()) != rep.k)
    throw Error("need one slope per cusp (" + std::to_string(rep.k) + " cusps, " +
                std::to_string(slopes.size()) + " slopes)");
  FilledReport out;
  out.strict = strict;
  out.chi = rep.chi;
  out.sigma = 0;
  out.v4 = v4;
  out.norm_bound = 16.0 * rep.n * M_PI * M_PI / (3.0 * v4);
  out.all_pass = true;
  for (int i = 0; i < rep.k; ++i) {
    if (rep.cusps[i].cls != MonodromyClass::I)
      throw Error("cusp " + std::to_string(i) + " is not a 3-torus (class " +
                  to_string(rep.cusps[i].cls) + "); slopes are defined on 3-torus cusps");
    SlopeRow row;
    row.cusp = i;
    row.h = rep.cusps[i].h;
    row.slope = slopes[i];
    row.length_sq = slope_length_sq(slopes[i], row.h);
    row.length = std::sqrt(static_cast<double>(row.length_sq));
    row.pass = passes(row.length_sq, strict);
    out.all_pass = out.all_pass && row.pass;
    out.rows.push_back(row);
  }
  return out;
}

FilledInvariants filled_invariants(const Cubulation& c, double v4) {
  auto rep = invariant_report(c);
  for (const auto& cusp : rep.cusps)
    if (cusp.cls != MonodromyClass::I)
      throw Error("filling requires every cusp to be a 3-torus");
  FilledInvariants out;
  out.chi = rep.chi;
  out.sigma = 0;
  out.norm_bound = 16.0 * rep.n * M_PI * M_PI / (3.0 * v4);
  return out;
}

std::string filled_tsv(const FilledReport& r) {
  std::ostringstream os;
  os << "#cusp\th\tp\tq\tr\tlength_sq\tlength\tpass\n";
  os.setf(std::ios::fixed);
  os.precision(6);
  for (const auto& row : r.rows) {
    os << row.cusp << "\t" << row.h << "\t" << row.slope.p << "\t" << row.slope.q << "\t"
       << row.slope.r << "\t" << row.length_sq << "\t" << row.length << "\t"
       << (row.pass ? "yes" : "no") << "\n";
  }
  os << "#all_pass\tchi\tsigma\tnorm_bound\tv4\tthreshold\n";
  os << (r.all_pass ? "yes" : "no") << "\t" << r.chi << "\t" << r.sigma << "\t"
     << r.norm_bound << "\t" << r.v4 << "\t" << (r.strict ? "strict" : "weak") << "\n";
  return os.str();
}

std::string filled_json(const FilledReport& r) {
  nlohmann::json j;
  j["all_pass"] = r.all_pass;
  j["chi"] = r.chi;
  j["sigma"] = r.sigma;
  j["norm_bound"] = r.norm_bound;
  j["v4"] = r.v4;
  j["threshold"] = r.strict ? "strict" : "weak";
  j["slopes"] = nlohmann::json::array();
  for (const auto& row : r.rows) {
    nlohmann::json rj;
    rj["cusp"] = row.cusp;
    rj["h"] = row.h;
    rj["pqr"] = {row.slope.p, row.slope.q, row.slope.r};
    rj["length_sq"] = row.length_sq;
    rj["length"] = row.length;
    rj["pass"] = row.pass;
    j["slopes"].push_back(rj);
  }
  return j.dump(2) + "\n";
}

std::vector<FillingSlope> parse_slopes(const std::string& text) {
  std::vector<FillingSlope> out;
  std::istringstream in(text);
  std::string triple;
  while (std::getline(in, triple, ';')) {
    if (triple.empty()) continue;
    FillingSlope s;
    char c1, c2;
    std::istringstream ts(triple);
    if (!(ts >> s.p >> c1 >> s.q >> c2 >> s.r) || c1 != ',' || c2 != ',')
      throw Error("bad slope triple '" + triple + "'");
    std::string rest;
    if (ts >> rest) throw Error("bad slope triple '" + triple + "'");
    out.push_back(s);
  }
  return out;
}

}  // namespace cubekit
