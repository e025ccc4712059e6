#include <doctest.h>

#include <set>
#include <sstream>

#include "cubekit/census.hpp"
#include "cubekit/cycles.hpp"
#include "cubekit/fixtures.hpp"
#include "support.hpp"

using namespace cubekit;

TEST_CASE("matching counts") {
  CHECK(matching_count(1) == 105);  // 7!!
  CHECK(matching_count(2) == 2027025);
}

TEST_CASE("opposite-only orientable n=1 enumeration recovers example 1's class") {
  SearchSpec spec;
  spec.n = 1;
  spec.orientable_only = true;
  spec.opposite_only = true;
  auto entries = enumerate_census(spec);
  CHECK(!entries.empty());
  // example 1 must appear: all opposite pairs with translation gluings
  std::string e1 = canonical_form(example1());
  bool found = false;
  for (const auto& e : entries) found = found || e.canonical_form == e1;
  CHECK(found);
  // every entry is a valid orientable cubulation matching its profile
  for (const auto& e : entries) {
    Cubulation c = parse(e.representative);
    CHECK(validate(c).empty());
    CHECK(is_orientable(c));
    auto rep = invariant_report(c);
    CHECK(rep.k == static_cast<int>(e.profile.size()));
    long hsum = 0;
    for (auto& [h, cls] : e.profile) {
      hsum += h;
      CHECK(orientation_preserving(cls));
    }
    CHECK(hsum == 24);
  }
}

TEST_CASE("one-cusp seed search") {
  Cubulation seed = find_one_cusp_seed();
  CHECK(validate(seed).empty());
  CHECK(is_orientable(seed));
  auto rep = invariant_report(seed);
  CHECK(rep.n == 1);
  CHECK(rep.k == 1);
  CHECK(rep.cusps[0].h == 24);
  CHECK(rep.cusps[0].cls == MonodromyClass::I);
  REQUIRE(rep.cusps[0].shape.has_value());
  CHECK(*rep.cusps[0].shape == "T3(2x2x24)");
  CHECK(rep.chi == 4);
  CHECK(rep.volume_coeff.num == 16);
  CHECK(rep.volume_coeff.den == 3);

  // frozen fixture must match the search result exactly
  CHECK(serialize(one_cusp_seed()) == serialize(seed));

  // distinct from example 1 (different cusp counts, and canonically)
  CHECK(canonical_form(seed) != canonical_form(example1()));
}

TEST_CASE("two-cusp monodromy searches") {
  auto [k_type, l_type] = find_two_cusp_examples();
  for (const Cubulation* c : {&k_type, &l_type}) {
    CHECK(validate(*c).empty());
    CHECK(is_orientable(*c));
  }
  auto rep_k = invariant_report(k_type);
  REQUIRE(rep_k.k == 2);
  CHECK(rep_k.cusps[0].cls == MonodromyClass::R4);
  CHECK(rep_k.cusps[1].cls == MonodromyClass::R4);
  CHECK(rep_k.cusps[0].h + rep_k.cusps[1].h == 24);
  auto rep_l = invariant_report(l_type);
  REQUIRE(rep_l.k == 2);
  CHECK(rep_l.cusps[0].cls == MonodromyClass::MinusI);
  CHECK(rep_l.cusps[1].cls == MonodromyClass::MinusI);
  CHECK(rep_l.cusps[0].h + rep_l.cusps[1].h == 24);

  CHECK(serialize(two_cusp_r4()) == serialize(k_type));
  CHECK(serialize(two_cusp_minus_i()) == serialize(l_type));
}

TEST_CASE("census round trip") {
  SearchSpec spec;
  spec.n = 1;
  spec.opposite_only = true;
  spec.cusp_count = 6;
  auto entries = enumerate_census(spec);
  REQUIRE(!entries.empty());
  std::ostringstream out;
  census_write(entries, out);
  std::istringstream in(out.str());
  auto back = census_read(in);
  REQUIRE(back.size() == entries.size());
  // file is sorted by canonical form
  std::vector<CensusEntry> sorted = entries;
  std::sort(sorted.begin(), sorted.end(), [](const CensusEntry& a, const CensusEntry& b) {
    return a.canonical_form < b.canonical_form;
  });
  for (size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].canonical_form == sorted[i].canonical_form);
    CHECK(back[i].n == sorted[i].n);
    CHECK(back[i].orientable == sorted[i].orientable);
    CHECK(back[i].profile == sorted[i].profile);
  }
}

TEST_CASE("census write rejects duplicates, empty census is valid") {
  std::ostringstream out;
  census_write({}, out);
  CHECK(out.str() == "#cubekit-census v1\n");
  std::istringstream in(out.str());
  CHECK(census_read(in).empty());

  CensusEntry e;
  e.canonical_form = "cubes 1\n";
  e.n = 1;
  std::ostringstream out2;
  CHECK_THROWS_AS(census_write({e, e}, out2), Error);

  std::istringstream bad("#cubekit-census v2\n");
  CHECK_THROWS_AS(census_read(bad), Error);
}

TEST_CASE("dedup soundness: relabelings of census entries re-canonicalize into it") {
  SearchSpec spec;
  spec.n = 1;
  spec.opposite_only = true;
  auto entries = enumerate_census(spec);
  std::set<std::string> forms;
  for (const auto& e : entries) forms.insert(e.canonical_form);
  CHECK(forms.size() == entries.size());
  testing::Rng rng(5);
  for (const auto& e : entries) {
    Cubulation c = parse(e.representative);
    for (int trial = 0; trial < 20; ++trial) {
      CHECK(forms.count(canonical_form(testing::random_relabel(rng, c))) == 1);
    }
  }
}

TEST_CASE("limit and budget controls") {
  SearchSpec spec;
  spec.n = 1;
  spec.opposite_only = true;
  spec.limit = 2;
  CHECK(enumerate_census(spec).size() == 2);

  SearchSpec tiny;
  tiny.n = 1;
  tiny.budget = 50;
  CHECK_THROWS_AS(enumerate_census(tiny), Error);
}

TEST_CASE("parallel enumeration matches sequential") {
  SearchSpec spec;
  spec.n = 1;
  spec.orientable_only = true;
  spec.cusp_count = 1;
  spec.monodromy_profile = std::vector<MonodromyClass>{MonodromyClass::I};
  SearchSpec par = spec;
  par.jobs = 4;
  auto seq = enumerate_census(spec);
  auto parallel = enumerate_census(par);
  REQUIRE(seq.size() == parallel.size());
  for (size_t i = 0; i < seq.size(); ++i) {
    CHECK(seq[i].canonical_form == parallel[i].canonical_form);
    CHECK(seq[i].representative == parallel[i].representative);
  }
}
