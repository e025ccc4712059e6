#include <doctest.h>

#include <map>
#include <set>

#include "cubekit/hypercube.hpp"

using namespace cubekit;

TEST_CASE("group orders by exhaustive generation") {
  CHECK(all_signed_perm2().size() == 8);
  CHECK(all_signed_perm3().size() == 48);
  CHECK(all_signed_perm4().size() == 384);

  // closure oracle: BFS from generators must reproduce the full listing
  std::set<std::array<int8_t, 3>> closure;
  SignedPerm3 swap12, swap23, neg1;
  swap12.img = {2, 1, 3};
  swap23.img = {1, 3, 2};
  neg1.img = {-1, 2, 3};
  std::vector<SignedPerm3> frontier{SignedPerm3::identity()};
  closure.insert(SignedPerm3::identity().img);
  while (!frontier.empty()) {
    SignedPerm3 p = frontier.back();
    frontier.pop_back();
    for (const auto& g : {swap12, swap23, neg1}) {
      SignedPerm3 q = compose(p, g);
      if (closure.insert(q.img).second) frontier.push_back(q);
    }
  }
  CHECK(closure.size() == 48);
  for (const auto& p : all_signed_perm3()) CHECK(closure.count(p.img) == 1);
}

TEST_CASE("compose and invert") {
  const auto& all = all_signed_perm3();
  SignedPerm3 id = SignedPerm3::identity();
  CHECK(compose(id, id) == id);
  for (const auto& p : all) {
    CHECK(compose(p, invert(p)) == id);
    CHECK(compose(invert(p), p) == id);
  }
  // apply-left-first: compose(p,q) maps axis 1 through p then q
  SignedPerm3 p, q;
  p.img = {2, 1, 3};   // 1->2
  q.img = {1, -3, 2};  // 2->-3
  CHECK(compose(p, q).img[0] == -3);

  SignedPerm3 swap12;
  swap12.img = {2, 1, 3};
  CHECK(invert(swap12) == swap12);
  SignedPerm3 neg3;
  neg3.img = {1, 2, -3};
  CHECK(invert(neg3) == neg3);

  // associativity spot check over a subsample
  for (size_t i = 0; i < all.size(); i += 7)
    for (size_t j = 0; j < all.size(); j += 5)
      for (size_t k = 0; k < all.size(); k += 11)
        CHECK(compose(compose(all[i], all[j]), all[k]) ==
              compose(all[i], compose(all[j], all[k])));
}

TEST_CASE("perm3 textual form") {
  SignedPerm3 p = perm3_from_string("2 -1 3");
  CHECK(p.img[0] == 2);
  CHECK(p.img[1] == -1);
  CHECK(p.img[2] == 3);
  CHECK(perm3_to_string(p) == "2 -1 3");
  CHECK_THROWS_AS(perm3_from_string("1 1 2"), Error);
  CHECK_THROWS_AS(perm3_from_string("1 2 4"), Error);
  CHECK_THROWS_AS(perm3_from_string("1 2"), Error);
}

TEST_CASE("facet orientation signs") {
  CHECK(facet_orientation_sign(Facet{0, 1, 1}) == -1);
  CHECK(facet_orientation_sign(Facet{0, 1, -1}) == 1);
  for (int a = 1; a <= 4; ++a)
    CHECK(facet_orientation_sign(Facet{0, a, 1}) * facet_orientation_sign(Facet{0, a, -1}) ==
          -1);
}

TEST_CASE("squares of a facet") {
  Facet f{0, 1, 1};
  auto squares = squares_of_facet(f);
  for (const auto& q : squares) {
    CHECK(q.axis_a == 1);
    CHECK(q.sign_a == 1);
    CHECK(facet_contains(f, q));
  }
  std::set<int> distinct;
  for (const auto& q : squares) distinct.insert(q.local_index());
  CHECK(distinct.size() == 6);

  // double cover: the union over all 8 facets hits each square exactly twice
  std::map<int, int> hits;
  for (int slot = 0; slot < 8; ++slot)
    for (const auto& q : squares_of_facet(facet_from_slot(0, slot)))
      hits[q.local_index()]++;
  CHECK(hits.size() == 24);
  for (auto& [sq, count] : hits) CHECK(count == 2);

  // opposite facets share no square
  auto plus = squares_of_facet(Facet{0, 1, 1});
  auto minus = squares_of_facet(Facet{0, 1, -1});
  for (const auto& a : plus)
    for (const auto& b : minus) CHECK(a != b);
}

TEST_CASE("other_facet") {
  SquareFace q;
  q.cube = 0;
  q.axis_a = 1; q.sign_a = 1;
  q.axis_b = 2; q.sign_b = 1;
  Facet f1{0, 1, 1};
  Facet of = other_facet(q, f1);
  CHECK(of.axis == 2);
  CHECK(of.sign == 1);
  CHECK(other_facet(q, of) == f1);
  CHECK_THROWS_AS(other_facet(q, Facet{0, 3, 1}), Error);
}

TEST_CASE("map_square through the identity pairing of opposite facets") {
  // square {1,2}(+,+) is spanned by axes 3 and 4
  SquareFace q;
  q.cube = 0;
  q.axis_a = 1; q.sign_a = 1;
  q.axis_b = 2; q.sign_b = 1;
  FacetPairing pairing{Facet{0, 1, 1}, Facet{0, 1, -1}, SignedPerm3::identity()};
  auto [img, fr] = map_square(pairing, q, canonical_frame(q));
  CHECK(img.axis_a == 1);
  CHECK(img.sign_a == -1);
  CHECK(img.axis_b == 2);
  CHECK(img.sign_b == 1);
  CHECK(fr.tangent1 == SignedAxis{3, 1});
  CHECK(fr.tangent2 == SignedAxis{4, 1});
  CHECK_THROWS_AS(map_square_only(pairing, square_from_local(0, 23)), Error);
}

TEST_CASE("transport through a pairing and back is the identity") {
  const auto& all = all_signed_perm3();
  for (int fs = 0; fs < 8; ++fs) {
    for (int ts = 0; ts < 8; ++ts) {
      if (fs == ts) continue;
      for (size_t mi = 0; mi < all.size(); mi += 5) {
        FacetPairing fwd{facet_from_slot(0, fs), facet_from_slot(0, ts), all[mi]};
        FacetPairing bwd{facet_from_slot(0, ts), facet_from_slot(0, fs), invert(all[mi])};
        for (const auto& q : squares_of_facet(fwd.source)) {
          auto [img, fr] = map_square(fwd, q, canonical_frame(q));
          auto [back, fr2] = map_square(bwd, img, fr);
          CHECK(back == q);
          CHECK(fr2.tangent1 == canonical_frame(q).tangent1);
          CHECK(fr2.tangent2 == canonical_frame(q).tangent2);
        }
      }
    }
  }
}

TEST_CASE("each isometry induces a bijection on the six squares") {
  // exhaustive over the 48 maps for a fixed facet pair
  FacetPairing base{Facet{0, 2, 1}, Facet{0, 3, -1}, SignedPerm3::identity()};
  for (const auto& m : all_signed_perm3()) {
    FacetPairing pairing{base.source, base.target, m};
    std::set<int> images;
    for (const auto& q : squares_of_facet(pairing.source)) {
      SquareFace img = map_square_only(pairing, q);
      CHECK(facet_contains(pairing.target, img));
      images.insert(img.local_index());
    }
    CHECK(images.size() == 6);
  }
}

TEST_CASE("map_square is equivariant under composition") {
  const auto& all = all_signed_perm3();
  Facet f1{0, 1, 1}, f2{0, 2, -1}, f3{0, 4, 1};
  for (size_t i = 0; i < all.size(); i += 7) {
    for (size_t j = 0; j < all.size(); j += 9) {
      FacetPairing ab{f1, f2, all[i]};
      FacetPairing bc{f2, f3, all[j]};
      FacetPairing ac{f1, f3, compose(all[i], all[j])};
      for (const auto& q : squares_of_facet(f1)) {
        auto [m1, fr1] = map_square(ab, q, canonical_frame(q));
        auto [m2, fr2] = map_square(bc, m1, fr1);
        auto [m3, fr3] = map_square(ac, q, canonical_frame(q));
        CHECK(m2 == m3);
        CHECK(fr2.tangent1 == fr3.tangent1);
        CHECK(fr2.tangent2 == fr3.tangent2);
      }
    }
  }
}

TEST_CASE("monodromy classes") {
  std::map<MonodromyClass, int> counts;
  for (const auto& m : all_signed_perm2()) counts[monodromy_class(m)]++;
  CHECK(counts[MonodromyClass::I] == 1);
  CHECK(counts[MonodromyClass::MinusI] == 1);
  CHECK(counts[MonodromyClass::R4] == 2);
  CHECK(counts[MonodromyClass::ReflAxis] == 2);
  CHECK(counts[MonodromyClass::ReflDiag] == 2);

  // classes are conjugation-invariant
  for (const auto& m : all_signed_perm2())
    for (const auto& g : all_signed_perm2())
      CHECK(monodromy_class(compose(compose(invert(g), m), g)) == monodromy_class(m));

  // R and R^-1 are conjugate; orientation-preserving subset
  SignedPerm2 rot;
  rot.img = {2, -1};
  CHECK(monodromy_class(rot) == MonodromyClass::R4);
  CHECK(monodromy_class(invert(rot)) == MonodromyClass::R4);
  SignedPerm2 minus;
  minus.img = {-1, -2};
  CHECK(monodromy_class(minus) == MonodromyClass::MinusI);
  for (const auto& m : all_signed_perm2())
    CHECK(orientation_preserving(monodromy_class(m)) == (m.det() == 1));
}

TEST_CASE("induced facet maps of hypercube symmetries") {
  // functoriality: induced map of a composition equals the composition of
  // induced maps along the facet orbit
  const auto& all = all_signed_perm4();
  for (size_t i = 0; i < all.size(); i += 17) {
    for (size_t j = 0; j < all.size(); j += 23) {
      for (int slot = 0; slot < 8; ++slot) {
        Facet f = facet_from_slot(0, slot);
        Facet mid = apply_to_facet(all[i], f);
        SignedPerm3 lhs = induced_facet_map(compose(all[i], all[j]), f);
        SignedPerm3 rhs = compose(induced_facet_map(all[i], f), induced_facet_map(all[j], mid));
        CHECK(lhs == rhs);
        CHECK(apply_to_facet(compose(all[i], all[j]), f) ==
              apply_to_facet(all[j], apply_to_facet(all[i], f)));
      }
    }
  }
}

TEST_CASE("facet tokens") {
  CHECK(facet_token(Facet{0, 1, 1}) == "0.+1");
  CHECK(facet_token(Facet{2, 4, -1}) == "2.-4");
  CHECK(parse_facet_token("3.-2") == Facet{3, 2, -1});
  CHECK_THROWS_AS(parse_facet_token("3.2"), Error);
  CHECK_THROWS_AS(parse_facet_token("x.+2"), Error);
  CHECK_THROWS_AS(parse_facet_token("0.+5"), Error);
}
