#include "doctest.h"
#include "strata/naive_orbits.hpp"
#include "strata/parse.hpp"

using namespace strata;

TEST_CASE("signature grammar") {
  CHECK(parse_signature("(0; 2,2,2,4)") == Signature(0, {2, 2, 2, 4}));
  CHECK(parse_signature("(1; -)") == Signature(1, {}));
  CHECK(parse_signature(" ( 1 ;  3 ) ") == Signature(1, {3}));
  CHECK_THROWS_AS(parse_signature("(0; 1,2)"), ParseError);
  CHECK_THROWS_AS(parse_signature("(0; 2,2"), ParseError);
  CHECK_THROWS_AS(parse_signature("0; 2,2)"), ParseError);
  CHECK_THROWS_AS(parse_signature("(0; 2,2) extra"), ParseError);
  try {
    parse_signature("(0; 1,2)");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("period must be >= 2") != std::string::npos);
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("signature print/parse round trip") {
  for (const auto& sig :
       {Signature(0, {2, 2, 2, 4}), Signature(1, {}), Signature(3, {5, 5})}) {
    CHECK(parse_signature(sig.str()) == sig);
  }
}

TEST_CASE("group spec grammar") {
  CHECK(parse_group_spec("G2:n=5").size() == 32);
  CHECK(parse_group_spec("Gp:p=3,n=3").size() == 27);
  CHECK(parse_group_spec("perm:[(1 2)(3 4);(1 3)]").size() == 8);
  CHECK(parse_group_spec("perm:[]").size() == 1);
  CHECK_THROWS_AS(parse_group_spec("G3:n=5"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("G2:m=5"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("perm:[(1 1)]"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("G2:n=4"), std::invalid_argument);
}

TEST_CASE("generator words") {
  FiniteGroup g = build_G2(5);
  CHECK(eval_word(g, "e") == g.identity());
  CHECK(eval_word(g, "r^2*s") ==
        g.mul(g.pow(g.generator("r"), 2), g.generator("s")));
  CHECK(eval_word(g, "a^-1") == g.inv(g.generator("a")));
  CHECK_THROWS_AS(eval_word(g, "q"), std::invalid_argument);
  CHECK_THROWS_AS(eval_word(g, "r^"), ParseError);
}

TEST_CASE("JSON round trips") {
  FiniteGroup g = build_Gp(3, 3);
  auto report = classify(Signature(1, {3}), g);
  Json j = to_json(report);
  auto back = equivalence_report_from_json(j);
  CHECK(to_json(back) == j);
  CHECK(back.signature == report.signature);
  CHECK(back.total == report.total);
  CHECK(back.orbits.size() == report.orbits.size());

  auto theta = enumerate_actions(Signature(1, {3}), g).front();
  auto dec = group_algebra_decomposition(theta);
  Json dj = to_json(dec);
  auto dec_back = decomposition_report_from_json(dj);
  CHECK(to_json(dec_back) == dj);
  CHECK(dec_back.genus == dec.genus);

  auto b = bound_result(GroupClass::prime(3), 1);
  Json bj = to_json(b);
  CHECK(bj["coefficient"] == "3");
  CHECK(bj["extremal_signatures"].size() == 2);
}

TEST_CASE("naive orbit oracle agrees with classify") {
  FiniteGroup d4 = from_permutations({{2, 3, 4, 1}, {3, 2, 1, 4}});
  for (const auto& sig :
       {Signature(0, {2, 2, 2, 4}), Signature(0, {2, 2, 2, 2, 2}),
        Signature(1, {2})}) {
    auto classified = classify_with_members(sig, d4);
    auto auts = automorphisms(d4);
    auto naive = naive_orbit_partition(d4, auts, classified.all);
    REQUIRE(naive.size() == classified.report.orbits.size());
    for (const auto& orbit : naive) {
      int id = classified.orbit_of[orbit.front()];
      for (int member : orbit) CHECK(classified.orbit_of[member] == id);
    }
  }
}
