#include <doctest.h>

#include "support.hpp"

using namespace test;

TEST_CASE("contexts") {
  CHECK(parse_context("Q")->degree() == 1);
  CHECK(parse_context("gaussian")->degree() == 2);
  CHECK(parse_context("zeta5")->degree() == 4);
  CHECK(parse_context(Json::array({"-2", 0, 1}))->degree() == 2);
  CHECK(context_to_json(Z5()) == Json::array({"1", "1", "1", "1", "1"}));
  CHECK_THROWS_AS(parse_context("reals"), Error);
  CHECK_THROWS_AS(parse_context(Json::array({1, 0, 2})), Error);
  CHECK_THROWS_AS(parse_context(3.5), Error);
}

TEST_CASE("elements") {
  CHECK(element_from_json(Q(), "3/6") == el(Q(), q(1, 2)));
  CHECK(element_from_json(Q(), 7) == el(Q(), 7));
  CHECK(element_from_json(Z5(), Json::array({"1", 2})) == FieldElement(Z5(), std::vector<Rational>{1, 2}));
  CHECK(to_json(el(Q(), q(-1, 3))) == "-1/3");
  CHECK_THROWS_AS(element_from_json(Q(), 0.5), Error);
  CHECK_THROWS_AS(element_from_json(Q(), Json::object()), Error);
}

TEST_CASE("matrices and specs round trip") {
  auto r = rep(3, X(Q(), {1, 2, 3}));
  Json m = to_json(r.g2);
  CHECK(m["rows"] == 3);
  CHECK(m["entries"][1] == "21/2");
  CHECK(matrix_from_json(Q(), m) == r.g2);
  CHECK_THROWS_AS(matrix_from_json(Q(), Json{{"rows", 2}, {"cols", 2}, {"entries", {1, 2, 3}}}), Error);

  RepSpec s{4, X(Q(), {1, 2, 3, 6}), with_h(el(Q(), -6)), 5};
  Json sj = to_json(s);
  CHECK(sj["h"] == "-6");
  CHECK_FALSE(sj.contains("variant"));
  RepSpec back = rep_spec_from_json(Q(), sj);
  CHECK(build_rep(back).g2 == build_rep(s).g2);

  Json six{{"dim", 6}, {"X", {2, 3, 5, 7, 11}}, {"variant", 2}};
  CHECK(rep_spec_from_json(Q(), six).variant == 2);
  CHECK_THROWS_AS(rep_spec_from_json(Q(), Json{{"dim", 4}, {"X", {1, 2, 3, 6}}}), Error);
  CHECK_THROWS_AS(rep_spec_from_json(Q(), Json{{"X", {1}}}), Error);

  Json rj = to_json(r);
  CHECK(rj["spec"]["dim"] == 3);
  CHECK(rj.contains("g1"));
}

TEST_CASE("witness encoding") {
  Witness w;
  w.index_set = {1, 5};
  CHECK(to_json(w) == Json{{"Y", {1, 5}}, {"complement_found", false}});
  w.line = std::make_pair(el(Q(), 1), el(Q(), q(1, 7)));
  Json j = to_json(w);
  CHECK(j["line"] == Json::array({"1", "1/7"}));
  Witness back = witness_from_json(Q(), j);
  CHECK(back.index_set == w.index_set);
  CHECK(back.line->second == el(Q(), q(1, 7)));
}

TEST_CASE("reports serialise without floating point") {
  auto report = to_json(check_spectrum(rep(2, X(Q(), {1, 2}))));
  CHECK(report["C_rho"] == "-8");
  CHECK(report["all_ok"] == true);
  auto census = to_json(dimension_census(X(Q(), {1, 2}), CensusMode::constructive));
  CHECK(census["sum_of_squares"] == 6);
  std::function<void(const Json&)> no_float = [&](const Json& j) {
    CHECK_FALSE(j.is_number_float());
    if (j.is_structured())
      for (const auto& c : j) no_float(c);
  };
  no_float(report);
  no_float(census);
}
