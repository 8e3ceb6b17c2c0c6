#include "lieortho/catalog.hpp"
#include "lieortho/classify.hpp"
#include "lieortho/io.hpp"

#include <gtest/gtest.h>

using namespace lieortho;
using io::Json;

TEST(JsonRational, RoundTrip) {
  EXPECT_EQ(io::to_json(Rational(-3, 6)), Json("-1/2"));
  EXPECT_EQ(io::to_json(Rational(4)), Json("4"));
  EXPECT_EQ(io::rational_from_json(Json("6/4")), Rational(3, 2));
  EXPECT_EQ(io::rational_from_json(Json(-7)), Rational(-7));
  EXPECT_THROW(io::rational_from_json(Json(0.5)), io::ParseError);
  EXPECT_THROW(io::rational_from_json(Json("1/0")), io::ParseError);
  EXPECT_THROW(io::rational_from_json(Json("x")), io::ParseError);
}

TEST(JsonMatrix, RoundTripAndErrors) {
  const Matrix m{{1, Rational(2, 3)}, {-4, 0}};
  EXPECT_EQ(io::matrix_from_json(io::to_json(m)), m);
  EXPECT_EQ(io::to_json(m).dump(), R"([["1","2/3"],["-4","0"]])");
  EXPECT_THROW(io::matrix_from_json(Json::parse("[[1,2],[3]]")), io::ParseError);
  EXPECT_THROW(io::matrix_from_json(Json::parse("{}")), io::ParseError);
}

TEST(JsonAlgebra, RoundTripsEveryCatalogAlgebra) {
  for (const auto &s : {"abelian:2", "g2", "sl2", "gl:2", "sl:3", "heisenberg:2",
                        "sl2-semidirect", "minimal-nilradical:3", "sl2+g2"}) {
    const LieAlgebra L = catalog::by_name(s);
    const Json j = io::algebra_to_json(L);
    const LieAlgebra back = io::algebra_from_json(j);
    EXPECT_EQ(back, L) << s;
    EXPECT_EQ(back.names(), L.names()) << s;
    EXPECT_EQ(back.decomposition(), L.decomposition()) << s;
    EXPECT_EQ(io::algebra_to_json(back).dump(), j.dump()) << s;
  }
}

TEST(JsonAlgebra, Format) {
  const Json j = io::algebra_to_json(catalog::g2());
  EXPECT_EQ(j.dump(), R"({"dim":2,"basis":["e1","e2"],"brackets":[{"i":1,"j":2,"result":{"2":"1"}}]})");
  const Json sl2 = io::algebra_to_json(catalog::sl2_cross());
  EXPECT_EQ(sl2["decomposition"]["simple"].dump(), "[[1,3]]");
  EXPECT_EQ(sl2["decomposition"]["semisimple"], Json(true));
}

TEST(JsonAlgebra, RejectsMalformedInput) {
  auto parse = [](const char *s) { return io::algebra_from_json(Json::parse(s)); };
  EXPECT_THROW(parse(R"({"brackets":[]})"), io::ParseError);
  EXPECT_THROW(parse(R"({"dim":2,"brackets":[{"i":2,"j":1,"result":{"1":"1"}}]})"),
               io::ParseError);
  EXPECT_THROW(parse(R"({"dim":2,"brackets":[{"i":1,"j":3,"result":{"1":"1"}}]})"),
               io::ParseError);
  EXPECT_THROW(parse(R"({"dim":2,"brackets":[{"i":1,"j":2,"result":{"1":"1"}},
                                             {"i":1,"j":2,"result":{"2":"1"}}]})"),
               io::ParseError);
  EXPECT_THROW(parse(R"({"dim":2,"brackets":[{"i":1,"j":2,"result":{"x":"1"}}]})"),
               io::ParseError);
  EXPECT_THROW(parse(R"({"dim":2,"basis":["a"]})"), io::ParseError);
  EXPECT_THROW(parse(R"({"dim":2,"decomposition":{"center":[[2,1]]}})"), io::ParseError);
}

TEST(JsonAlgebra, RejectsJacobiViolation) {
  const char *bad = R"({"dim":3,"brackets":[{"i":1,"j":2,"result":{"1":"1","3":"1"}},
                                            {"i":1,"j":3,"result":{"2":"1"}}]})";
  EXPECT_THROW(io::algebra_from_json(Json::parse(bad)), JacobiError);
}

TEST(JsonOperator, RoundTrip) {
  const auto L = catalog::g2().share();
  const Operator j(L, Matrix{{1, 5}, {0, 1}});
  const Json js = io::operator_to_json(j);
  EXPECT_EQ(js.dump(), R"({"matrix":[["1","5"],["0","1"]]})");
  EXPECT_EQ(io::operator_matrix_from_json(js), j.matrix());
  EXPECT_EQ(io::operator_matrix_from_json(Json::parse("[[1,5],[0,1]]")), j.matrix());
  EXPECT_THROW(io::operator_matrix_from_json(Json::parse(R"({"m":1})")), io::ParseError);
}

TEST(JsonReports, Shapes) {
  const auto L = catalog::heisenberg(1).share();
  const auto rep = invariance_report(Operator::identity(L));
  const Json j = io::report_to_json(rep);
  ASSERT_TRUE(j["checks"].is_array());
  EXPECT_EQ(j["checks"].size(), rep.checks.size());
  EXPECT_EQ(j["all_passed"], Json(true));
  EXPECT_TRUE(j["automorphism"]["is_automorphism"].get<bool>());
  for (const auto &c : j["checks"]) {
    const auto v = c["verdict"].get<std::string>();
    EXPECT_TRUE(v == "pass" || v == "inapplicable") << c.dump();
    EXPECT_TRUE(c["witness"].is_null());
  }
  const Json z = io::subspace_to_json(center(*L));
  EXPECT_EQ(z.dump(), R"({"dim":1,"basis":[["1","0","0"]]})");

  const auto vr = verify_family(heisenberg_family(1), 3, 3, 1);
  const Json v = io::verification_to_json(vr);
  EXPECT_EQ(v["samples"], Json(3));
  EXPECT_TRUE(v["counterexample"].is_null());
  EXPECT_EQ(v["passed"], Json(true));
}

TEST(FamilySpecs, ParsesEveryFamily) {
  auto build_from = [](const std::string &f, const char *p) {
    return build(io::family_spec_from_json(f, Json::parse(p)));
  };
  EXPECT_TRUE(build_from("semisimple", R"({"algebra":"sl2+sl2","signs":[1,-1]})").dim() == 6);
  EXPECT_TRUE(is_lie_orthogonal(build_from("reductive", R"({"algebra":"sl2+g1"})")));
  EXPECT_TRUE(is_lie_orthogonal(build_from("gl", R"({"n":2,"sign":-1,"functional":[1,0,0,2]})")));
  EXPECT_TRUE(is_lie_orthogonal(
      build_from("heisenberg", R"({"n":1,"jhat":[[2,3],[1,2]],"r":"1/2","R":[1,2]})")));
  EXPECT_TRUE(is_lie_orthogonal(build_from(
      "almost-abelian", R"({"A":[[0,0,0],[0,1,0],[0,0,2]],"mu":3,"B0":[[2]]})")));
  EXPECT_TRUE(is_lie_orthogonal(
      build_from("almost-abelian", R"({"A":[[0,0],[0,1]],"C":[[1,1],[0,1]]})")));
  EXPECT_TRUE(is_lie_orthogonal(
      build_from("minimal-nilradical", R"({"n":3,"copies":[[[1,1],[0,1]]],"center_row":[0,1,1]})")));
  EXPECT_EQ(build_from("sl2-semidirect", R"({"sign":-1})").matrix(), -Matrix::identity(5));
  EXPECT_THROW(io::family_spec_from_json("nope", Json::object()), std::invalid_argument);
  EXPECT_THROW(io::family_spec_from_json("gl", Json::object()), io::ParseError);
  EXPECT_THROW(io::family_spec_from_json("gl", Json::array()), io::ParseError);
}
