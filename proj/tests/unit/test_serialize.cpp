#include <doctest.h>

#include "pencil/error.hpp"
#include "pencil/serialize.hpp"

using namespace pencil;

TEST_CASE("curve specs round-trip") {
  const CurveSpec s = CurveSpec::real_descending(3, 2, {2.0, 1.0});
  const Json j = s;
  CHECK(j.dump() == R"({"alphas":[2.0,1.0],"mode":"real-descending","p":3,"q":2})");
  const CurveSpec back = j.get<CurveSpec>();
  CHECK(back.real_alphas() == s.real_alphas());
  CHECK(Json::parse(R"({"p":4,"q":3})").get<CurveSpec>().real_alphas() == std::vector<double>{4, 3, 2});
  const CurveSpec r = Json::parse(R"({"p":3,"q":3,"mode":"roots-of-unity"})").get<CurveSpec>();
  CHECK(r.mode == AlphaMode::RootsOfUnity);
  CHECK(Json(r).at("alphas").size() == 3);
  CHECK_THROWS_AS(Json::parse(R"({"p":3,"q":2,"alphas":[1,2]})").get<CurveSpec>(), InvalidSpec);
}

TEST_CASE("words, braids and presentations round-trip") {
  const FreeWord w{1, -3, 2};
  CHECK(Json(w).dump() == "[1,-3,2]");
  CHECK(Json(w).get<FreeWord>() == w);
  const BraidWord b(4, {1, -2, 3});
  CHECK(Json(b).dump() == R"({"strands":4,"word":[1,-2,3]})");
  CHECK(Json(b).get<BraidWord>() == b);
  const Presentation P = expected_affine(3, 2);
  const Presentation Q = Json(P).get<Presentation>();
  CHECK(Q.generators == P.generators);
  CHECK(Q.relators == P.relators);
  CHECK(Q.provenance == P.provenance);
  CHECK_THROWS(Json::parse(R"({"generators":["a"],"relators":[[2]]})").get<Presentation>());
}

TEST_CASE("Laurent polynomials") {
  const LaurentPoly f = closed_form_generic_linear(3, 2);
  CHECK(Json(f).dump() == R"({"coeffs":[-1,1,-1,1,-1,1],"lo":0})");
  CHECK(Json::parse(R"({"lo":0,"coeffs":[-1,1,-1,1,-1,1]})").get<LaurentPoly>() == f);
  const LaurentPoly big = LaurentPoly::monomial(mpz_class("123456789012345678901234567890"), -2);
  const Json jb = big;
  CHECK(jb.at("coeffs").at(0).is_string());
  CHECK(jb.get<LaurentPoly>() == big);
  CHECK(Json(LaurentPoly()).dump() == R"({"coeffs":[],"lo":0})");
}

TEST_CASE("complex numbers and reports") {
  CHECK(complex_to_json({1.5, -2.0}).dump() == "[1.5,-2.0]");
  CHECK(complex_from_json(Json::parse("[0.25,1]")) == Complex(0.25, 1.0));
  CHECK(complex_from_json(Json(3.0)) == Complex(3.0, 0.0));
  const Json a = AbelianInvariants{1, {3}};
  CHECK(a.at("rank") == 1);
  const Json bat = compute_battery(expected_projective(3, 2));
  CHECK(bat.at("homs").at("S3").get<int>() > 0);
  const Json rs = derive_relations_symbolic(2, 2);
  CHECK(rs.at("relators").size() > 0);
}
