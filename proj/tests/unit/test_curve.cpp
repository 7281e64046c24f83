#include <doctest.h>

#include <cmath>

#include "pencil/curve.hpp"
#include "pencil/error.hpp"

using namespace pencil;

TEST_CASE("spec validation") {
  CHECK_NOTHROW(CurveSpec::real_descending(3, 2, {2.0, 1.0}));
  CHECK_THROWS_AS(CurveSpec::real_descending(3, 2, {1.0, 2.0}), InvalidSpec);
  CHECK_THROWS_AS(CurveSpec::real_descending(3, 2, {1.0, 1.0}), InvalidSpec);
  CHECK_THROWS_AS(CurveSpec::real_descending(3, 2, {2.0, -1.0}), InvalidSpec);
  CHECK_THROWS_AS(CurveSpec::real_descending(3, 2, {2.0}), InvalidSpec);
  CHECK_THROWS_AS(CurveSpec::real_descending(1, 2, {2.0, 1.0}), InvalidSpec);
  CHECK(CurveSpec::default_alphas(3) == std::vector<double>{4.0, 3.0, 2.0});
  const CurveSpec s = CurveSpec::with_default_alphas(4, 3);
  CHECK(s.degree() == 12);
  CHECK(s.p_exceeds_q());
  CHECK(alpha_mode_from_string(to_string(AlphaMode::RootsOfUnity)) == AlphaMode::RootsOfUnity);
}

TEST_CASE("psi and gamma") {
  const Complex y(0.3, -0.7), a(2.0, 0.0);
  CHECK(std::abs(psi_eval(y, a, 4) - psi_factored(y, a, 4)) < 1e-14);
  for (int p : {2, 3, 5}) {
    const Complex g = gamma_of(a, p);
    CHECK(std::abs(std::pow(g, p - 1) - 1.0 / a) < 1e-14);
    CHECK(std::abs(psi_eval(g, a, p)) < 1e-14);
  }
}

TEST_CASE("fiber polynomial vanishes at the p-th roots of psi") {
  const CurveSpec s = CurveSpec::real_descending(3, 2, {2.0, 1.0});
  const Complex y0(0.2, 0.1);
  const UniPoly f = fiber_polynomial(s, y0);
  CHECK(f.degree() == 6);
  CHECK(std::abs(f.leading() - 1.0) < 1e-15);
  for (Complex a : s.alphas) {
    const Complex root = std::pow(psi_eval(y0, a, 3), 1.0 / 3.0);
    CHECK(f.relative_residual(root) < 1e-13);
  }
  // d/dy by central difference.
  const double h = 1e-6;
  const UniPoly fp = fiber_polynomial(s, y0 + h), fm = fiber_polynomial(s, y0 - h);
  const UniPoly dy = fiber_polynomial_dy(s, y0);
  for (std::size_t i = 0; i < dy.coefficients().size(); ++i)
    CHECK(std::abs((fp.coefficients()[i] - fm.coefficients()[i]) / (2 * h) - dy.coefficients()[i]) < 1e-6);
}

TEST_CASE("singular values: origin and gamma_j xi^k") {
  const CurveSpec s = CurveSpec::real_descending(3, 2, {2.0, 1.0});
  const SingularValues sv = singular_values(s);
  REQUIRE(sv.values.size() == 5);
  CHECK(sv.values[0].value == Complex(0.0, 0.0));
  CHECK(sv.values[1].value.real() == doctest::Approx(std::sqrt(0.5)));
  CHECK(sv.values[1].value.imag() == 0.0);
  CHECK(sv.values[2].value.real() == doctest::Approx(-std::sqrt(0.5)));
  CHECK(sv.values[3].value.real() == doctest::Approx(1.0));
  CHECK(sv.max_modulus() == doctest::Approx(1.0));
  for (int q = 2; q <= 4; ++q)
    for (int p = 2; p <= 5; ++p)
      CHECK(singular_values(CurveSpec::with_default_alphas(p, q)).values.size() ==
            static_cast<std::size_t>(1 + q * (p - 1)));
  CHECK_THROWS_AS(singular_values(CurveSpec::real_descending(3, 2, {2.0 + 1e-12, 2.0})), DegenerateSpec);
}

TEST_CASE("base point and satellite order") {
  const CurveSpec s = CurveSpec::real_descending(3, 2, {2.0, 1.0});
  const BaseConfiguration b = base_configuration(s);
  CHECK(b.gamma0 == doctest::Approx(std::sqrt(0.5) / 2));
  REQUIRE(b.psi_values.size() == 2);
  CHECK(0.0 < b.psi_values[0]);
  CHECK(b.psi_values[0] < b.psi_values[1]);
}

TEST_CASE("components meet at the origin with multiplicity p^2") {
  for (auto [p, q] : {std::pair{2, 2}, {3, 2}, {4, 2}, {4, 3}, {5, 2}}) {
    const CurveSpec s = CurveSpec::with_default_alphas(p, q);
    for (int i = 1; i <= q; ++i)
      for (int j = i + 1; j <= q; ++j) CHECK(intersection_multiplicity_origin(s, i, j) == p * p);
  }
}

TEST_CASE("torus form identity with c = (-1)^(q-1)") {
  for (int q = 2; q <= 4; ++q)
    for (int p = 2; p <= 5; ++p) {
      const TorusIdentity t = torus_form_identity(CurveSpec::roots_of_unity(p, q));
      CHECK(t.holds);
      CHECK(t.symbolic);
      CHECK(t.c == (q % 2 == 1 ? 1 : -1));
    }
  const TorusIdentity big = torus_form_identity(CurveSpec::roots_of_unity(2, 7));
  CHECK(big.holds);
  CHECK_FALSE(big.symbolic);
  CHECK(big.c == 1);
}
