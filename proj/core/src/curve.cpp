#include "pencil/curve.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "pencil/error.hpp"

namespace pencil {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Coefficients of prod_j (X - c_j) in X, lowest first.
std::vector<Complex> product_in_x_power(const std::vector<Complex>& c) {
  std::vector<Complex> poly{Complex{1.0}};
  for (const auto& cj : c) {
    std::vector<Complex> next(poly.size() + 1);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= cj * poly[i];
    }
    poly = std::move(next);
  }
  return poly;
}

// Spreads a polynomial in X = x^p into one in x.
UniPoly spread(const std::vector<Complex>& in_X, int p) {
  std::vector<Complex> out((in_X.size() - 1) * static_cast<std::size_t>(p) + 1);
  for (std::size_t i = 0; i < in_X.size(); ++i) out[i * static_cast<std::size_t>(p)] = in_X[i];
  return UniPoly(std::move(out));
}

}  // namespace

std::string to_string(AlphaMode mode) {
  return mode == AlphaMode::RealDescending ? "real-descending" : "roots-of-unity";
}

AlphaMode alpha_mode_from_string(const std::string& s) {
  if (s == "real-descending") return AlphaMode::RealDescending;
  if (s == "roots-of-unity") return AlphaMode::RootsOfUnity;
  throw InvalidSpec("unknown alpha mode '" + s + "'");
}

CurveSpec CurveSpec::real_descending(int p, int q, const std::vector<double>& alphas) {
  CurveSpec s;
  s.p = p;
  s.q = q;
  s.mode = AlphaMode::RealDescending;
  for (double a : alphas) s.alphas.emplace_back(a, 0.0);
  s.validate();
  return s;
}

CurveSpec CurveSpec::roots_of_unity(int p, int q) {
  CurveSpec s;
  s.p = p;
  s.q = q;
  s.mode = AlphaMode::RootsOfUnity;
  for (int j = 0; j < q; ++j) s.alphas.push_back(std::polar(1.0, kTwoPi * j / q));
  s.validate();
  return s;
}

std::vector<double> CurveSpec::default_alphas(int q) {
  std::vector<double> a;
  for (int j = 0; j < q; ++j) a.push_back(static_cast<double>(q + 1 - j));
  return a;
}

CurveSpec CurveSpec::with_default_alphas(int p, int q) {
  return real_descending(p, q, default_alphas(q));
}

std::vector<double> CurveSpec::real_alphas() const {
  std::vector<double> out;
  for (const auto& a : alphas) out.push_back(a.real());
  return out;
}

void CurveSpec::validate() const {
  if (p < 2) throw InvalidSpec("p must be at least 2, got " + std::to_string(p));
  if (q < 2) throw InvalidSpec("q must be at least 2, got " + std::to_string(q));
  if (static_cast<int>(alphas.size()) != q) {
    std::ostringstream m;
    m << "expected " << q << " alphas, got " << alphas.size();
    throw InvalidSpec(m.str());
  }
  for (const auto& a : alphas) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) || a == Complex{})
      throw InvalidSpec("alphas must be finite and nonzero");
  }
  for (std::size_t i = 0; i < alphas.size(); ++i)
    for (std::size_t j = i + 1; j < alphas.size(); ++j)
      if (alphas[i] == alphas[j]) throw InvalidSpec("alphas must be pairwise distinct");
  if (mode == AlphaMode::RealDescending) {
    for (std::size_t i = 0; i < alphas.size(); ++i) {
      if (alphas[i].imag() != 0.0 || alphas[i].real() <= 0.0)
        throw InvalidSpec("real-descending mode needs positive real alphas");
      if (i > 0 && !(alphas[i - 1].real() > alphas[i].real()))
        throw InvalidSpec("real-descending mode needs alpha_1 > ... > alpha_q");
    }
  }
}

Complex psi_eval(Complex y, Complex alpha, int p) { return y - alpha * std::pow(y, p); }

Complex psi_factored(Complex y, Complex alpha, int p) {
  const Complex g = gamma_of(alpha, p);
  Complex acc = alpha * y;
  for (int k = 0; k <= p - 2; ++k) acc *= g * std::polar(1.0, kTwoPi * k / (p - 1)) - y;
  return acc;
}

Complex gamma_of(Complex alpha, int p) { return std::pow(1.0 / alpha, 1.0 / (p - 1)); }

UniPoly fiber_polynomial(const CurveSpec& spec, Complex y0) {
  std::vector<Complex> c;
  for (const auto& a : spec.alphas) c.push_back(psi_eval(y0, a, spec.p));
  return spread(product_in_x_power(c), spec.p);
}

UniPoly fiber_polynomial_dy(const CurveSpec& spec, Complex y0) {
  // d/dy prod_j (X - c_j) = sum_j (-c_j') prod_{i != j} (X - c_i)
  std::vector<Complex> c, dc;
  for (const auto& a : spec.alphas) {
    c.push_back(psi_eval(y0, a, spec.p));
    dc.push_back(1.0 - static_cast<double>(spec.p) * a * std::pow(y0, spec.p - 1));
  }
  std::vector<Complex> total(c.size() + 1);
  for (std::size_t j = 0; j < c.size(); ++j) {
    std::vector<Complex> others;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (i != j) others.push_back(c[i]);
    const auto part = product_in_x_power(others);
    for (std::size_t k = 0; k < part.size(); ++k) total[k] -= dc[j] * part[k];
  }
  return spread(total, spec.p);
}

PolynomialFamily fiber_family(const CurveSpec& spec) {
  return PolynomialFamily{[spec](Complex y) { return fiber_polynomial(spec, y); },
                          [spec](Complex y) { return fiber_polynomial_dy(spec, y); }};
}

std::vector<Complex> SingularValues::points() const {
  std::vector<Complex> out;
  for (const auto& v : values) out.push_back(v.value);
  return out;
}

double SingularValues::max_modulus() const {
  double m = 0.0;
  for (const auto& v : values) m = std::max(m, std::abs(v.value));
  return m;
}

SingularValues singular_values(const CurveSpec& spec) {
  spec.validate();
  SingularValues sv;
  sv.real_geometry = spec.mode == AlphaMode::RealDescending;
  sv.values.push_back({Complex{}, 0, 0});
  for (int j = 1; j <= spec.q; ++j) {
    const Complex g = gamma_of(spec.alphas[static_cast<std::size_t>(j - 1)], spec.p);
    for (int k = 0; k <= spec.p - 2; ++k) {
      Complex v = g * std::polar(1.0, kTwoPi * k / (spec.p - 1));
      // Snap rounding noise so axis-aligned flexes stay exactly on the axis.
      if (std::abs(v.imag()) < 1e-15 * std::abs(v)) v = {v.real(), 0.0};
      if (std::abs(v.real()) < 1e-15 * std::abs(v)) v = {0.0, v.imag()};
      sv.values.push_back({v, j, k});
    }
  }
  const double tol = 1e-8 * sv.max_modulus();
  for (std::size_t a = 0; a < sv.values.size(); ++a)
    for (std::size_t b = a + 1; b < sv.values.size(); ++b)
      if (std::abs(sv.values[a].value - sv.values[b].value) <= tol) {
        std::ostringstream m;
        m << "singular values " << sv.values[a].value << " and " << sv.values[b].value
          << " coincide";
        throw DegenerateSpec(m.str());
      }
  return sv;
}

BaseConfiguration base_configuration(const CurveSpec& spec) {
  spec.validate();
  if (spec.mode != AlphaMode::RealDescending)
    throw InvalidSpec("base_configuration needs real-descending mode");
  BaseConfiguration bc;
  bc.gamma0 = gamma_of(spec.alphas.front(), spec.p).real() / 2.0;
  for (const auto& a : spec.alphas) bc.psi_values.push_back(psi_eval(bc.gamma0, a, spec.p).real());
  for (std::size_t j = 0; j < bc.psi_values.size(); ++j) {
    if (!(bc.psi_values[j] > 0.0) || (j > 0 && !(bc.psi_values[j - 1] < bc.psi_values[j]))) {
      std::ostringstream m;
      m << "satellite order fails at component " << j + 1 << " (psi = " << bc.psi_values[j] << ")";
      throw OrderViolation(m.str());
    }
  }
  return bc;
}

BivariateExact component_polynomial_exact(const CurveSpec& spec, int j) {
  spec.validate();
  if (spec.mode != AlphaMode::RealDescending)
    throw InvalidSpec("exact component polynomials need real alphas");
  if (j < 1 || j > spec.q) throw std::out_of_range("component index out of range");
  // x^p - y + alpha y^p; doubles convert to rationals exactly.
  const mpq_class alpha(spec.alphas[static_cast<std::size_t>(j - 1)].real());
  BivariateExact f(static_cast<std::size_t>(spec.p) + 1);
  f[0] = RationalPoly::monomial(alpha, spec.p) - RationalPoly::monomial(1, 1);
  f.back() = RationalPoly::constant(1);
  return f;
}

int intersection_multiplicity_origin(const CurveSpec& spec, int i, int j) {
  if (i == j) throw std::invalid_argument("intersection_multiplicity_origin: needs i != j");
  const RationalPoly res =
      sylvester_resultant(component_polynomial_exact(spec, i), component_polynomial_exact(spec, j));
  if (res.is_zero()) throw std::logic_error("components share a factor");
  return res.order();
}

namespace {

using CycloBivariate = std::map<std::pair<int, int>, CyclotomicInt>;  // (x deg, y deg)

void add_term(CycloBivariate& f, int dx, int dy, const CyclotomicInt& c) {
  auto [it, inserted] = f.try_emplace({dx, dy}, c);
  if (!inserted) it->second += c;
  if (it->second.is_zero()) f.erase(it);
}

CycloBivariate multiply(const CycloBivariate& a, const CycloBivariate& b) {
  CycloBivariate out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) add_term(out, ea.first + eb.first, ea.second + eb.second, ca * cb);
  return out;
}

TorusIdentity torus_symbolic(int p, int q) {
  auto integer = [q](long v) { return CyclotomicInt::integer(q, v); };
  CycloBivariate lhs{{{0, 0}, integer(1)}};
  for (int j = 1; j <= q; ++j) {
    CycloBivariate factor;
    add_term(factor, 0, p, CyclotomicInt::zeta_power(q, j - 1));
    add_term(factor, 0, 1, integer(-1));
    add_term(factor, p, 0, integer(1));
    lhs = multiply(lhs, factor);
  }
  CycloBivariate z{{{0, 1}, integer(1)}};  // y - x^p
  add_term(z, p, 0, integer(-1));
  CycloBivariate zq{{{0, 0}, integer(1)}};
  for (int j = 0; j < q; ++j) zq = multiply(zq, z);
  CycloBivariate rhs;
  add_term(rhs, 0, p * q, integer(1));
  for (const auto& [e, c] : zq) add_term(rhs, e.first, e.second, -c);

  TorusIdentity out;
  out.symbolic = true;
  const CyclotomicInt lead = rhs.at({p * q, 0});  // (-1)^(q+1), a unit
  out.c = lead == integer(1) ? 1 : -1;
  CycloBivariate diff = lhs;
  for (const auto& [e, c] : rhs) add_term(diff, e.first, e.second, out.c == 1 ? -c : c);
  out.holds = diff.empty();
  return out;
}

TorusIdentity torus_numeric(int p, int q) {
  std::mt19937_64 rng(0x70725u);
  std::uniform_int_distribution<int> num(-8, 8), den(8, 16);
  TorusIdentity out;
  out.symbolic = false;
  out.c = (q % 2 == 1) ? 1 : -1;
  out.holds = true;
  for (int s = 0; s < 20; ++s) {
    const Complex x(static_cast<double>(num(rng)) / den(rng), static_cast<double>(num(rng)) / den(rng));
    const Complex y(static_cast<double>(num(rng)) / den(rng), static_cast<double>(num(rng)) / den(rng));
    Complex lhs{1.0};
    for (int j = 0; j < q; ++j) lhs *= std::polar(1.0, kTwoPi * j / q) * std::pow(y, p) - y + std::pow(x, p);
    const Complex rhs =
        static_cast<double>(out.c) * (std::pow(std::pow(y, q), p) - std::pow(y - std::pow(x, p), q));
    // Bound on the size of the expanded terms, so cancellation is not misread.
    const double bound =
        std::pow(std::pow(std::abs(y), p) + std::abs(y) + std::pow(std::abs(x), p), q) +
        std::pow(std::abs(y), p * q);
    const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs), bound});
    if (std::abs(lhs - rhs) > 1e-9 * scale) out.holds = false;
  }
  return out;
}

}  // namespace

TorusIdentity torus_form_identity(const CurveSpec& spec) {
  spec.validate();
  if (spec.mode != AlphaMode::RootsOfUnity)
    throw InvalidSpec("torus_form_identity needs roots-of-unity mode");
  return spec.q <= 6 ? torus_symbolic(spec.p, spec.q) : torus_numeric(spec.p, spec.q);
}

}  // namespace pencil
