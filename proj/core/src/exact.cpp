#include "pencil/exact.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "pencil/error.hpp"

namespace pencil {

RationalPoly::RationalPoly(std::vector<mpq_class> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RationalPoly RationalPoly::constant(const mpq_class& c) { return RationalPoly({c}); }

RationalPoly RationalPoly::monomial(const mpq_class& c, int exponent) {
  if (exponent < 0) throw std::invalid_argument("RationalPoly::monomial: negative exponent");
  std::vector<mpq_class> v(static_cast<std::size_t>(exponent) + 1, mpq_class(0));
  v.back() = c;
  return RationalPoly(std::move(v));
}

void RationalPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int RationalPoly::order() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<int>(i);
  return -1;
}

mpq_class RationalPoly::coefficient(int e) const {
  if (e < 0 || e > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(e)];
}

std::size_t RationalPoly::max_bits() const {
  std::size_t bits = 0;
  for (const auto& c : coeffs_) {
    bits = std::max(bits, mpz_sizeinbase(c.get_num_mpz_t(), 2));
    bits = std::max(bits, mpz_sizeinbase(c.get_den_mpz_t(), 2));
  }
  return bits;
}

RationalPoly RationalPoly::operator-() const {
  RationalPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), mpq_class(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), mpq_class(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> out(a.coeffs_.size() + b.coeffs_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RationalPoly(std::move(out));
}

std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b) {
  if (b.is_zero()) throw std::domain_error("RationalPoly: division by zero");
  if (a.degree() < b.degree()) return {RationalPoly{}, a};
  std::vector<mpq_class> rem = a.coeffs_;
  std::vector<mpq_class> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), mpq_class(0));
  const mpq_class& lead = b.coeffs_.back();
  const auto db = static_cast<std::size_t>(b.degree());
  for (std::size_t k = quot.size(); k-- > 0;) {
    mpq_class c = rem[k + db] / lead;
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= c * b.coeffs_[j];
  }
  rem.resize(db);
  return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

RationalPoly determinant(std::vector<std::vector<RationalPoly>> m, std::size_t max_bits) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant: matrix is not square");
  if (n == 0) return RationalPoly::constant(1);
  bool negate = false;
  RationalPoly prev = RationalPoly::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return {};
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        RationalPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        auto [q, r] = divmod(num, prev);
        if (!r.is_zero()) throw std::logic_error("determinant: inexact Bareiss division");
        if (q.max_bits() > max_bits)
          throw ExactArithmeticOverflow("determinant entry exceeds " + std::to_string(max_bits) +
                                        " bits");
        m[i][j] = std::move(q);
      }
      m[i][k] = RationalPoly{};
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

RationalPoly sylvester_resultant(const BivariateExact& f, const BivariateExact& g) {
  auto deg = [](const BivariateExact& h) {
    int d = static_cast<int>(h.size()) - 1;
    while (d >= 0 && h[static_cast<std::size_t>(d)].is_zero()) --d;
    return d;
  };
  const int m = deg(f), n = deg(g);
  if (m < 0 || n < 0) return {};
  const auto size = static_cast<std::size_t>(m + n);
  if (size == 0) return RationalPoly::constant(1);
  std::vector<std::vector<RationalPoly>> s(size, std::vector<RationalPoly>(size));
  // Rows hold coefficients from the leading one down.
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i)
      s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] = f[static_cast<std::size_t>(m - i)];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i)
      s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + i)] = g[static_cast<std::size_t>(n - i)];
  return determinant(std::move(s));
}

namespace {

// Exact quotient by a monic integer polynomial.
std::vector<mpz_class> divide_monic(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
  const std::size_t db = b.size() - 1;
  std::vector<mpz_class> q(a.size() - db, mpz_class(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    q[k] = a[k + db];
    for (std::size_t j = 0; j <= db; ++j) a[k + j] -= q[k] * b[j];
  }
  for (std::size_t j = 0; j < db; ++j)
    if (a[j] != 0) throw std::logic_error("cyclotomic_polynomial: inexact division");
  return q;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  std::vector<mpz_class> p(static_cast<std::size_t>(n) + 1, mpz_class(0));
  p[0] = -1;
  p.back() = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = divide_monic(std::move(p), cyclotomic_polynomial(d));
  return p;
}

CyclotomicInt::CyclotomicInt(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("CyclotomicInt: order must be positive");
  coeffs_.assign(cyclotomic_polynomial(n).size() - 1, mpz_class(0));
}

CyclotomicInt CyclotomicInt::zeta_power(int n, int k) {
  CyclotomicInt z(n);
  const int e = ((k % n) + n) % n;
  std::vector<mpz_class> raw(static_cast<std::size_t>(e) + 1, mpz_class(0));
  raw.back() = 1;
  z.reduce(std::move(raw));
  return z;
}

CyclotomicInt CyclotomicInt::integer(int n, const mpz_class& v) {
  CyclotomicInt z(n);
  z.reduce({v});
  return z;
}

bool CyclotomicInt::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c == 0; });
}

void CyclotomicInt::reduce(std::vector<mpz_class> raw) {
  const auto phi = cyclotomic_polynomial(n_);
  const std::size_t dp = phi.size() - 1;
  for (std::size_t k = raw.size(); k-- > dp;) {
    const mpz_class c = raw[k];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dp; ++j) raw[k - dp + j] -= c * phi[j];
  }
  raw.resize(dp, mpz_class(0));
  coeffs_ = std::move(raw);
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& rhs) {
  if (rhs.n_ != n_) throw std::invalid_argument("CyclotomicInt: mismatched orders");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& rhs) const {
  if (rhs.n_ != n_) throw std::invalid_argument("CyclotomicInt: mismatched orders");
  std::vector<mpz_class> raw(coeffs_.size() * 2, mpz_class(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) raw[i + j] += coeffs_[i] * rhs.coeffs_[j];
  CyclotomicInt out(n_);
  out.reduce(std::move(raw));
  return out;
}

CyclotomicInt CyclotomicInt::operator-() const {
  CyclotomicInt out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

}  // namespace pencil
