#include "pencil/laurent.hpp"

#include <sstream>

#include "pencil/error.hpp"

namespace pencil {

LaurentPoly::LaurentPoly(int lo, std::vector<mpz_class> coefficients)
    : lo_(lo), coeffs_(std::move(coefficients)) {
  trim();
}

LaurentPoly LaurentPoly::monomial(const mpz_class& c, int exponent) {
  return LaurentPoly(exponent, {c});
}

LaurentPoly LaurentPoly::t_power_minus_one(int n) {
  std::vector<mpz_class> c(static_cast<std::size_t>(n) + 1, 0);
  c.front() = -1;
  c.back() = 1;
  return LaurentPoly(0, std::move(c));
}

void LaurentPoly::trim() {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    lo_ = 0;
    return;
  }
  while (coeffs_.back() == 0) coeffs_.pop_back();
  if (first > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(first));
    lo_ += static_cast<int>(first);
  }
}

mpz_class LaurentPoly::coefficient(int e) const {
  if (is_zero() || e < lo_ || e > hi()) return 0;
  return coeffs_[static_cast<std::size_t>(e - lo_)];
}

mpz_class LaurentPoly::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) g = gcd(g, c);
  return g;
}

mpz_class LaurentPoly::evaluate(const mpz_class& t) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  mpz_class power = 1;
  for (int k = 0; k < lo_; ++k) power *= t;
  return acc * power;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const int lo = std::min(lo_, rhs.lo_);
  const int hi = std::max(this->hi(), rhs.hi());
  std::vector<mpz_class> c(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) c[static_cast<std::size_t>(lo_ - lo) + k] += coeffs_[k];
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
    c[static_cast<std::size_t>(rhs.lo_ - lo) + k] += rhs.coeffs_[k];
  lo_ = lo;
  coeffs_ = std::move(c);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return LaurentPoly(a.lo_ + b.lo_, std::move(c));
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out = *this;
  if (!out.is_zero()) out.lo_ += k;
  return out;
}

LaurentPoly LaurentPoly::normalized() const {
  if (is_zero()) return {};
  LaurentPoly out(0, coeffs_);
  if (out.coeffs_.back() < 0) out = -out;
  return out;
}

std::pair<LaurentPoly, LaurentPoly> divmod_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw InexactDivision("division by the zero polynomial");
  if (a.lo() < 0 || b.lo() < 0) throw InexactDivision("divmod_exact needs ordinary polynomials");
  std::vector<mpz_class> r(static_cast<std::size_t>(std::max(a.hi(), 0)) + 1, 0);
  for (int e = a.lo(); !a.is_zero() && e <= a.hi(); ++e) r[static_cast<std::size_t>(e)] = a.coefficient(e);
  const int db = b.hi();
  const mpz_class& lead = b.coefficients().back();
  std::vector<mpz_class> q;
  if (!a.is_zero() && a.hi() >= db) q.assign(static_cast<std::size_t>(a.hi() - db) + 1, 0);
  for (int e = static_cast<int>(r.size()) - 1; e >= db; --e) {
    const mpz_class& top = r[static_cast<std::size_t>(e)];
    if (top == 0) continue;
    if (top % lead != 0) throw InexactDivision("leading coefficient does not divide");
    const mpz_class f = top / lead;
    q[static_cast<std::size_t>(e - db)] = f;
    for (int k = b.lo(); k <= db; ++k) r[static_cast<std::size_t>(e - db + k)] -= f * b.coefficient(k);
  }
  return {LaurentPoly(0, std::move(q)), LaurentPoly(0, std::move(r))};
}

LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b) {
  auto [q, r] = divmod_exact(a, b);
  if (!r.is_zero()) throw InexactDivision("nonzero remainder " + to_string(r));
  return q;
}

namespace {

LaurentPoly primitive_part(const LaurentPoly& f) {
  const mpz_class c = f.content();
  std::vector<mpz_class> out = f.coefficients();
  for (auto& x : out) x /= c;
  return LaurentPoly(0, std::move(out));
}

// Pseudo-remainder lc(b)^(deg a - deg b + 1) a mod b, both with lo 0.
LaurentPoly pseudo_remainder(const LaurentPoly& a, const LaurentPoly& b) {
  const int delta = a.hi() - b.hi() + 1;
  mpz_class scale = 1;
  for (int k = 0; k < delta; ++k) scale *= b.coefficients().back();
  return divmod_exact(a * LaurentPoly::constant(scale), b).second;
}

}  // namespace

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  const mpz_class c = gcd(a.content(), b.content());
  LaurentPoly u = primitive_part(a), v = primitive_part(b);
  if (u.hi() < v.hi()) std::swap(u, v);
  while (!v.is_zero()) {
    LaurentPoly r = pseudo_remainder(u, v);
    u = v;
    v = r.is_zero() ? r : primitive_part(r.normalized());
  }
  return (primitive_part(u) * LaurentPoly::constant(c)).normalized();
}

std::string to_string(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int e = f.hi(); e >= f.lo(); --e) {
    mpz_class c = f.coefficient(e);
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    c = abs(c);
    if (c != 1 || e == 0) out << c.get_str();
    if (e != 0) {
      out << "t";
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

}  // namespace pencil
