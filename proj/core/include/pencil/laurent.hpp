#pragma once

// Integer Laurent polynomials in t.

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace pencil {

/// sum coeffs[k] t^(lo + k). The zero polynomial has no coefficients and lo 0;
/// otherwise the first and last coefficients are nonzero.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int lo, std::vector<mpz_class> coefficients);

  static LaurentPoly constant(const mpz_class& c) { return monomial(c, 0); }
  static LaurentPoly monomial(const mpz_class& c, int exponent);
  /// (t^n - 1) for n >= 1.
  static LaurentPoly t_power_minus_one(int n);

  int lo() const { return lo_; }
  /// Highest exponent; meaningless for the zero polynomial.
  int hi() const { return lo_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<mpz_class>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  mpz_class coefficient(int e) const;
  /// Span hi - lo; -1 for zero.
  int width() const { return static_cast<int>(coeffs_.size()) - 1; }
  mpz_class content() const;
  mpz_class evaluate(const mpz_class& t) const;  // requires lo >= 0

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Multiplied by t^k.
  LaurentPoly shifted(int k) const;
  /// Unit normal form: lowest exponent 0, leading coefficient positive.
  LaurentPoly normalized() const;

 private:
  void trim();
  int lo_ = 0;
  std::vector<mpz_class> coeffs_;
};

/// Quotient and remainder of ordinary polynomials (both with lo >= 0) over Z,
/// provided the leading coefficient of b divides every step; throws
/// InexactDivision otherwise or when b is zero.
std::pair<LaurentPoly, LaurentPoly> divmod_exact(const LaurentPoly& a, const LaurentPoly& b);
/// a / b, throwing InexactDivision unless the remainder is zero.
LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b);

/// gcd in Z[t, t^-1], normalized; gcd(0, 0) = 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

/// "t^5 - t^4 + t^3 - t^2 + t - 1"; "0" for zero.
std::string to_string(const LaurentPoly& f);

}  // namespace pencil
