#pragma once

// Exact arithmetic over Q[y] for resultants, and cyclotomic integers for
// the torus-form identity.

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace pencil {

/// Polynomial in one variable with rational coefficients, lowest degree first.
/// The zero polynomial has no coefficients.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<mpq_class> coefficients);

  static RationalPoly constant(const mpq_class& c);
  static RationalPoly monomial(const mpq_class& c, int exponent);

  const std::vector<mpq_class>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Lowest exponent with nonzero coefficient; -1 for the zero polynomial.
  int order() const;
  mpq_class coefficient(int e) const;
  /// Bit size of the largest numerator or denominator.
  std::size_t max_bits() const;

  RationalPoly operator-() const;
  RationalPoly& operator+=(const RationalPoly& rhs);
  RationalPoly& operator-=(const RationalPoly& rhs);
  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Quotient and remainder; throws std::domain_error on division by zero.
  friend std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b);

 private:
  void trim();
  std::vector<mpq_class> coeffs_;
};

/// Polynomial in x whose coefficients (index = x-degree) lie in Q[y].
using BivariateExact = std::vector<RationalPoly>;

/// Fraction-free (Bareiss) determinant of a square matrix over Q[y].
/// Throws ExactArithmeticOverflow when coefficient sizes exceed `max_bits`.
RationalPoly determinant(std::vector<std::vector<RationalPoly>> m, std::size_t max_bits = 1u << 20);

/// Res_x(f, g) via the Sylvester matrix.
RationalPoly sylvester_resultant(const BivariateExact& f, const BivariateExact& g);

/// Element of Z[zeta_n] stored as an integer polynomial of degree < phi(n),
/// reduced modulo the n-th cyclotomic polynomial.
class CyclotomicInt {
 public:
  explicit CyclotomicInt(int n);
  static CyclotomicInt zeta_power(int n, int k);
  static CyclotomicInt integer(int n, const mpz_class& v);

  int order() const { return n_; }
  const std::vector<mpz_class>& coefficients() const { return coeffs_; }
  bool is_zero() const;

  CyclotomicInt& operator+=(const CyclotomicInt& rhs);
  CyclotomicInt operator*(const CyclotomicInt& rhs) const;
  CyclotomicInt operator-() const;
  friend bool operator==(const CyclotomicInt&, const CyclotomicInt&) = default;

 private:
  void reduce(std::vector<mpz_class> raw);
  int n_;
  std::vector<mpz_class> coeffs_;
};

/// Integer coefficients of the n-th cyclotomic polynomial, lowest first.
std::vector<mpz_class> cyclotomic_polynomial(int n);

}  // namespace pencil
