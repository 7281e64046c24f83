#include "pencil/alexander.hpp"

#include <cstdlib>
#include <numeric>
#include <optional>

#include "pencil/error.hpp"
#include "pencil/exact.hpp"
#include "pencil/tietze.hpp"

namespace pencil {

DegreeMap meridian_degree_map(const Presentation& P, const std::vector<bool>& meridian) {
  const int n = P.generator_count();
  if (static_cast<int>(meridian.size()) != n)
    throw InconsistentWeights("meridian flags do not match the generator count");
  std::vector<std::optional<long>> w(static_cast<std::size_t>(n));
  for (int g = 0; g < n; ++g)
    if (meridian[static_cast<std::size_t>(g)]) w[static_cast<std::size_t>(g)] = 1;
  // Propagate: a relator with a single undetermined generator fixes it.
  for (bool progress = true; progress;) {
    progress = false;
    for (const auto& r : P.relators) {
      int unknown = 0;
      long known_sum = 0;
      int free_gen = 0;
      for (int g = 1; g <= n; ++g) {
        const int e = r.exponent_sum(g);
        if (e == 0) continue;
        if (w[static_cast<std::size_t>(g - 1)]) {
          known_sum += e * *w[static_cast<std::size_t>(g - 1)];
        } else {
          ++unknown;
          free_gen = g;
        }
      }
      if (unknown != 1) continue;
      const int e = r.exponent_sum(free_gen);
      if (known_sum % e != 0)
        throw InconsistentWeights("relator " + to_string(r, P.generators) + " forces a fractional weight");
      w[static_cast<std::size_t>(free_gen - 1)] = -known_sum / e;
      progress = true;
    }
  }
  DegreeMap map;
  for (int g = 0; g < n; ++g) {
    if (!w[static_cast<std::size_t>(g)])
      throw InconsistentWeights("weight of " + P.generators[static_cast<std::size_t>(g)] + " is undetermined");
    map.weights.push_back(static_cast<int>(*w[static_cast<std::size_t>(g)]));
  }
  for (const auto& r : P.relators) {
    long total = 0;
    for (int g = 1; g <= n; ++g) total += static_cast<long>(r.exponent_sum(g)) * map.weights[static_cast<std::size_t>(g - 1)];
    if (total != 0)
      throw InconsistentWeights("relator " + to_string(r, P.generators) + " has total weight " + std::to_string(total));
  }
  return map;
}

DegreeMap meridian_degree_map(const Presentation& P) {
  return meridian_degree_map(P, std::vector<bool>(static_cast<std::size_t>(P.generator_count()), true));
}

LaurentPoly fox_derivative(const FreeWord& w, int g, const DegreeMap& map) {
  LaurentPoly out;
  int prefix = 0;
  for (int l : w.letters()) {
    const int weight = map.weights.at(static_cast<std::size_t>(std::abs(l) - 1));
    if (l == g) out += LaurentPoly::monomial(1, prefix);
    if (l == -g) out -= LaurentPoly::monomial(1, prefix - weight);
    prefix += l > 0 ? weight : -weight;
  }
  return out;
}

std::vector<std::vector<LaurentPoly>> fox_jacobian(const Presentation& P, const DegreeMap& map) {
  std::vector<std::vector<LaurentPoly>> J;
  for (const auto& r : P.relators) {
    std::vector<LaurentPoly> row;
    for (int g = 1; g <= P.generator_count(); ++g) row.push_back(fox_derivative(r, g, map));
    J.push_back(std::move(row));
  }
  return J;
}

namespace {

RationalPoly to_rational(const LaurentPoly& f, int shift) {
  std::vector<mpq_class> c(static_cast<std::size_t>(f.hi() + shift) + 1, 0);
  for (int e = f.lo(); e <= f.hi(); ++e) c[static_cast<std::size_t>(e + shift)] = f.coefficient(e);
  return RationalPoly(std::move(c));
}

LaurentPoly from_rational(const RationalPoly& f) {
  std::vector<mpz_class> c;
  for (const auto& x : f.coefficients()) {
    if (x.get_den() != 1) throw InexactDivision("non-integral minor");
    c.push_back(x.get_num());
  }
  return LaurentPoly(0, std::move(c));
}

// Determinant of rows x cols, each row shifted to ordinary polynomials.
LaurentPoly minor(const std::vector<std::vector<LaurentPoly>>& J, const std::vector<std::size_t>& rows,
                  const std::vector<std::size_t>& cols) {
  std::vector<std::vector<RationalPoly>> m;
  for (std::size_t r : rows) {
    int lo = 0;
    bool any = false;
    for (std::size_t c : cols)
      if (!J[r][c].is_zero()) {
        lo = any ? std::min(lo, J[r][c].lo()) : J[r][c].lo();
        any = true;
      }
    if (!any) return {};
    std::vector<RationalPoly> row;
    for (std::size_t c : cols) row.push_back(J[r][c].is_zero() ? RationalPoly() : to_rational(J[r][c], -lo));
    m.push_back(std::move(row));
  }
  return from_rational(determinant(std::move(m)));
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

LaurentPoly alexander_polynomial(const Presentation& P, const DegreeMap& map) {
  if (static_cast<int>(map.weights.size()) != P.generator_count())
    throw InconsistentWeights("degree map does not match the generator count");
  if (P.generator_count() > 2) {
    const Presentation S = tietze_simplify(P);
    DegreeMap sub;
    for (const auto& name : S.generators)
      for (std::size_t g = 0; g < P.generators.size(); ++g)
        if (P.generators[g] == name) sub.weights.push_back(map.weights[g]);
    if (S.generator_count() < P.generator_count()) return alexander_polynomial(S, sub);
  }
  Presentation D = dedupe_relators(P);
  const auto n = static_cast<std::size_t>(D.generator_count());
  if (n == 0) return LaurentPoly::constant(1);
  const auto J = fox_jacobian(D, map);
  // Zero rows contribute only zero minors.
  std::vector<std::vector<LaurentPoly>> rows;
  for (const auto& row : J) {
    bool zero = true;
    for (const auto& x : row) zero = zero && x.is_zero();
    if (!zero) rows.push_back(row);
  }
  const std::size_t k = n - 1;
  if (k == 0) return LaurentPoly::constant(1);
  if (rows.size() < k) return {};
  LaurentPoly g;
  std::vector<std::size_t> rsel(k);
  std::iota(rsel.begin(), rsel.end(), 0);
  do {
    for (std::size_t skip = 0; skip < n; ++skip) {
      std::vector<std::size_t> cols;
      for (std::size_t c = 0; c < n; ++c)
        if (c != skip) cols.push_back(c);
      g = gcd(g, minor(rows, rsel, cols));
      if (g == LaurentPoly::constant(1)) return g;
    }
  } while (next_combination(rsel, rows.size()));
  return g;
}

LaurentPoly closed_form_generic_linear(int p, int q) {
  if (p < 1 || q < 1) throw InexactDivision("closed form needs p, q >= 1");
  LaurentPoly num = LaurentPoly::t_power_minus_one(1);
  for (int k = 0; k < q - 1; ++k) num = num * LaurentPoly::t_power_minus_one(p * q);
  return exact_quotient(num, LaurentPoly::t_power_minus_one(q)).normalized();
}

LaurentPoly closed_form_tame_maximal(int p, int q) {
  if (p < 1 || q < 1) throw InexactDivision("closed form needs p, q >= 1");
  const int r = std::gcd(p, q);
  LaurentPoly num = LaurentPoly::t_power_minus_one(1);
  for (int k = 0; k < r; ++k) num = num * LaurentPoly::t_power_minus_one(p * q / r);
  const LaurentPoly den = LaurentPoly::t_power_minus_one(p) * LaurentPoly::t_power_minus_one(q);
  return exact_quotient(num, den).normalized();
}

}  // namespace pencil
