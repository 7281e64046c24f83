#include "pencil/presentation.hpp"

#include <gmpxx.h>

#include <sstream>
#include <stdexcept>

namespace pencil {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Numeric: return "numeric";
    case Provenance::Symbolic: return "symbolic";
    case Provenance::Expected: return "expected";
  }
  return "unknown";
}

Provenance provenance_from_string(const std::string& s) {
  if (s == "numeric") return Provenance::Numeric;
  if (s == "symbolic") return Provenance::Symbolic;
  if (s == "expected") return Provenance::Expected;
  throw std::invalid_argument("unknown provenance '" + s + "'");
}

std::size_t Presentation::total_length() const {
  std::size_t n = 0;
  for (const auto& r : relators) n += r.size();
  return n;
}

void Presentation::normalize() {
  std::vector<FreeWord> out;
  for (const auto& r : relators) {
    FreeWord c = cyclic_reduce(r);
    if (!c.empty()) out.push_back(std::move(c));
  }
  relators = std::move(out);
}

void Presentation::validate() const {
  for (const auto& r : relators)
    if (r.max_generator() > generator_count())
      throw std::invalid_argument("relator " + to_string(r) + " uses an unknown generator");
}

std::string Presentation::to_text() const {
  std::ostringstream out;
  for (const auto& r : relators) out << pencil::to_string(r, generators) << '\n';
  return out.str();
}

namespace {

std::vector<std::string> g_names(int q) {
  std::vector<std::string> names;
  for (int j = 1; j <= q; ++j) names.push_back("g" + std::to_string(j));
  names.push_back("w");
  return names;
}

FreeWord s_relator(int q) {
  FreeWord prod;
  for (int j = 1; j <= q; ++j) prod *= FreeWord::generator(j);
  return free_reduce(FreeWord::generator(q + 1) * prod.inverse());
}

}  // namespace

Presentation expected_affine(int p, int q) {
  if (p < 2 || q < 2) throw std::invalid_argument("expected_affine: needs p, q >= 2");
  Presentation P;
  P.generators = g_names(q);
  P.provenance = Provenance::Expected;
  P.relators.push_back(s_relator(q));
  const FreeWord wp = FreeWord::power(q + 1, p);
  for (int j = 1; j <= q; ++j) P.relators.push_back(commutator(FreeWord::generator(j), wp));
  return P;
}

Presentation expected_projective(int p, int q) {
  if (p < 2 || q < 2) throw std::invalid_argument("expected_projective: needs p, q >= 2");
  Presentation P;
  P.generators = g_names(q);
  P.provenance = Provenance::Expected;
  P.relators.push_back(FreeWord::power(q + 1, p));
  P.relators.push_back(s_relator(q));
  return P;
}

Presentation projectivize(const Presentation& affine, const FreeWord& word) {
  Presentation P = affine;
  P.relators.push_back(free_reduce(word));
  P.normalize();
  P.validate();
  return P;
}

std::string to_string(const AbelianInvariants& a) {
  std::ostringstream out;
  bool first = true;
  if (a.rank > 0) {
    out << "Z";
    if (a.rank > 1) out << "^" << a.rank;
    first = false;
  }
  for (long t : a.torsion) {
    out << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

AbelianInvariants abelianization(const Presentation& P) {
  const std::size_t n = static_cast<std::size_t>(P.generator_count());
  std::vector<std::vector<mpz_class>> A;
  for (const auto& r : P.relators) {
    std::vector<mpz_class> row(n, mpz_class(0));
    for (int l : r.letters()) row[static_cast<std::size_t>(std::abs(l) - 1)] += l > 0 ? 1 : -1;
    A.push_back(std::move(row));
  }
  const std::size_t m = A.size();
  std::vector<mpz_class> diag;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    auto pick_pivot = [&]() {
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (A[i][j] != 0 && (bi == m || abs(A[i][j]) < abs(A[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi == m) return false;
      std::swap(A[t], A[bi]);
      for (auto& row : A) std::swap(row[t], row[bj]);
      return true;
    };
    if (!pick_pivot()) break;
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (A[i][t] == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), A[i][t].get_mpz_t(), A[t][t].get_mpz_t());
        for (std::size_t j = t; j < n; ++j) A[i][j] -= q * A[t][j];
        if (A[i][t] != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (A[t][j] == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), A[t][j].get_mpz_t(), A[t][t].get_mpz_t());
        for (std::size_t i = t; i < m; ++i) A[i][j] -= q * A[i][t];
        if (A[t][j] != 0) dirty = true;
      }
      if (dirty) {
        pick_pivot();
        continue;
      }
      // Enforce divisibility of the remaining block by the pivot.
      bool fixed = true;
      for (std::size_t i = t + 1; i < m && fixed; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (A[i][j] % A[t][t] != 0) {
            for (std::size_t k = t; k < n; ++k) A[t][k] += A[i][k];
            fixed = false;
            break;
          }
      if (fixed) break;
    }
    diag.push_back(abs(A[t][t]));
  }

  AbelianInvariants out;
  out.rank = static_cast<int>(n - diag.size());
  for (const auto& d : diag) {
    if (d > 1) {
      if (!d.fits_slong_p()) throw std::overflow_error("abelianization: torsion exceeds long");
      out.torsion.push_back(d.get_si());
    }
  }
  return out;
}

}  // namespace pencil
