#pragma once

// Fox calculus and Alexander polynomials, plus the two closed forms for
// torus-type curves.

#include <vector>

#include "pencil/laurent.hpp"
#include "pencil/presentation.hpp"

namespace pencil {

/// Image t^{weights[g-1]} of generator g.
struct DegreeMap {
  std::vector<int> weights;
};

/// Weight 1 on flagged generators; the rest are solved from the
/// abelianized relators. Throws InconsistentWeights when some relator has
/// nonzero total weight or a weight is left undetermined.
DegreeMap meridian_degree_map(const Presentation& P, const std::vector<bool>& meridian);
/// Every generator a meridian.
DegreeMap meridian_degree_map(const Presentation& P);

/// Abelianized Fox derivative of a single word.
LaurentPoly fox_derivative(const FreeWord& w, int g, const DegreeMap& map);
/// Row r, column g-1: d(relator r)/d(g).
std::vector<std::vector<LaurentPoly>> fox_jacobian(const Presentation& P, const DegreeMap& map);

/// gcd of the (n-1)-minors of the Fox jacobian, normalized. The zero
/// polynomial marks the zero ideal (e.g. a free group of rank 2).
/// Presentations with more than two generators are Tietze-simplified first;
/// the minors of the result are enumerated exhaustively.
LaurentPoly alexander_polynomial(const Presentation& P, const DegreeMap& map);

/// (t^{pq}-1)^{q-1}(t-1)/(t^q-1).
LaurentPoly closed_form_generic_linear(int p, int q);
/// (t^{pq/r}-1)^r (t-1)/((t^p-1)(t^q-1)), r = gcd(p, q).
LaurentPoly closed_form_tame_maximal(int p, int q);

}  // namespace pencil
