#pragma once

// JSON forms of the library types. Complex numbers are [re, im] pairs,
// words are signed index arrays, polynomials are {"lo", "coeffs"}.

#include <json.hpp>

#include "pencil/alexander.hpp"
#include "pencil/battery.hpp"
#include "pencil/braid.hpp"
#include "pencil/curve.hpp"
#include "pencil/monodromy.hpp"
#include "pencil/presentation.hpp"

namespace pencil {

using Json = nlohmann::json;

void to_json(Json& j, const CurveSpec& s);
void from_json(const Json& j, CurveSpec& s);

void to_json(Json& j, const FreeWord& w);
void from_json(const Json& j, FreeWord& w);

/// {"strands": n, "word": [...]}
void to_json(Json& j, const BraidWord& b);
void from_json(const Json& j, BraidWord& b);

void to_json(Json& j, const Presentation& P);
void from_json(const Json& j, Presentation& P);

void to_json(Json& j, const LaurentPoly& f);
void from_json(const Json& j, LaurentPoly& f);

void to_json(Json& j, const PathSegment& s);
void to_json(Json& j, const LoopPath& l);
void to_json(Json& j, const LoopSystem& s);
void to_json(Json& j, const RelationSet& rs);
void to_json(Json& j, const AbelianInvariants& a);
void to_json(Json& j, const Battery& b);
void to_json(Json& j, const SingularValues& s);
void to_json(Json& j, const LoopBraid& b);
void to_json(Json& j, const InfinityReport& r);

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

}  // namespace pencil
