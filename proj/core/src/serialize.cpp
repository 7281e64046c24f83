#include "pencil/serialize.hpp"

namespace pencil {

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

void to_json(Json& j, const CurveSpec& s) {
  Json alphas = Json::array();
  if (s.mode == AlphaMode::RealDescending) {
    for (double a : s.real_alphas()) alphas.push_back(a);
  } else {
    for (Complex a : s.alphas) alphas.push_back(complex_to_json(a));
  }
  j = Json{{"p", s.p}, {"q", s.q}, {"alphas", alphas}, {"mode", to_string(s.mode)}};
}

void from_json(const Json& j, CurveSpec& s) {
  const int p = j.at("p").get<int>();
  const int q = j.at("q").get<int>();
  const AlphaMode mode = alpha_mode_from_string(j.value("mode", std::string("real-descending")));
  if (mode == AlphaMode::RootsOfUnity) {
    s = CurveSpec::roots_of_unity(p, q);
    return;
  }
  if (!j.contains("alphas")) {
    s = CurveSpec::with_default_alphas(p, q);
    return;
  }
  s = CurveSpec::real_descending(p, q, j.at("alphas").get<std::vector<double>>());
}

void to_json(Json& j, const FreeWord& w) { j = w.letters(); }
void from_json(const Json& j, FreeWord& w) { w = FreeWord(j.get<std::vector<int>>()); }

void to_json(Json& j, const BraidWord& b) { j = Json{{"strands", b.strands()}, {"word", b.letters()}}; }
void from_json(const Json& j, BraidWord& b) {
  b = BraidWord(j.at("strands").get<int>(), j.at("word").get<std::vector<int>>());
}

void to_json(Json& j, const Presentation& P) {
  j = Json{{"generators", P.generators}, {"relators", P.relators}, {"provenance", to_string(P.provenance)}};
}

void from_json(const Json& j, Presentation& P) {
  P.generators = j.at("generators").get<std::vector<std::string>>();
  P.relators = j.at("relators").get<std::vector<FreeWord>>();
  P.provenance = provenance_from_string(j.value("provenance", std::string("expected")));
  P.validate();
}

void to_json(Json& j, const LaurentPoly& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.coefficients()) {
    if (c.fits_slong_p())
      coeffs.push_back(c.get_si());
    else
      coeffs.push_back(c.get_str());
  }
  j = Json{{"lo", f.lo()}, {"coeffs", coeffs}};
}

void from_json(const Json& j, LaurentPoly& f) {
  std::vector<mpz_class> c;
  for (const auto& x : j.at("coeffs"))
    c.emplace_back(x.is_string() ? mpz_class(x.get<std::string>()) : mpz_class(x.get<long>()));
  f = LaurentPoly(j.at("lo").get<int>(), std::move(c));
}

void to_json(Json& j, const PathSegment& s) {
  if (const auto* l = std::get_if<LineSegment>(&s)) {
    j = Json{{"type", "line"}, {"from", complex_to_json(l->from)}, {"to", complex_to_json(l->to)}};
  } else {
    const auto& a = std::get<ArcSegment>(s);
    j = Json{{"type", "arc"},
             {"center", complex_to_json(a.center)},
             {"radius", a.radius},
             {"start_angle", a.start_angle},
             {"sweep", a.sweep}};
  }
}

void to_json(Json& j, const LoopPath& l) {
  j = Json{{"base", complex_to_json(l.base())}, {"segments", l.segments()}, {"epsilon", l.epsilon}};
  if (l.enclosed) j["puncture"] = *l.enclosed;
}

void to_json(Json& j, const LoopSystem& s) {
  Json punctures = Json::array();
  for (Complex z : s.punctures) punctures.push_back(complex_to_json(z));
  j = Json{{"base", complex_to_json(s.base)},
           {"punctures", punctures},
           {"loops", s.loops},
           {"big_circle", s.big_circle}};
}

void to_json(Json& j, const RelationSet& rs) {
  Json rels = Json::array();
  for (const auto& r : rs.relators)
    rels.push_back(Json{{"word", r.word}, {"source", r.source}, {"wrap_around", r.wrap_around}});
  j = Json{{"provenance", to_string(rs.provenance)},
           {"generators", rs.generator_names},
           {"relators", rels},
           {"full_product", rs.full_product}};
}

void to_json(Json& j, const AbelianInvariants& a) {
  j = Json{{"rank", a.rank}, {"torsion", a.torsion}, {"text", to_string(a)}};
}

void to_json(Json& j, const Battery& b) {
  Json homs = Json::object();
  for (const auto& h : b.homs) homs[h.group] = h.count;
  j = Json{{"abelianization", b.abelian}, {"homs", homs}, {"simplified_generators", b.simplified_generators}};
}

void to_json(Json& j, const SingularValues& s) {
  j = Json::array();
  for (const auto& v : s.values)
    j.push_back(Json{{"value", complex_to_json(v.value)}, {"component", v.component}, {"k", v.k}});
}

void to_json(Json& j, const LoopBraid& b) {
  j = Json{{"puncture", b.puncture},
           {"braid", b.braid.letters()},
           {"exponent_sum", b.braid.exponent_sum()},
           {"permutation", b.permutation.images},
           {"steps", b.steps},
           {"rejected_steps", b.rejected_steps}};
}

void to_json(Json& j, const InfinityReport& r) {
  j = Json{{"exponent", r.exponent},
           {"exponent_sum", r.exponent_sum},
           {"expected_exponent_sum", r.expected_exponent_sum}};
}

}  // namespace pencil
