#include "pencil/battery.hpp"

#include <sstream>

#include "pencil/tietze.hpp"

namespace pencil {

std::string to_string(const Battery& b) {
  std::ostringstream out;
  out << "H1 = " << to_string(b.abelian);
  for (const auto& h : b.homs) out << "; #Hom(-, " << h.group << ") = " << h.count;
  return out.str();
}

Battery compute_battery(const Presentation& P) {
  const Presentation simple = tietze_simplify(P);
  Battery b;
  b.abelian = abelianization(simple);
  b.simplified_generators = simple.generator_count();
  for (const auto& G : battery_groups()) b.homs.push_back({G.name(), count_homomorphisms(simple, G)});
  return b;
}

}  // namespace pencil
