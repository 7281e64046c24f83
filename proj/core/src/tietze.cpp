#include "pencil/tietze.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace pencil {

namespace {

// Image of `gen` when `rel` (containing it once) is set to the identity.
FreeWord solve_for(const FreeWord& rel, int gen) {
  const auto& l = rel.letters();
  std::size_t pos = l.size();
  for (std::size_t i = 0; i < l.size(); ++i)
    if (std::abs(l[i]) == gen) pos = i;
  // rel = u x^e v  =>  x^e = u^-1 v^-1 = (v u)^-1
  FreeWord vu(std::vector<int>(l.begin() + static_cast<long>(pos) + 1, l.end()));
  vu *= FreeWord(std::vector<int>(l.begin(), l.begin() + static_cast<long>(pos)));
  return l[pos] > 0 ? free_reduce(vu.inverse()) : free_reduce(vu);
}

std::vector<FreeWord> elimination_images(int n, int gen, const FreeWord& image) {
  std::vector<FreeWord> images;
  for (int g = 1; g <= n; ++g) {
    if (g == gen) images.push_back(image);
    else images.push_back(FreeWord::generator(g < gen ? g : g - 1));
  }
  return images;
}

}  // namespace

Presentation dedupe_relators(const Presentation& P) {
  Presentation out = P;
  out.normalize();
  std::set<FreeWord> seen;
  std::vector<FreeWord> kept;
  for (auto& r : out.relators)
    if (seen.insert(canonical_relator(r)).second) kept.push_back(std::move(r));
  out.relators = std::move(kept);
  return out;
}

Presentation eliminate_generator(const Presentation& P, int gen, std::size_t relator_index) {
  if (gen < 1 || gen > P.generator_count())
    throw std::out_of_range("eliminate_generator: generator out of range");
  const FreeWord& rel = P.relators.at(relator_index);
  if (rel.occurrences(gen) != 1)
    throw std::invalid_argument("eliminate_generator: generator must occur exactly once");
  // Rename first so that the image already uses the shifted indices.
  const auto shift = elimination_images(P.generator_count(), gen, FreeWord::generator(gen));
  FreeWord image = solve_for(rel, gen);
  std::vector<FreeWord> renamed;
  for (int g = 1; g <= P.generator_count(); ++g)
    renamed.push_back(g == gen ? FreeWord{} : shift[static_cast<std::size_t>(g - 1)]);
  image = substitute(image, renamed);
  const auto images = elimination_images(P.generator_count(), gen, image);

  Presentation out;
  out.provenance = P.provenance;
  for (int g = 1; g <= P.generator_count(); ++g)
    if (g != gen) out.generators.push_back(P.generators[static_cast<std::size_t>(g - 1)]);
  for (std::size_t i = 0; i < P.relators.size(); ++i)
    if (i != relator_index) out.relators.push_back(substitute(P.relators[i], images));
  out.normalize();
  return out;
}

Presentation append_product(const Presentation& P, std::size_t i, std::size_t j) {
  Presentation out = P;
  out.relators.push_back(free_reduce(P.relators.at(i) * P.relators.at(j)));
  out.normalize();
  return out;
}

Presentation tietze_simplify(const Presentation& P, std::size_t length_budget) {
  Presentation cur = dedupe_relators(P);
  const std::size_t budget = length_budget ? length_budget : 50 * std::max<std::size_t>(cur.total_length(), 1);
  for (;;) {
    bool found = false;
    std::size_t best_len = 0, best_rel = 0;
    int best_gen = 0;
    for (int g = 1; g <= cur.generator_count(); ++g) {
      for (std::size_t r = 0; r < cur.relators.size(); ++r) {
        if (cur.relators[r].occurrences(g) != 1) continue;
        std::vector<FreeWord> images;
        for (int h = 1; h <= cur.generator_count(); ++h)
          images.push_back(h == g ? solve_for(cur.relators[r], g) : FreeWord::generator(h));
        std::size_t len = 0;
        for (std::size_t k = 0; k < cur.relators.size() && len <= budget; ++k)
          if (k != r) len += cyclic_reduce(substitute(cur.relators[k], images)).size();
        if (len > budget) continue;
        if (!found || len < best_len) {
          found = true;
          best_len = len;
          best_gen = g;
          best_rel = r;
        }
      }
    }
    if (!found) break;
    cur = dedupe_relators(eliminate_generator(cur, best_gen, best_rel));
  }
  return cur;
}

}  // namespace pencil
