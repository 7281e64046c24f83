#include <doctest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "pencil/battery.hpp"
#include "pencil/error.hpp"
#include "pencil/finite_group.hpp"
#include "pencil/tietze.hpp"

using namespace pencil;

namespace {

Presentation random_presentation(std::mt19937& rng, int gens, int rels, int max_len) {
  Presentation P;
  for (int g = 1; g <= gens; ++g) P.generators.push_back("x" + std::to_string(g));
  std::uniform_int_distribution<int> letter(1, gens), sign(0, 1), len(1, max_len);
  for (int r = 0; r < rels; ++r) {
    std::vector<int> w;
    for (int k = len(rng); k > 0; --k) w.push_back(sign(rng) ? letter(rng) : -letter(rng));
    P.relators.push_back(FreeWord(w));
  }
  P.normalize();
  return P;
}

const oracle::PermGroup& oracle_group(const std::string& name) {
  static const std::map<std::string, oracle::PermGroup> groups{
      {"Z/2", oracle::cyclic(2)},        {"Z/3", oracle::cyclic(3)},   {"Z/4", oracle::cyclic(4)},
      {"Z/5", oracle::cyclic(5)},        {"S3", oracle::symmetric3()}, {"D4", oracle::dihedral4()},
      {"A4", oracle::alternating4()}, {"S4", oracle::symmetric4()}};
  return groups.at(name);
}

}  // namespace

TEST_CASE("expected presentations") {
  const Presentation a = expected_affine(3, 2);
  CHECK(a.generators == std::vector<std::string>{"g1", "g2", "w"});
  CHECK(a.to_text() == "w g2^-1 g1^-1\ng1 w^3 g1^-1 w^-3\ng2 w^3 g2^-1 w^-3\n");
  const Presentation pr = expected_projective(3, 2);
  CHECK(pr.relators.front() == FreeWord{3, 3, 3});
  CHECK(projectivize(a, FreeWord{3, 3, 3}).relators.size() == a.relators.size() + 1);
  Presentation bad = a;
  bad.relators.push_back(FreeWord{4});
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("abelian invariants") {
  CHECK(abelianization(Presentation{{"a"}, {FreeWord::power(1, 6)}}) == AbelianInvariants{0, {6}});
  CHECK(abelianization(Presentation{{"a", "b"}, {FreeWord::power(1, 2), FreeWord::power(2, 3)}}) ==
        AbelianInvariants{0, {6}});
  CHECK(abelianization(Presentation{{"a", "b"}, {FreeWord::power(1, 2), FreeWord::power(2, 4)}}) ==
        AbelianInvariants{0, {2, 4}});
  CHECK(abelianization(Presentation{{"a", "b", "c"}, {}}) == AbelianInvariants{3, {}});
  CHECK(to_string(AbelianInvariants{1, {3}}) == "Z + Z/3");
  CHECK(to_string(AbelianInvariants{2, {}}) == "Z^2");
  CHECK(to_string(AbelianInvariants{0, {}}) == "0");
  for (auto [p, q] : {std::pair{2, 2}, {3, 2}, {4, 3}, {5, 4}}) {
    CHECK(abelianization(expected_affine(p, q)) == AbelianInvariants{q, {}});
    CHECK(abelianization(expected_projective(p, q)) == AbelianInvariants{q - 1, {p}});
  }
}

TEST_CASE("group tables satisfy the axioms and have the right orders") {
  const auto& groups = battery_groups();
  REQUIRE(groups.size() == 8);
  const std::vector<int> orders{2, 3, 4, 5, 6, 8, 12, 24};
  for (std::size_t i = 0; i < groups.size(); ++i) {
    CHECK(groups[i].order() == orders[i]);
    CHECK(static_cast<std::size_t>(groups[i].order()) == oracle_group(groups[i].name()).elements.size());
  }
  CHECK(battery_group("D4").order() == 8);
  CHECK_THROWS(battery_group("Q8"));
  CHECK(trivial_group().order() == 1);
  CHECK_THROWS_AS(FiniteGroupTable("bad", 2, {0, 1, 1, 1}), std::invalid_argument);
}

TEST_CASE("hom counts agree with brute force over permutation groups") {
  std::mt19937 rng(20240607);
  std::vector<Presentation> cases{expected_affine(2, 2), expected_projective(3, 2),
                                  Presentation{{"a", "b"}, {FreeWord{1, 2, 1, -2, -1, -2}}}};
  for (int i = 0; i < 6; ++i) cases.push_back(random_presentation(rng, 2, 2, 6));
  for (const auto& P : cases)
    for (const auto& G : battery_groups()) {
      CAPTURE(P.to_text());
      CAPTURE(G.name());
      CHECK(count_homomorphisms(P, G) == oracle::brute_force_homs(P, oracle_group(G.name())));
    }
  // Trefoil group into S3: a = b (6) or two distinct transpositions (6).
  CHECK(count_homomorphisms(Presentation{{"a", "b"}, {FreeWord{1, 2, 1, -2, -1, -2}}}, battery_group("S3")) == 12);
}

TEST_CASE("cyclic hom counts follow from the abelian invariants") {
  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i) {
    const Presentation P = random_presentation(rng, 3, 3, 7);
    const AbelianInvariants a = abelianization(P);
    for (int n = 2; n <= 5; ++n)
      CHECK(count_homomorphisms(P, battery_group("Z/" + std::to_string(n))) == oracle::abelian_homs_to_cyclic(a, n));
  }
}

TEST_CASE("hom counting respects its budget") {
  Presentation big;
  for (int g = 1; g <= 7; ++g) big.generators.push_back("x" + std::to_string(g));
  CHECK_THROWS_AS(count_homomorphisms(big, battery_group("Z/2")), BudgetExceeded);
}

TEST_CASE("Tietze moves") {
  // <a, b | b a^-2> eliminates b.
  const Presentation P{{"a", "b"}, {FreeWord{2, -1, -1}, FreeWord{1, 2, -1, -2}}};
  const Presentation E = eliminate_generator(P, 2, 0);
  CHECK(E.generators == std::vector<std::string>{"a"});
  CHECK(E.relators.empty());
  CHECK_THROWS(eliminate_generator(P, 1, 0));  // a occurs twice
  const Presentation D = dedupe_relators(Presentation{{"a", "b"}, {FreeWord{1, 2}, FreeWord{-1, -2}, FreeWord{2, 1}}});
  CHECK(D.relators.size() == 1);
  CHECK(append_product(P, 0, 1).relators.size() == 3);
}

TEST_CASE("simplification preserves the battery") {
  std::mt19937 rng(99);
  for (int i = 0; i < 12; ++i) {
    const Presentation P = random_presentation(rng, 4, 4, 6);
    const Presentation S = tietze_simplify(P);
    CHECK(S.generator_count() <= P.generator_count());
    CHECK(compute_battery(S) == compute_battery(P));
  }
}
