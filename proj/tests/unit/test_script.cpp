#include <doctest.h>

#include "pencil/error.hpp"
#include "pencil/script.hpp"

using namespace pencil;

TEST_CASE("proof context accepts rotations and inverses only") {
  ProofContext ctx;
  ctx.add("R", FreeWord{1, 2, -1});
  CHECK(ctx.justifies("R", FreeWord{2, -1, 1}));
  CHECK(ctx.justifies("R", FreeWord{1, -2, -1}));
  CHECK(ctx.justifies("R", FreeWord{}));
  CHECK_FALSE(ctx.justifies("R", FreeWord{1, 2}));
  CHECK_THROWS_AS(ctx.get("missing"), ReductionMismatch);
}

TEST_CASE("rewrites need a justification") {
  ProofContext ctx;
  ctx.add("b=a", FreeWord{-2, 1});
  const std::vector<std::string> names{"a", "b"};
  std::vector<std::string> log;
  Rewrite r(ctx, FreeWord{2, 2, -1}, &log, names);
  r.substitute(2, FreeWord{1}, "b=a");
  CHECK(r.word() == FreeWord{1});
  CHECK_FALSE(log.empty());
  Rewrite bad(ctx, FreeWord{2, 1}, &log, names);
  CHECK_THROWS_AS(bad.substitute(1, FreeWord{2, 2}, "b=a"), ReductionMismatch);
  CHECK_THROWS_AS(bad.replace(FreeWord{1, 1}, FreeWord{2}, "b=a"), ReductionMismatch);
}

TEST_CASE("word problem in the affine target") {
  // p = 3, q = 2: generators g1 = 1, g2 = 2, w = 3.
  CHECK(trivial_in_affine_target(FreeWord{}, 3, 2));
  CHECK(trivial_in_affine_target(FreeWord{3, -2, -1}, 3, 2));
  CHECK(trivial_in_affine_target(commutator(FreeWord{1}, FreeWord::power(3, 3)), 3, 2));
  CHECK(trivial_in_affine_target(commutator(FreeWord{2}, FreeWord::power(3, 6)), 3, 2));
  CHECK_FALSE(trivial_in_affine_target(commutator(FreeWord{1}, FreeWord{3}), 3, 2));
  CHECK_FALSE(trivial_in_affine_target(commutator(FreeWord{1}, FreeWord::power(3, 2)), 3, 2));
  CHECK_FALSE(trivial_in_affine_target(FreeWord{1}, 3, 2));
  CHECK_FALSE(trivial_in_affine_target(commutator(FreeWord{1}, FreeWord{2}), 3, 2));
  CHECK_THROWS(trivial_in_affine_target(FreeWord{4}, 3, 2));
}

TEST_CASE("scripted reduction reaches the target") {
  for (auto [p, q] : {std::pair{2, 2}, {3, 2}, {4, 2}, {4, 3}, {5, 2}, {2, 4}}) {
    CAPTURE(p);
    CAPTURE(q);
    const ScriptResult r = scripted_reduction(derive_relations_symbolic(p, q), p, q);
    CHECK(r.presentation.to_text() == expected_affine(p, q).to_text());
    CHECK(r.presentation.generators == expected_affine(p, q).generators);
    for (const auto& w : r.wrap_checks) CHECK(w.redundant);
    CHECK(r.log.size() > static_cast<std::size_t>(p * q));
  }
}

TEST_CASE("scripted reduction rejects corrupted input") {
  RelationSet rs = derive_relations_symbolic(3, 2);
  CHECK_THROWS_AS(scripted_reduction(rs, 4, 2), ReductionMismatch);
  for (auto& r : rs.relators)
    if (r.source == "(S)") r.word = r.word * r.word;
  CHECK_THROWS_AS(scripted_reduction(rs, 3, 2), ReductionMismatch);

  RelationSet other = derive_relations_symbolic(3, 2);
  for (auto& r : other.relators)
    if (!r.wrap_around && r.source.rfind("(1-2)", 0) == 0) {
      r.word = r.word.inverse() * FreeWord{1};
      break;
    }
  CHECK_THROWS_AS(scripted_reduction(other, 3, 2), ReductionMismatch);
}
