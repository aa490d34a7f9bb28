#include <gtest/gtest.h>

#include "lts/decomposition.hpp"
#include "lts/fixtures.hpp"
#include "support.hpp"

using namespace lts;

namespace {

const Field Q = Field::rational();

struct Analysis {
  GradedLTS system;
  StandardEmbedding embedding;
  DecompositionReport report;
};

Analysis analyze(GradedLTS e) {
  StandardEmbedding emb = StandardEmbedding::build(e);
  DecompositionReport r = decompose(e, emb);
  return {std::move(e), std::move(emb), std::move(r)};
}

Subspace span_units(std::size_t n, std::initializer_list<std::size_t> idx) {
  std::vector<Vector> v;
  for (std::size_t i : idx) v.push_back(unit_vector(Q, n, i));
  return Subspace::span(Q, n, v);
}

/// Core span by direct enumeration of homogeneous basis triples.
Subspace brute_core(const GradedLTS& e, const ConnectionClass& cls) {
  const AbelianGroup& g = e.group();
  std::vector<Vector> found;
  for (std::size_t a = 0; a < e.dim(); ++a)
    for (std::size_t b = 0; b < e.dim(); ++b)
      for (std::size_t c = 0; c < e.dim(); ++c) {
        if (!cls.contains(e.degree(a))) continue;
        if (!cls.contains(e.degree(b)) && !g.is_identity(e.degree(b))) continue;
        if (!g.is_identity(g.compose(e.degree(a), e.degree(b), e.degree(c)))) continue;
        found.push_back(lts::testing::NaiveProduct(e)(e.unit(a), e.unit(b), e.unit(c)));
      }
  return Subspace::span(Q, e.dim(), found);
}

std::vector<GradedLTS> systems() {
  std::vector<GradedLTS> out;
  for (const std::string& name : builtin_names()) out.push_back(builtin(name));
  const AbelianGroup z({0});
  out.push_back(from_leibniz_algebra(lts::testing::hemisemidirect_sl2(z, z.element({1}))));
  return out;
}

}  // namespace

TEST(Decomposition, Sl2) {
  const Analysis a = analyze(builtin("sl2_Z"));
  const DecompositionReport& r = a.report;
  EXPECT_TRUE(r.U.is_zero());
  ASSERT_EQ(r.ideals.size(), 1u);
  EXPECT_TRUE(r.ideals[0].total.is_whole());
  EXPECT_EQ(r.ideals[0].core, span_units(3, {1}));
  EXPECT_TRUE(r.tight);
  EXPECT_TRUE(r.annihilator.is_zero());
  EXPECT_TRUE(r.corollary_applies);
  EXPECT_EQ(r.direct_sum, true);
  EXPECT_TRUE(r.obstructions.empty());
  EXPECT_TRUE(r.certified());
}

TEST(Decomposition, DisjointSum) {
  const Analysis a = analyze(builtin("disjoint_sum"));
  const DecompositionReport& r = a.report;
  EXPECT_TRUE(r.U.is_zero());
  ASSERT_EQ(r.ideals.size(), 2u);
  EXPECT_EQ(r.ideals[0].total, span_units(6, {0, 1, 2}));
  EXPECT_EQ(r.ideals[1].total, span_units(6, {3, 4, 5}));
  EXPECT_EQ(r.ideals[0].core, span_units(6, {1}));
  EXPECT_EQ(r.ideals[1].core, span_units(6, {4}));
  ASSERT_EQ(r.orthogonality.size(), 1u);
  EXPECT_TRUE(r.orthogonality[0].holds);
  EXPECT_EQ(r.orthogonality[0].products_checked, 6u * 3 * 3 * 6);
  EXPECT_EQ(r.direct_sum, true);
  EXPECT_TRUE(r.pairwise_intersections_zero);
  EXPECT_TRUE(r.certified());
  bool proper = false;
  for (const Obstruction& o : r.obstructions) {
    if (o.kind == "proper_class_ideal") proper = proper || *o.witness == span_units(6, {0, 1, 2});
  }
  EXPECT_TRUE(proper);
}

TEST(Decomposition, ZeroSystem) {
  const Analysis a = analyze(builtin("zero_3"));
  const DecompositionReport& r = a.report;
  EXPECT_TRUE(r.U.is_whole());
  EXPECT_TRUE(r.ideals.empty());
  EXPECT_FALSE(r.tight);
  EXPECT_FALSE(r.corollary_applies);
  EXPECT_FALSE(r.direct_sum.has_value());
  ASSERT_FALSE(r.obstructions.empty());
  EXPECT_EQ(r.obstructions.front().kind, "zero_product");
}

TEST(Decomposition, EmptySystemIsTight) {
  const Analysis a = analyze(builtin("zero_0"));
  EXPECT_TRUE(a.report.tight);
  EXPECT_EQ(a.report.direct_sum, true);
}

TEST(Decomposition, CoreMatchesBruteForce) {
  for (const GradedLTS& e : systems()) {
    const Analysis a = analyze(e);
    for (const ClassIdeal& ci : a.report.ideals) {
      EXPECT_EQ(ci.core, brute_core(e, ci.cls));
      EXPECT_EQ(class_core_span(e, ci.cls), ci.core);
      EXPECT_TRUE(homogeneous_component(e, e.group().identity()).contains(ci.core));
    }
  }
}

TEST(Decomposition, ClassIdealsAreIdealsOnRandomVariants) {
  for (const auto& v : lts::testing::random_variants(61, 12)) {
    const Analysis a = analyze(v.system);
    for (const ClassIdeal& ci : a.report.ideals) {
      EXPECT_TRUE(is_ideal(v.system, ci.total)) << v.description;
      EXPECT_TRUE(intersect(ci.core, ci.vertex).is_zero());
    }
    EXPECT_TRUE(a.report.spans) << v.description;
    EXPECT_TRUE(a.report.certified()) << v.description;
  }
}

TEST(Decomposition, CrossClassProductsVanish) {
  for (const auto& v : lts::testing::random_variants(62, 12)) {
    const Analysis a = analyze(v.system);
    const auto& ideals = a.report.ideals;
    const lts::testing::NaiveProduct p(v.system);
    for (std::size_t i = 0; i < ideals.size(); ++i)
      for (std::size_t j = 0; j < ideals.size(); ++j) {
        if (i == j) continue;
        const Subspace& x = ideals[i].total;
        const Subspace& y = ideals[j].total;
        for (std::size_t r = 0; r < x.dim(); ++r)
          for (std::size_t s = 0; s < y.dim(); ++s)
            for (std::size_t k = 0; k < v.system.dim(); ++k) {
              const Vector u = v.system.unit(k);
              EXPECT_TRUE(is_zero(p(x.basis_vector(r), u, y.basis_vector(s))));
              EXPECT_TRUE(is_zero(p(x.basis_vector(r), y.basis_vector(s), u)));
              EXPECT_TRUE(is_zero(p(u, x.basis_vector(r), y.basis_vector(s))));
            }
      }
  }
}

TEST(Decomposition, CorollaryWhenTightWithoutAnnihilator) {
  for (const auto& v : lts::testing::random_variants(63, 12)) {
    const Analysis a = analyze(v.system);
    if (!a.report.corollary_applies) continue;
    std::size_t total = 0;
    for (const ClassIdeal& ci : a.report.ideals) total += ci.total.dim();
    EXPECT_EQ(total, v.system.dim()) << v.description;
    EXPECT_TRUE(a.report.pairwise_intersections_zero);
  }
}

TEST(Decomposition, NonLieFixtureIsNotTight) {
  const Analysis a = analyze(builtin("nonlie_J"));
  EXPECT_FALSE(a.report.tight);
  EXPECT_FALSE(a.report.annihilator.is_zero());
  EXPECT_EQ(a.report.U.dim() + a.report.tight_span.dim(), a.report.identity_component.dim());
  EXPECT_TRUE(a.report.certified());
}

TEST(Lemmas, AllHoldOnFixturesAndVariants) {
  std::vector<GradedLTS> all = systems();
  for (auto& v : lts::testing::random_variants(64, 10)) all.push_back(std::move(v.system));
  for (const GradedLTS& e : all) {
    const Analysis a = analyze(e);
    const LemmaReport lr = verify_structure_lemmas(e, a.embedding, a.report.supports, a.report.classes);
    for (const LemmaResult& r : lr.results) EXPECT_EQ(r.failures, 0u) << r.id;
  }
}

TEST(Lemmas, EveryStatementIsExercisedOnDisjointSum) {
  const Analysis a = analyze(builtin("disjoint_sum"));
  const LemmaReport lr = verify_structure_lemmas(a.system, a.embedding, a.report.supports, a.report.classes);
  EXPECT_EQ(lr.results.size(), 14u);
  for (const LemmaResult& r : lr.results) {
    EXPECT_GT(r.nonvacuous, 0u) << r.id;
    EXPECT_TRUE(r.example.has_value()) << r.id;
  }
  EXPECT_TRUE(lr.all_hold());
}

TEST(Lemmas, SingleClassHasNoUnconnectedPairs) {
  const Analysis a = analyze(builtin("sl2_Z"));
  const LemmaReport lr = verify_structure_lemmas(a.system, a.embedding, a.report.supports, a.report.classes);
  for (const LemmaResult& r : lr.results) {
    if (r.id == "unconnected_brackets_vanish" || r.id == "inverse_pair_triple_vanishes" ||
        r.id.starts_with("class_core_")) {
      EXPECT_EQ(r.checked, 0u) << r.id;
    }
  }
}

TEST(Obstructions, DeterministicForAFixedSeed) {
  const GradedLTS e = builtin("disjoint_sum");
  const StandardEmbedding emb = StandardEmbedding::build(e);
  const DecompositionReport r = decompose(e, emb);
  const auto a = simplicity_obstruction(e, r, {16, 7});
  const auto b = simplicity_obstruction(e, r, {16, 7});
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].detail, b[i].detail);
}

TEST(Obstructions, ProbesFindOnlyGenuineIdeals) {
  const GradedLTS e = builtin("disjoint_sum");
  const StandardEmbedding emb = StandardEmbedding::build(e);
  for (const Obstruction& o : decompose(e, emb, {32, 3}).obstructions) {
    if (o.witness && o.kind != "not_tight") { EXPECT_TRUE(is_ideal(e, *o.witness)) << o.kind; }
  }
}
