#include "oracles.hpp"

#include "linset/error.hpp"
#include "linset/geometry.hpp"
#include "linset/scattered.hpp"

#include <gtest/gtest.h>

#include <random>

namespace {

using namespace linset;

std::shared_ptr<const FieldCtx> field(std::uint32_t p, std::uint32_t t) { return build_field({p, 1, t, {}}); }

// Equations given as {index, sign} lists.
ProjSubspace by_equations(const FieldCtx& F, const std::vector<std::vector<std::pair<unsigned, int>>>& rows) {
  FeltMatrix eq(rows.size(), F.n());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (auto [i, s] : rows[r]) eq(r, i) = F.from_int(s);
  return ProjSubspace::from_equations(F, eq);
}

TEST(Geometry, GammaEquationsN8) {
  const auto F = field(3, 4);
  const ProjSubspace g = gamma_k(*F, 1);
  EXPECT_EQ(g, by_equations(*F, {{{0, 1}}, {{1, 1}, {3, 1}, {5, -1}, {7, 1}}}));
  EXPECT_EQ(g.dim(), 5);
  EXPECT_EQ(gamma_k(*F, 3).dim(), 5);
  EXPECT_THROW(gamma_k(*F, 2), Error);
}

TEST(Geometry, GammaMissesSubgeometry) {
  const auto F = field(3, 3);
  const ProjSubspace g = gamma_k(*F, 1);
  EXPECT_EQ(g.dim(), 3);
  EXPECT_TRUE(disjoint_from_subgeometry(g));
  for (std::uint64_t i = 1; i < F->order(); ++i) {
    const auto P = subgeometry_point(*F, F->from_index(i));
    // Independent membership test: both defining forms must vanish.
    const Felt l0 = P[0];
    const Felt l1 = F->add(F->add(P[1], P[2]), F->sub(P[5], P[4]));
    ASSERT_FALSE(l0.is_zero() && l1.is_zero());
    ASSERT_FALSE(g.contains(P));
  }
}

TEST(Geometry, SigmaAction) {
  const auto F = field(3, 4);
  const ProjSubspace g = gamma_k(*F, 1);
  EXPECT_EQ(apply_sigma(g, F->n()), g);
  EXPECT_EQ(apply_sigma(g, 1), by_equations(*F, {{{1, 1}}, {{2, 1}, {4, 1}, {6, -1}, {0, 1}}}));
  for (std::int64_t m = 1; m < 8; ++m) EXPECT_EQ(apply_sigma(g, m).dim(), g.dim());
  EXPECT_EQ(apply_sigma(apply_sigma(g, 3), 5), g);
  EXPECT_EQ(apply_sigma(g, -1), apply_sigma(g, 7));
  // sigma fixes every P_u.
  std::mt19937_64 rng(8);
  for (int it = 0; it < 20; ++it) {
    const auto P = subgeometry_point(*F, oracle::random_felt(*F, rng, true));
    EXPECT_EQ(sigma_vector(*F, P, 1), P);
  }
}

TEST(Geometry, SigmaMapsBasisVectors) {
  const auto F = field(3, 3);
  const ProjSubspace g = gamma_k(*F, 1);
  const ProjSubspace img = apply_sigma(g, 1);
  for (std::size_t r = 0; r < g.basis().rows(); ++r) EXPECT_TRUE(img.contains(sigma_vector(*F, g.basis().row(r), 1)));
}

TEST(Geometry, IntersectionDimsN8) {
  const auto F = field(3, 4);
  const ProjSubspace g = gamma_k(*F, 1);
  EXPECT_EQ(intersect(g, g), g);
  const ProjSubspace g1 = intersect(g, apply_sigma(g, 1));
  EXPECT_EQ(g1.dim(), 3);
  EXPECT_EQ(intersect(g1, apply_sigma(g, 2)).dim(), 1);
  EXPECT_EQ(sigma_chain_dims(g, 1, 2), (std::vector<int>{5, 3, 1}));
}

TEST(Geometry, IntersectionCommutesWithSigma) {
  const auto F = field(3, 4);
  const ProjSubspace a = gamma_k(*F, 1), b = gamma_k(*F, 3);
  for (std::int64_t m : {1, 3}) {
    EXPECT_EQ(apply_sigma(intersect(a, b), m), intersect(apply_sigma(a, m), apply_sigma(b, m)));
    EXPECT_EQ(apply_sigma(join(a, b), m), join(apply_sigma(a, m), apply_sigma(b, m)));
  }
}

TEST(Geometry, IntersectionNumber) {
  const auto F = field(3, 4);
  const ProjSubspace g = gamma_k(*F, 1);
  EXPECT_GE(intn(g, 1), 3u);
  EXPECT_EQ(intn(g, 1), intn(g, 7));
  EXPECT_EQ(intn(gamma_k(*F, 3), 3), intn(gamma_k(*F, 3), 5));

  std::vector<Felt> e0(F->n());
  e0[0] = F->one();
  const ProjSubspace vertex = pseudoregulus_vertex(*F, e0, 1);
  EXPECT_EQ(vertex.dim(), 5);
  EXPECT_EQ(intersect(vertex, apply_sigma(vertex, 1)).dim(), 4);
  EXPECT_EQ(intn(vertex, 1), 1u);
}

TEST(Geometry, IntersectionNumberNeedsDisjointness) {
  const auto F = field(3, 3);
  FeltMatrix v(1, F->n());
  const auto P = subgeometry_point(*F, F->generator());
  for (unsigned i = 0; i < F->n(); ++i) v(0, i) = P[i];
  const ProjSubspace S = ProjSubspace::from_basis(*F, v);
  try {
    intn(S, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotDisjointFromSigma);
  }
}

TEST(Geometry, PseudoregulusCriterion) {
  EXPECT_FALSE(pseudoregulus_geometric_test(gamma_k(*field(5, 3), 1)));
  const auto F = field(3, 4);
  EXPECT_FALSE(pseudoregulus_geometric_test(gamma_k(*F, 3)));
  std::vector<Felt> e0(F->n());
  e0[0] = F->one();
  const ProjSubspace vertex = pseudoregulus_vertex(*F, e0, 3);
  EXPECT_TRUE(disjoint_from_subgeometry(vertex));
  EXPECT_TRUE(pseudoregulus_geometric_test(vertex));
}

TEST(Projection, ReproducesLinearSet) {
  const auto F = field(3, 3);
  const unsigned n = F->n(), k = 1;
  const ProjSubspace g = gamma_k(*F, k);
  const LinPoly two_psi = scale(F->from_int(2), build_psi(*F, k).poly);
  FeltMatrix lv(2, n);
  lv(0, 0) = F->one();
  lv(1, n - k) = F->one();
  const ProjSubspace line = ProjSubspace::from_basis(*F, lv);
  for (std::uint64_t i = 1; i < F->order(); ++i) {
    const Felt u = F->from_index(i);
    const auto P = subgeometry_point(*F, u);
    FeltMatrix span = g.basis();
    span.append_row(P);
    ASSERT_EQ(ProjSubspace::from_basis(*F, span).dim(), static_cast<int>(n) - 2);
    const auto pt = project_point(g, P, line);
    ASSERT_TRUE(pt.has_value());
    EXPECT_EQ(make_point(*F, (*pt)[0], (*pt)[n - k]), make_point(*F, u, oracle::ref_eval(two_psi, u)));
  }
  PointSet want;
  for (Felt v : oracle::quotient_values(two_psi)) want.push_back({F->one(), v});
  EXPECT_EQ(project_to_line(g, k, 2), want);
}

TEST(Projection, ScatteredImageSize) {
  const auto F = field(5, 3);
  EXPECT_EQ(project_to_line(gamma_k(*F, 1), 1, 4).size(), 3906u);
}

}  // namespace
