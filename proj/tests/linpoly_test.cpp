#include "oracles.hpp"

#include "linset/error.hpp"
#include "linset/linpoly.hpp"
#include "linset/scattered.hpp"

#include <gtest/gtest.h>

#include <random>

namespace {

using namespace linset;

class LinPolyTest : public ::testing::Test {
 protected:
  std::shared_ptr<const FieldCtx> F = build_field({3, 1, 3, {}});
  std::mt19937_64 rng{0x1157};

  LinPoly random() { return oracle::random_poly(*F, rng); }
  LinPoly mono(std::int64_t i) { return LinPoly::monomial(*F, i, F->one()); }
};

TEST_F(LinPolyTest, EvalBasics) {
  const Felt w = F->generator();
  EXPECT_EQ(eval(mono(1), w), F->frob(w, 1));
  for (std::uint64_t i = 0; i < F->order(); ++i) {
    const Felt x = F->from_index(i);
    ASSERT_EQ(eval(LinPoly::identity(*F), x), x);
  }
}

TEST_F(LinPolyTest, EvalMatchesPlainPowers) {
  for (int it = 0; it < 50; ++it) {
    const LinPoly f = random(), g = random();
    const Felt x = oracle::random_felt(*F, rng);
    EXPECT_EQ(eval(f, x), oracle::ref_eval(f, x));
    EXPECT_EQ(eval(add(f, g), x), F->add(eval(f, x), eval(g, x)));
  }
}

TEST_F(LinPolyTest, Compose) {
  EXPECT_EQ(compose(mono(1), mono(1)), mono(2));
  const LinPoly f = random();
  EXPECT_EQ(compose(f, LinPoly::identity(*F)), f);
  EXPECT_EQ(compose(LinPoly::identity(*F), f), f);
  const LinPoly g = random();
  EXPECT_EQ(compose(f, g), oracle::ref_compose(f, g));
  for (int it = 0; it < 1000; ++it) {
    const Felt x = oracle::random_felt(*F, rng);
    ASSERT_EQ(eval(compose(f, g), x), eval(f, eval(g, x)));
  }
}

TEST_F(LinPolyTest, ComposeRejectsForeignContext) {
  const auto G = build_field({3, 1, 3, {}});
  try {
    compose(mono(1), LinPoly::identity(*G));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::CtxMismatch);
  }
}

TEST_F(LinPolyTest, ComposeAssociative) {
  for (int it = 0; it < 30; ++it) {
    const LinPoly f = random(), g = random(), h = random();
    ASSERT_EQ(compose(compose(f, g), h), compose(f, compose(g, h)));
  }
}

TEST_F(LinPolyTest, Adjoint) {
  EXPECT_EQ(adjoint(LinPoly::identity(*F)), LinPoly::identity(*F));
  for (int it = 0; it < 30; ++it) {
    const LinPoly f = random(), g = random();
    ASSERT_EQ(adjoint(adjoint(f)), f);
    ASSERT_EQ(adjoint(compose(f, g)), compose(adjoint(g), adjoint(f)));
    // Tr(y f(x)) = Tr(x f^(y))
    const Felt x = oracle::random_felt(*F, rng), y = oracle::random_felt(*F, rng);
    ASSERT_EQ(trace(*F, F->mul(y, eval(f, x)), 1), trace(*F, F->mul(x, eval(adjoint(f), y)), 1));
  }
}

TEST_F(LinPolyTest, AdjointOfPsiIsPsiFive) {
  const auto G = build_field({5, 1, 3, {}});
  EXPECT_EQ(adjoint(build_psi(*G, 1).poly), build_psi(*G, 5).poly);
}

TEST_F(LinPolyTest, Dickson) {
  const FeltMatrix D = dickson(LinPoly::identity(*F));
  for (unsigned i = 0; i < F->n(); ++i)
    for (unsigned j = 0; j < F->n(); ++j) EXPECT_EQ(D(i, j), i == j ? F->one() : F->zero());
  const FeltMatrix S = dickson(mono(1));
  unsigned ones = 0;
  for (unsigned i = 0; i < F->n(); ++i)
    for (unsigned j = 0; j < F->n(); ++j) {
      if (S(i, j) == F->one()) {
        ++ones;
        EXPECT_EQ(j, (i + 1) % F->n());
      } else {
        EXPECT_TRUE(S(i, j).is_zero());
      }
    }
  EXPECT_EQ(ones, F->n());
}

TEST_F(LinPolyTest, RankEdgeCases) {
  EXPECT_EQ(rank(LinPoly::identity(*F)), F->n());
  EXPECT_EQ(rank(LinPoly(*F)), 0u);
  EXPECT_EQ(kernel_dim(LinPoly(*F)), F->n());
  LinPoly tr(*F);
  for (unsigned i = 0; i < F->n(); ++i) tr.set(i, F->one());
  EXPECT_EQ(rank(tr), 1u);
  EXPECT_EQ(kernel_dim(tr), F->n() - 1);
}

// rank(Dickson) = n - log_q(#roots) = GF(p)-evaluation rank.
TEST_F(LinPolyTest, RankMatchesRootCount) {
  std::uniform_int_distribution<int> pick(0, 3);
  for (int it = 0; it < 50; ++it) {
    LinPoly f = random();
    // Sparse polynomials have small ranks more often.
    for (unsigned i = 0; i < F->n(); ++i)
      if (pick(rng) != 0) f.set(i, F->zero());
    std::uint64_t roots = oracle::root_count(f);
    unsigned log = 0;
    while (roots > 1) {
      roots /= F->q();
      ++log;
    }
    ASSERT_EQ(rank(f), F->n() - log);
    ASSERT_EQ(rank(f), oracle::eval_rank(f));
  }
}

TEST_F(LinPolyTest, RankOverExtendedPrimeField) {
  const auto G = build_field({3, 2, 3, {}});
  std::mt19937_64 r(3);
  for (int it = 0; it < 10; ++it) {
    const LinPoly f = oracle::random_poly(*G, r);
    LinPoly g = f;
    g.set(0, G->zero());
    g.set(3, G->zero());
    EXPECT_EQ(rank(f), oracle::eval_rank(f));
    EXPECT_EQ(rank(g), oracle::eval_rank(g));
  }
}

TEST_F(LinPolyTest, MapOrder) {
  EXPECT_EQ(map_order(LinPoly::identity(*F)), 1u);
  EXPECT_EQ(map_order(mono(1)), F->n());
  EXPECT_FALSE(map_order(LinPoly(*F)).has_value());
  const auto G = build_field({5, 1, 3, {}});
  EXPECT_EQ(map_order(build_psi(*G, 1).poly), 6u);
}

TEST_F(LinPolyTest, FiberHistogram) {
  const auto id = fiber_histogram(LinPoly::identity(*F));
  ASSERT_EQ(id.size(), 1u);
  EXPECT_EQ(id.begin()->first, F->order() - 1);
  EXPECT_EQ(id.begin()->second, 1u);

  const auto h1 = fiber_histogram(mono(1));
  ASSERT_EQ(h1.size(), 1u);
  EXPECT_EQ(h1.begin()->first, 2u);
  EXPECT_EQ(h1.begin()->second, 364u);

  const auto h2 = fiber_histogram(mono(2));
  EXPECT_GE(h2.rbegin()->first, F->q());
  std::uint64_t total = 0;
  for (auto [size, count] : h2) total += size * count;
  EXPECT_EQ(total, F->order() - 1);
}

TEST_F(LinPolyTest, CoordsRoundTrip) {
  std::vector<std::uint32_t> c(F->n() * F->degree());
  for (int it = 0; it < 20; ++it) {
    const LinPoly f = random();
    poly_coords(f, c);
    EXPECT_EQ(poly_from_coords(*F, c), f);
  }
}

TEST_F(LinPolyTest, QuotientTable) {
  const LinPoly f = random();
  const auto table = quotient_table(f, 3);
  ASSERT_EQ(table.size(), F->order() - 1);
  for (std::uint64_t i = 0; i < table.size(); i += 13) {
    const Felt x = F->generator_power(i);
    EXPECT_EQ(table[i], F->div(oracle::ref_eval(f, x), x));
  }
}

}  // namespace
