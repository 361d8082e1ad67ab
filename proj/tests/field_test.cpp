#include "oracles.hpp"

#include "linset/error.hpp"
#include "linset/field.hpp"

#include <gtest/gtest.h>

#include <random>

namespace {

using namespace linset;

std::shared_ptr<const FieldCtx> field(std::uint32_t p, std::uint32_t t, std::uint32_t e = 1) {
  return build_field({p, e, t, {}});
}

Errc error_of(const FieldSpec& s) {
  try {
    build_field(s);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return Errc::InvalidArgument;
}

TEST(Field, Sizes) {
  EXPECT_EQ(field(3, 3)->order(), 729u);
  EXPECT_EQ(field(5, 3)->order(), 15625u);
  EXPECT_EQ(field(3, 3, 2)->order(), 531441u);
  EXPECT_EQ(field(3, 3, 2)->q(), 9u);
}

TEST(Field, RejectsBadSpecs) {
  EXPECT_EQ(error_of({2, 1, 3, {}}), Errc::EvenP);
  EXPECT_EQ(error_of({9, 1, 3, {}}), Errc::NonPrimeP);
  EXPECT_EQ(error_of({3, 1, 2, {}}), Errc::TSmall);
  // x^6 + 1 = (x^2 + 1)^3 over GF(3)
  EXPECT_EQ(error_of({3, 1, 3, {1, 0, 0, 0, 0, 0, 1}}), Errc::ReducibleModulus);
  EXPECT_EQ(error_of({3, 1, 3, {1, 1}}), Errc::InvalidModulus);
}

// Frozen values, cross-checked against a computer algebra system.
TEST(Field, DefaultModulus) {
  EXPECT_EQ(field(3, 3)->spec().modulus, (std::vector<std::uint32_t>{2, 1, 0, 0, 0, 0, 1}));
  EXPECT_EQ(field(3, 4)->spec().modulus, (std::vector<std::uint32_t>{2, 0, 1, 0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(field(5, 3)->spec().modulus, (std::vector<std::uint32_t>{2, 1, 0, 0, 0, 0, 1}));
}

TEST(Field, GeneratorIsSmallestPrimitive) {
  const auto F = field(3, 3);
  const Felt w = F->generator();
  EXPECT_EQ(F->to_index(w), 3u);
  // Independent order computation by repeated schoolbook multiplication.
  Felt x = w;
  std::uint64_t order = 1;
  while (x != F->one()) {
    x = oracle::naive_mul(*F, x, w);
    ++order;
  }
  EXPECT_EQ(order, 728u);
  for (std::uint64_t i = 2; i < F->to_index(w); ++i) EXPECT_LT(F->mult_order(F->from_index(i)), 728u);
}

TEST(Field, IndexRoundTrip) {
  const auto F = field(3, 3);
  for (std::uint64_t i = 0; i < F->order(); ++i) EXPECT_EQ(F->to_index(F->from_index(i)), i);
  EXPECT_EQ(F->element_at(0), F->zero());
  EXPECT_EQ(F->element_at(1), F->one());
  EXPECT_EQ(F->element_at(2), F->generator());
}

TEST(Field, MulMatchesSchoolbookExhaustive) {
  const auto F = field(3, 3);
  for (std::uint64_t i = 0; i < F->order(); i += 7)
    for (std::uint64_t j = 0; j < F->order(); ++j) {
      const Felt a = F->from_index(i), b = F->from_index(j);
      ASSERT_EQ(F->mul(a, b), oracle::naive_mul(*F, a, b)) << i << " " << j;
    }
}

TEST(Field, BackendsAgree) {
  const FieldSpec spec{5, 1, 3, {}};
  const auto T = build_field(spec, Backend::Table);
  const auto P = build_field(spec, Backend::Polynomial);
  EXPECT_EQ(T->to_index(T->generator()), P->to_index(P->generator()));
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint64_t> pick(0, T->order() - 1);
  for (int it = 0; it < 2000; ++it) {
    const std::uint64_t i = pick(rng), j = pick(rng);
    const Felt a = T->from_index(i), b = T->from_index(j);
    const Felt c = P->from_index(i), d = P->from_index(j);
    ASSERT_EQ(T->to_index(T->add(a, b)), P->to_index(P->add(c, d)));
    ASSERT_EQ(T->to_index(T->mul(a, b)), P->to_index(P->mul(c, d)));
    ASSERT_EQ(T->to_index(T->frob(a, 2)), P->to_index(P->frob(c, 2)));
    if (j != 0) ASSERT_EQ(T->to_index(T->inv(b)), P->to_index(P->inv(d)));
  }
}

TEST(Field, PolynomialBackendLargeField) {
  // 7^12 is above the table limit.
  const auto F = field(7, 6);
  EXPECT_EQ(F->backend(), Backend::Polynomial);
  std::mt19937_64 rng(5);
  for (int it = 0; it < 200; ++it) {
    const Felt a = oracle::random_felt(*F, rng, true), b = oracle::random_felt(*F, rng);
    EXPECT_EQ(F->mul(a, F->inv(a)), F->one());
    EXPECT_EQ(F->mul(a, b), oracle::naive_mul(*F, a, b));
    EXPECT_EQ(F->frob(a, static_cast<std::int64_t>(F->n())), a);
  }
}

TEST(Field, FrobeniusIsAutomorphism) {
  for (auto [p, t, e] : {std::tuple{3u, 3u, 1u}, {5u, 3u, 1u}, {3u, 3u, 2u}}) {
    const auto F = field(p, t, e);
    std::mt19937_64 rng(p * 100 + t);
    for (int it = 0; it < 500; ++it) {
      const Felt x = oracle::random_felt(*F, rng), y = oracle::random_felt(*F, rng);
      EXPECT_EQ(F->frob(F->add(x, y), 1), F->add(F->frob(x, 1), F->frob(y, 1)));
      EXPECT_EQ(F->frob(F->mul(x, y), 1), F->mul(F->frob(x, 1), F->frob(y, 1)));
      EXPECT_EQ(F->frob(x, 1), F->pow(x, F->q()));
      EXPECT_EQ(F->frob_p(x, 1), F->pow(x, p));
      EXPECT_EQ(F->frob(x, -1), F->frob(x, F->n() - 1));
    }
  }
}

TEST(Field, TraceAndNorm) {
  const auto F = field(5, 3);
  EXPECT_EQ(trace(*F, F->zero(), 1), F->zero());
  EXPECT_EQ(norm(*F, F->one(), 1), F->one());
  EXPECT_EQ(F->mult_order(norm(*F, F->generator(), 1)), F->q() - 1);
  std::mt19937_64 rng(1000);
  for (int it = 0; it < 1000; ++it) {
    const Felt x = oracle::random_felt(*F, rng);
    EXPECT_TRUE(F->in_subfield(trace(*F, x, 1), 1));
    EXPECT_EQ(trace(*F, x, F->t()), F->add(x, F->frob(x, F->t())));
    Felt prod = F->one();
    for (unsigned i = 0; i < F->n(); ++i) prod = F->mul(prod, F->frob(x, i));
    EXPECT_EQ(norm(*F, x, 1), prod);
    EXPECT_TRUE(F->in_subfield(norm(*F, x, F->t()), F->t()));
  }
}

TEST(Field, WAndSplit) {
  const auto F = field(3, 3);
  EXPECT_TRUE(in_W(*F, F->zero()));
  std::uint64_t w_size = 0;
  for (std::uint64_t i = 0; i < F->order(); ++i) {
    const Felt x = F->from_index(i);
    w_size += in_W(*F, x);
    const Split s = split(*F, x);
    ASSERT_EQ(F->add(s.fixed, s.anti), x);
    ASSERT_TRUE(F->in_subfield(s.fixed, F->t()));
    ASSERT_TRUE(in_W(*F, s.anti));
    if (F->in_subfield(x, F->t())) EXPECT_TRUE(s.anti.is_zero());
    if (in_W(*F, x)) EXPECT_TRUE(s.fixed.is_zero());
  }
  EXPECT_EQ(w_size, 27u);
  const std::uint64_t qt = 27;
  EXPECT_TRUE(in_W(*F, F->pow(F->generator(), (qt + 1) / 2)));
}

TEST(Field, WUnityRoot) {
  EXPECT_FALSE(w_unity_root_exists(*field(5, 3), 1).has_value());
  const auto F = field(3, 3);
  const auto x = w_unity_root_exists(*F, 1);
  ASSERT_TRUE(x.has_value());
  EXPECT_TRUE(in_W(*F, *x));
  EXPECT_EQ(F->pow(*x, F->q() + 1), F->one());

  // q = 3, t = 4, k = 1: enumerate W by hand.
  const auto G = field(3, 4);
  bool found = false;
  for (std::uint64_t i = 1; i < G->order(); ++i) {
    const Felt y = G->from_index(i);
    if (in_W(*G, y) && G->pow(y, G->q() + 1) == G->one()) found = true;
  }
  EXPECT_EQ(w_unity_root_exists(*G, 1).has_value(), found);
  EXPECT_FALSE(found);
}

}  // namespace
