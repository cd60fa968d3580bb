#include <random>

#include "alterfold/morphism.hpp"
#include "support.hpp"

using namespace alterfold;
using namespace alterfold::test;

namespace {

Morphism random_morphism(const FusionCategory& C, const Word& dom, const Word& cod, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Morphism m = Morphism::zero(C, dom, cod);
  for (int k = 0; k < C.rank; ++k) {
    const int r = static_cast<int>(trees(C, cod, k).size()), c = static_cast<int>(trees(C, dom, k).size());
    if (!r || !c) continue;
    auto& b = m.block(k);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) b(i, j) = Complex(g(rng), g(rng));
  }
  return m;
}

}  // namespace

TEST(Morphism, HomDims) {
  const auto fib = builtin_category("fibonacci");
  const auto z2 = builtin_category("vec_zn", {2, 0});
  EXPECT_EQ(hom_dim(*fib, {1, 1}, {1, 1}), 2);
  EXPECT_EQ(hom_dim(*fib, {}, {}), 1);
  EXPECT_EQ(hom_dim(*z2, {1}, {0}), 0);
  EXPECT_EQ(hom_dim(*fib, {1, 1, 1}, {1}), 2);
  EXPECT_THROW(hom_dim(*fib, {2}, {}), Error);
}

TEST(Morphism, ComposeIdentityAndZero) {
  const auto fib = builtin_category("fibonacci");
  const auto id = Morphism::identity(*fib, {1});
  EXPECT_LT((id * id - id).max_abs(), 1e-15);
  std::mt19937_64 rng(1);
  const auto f = random_morphism(*fib, {1, 1}, {1, 1}, rng);
  EXPECT_EQ((f * Morphism::zero(*fib, {1, 1}, {1, 1})).max_abs(), 0.0);
  EXPECT_THROW(compose(id, f), Error);
}

TEST(Morphism, LoopIsDimension) {
  for (const auto& b : all_builtins()) {
    const auto c = builtin_category(b.name, b.params);
    for (int a = 0; a < c->rank; ++a) {
      // mixing the two dualities can only cost a sign
      EXPECT_NEAR(std::abs(scalar(cap(*c, c->dual[a]) * cup(*c, a))), std::abs(c->qdim[a]), 1e-10) << tag(b) << " " << a;
      EXPECT_CNEAR(scalar(cap_right(*c, a) * cup(*c, a)), c->qdim[a], 1e-10) << tag(b) << " " << a;
      EXPECT_CNEAR(scalar(cap(*c, a) * cup_right(*c, a)), c->qdim[a], 1e-10) << tag(b) << " " << a;
      EXPECT_CNEAR(trace(Morphism::identity(*c, {a})), c->qdim[a], 1e-12);
    }
  }
}

TEST(Morphism, ZigZag) {
  for (const auto& b : all_builtins()) {
    const auto c = builtin_category(b.name, b.params);
    for (int a = 0; a < c->rank; ++a) {
      const int ad = c->dual[a];
      const auto I = [&](int x) { return Morphism::identity(*c, {x}); };
      // (id_a (x) ev) (coev (x) id_a) = id_a
      const auto z1 = tensor(I(a), cap(*c, a)) * tensor(cup(*c, a), I(a));
      EXPECT_LT((z1 - I(a)).max_abs(), 1e-10) << tag(b) << " " << a;
      const auto z2 = tensor(cap(*c, a), I(ad)) * tensor(I(ad), cup(*c, a));
      EXPECT_LT((z2 - I(ad)).max_abs(), 1e-10) << tag(b) << " " << a;
      const auto z3 = tensor(cap_right(*c, a), I(a)) * tensor(I(a), cup_right(*c, a));
      EXPECT_LT((z3 - I(a)).max_abs(), 1e-10) << tag(b) << " " << a;
    }
  }
}

TEST(Morphism, TensorFunctorial) {
  const auto c = builtin_category("su2_level", {3});
  std::mt19937_64 rng(7);
  const auto f = random_morphism(*c, {1, 2}, {2, 1}, rng), g = random_morphism(*c, {2, 1}, {1, 1, 1}, rng);
  const auto h = random_morphism(*c, {3}, {1, 2}, rng), k = random_morphism(*c, {1, 2}, {3}, rng);
  const auto lhs = tensor(g * f, k * h);
  const auto rhs = tensor(g, k) * tensor(f, h);
  EXPECT_LT((lhs - rhs).max_abs(), 1e-10);
  EXPECT_LT((tensor(Morphism::identity(*c, {1}), Morphism::identity(*c, {2})) - Morphism::identity(*c, {1, 2})).max_abs(),
            1e-12);
}

TEST(Morphism, TensorAssociative) {
  const auto c = builtin_category("ising");
  std::mt19937_64 rng(3);
  const auto f = random_morphism(*c, {1}, {1}, rng), g = random_morphism(*c, {1, 1}, {2, 0}, rng),
             h = random_morphism(*c, {2}, {1, 1}, rng);
  EXPECT_LT((tensor(tensor(f, g), h) - tensor(f, tensor(g, h))).max_abs(), 1e-10);
}

TEST(Morphism, TraceCyclicAndSpherical) {
  const auto c = builtin_category("fibonacci");
  std::mt19937_64 rng(11);
  const auto f = random_morphism(*c, {1, 1}, {1, 1, 1}, rng), g = random_morphism(*c, {1, 1, 1}, {1, 1}, rng);
  EXPECT_CNEAR(trace(f * g), trace(g * f), 1e-10);
  for (const auto& b : all_builtins()) {
    const auto cat = builtin_category(b.name, b.params);
    for (int a = 0; a < cat->rank; ++a) {
      const auto e = random_morphism(*cat, {a}, {a}, rng);
      EXPECT_CNEAR(left_closure(e), right_closure(e), 1e-10) << tag(b);
      EXPECT_CNEAR(left_closure(e), trace(e), 1e-10) << tag(b);
    }
  }
}

TEST(Morphism, UnitDecomposition) {
  // sum_k d_k sum_j phi'_j phi_j = id
  const auto c = builtin_category("su2_level", {2});
  const Word w{1, 1, 2};
  Morphism acc = Morphism::zero(*c, w, w);
  for (int k = 0; k < c->rank; ++k) {
    auto [phi, phip] = dual_bases(*c, w, k);
    for (size_t j = 0; j < phi.size(); ++j) {
      EXPECT_CNEAR(trace(phi[j] * phip[j]), 1.0, 1e-12);
      acc += c->qdim[k] * (phip[j] * phi[j]);
    }
  }
  EXPECT_LT((acc - Morphism::identity(*c, w)).max_abs(), 1e-10);
}

TEST(Morphism, WordDualities) {
  const auto c = builtin_category("vec_zn", {3, 1});
  const Word w{1, 2, 1};
  const Word wd = dual_word(*c, w);
  EXPECT_EQ(wd, (Word{2, 1, 2}));
  EXPECT_CNEAR(scalar(ev_word(*c, w) * coev_right_word(*c, w)), 1.0, 1e-10);
  EXPECT_CNEAR(scalar(ev_right_word(*c, w) * coev_word(*c, w)), 1.0, 1e-10);
  const auto I = Morphism::identity(*c, w);
  const auto z = tensor(I, ev_word(*c, w)) * tensor(coev_word(*c, w), I);
  EXPECT_LT((z - I).max_abs(), 1e-10);
}
