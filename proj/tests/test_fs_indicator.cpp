#include "alterfold/fs_indicator.hpp"
#include "support.hpp"

using namespace alterfold;
using namespace alterfold::test;

namespace {

// |p(z)| small for some monic integer p of degree <= 4 with coefficients in [-B, B]
bool near_algebraic_integer(Complex z, double tol, int B = 6) {
  for (int deg = 1; deg <= 4; ++deg) {
    std::vector<int> c(deg, -B);
    while (true) {
      Complex p = 1.0;
      for (int i = 0; i < deg; ++i) p = p * z + static_cast<double>(c[i]);
      if (std::abs(p) < tol) return true;
      int i = 0;
      while (i < deg && c[i] == B) c[i++] = -B;
      if (i == deg) break;
      ++c[i];
    }
  }
  return false;
}

}  // namespace

TEST(FsIndicator, DegreeOneCountsHoms) {
  for (const auto& b : std::vector<Builtin>{{"fibonacci", {}}, {"vec_zn", {2, 0}}, {"vec_zn", {2, 1}}, {"ising", {}}}) {
    const DrinfeldCenter z(builtin_category(b.name, b.params));
    for (int A = 0; A < z.rank(); ++A)
      for (int v = 0; v < z.category().rank; ++v) {
        const Complex nu = indicator(z, A, {v}, 1, 0);
        EXPECT_CNEAR(nu, static_cast<double>(z.simple(A).mult[v]), 1e-8) << tag(b);
      }
  }
}

TEST(FsIndicator, ClassicalSecondIndicator) {
  const DrinfeldCenter fib(builtin_category("fibonacci"));
  EXPECT_CNEAR(indicator(fib, 0, {1}, 2, 1), 1.0, 1e-8);
  EXPECT_CNEAR(indicator_direct(fib, 0, {1}, 2, 1), 1.0, 1e-8);
  // the spin-1/2 object of su(2)_1 is pseudo-real
  const DrinfeldCenter su2(builtin_category("su2_level", {1}));
  EXPECT_CNEAR(indicator(su2, 0, {1}, 2, 1), -1.0, 1e-8);
  // twisted Z2: the generator has indicator -1
  const DrinfeldCenter z2t(builtin_category("vec_zn", {2, 1}));
  EXPECT_CNEAR(indicator(z2t, 0, {1}, 2, 1), -1.0, 1e-8);
  const DrinfeldCenter z2(builtin_category("vec_zn", {2, 0}));
  EXPECT_CNEAR(indicator(z2, 0, {1}, 2, 1), 1.0, 1e-8);
  EXPECT_CNEAR(indicator(z2, 0, {1}, 2, 0), 1.0, 1e-8);
}

TEST(FsIndicator, ReducedMatchesDirect) {
  const DrinfeldCenter z(builtin_category("ising"));
  for (int A = 0; A < z.rank(); ++A)
    for (int v = 0; v < z.category().rank; ++v)
      for (int m = -2; m <= 2; ++m)
        for (int l = -2; l <= 2; ++l)
          EXPECT_CNEAR(indicator(z, A, {v}, m, l), indicator_direct(z, A, {v}, m, l), 1e-8)
              << A << " " << v << " " << m << " " << l;
}

TEST(FsIndicator, OperatorPeriod) {
  // (E^{(m,1)})^m acts as theta_A^{-1}
  const DrinfeldCenter z(builtin_category("fibonacci"));
  for (int A = 0; A < z.rank(); ++A) {
    const auto E = indicator_operator(z, A, {1}, 3, 1);
    if (E.rows() == 0) continue;
    const Eigen::MatrixXcd E3 = E * E * E;
    const Complex th = z.modular_data().twists[A];
    EXPECT_LT((E3 - Eigen::MatrixXcd::Identity(E.rows(), E.rows()) / th).cwiseAbs().maxCoeff(), 1e-8);
  }
}

TEST(FsIndicator, Equivariance) {
  for (const auto& b : std::vector<Builtin>{{"fibonacci", {}}, {"vec_zn", {2, 0}}, {"vec_zn", {3, 1}}}) {
    const DrinfeldCenter z(builtin_category(b.name, b.params));
    const auto rep = equivariance_check(z, -2, 2, -2, 2);
    EXPECT_TRUE(rep.pass) << tag(b);
    EXPECT_LT(rep.t_defect, 1e-7) << tag(b);
    EXPECT_LT(rep.s_defect, 1e-7) << tag(b);
    EXPECT_LT(rep.dual_defect, 1e-7) << tag(b);
    EXPECT_LT(rep.reduced_defect, 1e-7) << tag(b);
    EXPECT_GT(rep.checked, 0);
  }
}

TEST(FsIndicator, UnitValuesAreAlgebraicIntegers) {
  for (const auto& b : std::vector<Builtin>{{"fibonacci", {}}, {"vec_zn", {3, 1}}, {"su2_level", {2}}}) {
    const DrinfeldCenter z(builtin_category(b.name, b.params));
    for (int v = 0; v < z.category().rank; ++v)
      for (int n = 1; n <= 4; ++n) {
        const Complex nu = indicator(z, 0, {v}, n, 1);
        EXPECT_TRUE(near_algebraic_integer(nu, 1e-6)) << tag(b) << " v=" << v << " n=" << n << " " << nu;
      }
  }
}
