#pragma once

#include <vector>

#include <Eigen/Dense>

#include "alterfold/morphism.hpp"
#include "alterfold/tube.hpp"

namespace alterfold {

// V^m: m copies of V, or -m copies of V* when m < 0
Word word_power(const FusionCategory& cat, const Word& v, int m);

// matrix of E^{(m,l)} on hom(X_A, V^m); the basis runs over the components
// j_a of X_A and, inside each, over the fusion trees of V^m into j_a
Eigen::MatrixXcd indicator_operator(const DrinfeldCenter& z, int A, const Word& v, int m, int l);

// trace of the operator above, evaluated literally
Complex indicator_direct(const DrinfeldCenter& z, int A, const Word& v, int m, int l);

// same value through l = -q m + r: theta_A^q Tr(E^{(m,1)})^r, with m < 0
// handled by passing to V*
Complex indicator(const DrinfeldCenter& z, int A, const Word& v, int m, int l);

struct EquivarianceReport {
  int m_lo = 0, m_hi = 0, l_lo = 0, l_hi = 0;
  double t_defect = 0.0;       // nu_{(m,m+l)} vs theta^{-1} nu_{(m,l)}
  double s_defect = 0.0;       // nu_{(l,-m)}^A vs mu^{-1} sum_B S_{B,A*} nu_{(m,l)}^B
  double dual_defect = 0.0;    // nu_{(m,l)}(V) vs nu_{(-m,-l)}(V*)
  double reduced_defect = 0.0; // reduced vs literal evaluation, |l| <= 2
  int checked = 0;
  bool pass = false;
};

// sweep over every center simple A and simple V of C
EquivarianceReport equivariance_check(const DrinfeldCenter& z, int m_lo, int m_hi, int l_lo, int l_hi,
                                      double threshold = 1e-7);

}  // namespace alterfold
