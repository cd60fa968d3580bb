#include "alterfold/fs_indicator.hpp"

#include <cmath>
#include <map>
#include <tuple>

namespace alterfold {

Word word_power(const FusionCategory& cat, const Word& v, int m) {
  return m >= 0 ? repeat(v, m) : repeat(dual_word(cat, v), -m);
}

namespace {

// coev: [] -> [V^{-l}, V^l]
Morphism coev_power(const FusionCategory& C, const Word& v, int l) {
  if (l == 0) return Morphism::identity(C, {});
  if (l < 0) return coev_word(C, word_power(C, v, -l));
  return coev_right_word(C, word_power(C, v, l));
}

// ev: [V^{-l}, V^l] -> []
Morphism ev_power(const FusionCategory& C, const Word& v, int l) {
  if (l == 0) return Morphism::identity(C, {});
  if (l > 0) return ev_word(C, word_power(C, v, l));
  return ev_right_word(C, word_power(C, v, -l));
}

}  // namespace

Eigen::MatrixXcd indicator_operator(const DrinfeldCenter& z, int A, const Word& v, int m, int l) {
  const FusionCategory& C = z.category();
  for (int x : v) C.check_index(x);
  const CenterObject& obj = z.simple(A);
  const int na = static_cast<int>(obj.components.size());
  const Word Vm = word_power(C, v, m);
  const Word U = word_power(C, v, -l);
  const Word Uc = word_power(C, v, l);

  // offsets of each component's block of hom(j_a, V^m)
  std::vector<int> off(na + 1, 0);
  for (int a = 0; a < na; ++a)
    off[a + 1] = off[a] + static_cast<int>(trees(C, Vm, obj.components[a]).size());
  const int dim = off[na];
  Eigen::MatrixXcd E = Eigen::MatrixXcd::Zero(dim, dim);
  if (dim == 0) return E;

  const Morphism coev = coev_power(C, v, l);
  const Morphism ev = ev_power(C, v, l);
  // J regroups [U, V^m, U*] so that the evaluated pair is adjacent; both are
  // powers of the same word, so only the side of the cap changes
  const bool left = static_cast<long long>(m) * l >= 0;
  const Morphism J = left ? tensor(ev, Morphism::identity(C, Vm)) : tensor(Morphism::identity(C, Vm), ev);
  const auto hb = z.half_braiding(A, U);

  for (int b = 0; b < na; ++b) {
    const int jb = obj.components[b];
    const Morphism opened = tensor(Morphism::identity(C, {jb}), coev);
    for (int a = 0; a < na; ++a) {
      const int ja = obj.components[a];
      const Morphism M = tensor(hb[b][a], Morphism::identity(C, Uc)) * opened;  // [jb] -> [U, ja, U*]
      const int nt = off[a + 1] - off[a];
      for (int t = 0; t < nt; ++t) {
        Morphism f = Morphism::zero(C, {ja}, Vm);
        f.block(ja)(t, 0) = 1.0;
        const Morphism out = J * tensor(tensor(Morphism::identity(C, U), f), Morphism::identity(C, Uc)) * M;
        const Eigen::MatrixXcd blk = out.block_or_zero(jb);
        for (int s = 0; s < off[b + 1] - off[b]; ++s) E(off[b] + s, off[a] + t) += blk(s, 0);
      }
    }
  }
  return E;
}

Complex indicator_direct(const DrinfeldCenter& z, int A, const Word& v, int m, int l) {
  return indicator_operator(z, A, v, m, l).trace();
}

Complex indicator(const DrinfeldCenter& z, int A, const Word& v, int m, int l) {
  if (m == 0) return indicator_direct(z, A, v, 0, l);
  if (m < 0) return indicator(z, A, dual_word(z.category(), v), -m, -l);
  // l = -q m + r with 0 <= r < m
  int r = l % m;
  if (r < 0) r += m;
  const int q = (r - l) / m;
  const Eigen::MatrixXcd E1 = indicator_operator(z, A, v, m, 1);
  Eigen::MatrixXcd P = Eigen::MatrixXcd::Identity(E1.rows(), E1.cols());
  for (int s = 0; s < r; ++s) P = P * E1;
  return std::pow(z.modular_data().twists[A], q) * P.trace();
}

EquivarianceReport equivariance_check(const DrinfeldCenter& z, int m_lo, int m_hi, int l_lo, int l_hi,
                                      double threshold) {
  const FusionCategory& C = z.category();
  const ModularData& md = z.modular_data();
  EquivarianceReport rep{m_lo, m_hi, l_lo, l_hi};
  const int R = z.rank();
  // every (m,l) reached by either side of the checks
  std::map<std::tuple<int, int, int, int>, Complex> memo;
  auto nu = [&](int A, int V, int m, int l) {
    const auto key = std::make_tuple(A, V, m, l);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const Complex val = indicator(z, A, {V}, m, l);
    memo.emplace(key, val);
    return val;
  };
  const Complex mu = std::sqrt(md.mu_z);
  for (int V = 0; V < C.rank; ++V)
    for (int m = m_lo; m <= m_hi; ++m)
      for (int l = l_lo; l <= l_hi; ++l) {
        std::vector<Complex> base(R);
        for (int B = 0; B < R; ++B) base[B] = nu(B, V, m, l);
        for (int A = 0; A < R; ++A) {
          const Complex t_lhs = nu(A, V, m, m + l);
          rep.t_defect = std::max(rep.t_defect, std::abs(t_lhs - base[A] / md.twists[A]));
          Complex s_rhs = 0.0;
          for (int B = 0; B < R; ++B) s_rhs += md.s_tilde(B, md.dual[A]) * base[B];
          s_rhs /= mu;
          rep.s_defect = std::max(rep.s_defect, std::abs(nu(A, V, l, -m) - s_rhs));
          if (std::abs(l) <= 2) {
            // literal evaluations on both sides of the duality identity
            const Complex lit = indicator_direct(z, A, {V}, m, l);
            rep.reduced_defect = std::max(rep.reduced_defect, std::abs(base[A] - lit));
            rep.dual_defect = std::max(rep.dual_defect, std::abs(lit - indicator_direct(z, A, {C.dual[V]}, -m, -l)));
          }
          ++rep.checked;
        }
      }
  rep.pass = rep.t_defect < threshold && rep.s_defect < threshold && rep.dual_defect < threshold &&
             rep.reduced_defect < threshold;
  return rep;
}

}  // namespace alterfold
