// One line per acceptance criterion; exit status is nonzero if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "alterfold/fs_indicator.hpp"
#include "alterfold/state_sum.hpp"
#include "alterfold/surgery.hpp"
#include "alterfold/triangulation.hpp"
#include "alterfold/tube.hpp"

using namespace alterfold;

namespace {

struct Named {
  std::string name;
  std::vector<int> params;
};

std::vector<Named> builtins() {
  std::vector<Named> out{{"trivial", {}}};
  for (int n = 2; n <= 4; ++n)
    for (int p = 0; p < n; ++p) out.push_back({"vec_zn", {n, p}});
  out.push_back({"fibonacci", {}});
  out.push_back({"ising", {}});
  for (int k = 1; k <= 3; ++k) out.push_back({"su2_level", {k}});
  return out;
}

std::string tag(const Named& b) {
  std::string s = b.name;
  for (int p : b.params) s += ":" + std::to_string(p);
  return s;
}

// simultaneous permutation distance between (S, T) and a reference
double match_modular(const Eigen::MatrixXcd& S, const std::vector<Complex>& T, const Eigen::MatrixXcd& S0,
                     const std::vector<Complex>& T0) {
  const int n = static_cast<int>(T.size());
  if (n != static_cast<int>(T0.size())) return 1e300;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  double best = 1e300;
  do {
    double d = 0.0;
    for (int a = 0; a < n && d < best; ++a) {
      d = std::max(d, std::abs(T[p[a]] - T0[a]));
      for (int b = 0; b < n; ++b) d = std::max(d, std::abs(S(p[a], p[b]) - S0(a, b)));
    }
    best = std::min(best, d);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

// S and theta of a braided category straight from its R-symbols
void braided_data(const FusionCategory& c, Eigen::MatrixXcd& S, std::vector<Complex>& th) {
  th.assign(c.rank, 0.0);
  for (int a = 0; a < c.rank; ++a)
    for (int x = 0; x < c.rank; ++x)
      if (c.N(a, a, x)) th[a] += c.qdim[x] / c.qdim[a] * c.R(a, a, x);
  S.resize(c.rank, c.rank);
  for (int a = 0; a < c.rank; ++a)
    for (int b = 0; b < c.rank; ++b) {
      Complex s = 0.0;
      for (int x = 0; x < c.rank; ++x)
        if (c.N(c.dual[a], b, x)) s += th[x] / (th[a] * th[b]) * c.qdim[x];
      S(a, b) = s;
    }
}

int failures = 0;

void report(int id, const std::string& what, const std::function<std::pair<bool, std::string>()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    std::tie(ok, detail) = body();
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("[%s] criterion %2d  %-34s %s (%.2fs)\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str(), secs);
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

}  // namespace

int main() {
  report(1, "category verification", [] {
    double pent = 0.0, dim = 0.0;
    bool ok = true;
    for (const auto& b : builtins()) {
      const auto r = verify_category(*builtin_category(b.name, b.params));
      pent = std::max(pent, r.pentagon_residual);
      dim = std::max(dim, r.dimension_defect);
      ok = ok && r.pentagon_residual < 1e-9 && r.dimension_defect < 1e-9;
    }
    return std::pair{ok, "pentagon " + num(pent) + " dim " + num(dim)};
  });

  report(2, "TV(S3) and Pachner invariance", [] {
    const auto fib = builtin_category("fibonacci");
    const Complex base = tv_invariant(*fib, census("s3_2tet"));
    const double mu = fib->global_dim.real();
    double err = std::abs(base - 1.0 / mu);
    bool ok = err < 1e-9;
    double spread = std::abs(tv_invariant(*fib, census("s3_3tet")) - base);
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 10; ++trial) {
      const auto t = random_moves(census(trial % 2 ? "s3_3tet" : "s3_2tet"), rng, 2 + trial % 4);
      spread = std::max(spread, std::abs(tv_invariant(*fib, t) - base));
    }
    ok = ok && spread < 1e-8;
    return std::pair{ok, "|tv-1/mu| " + num(err) + " spread " + num(spread)};
  });

  report(3, "TV(S2xS1) = 1", [] {
    double err = 0.0;
    const auto tri = census("s2xs1");
    for (const auto& b : std::vector<Named>{{"fibonacci", {}}, {"vec_zn", {2, 0}}, {"su2_level", {2}}})
      err = std::max(err, std::abs(tv_invariant(*builtin_category(b.name, b.params), tri) - 1.0));
    return std::pair{err < 1e-8, "max defect " + num(err)};
  });

  report(4, "killing property", [] {
    double worst = 0.0;
    for (const auto& b : builtins()) {
      const DrinfeldCenter z(builtin_category(b.name, b.params));
      for (int i = 0; i < z.category().rank; ++i) worst = std::max(worst, verify_killing(z, i));
    }
    return std::pair{worst < 1e-9, "max defect " + num(worst)};
  });

  report(5, "center of Vec(Z/2)", [] {
    const DrinfeldCenter z(builtin_category("vec_zn", {2, 0}));
    const auto& md = z.modular_data();
    if (md.rank != 4) return std::pair{false, "rank " + std::to_string(md.rank)};
    Eigen::MatrixXcd S0(4, 4);
    S0 << 1, 1, 1, 1, 1, 1, -1, -1, 1, -1, 1, -1, 1, -1, -1, 1;
    const std::vector<Complex> T0{1, 1, 1, -1};
    double dims = 0.0;
    Complex sum = 0.0;
    for (const auto& d : md.dims) {
      dims = std::max(dims, std::abs(d - 1.0));
      sum += d * d;
    }
    const double m = match_modular(md.s_tilde, md.twists, S0, T0);
    const double s = std::abs(sum - 4.0);
    return std::pair{m < 1e-8 && dims < 1e-8 && s < 1e-8, "match " + num(m) + " sum d^2 defect " + num(s)};
  });

  report(6, "center of Fibonacci", [] {
    const auto cat = builtin_category("fibonacci");
    const DrinfeldCenter z(cat);
    const auto& md = z.modular_data();
    if (md.rank != 4) return std::pair{false, "rank " + std::to_string(md.rank)};
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<double> d;
    Complex sum = 0.0;
    for (const auto& x : md.dims) {
      d.push_back(x.real());
      sum += x * x;
    }
    std::sort(d.begin(), d.end());
    const double want[] = {1.0, phi, phi, phi * phi};
    double dd = 0.0;
    for (int i = 0; i < 4; ++i) dd = std::max(dd, std::abs(d[i] - want[i]));
    Eigen::MatrixXcd Sf;
    std::vector<Complex> tf;
    braided_data(*cat, Sf, tf);
    Eigen::MatrixXcd S0(4, 4);
    std::vector<Complex> T0(4);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        T0[2 * a + b] = tf[a] * std::conj(tf[b]);
        for (int c = 0; c < 2; ++c)
          for (int e = 0; e < 2; ++e) S0(2 * a + b, 2 * c + e) = Sf(a, c) * std::conj(Sf(b, e));
      }
    const double m = match_modular(md.s_tilde, md.twists, S0, T0);
    const double s = std::abs(sum - cat->global_dim * cat->global_dim);
    return std::pair{dd < 1e-7 && m < 1e-7 && s < 1e-7, "dims " + num(dd) + " match " + num(m) + " sum " + num(s)};
  });

  report(7, "modular relations", [] {
    double unitary = 0.0, st = 0.0, verl = 0.0;
    for (const auto& b : builtins()) {
      const auto md = modular_data(builtin_category(b.name, b.params));
      const int R = md.rank;
      const Complex mu = std::sqrt(md.mu_z);
      Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(R, R), T = Eigen::MatrixXcd::Zero(R, R);
      for (int A = 0; A < R; ++A) {
        C(A, md.dual[A]) = 1.0;
        T(A, A) = md.twists[A];
      }
      const Eigen::MatrixXcd& S = md.s_tilde;
      unitary = std::max(unitary, (S * S.conjugate() - md.mu_z * Eigen::MatrixXcd::Identity(R, R))
                                      .cwiseAbs()
                                      .maxCoeff());
      unitary = std::max(unitary, (S * S - md.mu_z * C).cwiseAbs().maxCoeff());
      const Eigen::MatrixXcd X = S * T / mu;
      st = std::max(st, (X * X * X - S * S / md.mu_z).cwiseAbs().maxCoeff());
      for (int i = 0; i < R; ++i)
        for (int j = 0; j < R; ++j)
          for (int k = 0; k < R; ++k) {
            Complex n = 0.0;
            for (int m = 0; m < R; ++m) n += S(i, m) * S(j, m) * std::conj(S(k, m)) / S(0, m);
            n /= md.mu_z;
            const double r = std::max(0.0, std::round(n.real()));
            verl = std::max(verl, std::abs(n - r));
          }
    }
    return std::pair{unitary < 1e-7 && st < 1e-7 && verl < 1e-6,
                     "S " + num(unitary) + " (ST)^3 " + num(st) + " Verlinde " + num(verl)};
  });

  report(8, "TV = RT on lens spaces", [] {
    double worst = 0.0;
    bool ok = true;
    for (const auto& b : std::vector<Named>{{"fibonacci", {}}, {"vec_zn", {2, 0}}}) {
      const auto rep = verify_tv_rt(builtin_category(b.name, b.params), registered_plumbing_names());
      worst = std::max(worst, rep.max_defect);
      ok = ok && rep.pass && rep.entries.size() == 6;
    }
    return std::pair{ok && worst < 1e-7, "max defect " + num(worst)};
  });

  report(9, "pseudo-manifold TV", [] {
    const auto su2 = builtin_category("su2_level", {2});
    const double a = std::abs(tv_invariant(*su2, census("solid_torus_ideal")) - 1.0);
    const auto fib = builtin_category("fibonacci");
    Eigen::MatrixXcd S;
    std::vector<Complex> th;
    braided_data(*fib, S, th);
    const double want = S.cwiseAbs2().sum() / fib->global_dim.real();
    const double b = std::abs(tv_invariant(*fib, census("hopf_complement_ideal")) - want);
    const double c = std::abs(want - 2.0);
    return std::pair{a < 1e-7 && b < 1e-6 && c < 1e-9, "solid torus " + num(a) + " hopf " + num(b)};
  });

  report(10, "FS indicators and equivariance", [] {
    double homs = 0.0, worst = 0.0;
    bool ok = true;
    for (const auto& b : std::vector<Named>{{"fibonacci", {}}, {"vec_zn", {2, 0}}}) {
      const DrinfeldCenter z(builtin_category(b.name, b.params));
      for (int A = 0; A < z.rank(); ++A)
        for (int v = 0; v < z.category().rank; ++v)
          homs = std::max(homs, std::abs(indicator(z, A, {v}, 1, 0) - static_cast<double>(z.simple(A).mult[v])));
      const auto rep = equivariance_check(z, -3, 3, -3, 3);
      ok = ok && rep.pass;
      worst = std::max({worst, rep.t_defect, rep.s_defect, rep.dual_defect, rep.reduced_defect});
    }
    const DrinfeldCenter fib(builtin_category("fibonacci"));
    const double nu2 = std::abs(indicator(fib, 0, {1}, 2, 1) - 1.0);
    return std::pair{ok && homs < 1e-8 && nu2 < 1e-8 && worst < 1e-7,
                     "hom " + num(homs) + " nu2 " + num(nu2) + " sweep " + num(worst)};
  });

  report(11, "determinism", [] {
    auto collect = [](int workers) {
      std::vector<Complex> v;
      StateSumConfig cfg;
      cfg.workers = workers;
      for (const char* t : {"t3", "s3_3tet", "lens_4_1"})
        for (const auto& b : std::vector<Named>{{"ising", {}}, {"su2_level", {2}}, {"vec_zn", {3, 1}}})
          v.push_back(tv_invariant(*builtin_category(b.name, b.params), census(t), cfg));
      const DrinfeldCenter z(builtin_category("ising"));
      const auto& md = z.modular_data();
      for (int i = 0; i < md.s_tilde.size(); ++i) v.push_back(md.s_tilde.data()[i]);
      for (auto t : md.twists) v.push_back(t);
      v.push_back(rt_plumbing(md, lens_space_plumbing(7, 3)));
      v.push_back(indicator(z, 1, {1}, 3, 2));
      return v;
    };
    const auto a = collect(1), b = collect(1), c = collect(4);
    bool same = a.size() == b.size();
    double spread = 0.0;
    for (size_t i = 0; i < a.size() && same; ++i) {
      same = a[i].real() == b[i].real() && a[i].imag() == b[i].imag();
      spread = std::max(spread, std::abs(a[i] - c[i]));
    }
    return std::pair{same && spread < 1e-12, std::string(same ? "bit-identical" : "differs") +
                                                 ", workers=4 spread " + num(spread)};
  });

  std::printf("%d failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
