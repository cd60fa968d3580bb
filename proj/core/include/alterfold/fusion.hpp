#pragma once

#include <array>
#include <compare>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "alterfold/common.hpp"

namespace alterfold {

// (a,b,c,d; e,alpha,beta; f,gamma,delta)
//   ((a b)_e^alpha c)_d^beta  =  sum_f F[e,f] (a (b c)_f^gamma)_d^delta
// read as an identity between splitting trees of d -> a b c.
struct FKey {
  int a, b, c, d, e, alpha, beta, f, gamma, delta;
  auto operator<=>(const FKey&) const = default;
};

struct RKey {
  int a, b, c, mu, nu;
  auto operator<=>(const RKey&) const = default;
};

class FusionCategory;
struct EngineCache;
std::shared_ptr<EngineCache> make_engine_cache();
using CategoryPtr = std::shared_ptr<const FusionCategory>;

class FusionCategory {
 public:
  int rank = 0;
  std::vector<std::string> labels;
  std::vector<int> dual;
  std::vector<int> fusion;  // rank^3, N[i][j][k]
  std::map<FKey, Complex> f_symbols;
  std::vector<Complex> qdim;
  Complex global_dim{0.0, 0.0};
  std::map<RKey, Complex> r_symbols;
  double tol = 1e-9;

  int N(int i, int j, int k) const { return fusion[(i * rank + j) * rank + k]; }
  int& N(int i, int j, int k) { return fusion[(i * rank + j) * rank + k]; }
  bool admissible(int i, int j, int k) const { return N(i, j, k) > 0; }
  bool multiplicity_free() const;
  bool braided() const { return !r_symbols.empty(); }

  // Dense lookups, valid after finalize() on a multiplicity-free category.
  // Out-of-range channel combinations return 0.
  Complex F(int a, int b, int c, int d, int e, int f) const;
  Complex Finv(int a, int b, int c, int d, int f, int e) const;
  Complex R(int a, int b, int c) const;
  // General lookup through the sparse map (multiplicity-aware).
  Complex F_at(const FKey& k) const;

  // Builds dense tables and derives qdim/global_dim when absent.
  void finalize();
  bool finalized() const { return tables_ != nullptr; }
  // True if every F block was invertible during finalize().
  bool blocks_invertible() const;

  void check_index(int i) const;

  // memo tables of the morphism engine; rebuilt by finalize()
  EngineCache& cache() const { return *cache_; }

 private:
  std::shared_ptr<EngineCache> cache_;
  struct Tables;
  std::shared_ptr<const Tables> tables_;
};

// Builtins: trivial, vec_zn(n,p), fibonacci, ising, su2_level(k).
CategoryPtr builtin_category(const std::string& name, const std::vector<int>& params = {});
CategoryPtr load_category(const std::string& text);
std::string serialize_category(const FusionCategory& cat);

struct VerificationReport {
  double pentagon_residual = 0.0;
  bool unit_duality_ok = true;
  double dimension_defect = 0.0;
  bool f_invertible = true;
  bool has_hexagon = false;
  double hexagon_residual = 0.0;
  double pivotal_residual = 0.0;  // d^2 F^{a a* a}_a[0,0] Finv[0,0] - 1
  bool pass = false;
  std::vector<std::string> notes;
};

VerificationReport verify_category(const FusionCategory& cat);

// Standalone residuals used by verify_category and by tests.
double pentagon_residual(const FusionCategory& cat);
double hexagon_residual(const FusionCategory& cat);

}  // namespace alterfold
