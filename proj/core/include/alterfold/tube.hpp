#pragma once

#include <array>
#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "alterfold/fusion.hpp"
#include "alterfold/morphism.hpp"

namespace alterfold {

// basis element of hom(X_i X_g, X_g X_j) through channel k
struct TubeLabel {
  int i, g, j, k;
  auto operator<=>(const TubeLabel&) const = default;
};

using TubeElement = Eigen::VectorXcd;

class TubeAlgebra {
 public:
  explicit TubeAlgebra(CategoryPtr cat);

  const FusionCategory& category() const { return *cat_; }
  const CategoryPtr& category_ptr() const { return cat_; }
  int size() const { return static_cast<int>(basis_.size()); }
  const std::vector<TubeLabel>& basis() const { return basis_; }
  int index(int i, int g, int j, int k) const;

  TubeElement zero() const { return TubeElement::Zero(size()); }
  TubeElement unit(int b) const;
  TubeElement identity() const;
  TubeElement identity(int i) const;  // 1_i
  TubeElement multiply(const TubeElement& x, const TubeElement& y) const;
  Eigen::MatrixXcd left_matrix(const TubeElement& x) const;
  Complex trace(const TubeElement& x) const;

  // the g-component of x restricted to i -> j, as a morphism [i g] -> [g j]
  Morphism component(const TubeElement& x, int i, int g, int j) const;

 private:
  CategoryPtr cat_;
  std::vector<TubeLabel> basis_;
  std::vector<int> lookup_;
  // products of basis elements, (a * size + b) -> sparse result
  std::vector<std::vector<std::pair<int, Complex>>> prod_;
};

struct CenterObject {
  int index = 0;
  TubeElement idempotent;
  Complex qdim{1.0, 0.0};
  Complex twist{1.0, 0.0};
  std::vector<int> mult;        // multiplicity of each simple of C in the underlying object
  std::vector<int> components;  // j_a for a = 0..n-1
  std::vector<std::vector<TubeElement>> units;  // matrix units E_ab
};

struct ModularData {
  int rank = 0;
  Eigen::MatrixXcd s_tilde;
  std::vector<Complex> twists;
  std::vector<Complex> dims;
  Complex mu_z{0.0, 0.0};
  std::vector<int> dual;  // charge conjugation
};

class DrinfeldCenter {
 public:
  explicit DrinfeldCenter(CategoryPtr cat);

  const TubeAlgebra& tube() const { return tube_; }
  const FusionCategory& category() const { return tube_.category(); }
  int rank() const { return static_cast<int>(objects_.size()); }
  const std::vector<CenterObject>& simples() const { return objects_; }
  const CenterObject& simple(int A) const;

  // e_A(X_g) as an n_A x n_A array of morphisms [j_a g] -> [g j_b]
  std::vector<std::vector<Morphism>> half_braiding(int A, int g) const;
  // e_A on a word, composed letter by letter
  std::vector<std::vector<Morphism>> half_braiding(int A, const Word& w) const;

  const ModularData& modular_data() const { return md_; }
  // eigenvalue of the Dehn-twist tube on block A
  Complex dehn_eigenvalue(int A) const { return dehn_[A]; }
  // the unit-sector projector mu^-1 sum_g d_g b(0,g,0,g)
  TubeElement unit_projector() const;

 private:
  void decompose();
  void build_units(CenterObject& obj) const;
  void build_modular_data();

  TubeAlgebra tube_;
  std::vector<CenterObject> objects_;
  std::vector<Complex> dehn_;
  ModularData md_;
};

std::vector<CenterObject> center_simples(CategoryPtr cat);
ModularData modular_data(CategoryPtr cat);

// The Omega-ring around the identity tube of X_i, returned as the max-abs
// deviation from mu delta_{i,0} times the unit-sector projector.
double verify_killing(const DrinfeldCenter& z, int i);
double verify_killing(CategoryPtr cat, int i);

}  // namespace alterfold
