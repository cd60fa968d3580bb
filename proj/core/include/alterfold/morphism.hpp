#pragma once

#include <map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "alterfold/fusion.hpp"

namespace alterfold {

using Word = std::vector<int>;

Word dual_word(const FusionCategory& cat, const Word& w);
Word concat(const Word& a, const Word& b);
Word repeat(const Word& w, int times);

// Left-nested fusion tree of a word [x1..xn] into channel k, stored as the
// running intermediates c[0]=x1, c[1], ..., c[n-1]=k. The empty word has a
// single tree (into 0) with no intermediates.
using Tree = std::vector<int>;

// All trees of `w` into channel k, in lexicographic order of intermediates.
const std::vector<Tree>& trees(const FusionCategory& cat, const Word& w, int k);
int tree_index(const FusionCategory& cat, const Word& w, int k, const Tree& t);

int hom_dim(const FusionCategory& cat, const Word& a, const Word& b);

// A morphism dom -> cod stored per channel k as a matrix: rows are trees of
// cod into k, columns trees of dom into k. Vertices are normalised so that a
// fusion tree composed with its own splitting tree is the identity.
class Morphism {
 public:
  Morphism() = default;
  Morphism(const FusionCategory* cat, Word dom, Word cod);

  static Morphism identity(const FusionCategory& cat, const Word& w);
  static Morphism zero(const FusionCategory& cat, const Word& dom, const Word& cod);
  // splitting tree k -> w (column unit vector), fusion tree w -> k (row unit)
  static Morphism splitting(const FusionCategory& cat, const Word& w, int k, int tree);
  static Morphism fusing(const FusionCategory& cat, const Word& w, int k, int tree);

  const FusionCategory& category() const { return *cat_; }
  const Word& dom() const { return dom_; }
  const Word& cod() const { return cod_; }
  const std::map<int, Eigen::MatrixXcd>& blocks() const { return blocks_; }
  // zero-filled block of the right shape (inserted on demand)
  Eigen::MatrixXcd& block(int k);
  Eigen::MatrixXcd block_or_zero(int k) const;

  Morphism& operator+=(const Morphism& o);
  Morphism& operator-=(const Morphism& o);
  Morphism& operator*=(Complex s);
  double max_abs() const;

 private:
  const FusionCategory* cat_ = nullptr;
  Word dom_, cod_;
  std::map<int, Eigen::MatrixXcd> blocks_;
};

Morphism operator+(Morphism a, const Morphism& b);
Morphism operator-(Morphism a, const Morphism& b);
Morphism operator*(Complex s, Morphism a);

// f after g
Morphism compose(const Morphism& f, const Morphism& g);
Morphism tensor(const Morphism& f, const Morphism& g);
inline Morphism operator*(const Morphism& f, const Morphism& g) { return compose(f, g); }

// cup(a): [] -> [a, a*], cap(a): [a*, a] -> []      (left duality)
// cup_right(a): [] -> [a*, a], cap_right(a): [a, a*] -> []  (right duality)
Morphism cup(const FusionCategory& cat, int a);
Morphism cap(const FusionCategory& cat, int a);
Morphism cup_right(const FusionCategory& cat, int a);
Morphism cap_right(const FusionCategory& cat, int a);

// Nested versions for words: ev_w: w* w -> [], coev_w: [] -> w w*,
// ev'_w: w w* -> [], coev'_w: [] -> w* w.
Morphism ev_word(const FusionCategory& cat, const Word& w);
Morphism coev_word(const FusionCategory& cat, const Word& w);
Morphism ev_right_word(const FusionCategory& cat, const Word& w);
Morphism coev_right_word(const FusionCategory& cat, const Word& w);

Complex trace(const Morphism& f);
// Closures of an endomorphism of a single-letter word through explicit
// cups and caps; used to test sphericality.
Complex left_closure(const Morphism& f);
Complex right_closure(const Morphism& f);

// bases of hom(a,[k]) and hom([k],a) with Tr(phi_j phi'_l) = delta_jl
std::pair<std::vector<Morphism>, std::vector<Morphism>> dual_bases(const FusionCategory& cat, const Word& a, int k);

// Scalar of an endomorphism of the empty word.
Complex scalar(const Morphism& f);

}  // namespace alterfold
