#include "alterfold/morphism.hpp"

#include <mutex>

namespace alterfold {

struct TreeSet {
  std::vector<Tree> list;
  std::map<Tree, int> index;
};

struct PairBasis {
  // (k1, k2) blocks of the pair basis of V1 V2 -> k, in order
  struct Slot { int k1, k2, offset, n1, n2; };
  std::vector<Slot> slots;
  Eigen::MatrixXcd L, Linv;  // pair -> left-nested and back
};

struct EngineCache {
  std::mutex mu;
  std::map<std::pair<Word, int>, TreeSet> trees;
  std::map<std::tuple<Word, Word, int>, PairBasis> pairs;
};

std::shared_ptr<EngineCache> make_engine_cache() { return std::make_shared<EngineCache>(); }

// ---------------------------------------------------------------------------
// words and trees

Word dual_word(const FusionCategory& cat, const Word& w) {
  Word d(w.rbegin(), w.rend());
  for (int& x : d) x = cat.dual[x];
  return d;
}

Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

Word repeat(const Word& w, int times) {
  Word out;
  for (int i = 0; i < times; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

namespace {

void check_word(const FusionCategory& cat, const Word& w) {
  for (int x : w) cat.check_index(x);
}

void grow(const FusionCategory& C, const Word& w, size_t pos, Tree& cur, std::vector<Tree>& out, int k) {
  if (pos == w.size()) {
    if (cur.back() == k) out.push_back(cur);
    return;
  }
  for (int c = 0; c < C.rank; ++c) {
    if (!C.N(cur.back(), w[pos], c)) continue;
    cur.push_back(c);
    grow(C, w, pos + 1, cur, out, k);
    cur.pop_back();
  }
}

const TreeSet& tree_set(const FusionCategory& C, const Word& w, int k) {
  EngineCache& cache = C.cache();
  std::lock_guard lock(cache.mu);
  auto key = std::make_pair(w, k);
  auto it = cache.trees.find(key);
  if (it != cache.trees.end()) return it->second;
  TreeSet ts;
  if (w.empty()) {
    if (k == 0) ts.list.push_back({});
  } else {
    Tree cur{w[0]};
    grow(C, w, 1, cur, ts.list, k);
  }
  for (size_t i = 0; i < ts.list.size(); ++i) ts.index[ts.list[i]] = static_cast<int>(i);
  return cache.trees.emplace(key, std::move(ts)).first->second;
}

}  // namespace

const std::vector<Tree>& trees(const FusionCategory& cat, const Word& w, int k) {
  return tree_set(cat, w, k).list;
}

int tree_index(const FusionCategory& cat, const Word& w, int k, const Tree& t) {
  const auto& ts = tree_set(cat, w, k);
  auto it = ts.index.find(t);
  return it == ts.index.end() ? -1 : it->second;
}

int hom_dim(const FusionCategory& cat, const Word& a, const Word& b) {
  check_word(cat, a);
  check_word(cat, b);
  int n = 0;
  for (int k = 0; k < cat.rank; ++k)
    n += static_cast<int>(trees(cat, a, k).size() * trees(cat, b, k).size());
  return n;
}

// ---------------------------------------------------------------------------
// Morphism

Morphism::Morphism(const FusionCategory* cat, Word dom, Word cod)
    : cat_(cat), dom_(std::move(dom)), cod_(std::move(cod)) {}

Morphism Morphism::zero(const FusionCategory& cat, const Word& dom, const Word& cod) {
  check_word(cat, dom);
  check_word(cat, cod);
  return Morphism(&cat, dom, cod);
}

Morphism Morphism::identity(const FusionCategory& cat, const Word& w) {
  Morphism m = zero(cat, w, w);
  for (int k = 0; k < cat.rank; ++k) {
    const auto n = static_cast<Eigen::Index>(trees(cat, w, k).size());
    if (n) m.blocks_[k] = Eigen::MatrixXcd::Identity(n, n);
  }
  return m;
}

Morphism Morphism::splitting(const FusionCategory& cat, const Word& w, int k, int tree) {
  Morphism m = zero(cat, {k}, w);
  m.block(k)(tree, 0) = 1.0;
  return m;
}

Morphism Morphism::fusing(const FusionCategory& cat, const Word& w, int k, int tree) {
  Morphism m = zero(cat, w, {k});
  m.block(k)(0, tree) = 1.0;
  return m;
}

Eigen::MatrixXcd& Morphism::block(int k) {
  auto it = blocks_.find(k);
  if (it != blocks_.end()) return it->second;
  const auto r = static_cast<Eigen::Index>(trees(*cat_, cod_, k).size());
  const auto c = static_cast<Eigen::Index>(trees(*cat_, dom_, k).size());
  if (!r || !c) throw Error(ErrorKind::Index, "channel " + std::to_string(k) + " absent from hom space");
  return blocks_.emplace(k, Eigen::MatrixXcd::Zero(r, c)).first->second;
}

Eigen::MatrixXcd Morphism::block_or_zero(int k) const {
  auto it = blocks_.find(k);
  if (it != blocks_.end()) return it->second;
  const auto r = static_cast<Eigen::Index>(trees(*cat_, cod_, k).size());
  const auto c = static_cast<Eigen::Index>(trees(*cat_, dom_, k).size());
  return Eigen::MatrixXcd::Zero(r, c);
}

namespace {
void same_space(const Morphism& a, const Morphism& b) {
  if (&a.category() != &b.category()) throw Error(ErrorKind::Mismatch, "morphisms over different categories");
  if (a.dom() != b.dom() || a.cod() != b.cod()) throw Error(ErrorKind::Mismatch, "hom spaces differ");
}
}  // namespace

Morphism& Morphism::operator+=(const Morphism& o) {
  same_space(*this, o);
  for (const auto& [k, m] : o.blocks_) {
    auto it = blocks_.find(k);
    if (it == blocks_.end())
      blocks_.emplace(k, m);
    else
      it->second += m;
  }
  return *this;
}

Morphism& Morphism::operator-=(const Morphism& o) {
  same_space(*this, o);
  for (const auto& [k, m] : o.blocks_) {
    auto it = blocks_.find(k);
    if (it == blocks_.end())
      blocks_.emplace(k, -m);
    else
      it->second -= m;
  }
  return *this;
}

Morphism& Morphism::operator*=(Complex s) {
  for (auto& [k, m] : blocks_) m *= s;
  return *this;
}

double Morphism::max_abs() const {
  double x = 0.0;
  for (const auto& [k, m] : blocks_)
    if (m.size()) x = std::max(x, m.cwiseAbs().maxCoeff());
  return x;
}

Morphism operator+(Morphism a, const Morphism& b) { return a += b; }
Morphism operator-(Morphism a, const Morphism& b) { return a -= b; }
Morphism operator*(Complex s, Morphism a) { return a *= s; }

Morphism compose(const Morphism& f, const Morphism& g) {
  if (&f.category() != &g.category()) throw Error(ErrorKind::Mismatch, "morphisms over different categories");
  if (g.cod() != f.dom()) throw Error(ErrorKind::Mismatch, "codomain of g differs from domain of f");
  Morphism out = Morphism::zero(f.category(), g.dom(), f.cod());
  for (const auto& [k, mf] : f.blocks()) {
    auto it = g.blocks().find(k);
    if (it == g.blocks().end()) continue;
    out.block(k) = mf * it->second;
  }
  return out;
}

// ---------------------------------------------------------------------------
// re-association of pair trees into left-nested trees

namespace {

// pair tree (k -> k1 k2, s1 of V1 into k1, s2 of V2 into k2) as a combination
// of left-nested trees of V1 V2 into k
void to_left(const FusionCategory& C, const Word& V1, const Tree& s1, int k1, const Word& V2, const Tree& s2, int k2,
             int k, Complex coef, std::map<Tree, Complex>& out) {
  if (V2.empty()) {
    out[s1] += coef;
    return;
  }
  if (V1.empty()) {
    out[s2] += coef;
    return;
  }
  if (V2.size() == 1) {
    Tree t = s1;
    t.push_back(k);
    out[t] += coef;
    return;
  }
  const int y = V2.back();
  const int bp = s2[s2.size() - 2];
  const Tree s2p(s2.begin(), s2.end() - 1);
  const Word V2p(V2.begin(), V2.end() - 1);
  for (int e = 0; e < C.rank; ++e) {
    if (!C.N(k1, bp, e) || !C.N(e, y, k)) continue;
    const Complex c = C.Finv(k1, bp, y, k, k2, e);
    if (c == Complex(0.0, 0.0)) continue;
    std::map<Tree, Complex> sub;
    to_left(C, V1, s1, k1, V2p, s2p, bp, e, 1.0, sub);
    for (auto& [t, v] : sub) {
      Tree tt = t;
      tt.push_back(k);
      out[tt] += coef * c * v;
    }
  }
}

const PairBasis& pair_basis(const FusionCategory& C, const Word& V1, const Word& V2, int k) {
  auto key = std::make_tuple(V1, V2, k);
  {
    std::lock_guard lock(C.cache().mu);
    auto it = C.cache().pairs.find(key);
    if (it != C.cache().pairs.end()) return it->second;
  }
  PairBasis pb;
  int off = 0;
  for (int k1 = 0; k1 < C.rank; ++k1)
    for (int k2 = 0; k2 < C.rank; ++k2) {
      if (!C.N(k1, k2, k)) continue;
      const int n1 = static_cast<int>(trees(C, V1, k1).size());
      const int n2 = static_cast<int>(trees(C, V2, k2).size());
      if (!n1 || !n2) continue;
      pb.slots.push_back({k1, k2, off, n1, n2});
      off += n1 * n2;
    }
  const Word V = concat(V1, V2);
  const int n = static_cast<int>(trees(C, V, k).size());
  if (n != off) throw Error(ErrorKind::Unsupported, "tree count mismatch (fusion multiplicities are not supported)");
  pb.L = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& s : pb.slots) {
    const auto& T1 = trees(C, V1, s.k1);
    const auto& T2 = trees(C, V2, s.k2);
    for (int a = 0; a < s.n1; ++a)
      for (int b = 0; b < s.n2; ++b) {
        std::map<Tree, Complex> out;
        to_left(C, V1, T1[a], s.k1, V2, T2[b], s.k2, k, 1.0, out);
        for (auto& [t, v] : out) pb.L(tree_index(C, V, k, t), s.offset + a * s.n2 + b) += v;
      }
  }
  pb.Linv = pb.L.inverse();
  std::lock_guard lock(C.cache().mu);
  return C.cache().pairs.emplace(key, std::move(pb)).first->second;
}

}  // namespace

Morphism tensor(const Morphism& f, const Morphism& g) {
  if (&f.category() != &g.category()) throw Error(ErrorKind::Mismatch, "morphisms over different categories");
  const FusionCategory& C = f.category();
  Morphism out = Morphism::zero(C, concat(f.dom(), g.dom()), concat(f.cod(), g.cod()));
  for (int k = 0; k < C.rank; ++k) {
    const auto nc = trees(C, out.cod(), k).size();
    const auto nd = trees(C, out.dom(), k).size();
    if (!nc || !nd) continue;
    const PairBasis& pc = pair_basis(C, f.cod(), g.cod(), k);
    const PairBasis& pd = pair_basis(C, f.dom(), g.dom(), k);
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(nc), static_cast<Eigen::Index>(nd));
    bool any = false;
    for (const auto& sc : pc.slots)
      for (const auto& sd : pd.slots) {
        if (sc.k1 != sd.k1 || sc.k2 != sd.k2) continue;
        auto fi = f.blocks().find(sc.k1);
        auto gi = g.blocks().find(sc.k2);
        if (fi == f.blocks().end() || gi == g.blocks().end()) continue;
        const auto& F = fi->second;
        const auto& G = gi->second;
        for (int a = 0; a < sc.n1; ++a)
          for (int c = 0; c < sd.n1; ++c) {
            const Complex x = F(a, c);
            if (x == Complex(0.0, 0.0)) continue;
            A.block(sc.offset + a * sc.n2, sd.offset + c * sd.n2, sc.n2, sd.n2) = x * G;
            any = true;
          }
      }
    if (any) out.block(k) = pc.L * A * pd.Linv;
  }
  return out;
}

// ---------------------------------------------------------------------------
// duality

Morphism cup(const FusionCategory& C, int a) {
  C.check_index(a);
  Morphism m = Morphism::zero(C, {}, {a, C.dual[a]});
  m.block(0)(0, 0) = 1.0;
  return m;
}

Morphism cap(const FusionCategory& C, int a) {
  C.check_index(a);
  const int ad = C.dual[a];
  Morphism m = Morphism::zero(C, {ad, a}, {});
  m.block(0)(0, 0) = 1.0 / C.F(a, ad, a, a, 0, 0);
  return m;
}

Morphism cap_right(const FusionCategory& C, int a) {
  C.check_index(a);
  Morphism m = Morphism::zero(C, {a, C.dual[a]}, {});
  m.block(0)(0, 0) = C.qdim[a];
  return m;
}

Morphism cup_right(const FusionCategory& C, int a) {
  C.check_index(a);
  const int ad = C.dual[a];
  Morphism m = Morphism::zero(C, {}, {ad, a});
  m.block(0)(0, 0) = 1.0 / (C.qdim[a] * C.Finv(a, ad, a, a, 0, 0));
  return m;
}

Morphism ev_word(const FusionCategory& C, const Word& w) {
  if (w.empty()) return Morphism::identity(C, {});
  const Word u(w.begin() + 1, w.end());
  const Word us = dual_word(C, u);
  Morphism mid = tensor(tensor(Morphism::identity(C, us), cap(C, w[0])), Morphism::identity(C, u));
  return compose(ev_word(C, u), mid);
}

Morphism coev_word(const FusionCategory& C, const Word& w) {
  if (w.empty()) return Morphism::identity(C, {});
  const Word v(w.begin(), w.end() - 1);
  Morphism mid = tensor(tensor(Morphism::identity(C, v), cup(C, w.back())), Morphism::identity(C, dual_word(C, v)));
  return compose(mid, coev_word(C, v));
}

Morphism ev_right_word(const FusionCategory& C, const Word& w) {
  if (w.empty()) return Morphism::identity(C, {});
  const Word v(w.begin(), w.end() - 1);
  Morphism mid =
      tensor(tensor(Morphism::identity(C, v), cap_right(C, w.back())), Morphism::identity(C, dual_word(C, v)));
  return compose(ev_right_word(C, v), mid);
}

Morphism coev_right_word(const FusionCategory& C, const Word& w) {
  if (w.empty()) return Morphism::identity(C, {});
  const Word u(w.begin() + 1, w.end());
  Morphism mid =
      tensor(tensor(Morphism::identity(C, dual_word(C, u)), cup_right(C, w[0])), Morphism::identity(C, u));
  return compose(mid, coev_right_word(C, u));
}

Complex scalar(const Morphism& f) {
  if (!f.dom().empty() || !f.cod().empty()) throw Error(ErrorKind::Mismatch, "scalar() needs an endomorphism of []");
  auto it = f.blocks().find(0);
  return it == f.blocks().end() ? Complex(0.0, 0.0) : it->second(0, 0);
}

Complex trace(const Morphism& f) {
  if (f.dom() != f.cod()) throw Error(ErrorKind::NonEndomorphism, "trace needs dom == cod");
  Complex t = 0.0;
  for (const auto& [k, m] : f.blocks()) t += f.category().qdim[k] * m.trace();
  return t;
}

Complex left_closure(const Morphism& f) {
  if (f.dom() != f.cod()) throw Error(ErrorKind::NonEndomorphism, "closure needs dom == cod");
  const auto& C = f.category();
  const Word ws = dual_word(C, f.dom());
  return scalar(ev_word(C, f.dom()) * tensor(Morphism::identity(C, ws), f) * coev_right_word(C, f.dom()));
}

Complex right_closure(const Morphism& f) {
  if (f.dom() != f.cod()) throw Error(ErrorKind::NonEndomorphism, "closure needs dom == cod");
  const auto& C = f.category();
  const Word ws = dual_word(C, f.dom());
  return scalar(ev_right_word(C, f.dom()) * tensor(f, Morphism::identity(C, ws)) * coev_word(C, f.dom()));
}

std::pair<std::vector<Morphism>, std::vector<Morphism>> dual_bases(const FusionCategory& C, const Word& a, int k) {
  check_word(C, a);
  C.check_index(k);
  std::vector<Morphism> phi, phid;
  const auto& ts = trees(C, a, k);
  for (size_t j = 0; j < ts.size(); ++j) {
    phi.push_back(Morphism::fusing(C, a, k, static_cast<int>(j)));
    phid.push_back((1.0 / C.qdim[k]) * Morphism::splitting(C, a, k, static_cast<int>(j)));
  }
  return {std::move(phi), std::move(phid)};
}

}  // namespace alterfold
