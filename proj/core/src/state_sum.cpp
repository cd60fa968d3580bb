#include "alterfold/state_sum.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <unordered_map>

#include "alterfold/morphism.hpp"

namespace alterfold {

namespace {

using Leg = std::pair<int, int>;  // directed local edge (from, to)
using Legs = std::array<Leg, 3>;

// legs of face f of tet t read counterclockwise w.r.t. the outward orientation
Legs ccw_legs(const Triangulation& tri, int t, int f) {
  std::array<int, 3> v{};
  int n = 0;
  for (int i = 0; i < 4; ++i)
    if (i != f) v[n++] = i;
  const int s = (f % 2 ? -1 : 1) * tri.orientation(t);
  const std::array<int, 3> w = s > 0 ? v : std::array<int, 3>{v[0], v[2], v[1]};
  return {{{w[2], w[0]}, {w[1], w[2]}, {w[0], w[1]}}};
}

Legs rotated(const Legs& l, int k) { return {l[k % 3], l[(k + 1) % 3], l[(k + 2) % 3]}; }

int rotation_to(const Legs& have, const Legs& want) {
  for (int k = 0; k < 3; ++k)
    if (rotated(have, k) == want) return k;
  return -1;
}

// role faces P,Q,R,S are opposite role vertices 0,1,2,3
const std::array<Legs, 4> kRoleLegs{{
    {{{3, 1}, {2, 3}, {1, 2}}},  // P: a f d*
    {{{0, 3}, {2, 0}, {3, 2}}},  // Q: b c f*
    {{{3, 0}, {1, 3}, {0, 1}}},  // R: b* a* e
    {{{0, 2}, {1, 0}, {2, 1}}},  // S: c* e* d
}};

class Model {
 public:
  Model(const FusionCategory& cat, const Triangulation& tri) : C(cat), T(tri) {
    if (!C.finalized()) throw Error(ErrorKind::InvalidParams, "category not finalized");
    if (!C.multiplicity_free()) throw Error(ErrorKind::Unsupported, "state sum needs a multiplicity-free category");
    const int nt = T.size();
    sides.resize(nt);
    for (int fc = 0; fc < T.num_faces(); ++fc) {
      auto [sa, sb] = T.face_sides(fc);
      const Legs la = ccw_legs(T, sa.first, sa.second);
      sides[sa.first][sa.second] = {la, true, sa.first, la};
      const Perm& p = T.glue(sa.first, sa.second).perm;
      Legs lb{};
      for (int i = 0; i < 3; ++i) {
        const Leg& x = la[2 - i];
        lb[i] = {p[x.second], p[x.first]};
      }
      if (rotation_to(ccw_legs(T, sb.first, sb.second), lb) < 0)
        throw Error(ErrorKind::Inconsistent, "face gluing does not reverse orientation");
      sides[sb.first][sb.second] = {lb, false, sa.first, la};
    }
    // role assignment per tet
    roles.resize(nt);
    Perm pi{0, 1, 2, 3};
    std::vector<Perm> perms;
    do perms.push_back(pi);
    while (std::next_permutation(pi.begin(), pi.end()));
    for (int t = 0; t < nt; ++t) {
      bool found = false;
      for (const Perm& q : perms) {
        std::array<Role, 4> r{};
        bool ok = true;
        for (int x = 0; x < 4 && ok; ++x) {
          const int f = q[x];
          Legs want{};
          for (int i = 0; i < 3; ++i) want[i] = {q[kRoleLegs[x][i].first], q[kRoleLegs[x][i].second]};
          const int k = rotation_to(sides[t][f].legs, want);
          ok = k >= 0;
          r[x] = {f, k};
        }
        if (ok) {
          roles[t] = r;
          found = true;
          break;
        }
      }
      if (!found) throw Error(ErrorKind::Inconsistent, "no role assignment for tetrahedron");
    }
    // face admissibility data: edge class + direction of each A-side leg
    face_legs.resize(T.num_faces());
    for (int fc = 0; fc < T.num_faces(); ++fc) {
      auto [sa, sb] = T.face_sides(fc);
      for (int i = 0; i < 3; ++i) face_legs[fc][i] = leg_class(sa.first, sides[sa.first][sa.second].legs[i]);
    }
  }

  // (edge class, forward?) of a directed local edge
  std::pair<int, bool> leg_class(int t, const Leg& l) const {
    const int e = local_edge(l.first, l.second);
    return {T.edge(t, e), (l.first < l.second) == (T.edge_dir(t, e) > 0)};
  }

  int color(int t, const Leg& l, const Coloring& c) const {
    auto [E, fwd] = leg_class(t, l);
    return fwd ? c[E] : C.dual[c[E]];
  }

  Word word(int t, const Legs& L, const Coloring& c) const {
    return {color(t, L[0], c), color(t, L[1], c), color(t, L[2], c)};
  }

  bool face_ok(int fc, const Coloring& c) const {
    const auto& fl = face_legs[fc];
    int x[3];
    for (int i = 0; i < 3; ++i) x[i] = fl[i].second ? c[fl[i].first] : C.dual[c[fl[i].first]];
    return C.N(x[0], x[1], C.dual[x[2]]) > 0;
  }

  Morphism canonical(const Word& w) const {
    Morphism m = Morphism::zero(C, {}, w);
    m.block(0)(0, 0) = 1.0;
    return m;
  }

  // A leg label x is either the edge colour c read along the edge's
  // canonical direction (fwd) or its dual. Caps and cups joining the two
  // ends of one strand must follow that direction, not just the label.
  Morphism strand_cap(int x, bool fwd) const {  // [x, x*] -> []
    return fwd ? cap_right(C, x) : cap(C, C.dual[x]);
  }
  Morphism strand_cup(int x, bool fwd) const {  // [] -> [x, x*]
    return fwd ? cup(C, x) : cup_right(C, C.dual[x]);
  }

  std::array<bool, 3> flags(int t, const Legs& L) const {
    return {leg_class(t, L[0]).second, leg_class(t, L[1]).second, leg_class(t, L[2]).second};
  }

  // hom(1, l1 l2 l3) -> hom(1, l2 l3 l1)
  Morphism rot(const Morphism& v, bool fwd1) const {
    const Word& w = v.cod();
    const int l1 = w[0], l1s = C.dual[l1];
    const Word rest{w[1], w[2], w[0]};
    auto mid = tensor(tensor(Morphism::identity(C, {l1s}), v), Morphism::identity(C, {l1}));
    return compose(tensor(strand_cap(l1s, !fwd1), Morphism::identity(C, rest)),
                   compose(mid, strand_cup(l1s, !fwd1)));
  }

  // [x1..xn, xn*..x1*] -> [] with strand-aware caps
  Morphism nested_cap(const Word& x, const std::array<bool, 3>& fw) const {
    Morphism ev = Morphism::identity(C, {});
    for (int i = static_cast<int>(x.size()) - 1; i >= 0; --i) {
      const Word left(x.begin(), x.begin() + i);
      const Word right = dual_word(C, left);
      Morphism layer = tensor(tensor(Morphism::identity(C, left), strand_cap(x[i], fw[i])), Morphism::identity(C, right));
      ev = i == static_cast<int>(x.size()) - 1 ? layer : compose(layer, ev);
      if (i == static_cast<int>(x.size()) - 1) continue;
    }
    return ev;
  }

  Morphism face_vector(int t, int f, const Coloring& c) const {
    const Side& s = sides[t][f];
    const Word w = word(t, s.legs, c);
    if (s.is_a) return canonical(w);
    const Word wa = word(s.at, s.a_legs, c);
    Morphism vb = canonical(w);
    const Complex pairing = scalar(compose(nested_cap(wa, flags(s.at, s.a_legs)), tensor(canonical(wa), vb)));
    return (1.0 / pairing) * vb;
  }

  Complex weight(int t, const Coloring& c) const {
    std::array<Morphism, 4> u;
    std::array<std::array<bool, 3>, 4> fl;
    for (int x = 0; x < 4; ++x) {
      const Side& s = sides[t][roles[t][x].face];
      u[x] = face_vector(t, roles[t][x].face, c);
      for (int k = 0; k < roles[t][x].rot; ++k) u[x] = rot(u[x], leg_class(t, s.legs[k]).second);
      fl[x] = flags(t, rotated(s.legs, roles[t][x].rot));
    }
    const int a = u[0].cod()[0], f = u[0].cod()[1], d = C.dual[u[0].cod()[2]];
    const int b = u[1].cod()[0], cc = u[1].cod()[1];
    const int e = u[2].cod()[2];
    auto id = [&](const Word& w) { return Morphism::identity(C, w); };
    const int as = C.dual[a], es = C.dual[e];
    // P: [d] -> [a f], Q: [f] -> [b c], R: [a b] -> [e], S: [e c] -> [d]
    Morphism P = compose(tensor(id({a, f}), strand_cap(C.dual[d], fl[0][2])), tensor(u[0], id({d})));
    Morphism Q = compose(tensor(id({b, cc}), strand_cap(C.dual[f], fl[1][2])), tensor(u[1], id({f})));
    Morphism R = compose(tensor(strand_cap(a, fl[0][0]), id({e})),
                         compose(tensor(tensor(id({a}), strand_cap(b, fl[1][0])), id({as, e})), tensor(id({a, b}), u[2])));
    Morphism S = compose(tensor(strand_cap(e, fl[2][2]), id({d})),
                         compose(tensor(tensor(id({e}), strand_cap(cc, fl[1][1])), id({es, d})), tensor(id({e, cc}), u[3])));
    return trace(S * tensor(R, id({cc})) * tensor(id({a}), Q) * P);
  }

  const FusionCategory& C;
  const Triangulation& T;
  struct Side {
    Legs legs;
    bool is_a;
    int at;
    Legs a_legs;
  };
  struct Role {
    int face, rot;
  };
  std::vector<std::array<Side, 4>> sides;
  std::vector<std::array<Role, 4>> roles;
  std::vector<std::array<std::pair<int, bool>, 3>> face_legs;
};

// greedy elimination order: next edge closes the most faces, then touches the most
struct Plan {
  std::vector<int> order;
  std::vector<std::vector<int>> faces_done, tets_done;  // per step
};

Plan make_plan(const Triangulation& T, const Model& M) {
  const int E = T.num_edges(), F = T.num_faces();
  std::vector<std::vector<int>> face_edges(F), tet_edges(T.size());
  for (int fc = 0; fc < F; ++fc)
    for (auto& [e, fwd] : M.face_legs[fc]) face_edges[fc].push_back(e);
  for (int t = 0; t < T.size(); ++t)
    for (int e = 0; e < 6; ++e) tet_edges[t].push_back(T.edge(t, e));
  std::vector<int> pos(E, -1);
  Plan plan;
  for (int step = 0; step < E; ++step) {
    int best = -1;
    std::pair<int, int> score{-1, -1};
    for (int e = 0; e < E; ++e) {
      if (pos[e] >= 0) continue;
      int closes = 0, touches = 0;
      for (int fc = 0; fc < F; ++fc) {
        const auto& fe = face_edges[fc];
        if (std::find(fe.begin(), fe.end(), e) == fe.end()) continue;
        ++touches;
        bool all = true;
        for (int x : fe) all = all && (x == e || pos[x] >= 0);
        closes += all;
      }
      if (std::make_pair(closes, touches) > score) {
        score = {closes, touches};
        best = e;
      }
    }
    pos[best] = step;
    plan.order.push_back(best);
  }
  plan.faces_done.resize(E);
  plan.tets_done.resize(E);
  auto last = [&](const std::vector<int>& es) {
    int m = 0;
    for (int x : es) m = std::max(m, pos[x]);
    return m;
  };
  for (int fc = 0; fc < F; ++fc) plan.faces_done[last(face_edges[fc])].push_back(fc);
  for (int t = 0; t < T.size(); ++t) plan.tets_done[last(tet_edges[t])].push_back(t);
  return plan;
}

struct Search {
  const Model& M;
  const Plan& plan;
  bool weighted;
  std::unordered_map<std::uint64_t, Complex> cache;
  Coloring col;
  Complex sum{0.0, 0.0};
  std::uint64_t count = 0;

  Complex tet(int t) {
    const int r = M.C.rank;
    std::uint64_t key = static_cast<std::uint64_t>(t);
    for (int e = 0; e < 6; ++e) key = key * r + col[M.T.edge(t, e)];
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const Complex w = M.weight(t, col);
    cache.emplace(key, w);
    return w;
  }

  void run(size_t step, Complex partial) {
    if (step == plan.order.size()) {
      sum += partial;
      ++count;
      return;
    }
    const int e = plan.order[step];
    for (int x = 0; x < M.C.rank; ++x) {
      col[e] = x;
      descend(step, x, partial);
    }
    col[e] = 0;
  }

  bool descend(size_t step, int x, Complex partial) {
    for (int fc : plan.faces_done[step])
      if (!M.face_ok(fc, col)) return false;
    if (weighted) {
      partial *= M.C.qdim[x];
      for (int t : plan.tets_done[step]) partial *= tet(t);
      if (partial == Complex(0.0, 0.0)) return false;
    }
    run(step + 1, partial);
    return true;
  }
};

struct Totals {
  Complex sum{0.0, 0.0};
  std::uint64_t count = 0;
};

Totals enumerate(const FusionCategory& C, const Triangulation& T, bool weighted, int workers) {
  Model M(C, T);
  Plan plan = make_plan(T, M);
  const int E = T.num_edges();
  const int depth = std::min(E, 2);
  int branches = 1;
  for (int i = 0; i < depth; ++i) branches *= C.rank;
  std::vector<Totals> out(branches);
  std::atomic<int> next{0};
  auto work = [&] {
    Search s{M, plan, weighted, {}, Coloring(E, 0)};
    for (int b = next++; b < branches; b = next++) {
      s.sum = 0.0;
      s.count = 0;
      // decode the prefix and walk it with the usual checks
      int code = b;
      std::vector<int> prefix(depth);
      for (int i = depth - 1; i >= 0; --i) {
        prefix[i] = code % C.rank;
        code /= C.rank;
      }
      if (depth == 0) {
        s.run(0, 1.0);
      } else {
        // manual prefix descent
        Complex partial = 1.0;
        bool alive = true;
        for (int step = 0; step < depth && alive; ++step) {
          s.col[plan.order[step]] = prefix[step];
          for (int fc : plan.faces_done[step])
            if (!M.face_ok(fc, s.col)) alive = false;
          if (alive && weighted) {
            partial *= C.qdim[prefix[step]];
            for (int t : plan.tets_done[step]) partial *= s.tet(t);
            if (partial == Complex(0.0, 0.0)) alive = false;
          }
        }
        if (alive) s.run(depth, partial);
      }
      out[b] = {s.sum, s.count};
    }
  };
  const int nw = std::max(1, std::min(workers, branches));
  if (nw == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nw; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  Totals tot;
  for (const auto& o : out) {
    tot.sum += o.sum;
    tot.count += o.count;
  }
  return tot;
}

}  // namespace

bool coloring_admissible(const FusionCategory& cat, const Triangulation& tri, const Coloring& c) {
  Model M(cat, tri);
  if (static_cast<int>(c.size()) != tri.num_edges()) throw Error(ErrorKind::Index, "coloring size");
  for (int x : c) cat.check_index(x);
  for (int fc = 0; fc < tri.num_faces(); ++fc)
    if (!M.face_ok(fc, c)) return false;
  return true;
}

std::uint64_t count_admissible(const FusionCategory& cat, const Triangulation& tri) {
  return enumerate(cat, tri, false, 1).count;
}

Complex tet_weight(const FusionCategory& cat, const Triangulation& tri, int tet, const Coloring& c) {
  if (tet < 0 || tet >= tri.size()) throw Error(ErrorKind::Index, "tet out of range");
  if (!coloring_admissible(cat, tri, c)) throw Error(ErrorKind::Mismatch, "inadmissible coloring");
  Model M(cat, tri);
  return M.weight(tet, c);
}

Complex tv_invariant(const FusionCategory& cat, const Triangulation& tri, const StateSumConfig& cfg) {
  if (cfg.zeta == Complex(0.0, 0.0)) throw Error(ErrorKind::InvalidParams, "zeta must be nonzero");
  const Totals tot = enumerate(cat, tri, true, cfg.workers);
  const int chi = tri.inner_vertices() - tri.num_edges() + tri.num_faces() - tri.size();
  return tot.sum * std::pow(cat.global_dim, -tri.inner_vertices()) * std::pow(cfg.zeta, -chi);
}

}  // namespace alterfold
