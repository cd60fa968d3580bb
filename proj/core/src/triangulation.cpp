#include "alterfold/triangulation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace alterfold {

int local_edge(int i, int j) {
  if (i > j) std::swap(i, j);
  for (int e = 0; e < 6; ++e)
    if (kEdge[e][0] == i && kEdge[e][1] == j) return e;
  throw Error(ErrorKind::Index, "not an edge");
}

int perm_sign(const Perm& p) {
  int s = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

Perm perm_inverse(const Perm& p) {
  Perm q{};
  for (int i = 0; i < 4; ++i) q[p[i]] = i;
  return q;
}

namespace {

struct UF {
  std::vector<int> up, par;  // par: parity to parent
  explicit UF(int n) : up(n), par(n, 0) { std::iota(up.begin(), up.end(), 0); }
  std::pair<int, int> find(int x) {
    int p = 0;
    int r = x;
    while (up[r] != r) {
      p ^= par[r];
      r = up[r];
    }
    // compress
    int q = p;
    while (up[x] != x) {
      int nx = up[x], np = q ^ par[x];
      up[x] = r;
      par[x] = q;
      x = nx;
      q = np;
    }
    return {r, p};
  }
  // returns false on parity conflict
  bool unite(int a, int b, int parity = 0) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == parity;
    up[rb] = ra;
    par[rb] = pa ^ pb ^ parity;
    return true;
  }
};

bool is_perm(const Perm& p) {
  std::array<bool, 4> seen{};
  for (int x : p) {
    if (x < 0 || x > 3 || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

}  // namespace

Triangulation::Triangulation(int tets, std::vector<std::array<Gluing, 4>> gluings, const std::vector<int>* hint)
    : tets_(tets), gl_(std::move(gluings)) {
  if (tets_ <= 0) throw Error(ErrorKind::Parse, "triangulation needs at least one tetrahedron");
  if (static_cast<int>(gl_.size()) != tets_) throw Error(ErrorKind::Index, "gluing table size");
  for (int t = 0; t < tets_; ++t)
    for (int f = 0; f < 4; ++f) {
      const Gluing& g = gl_[t][f];
      if (g.tet < 0) throw Error(ErrorKind::Unglued, "face " + std::to_string(f) + " of tet " + std::to_string(t));
      if (g.tet >= tets_ || g.face < 0 || g.face > 3 || !is_perm(g.perm) || g.perm[f] != g.face)
        throw Error(ErrorKind::Index, "bad gluing at tet " + std::to_string(t));
      if (g.tet == t && g.face == f) throw Error(ErrorKind::NonInvolutive, "face glued to itself");
      const Gluing& back = gl_[g.tet][g.face];
      if (back.tet != t || back.face != f || back.perm != perm_inverse(g.perm))
        throw Error(ErrorKind::NonInvolutive, "gluings of tet " + std::to_string(t) + " are not mutually inverse");
    }

  UF vu(4 * tets_), eu(6 * tets_), fu(4 * tets_), lu(16 * tets_);
  for (int t = 0; t < tets_; ++t)
    for (int f = 0; f < 4; ++f) {
      const Gluing& g = gl_[t][f];
      fu.unite(4 * t + f, 4 * g.tet + g.face);
      for (int i = 0; i < 4; ++i) {
        if (i == f) continue;
        vu.unite(4 * t + i, 4 * g.tet + g.perm[i]);
        for (int j = 0; j < 4; ++j)
          if (j != f && j != i) lu.unite(16 * t + 4 * i + j, 16 * g.tet + 4 * g.perm[i] + g.perm[j]);
      }
      for (int e = 0; e < 6; ++e) {
        const int i = kEdge[e][0], j = kEdge[e][1];
        if (i == f || j == f) continue;
        const int pi = g.perm[i], pj = g.perm[j];
        if (!eu.unite(6 * t + e, 6 * g.tet + local_edge(pi, pj), pi > pj ? 1 : 0))
          throw Error(ErrorKind::Inconsistent, "edge identified with itself reversed");
      }
    }

  auto number = [](UF& u, int n, std::vector<int>& out) {
    std::map<int, int> id;
    out.resize(n);
    for (int x = 0; x < n; ++x) {
      int r = u.find(x).first;
      auto it = id.find(r);
      if (it == id.end()) it = id.emplace(r, static_cast<int>(id.size())).first;
      out[x] = it->second;
    }
    return static_cast<int>(id.size());
  };
  nv_ = number(vu, 4 * tets_, vert_);
  ne_ = number(eu, 6 * tets_, edge_);
  nf_ = number(fu, 4 * tets_, face_);

  // canonical edge direction: lowest (tet, edge) member read low->high
  std::vector<int> ref(ne_, -1);
  edeg_.assign(ne_, 0);
  edir_.resize(6 * tets_);
  for (int x = 0; x < 6 * tets_; ++x) {
    ++edeg_[edge_[x]];
    const int p = eu.find(x).second;
    if (ref[edge_[x]] < 0) ref[edge_[x]] = p;
    edir_[x] = (p == ref[edge_[x]]) ? 1 : -1;
  }

  fsides_.assign(nf_, {std::make_pair(-1, -1), std::make_pair(-1, -1)});
  for (int t = 0; t < tets_; ++t)
    for (int f = 0; f < 4; ++f) {
      auto& s = fsides_[face_[4 * t + f]];
      if (s[0].first < 0)
        s[0] = {t, f};
      else
        s[1] = {t, f};
    }

  // orientation: s(t') = -sgn(perm) s(t)
  orient_.assign(tets_, 0);
  for (int seed = 0; seed < tets_; ++seed) {
    if (orient_[seed]) continue;
    orient_[seed] = (hint && (*hint)[seed] < 0) ? -1 : 1;
    std::deque<int> q{seed};
    while (!q.empty()) {
      const int t = q.front();
      q.pop_front();
      for (int f = 0; f < 4; ++f) {
        const Gluing& g = gl_[t][f];
        const int want = -perm_sign(g.perm) * orient_[t];
        if (!orient_[g.tet]) {
          orient_[g.tet] = want;
          q.push_back(g.tet);
        } else if (orient_[g.tet] != want) {
          throw Error(ErrorKind::NonOrientable, "triangulation is not orientable");
        }
      }
    }
  }

  // vertex links: triangles are corners, link vertices are classes of edge ends
  std::vector<int> corners(nv_, 0);
  std::vector<std::set<int>> ends(nv_);
  for (int t = 0; t < tets_; ++t)
    for (int i = 0; i < 4; ++i) {
      const int v = vert_[4 * t + i];
      ++corners[v];
      for (int j = 0; j < 4; ++j)
        if (j != i) ends[v].insert(lu.find(16 * t + 4 * i + j).first);
    }
  vinfo_.resize(nv_);
  for (int v = 0; v < nv_; ++v) {
    vinfo_[v].link_euler = static_cast<int>(ends[v].size()) - corners[v] / 2;
    vinfo_[v].inner = vinfo_[v].link_euler == 2;
  }
}

int Triangulation::inner_vertices() const {
  return static_cast<int>(std::count_if(vinfo_.begin(), vinfo_.end(), [](const VertexInfo& v) { return v.inner; }));
}

std::vector<VertexInfo> classify_vertices(const Triangulation& tri) { return tri.vertices(); }

// ---------------------------------------------------------------------------
// text format

Triangulation parse_triangulation(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1, lineno = 0;
  std::vector<std::array<Gluing, 4>> gl;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": " + why);
  };
  auto set = [&](int t, int f, const Gluing& g) {
    Gluing& slot = gl[t][f];
    if (slot.tet >= 0 && (slot.tet != g.tet || slot.face != g.face || slot.perm != g.perm))
      throw Error(ErrorKind::NonInvolutive, "conflicting gluings for tet " + std::to_string(t) + " face " +
                                                std::to_string(f));
    slot = g;
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "tets") {
      if (n >= 0) fail("duplicate tets line");
      if (!(ls >> n) || n <= 0) fail("expected positive tetrahedron count");
      gl.assign(n, {});
      for (auto& a : gl)
        for (auto& g : a) g.tet = -1;
    } else if (kw == "glue") {
      if (n < 0) fail("glue before tets");
      int t, f, t2, f2;
      Perm p;
      if (!(ls >> t >> f >> t2 >> f2 >> p[0] >> p[1] >> p[2] >> p[3])) fail("expected glue t f t' f' p0 p1 p2 p3");
      if (t < 0 || t >= n || t2 < 0 || t2 >= n || f < 0 || f > 3 || f2 < 0 || f2 > 3)
        throw Error(ErrorKind::Index, "line " + std::to_string(lineno) + ": index out of range");
      if (!is_perm(p)) fail("not a permutation");
      if (p[f] != f2) fail("perm must carry face to face'");
      set(t, f, {t2, f2, p});
      set(t2, f2, {t, f, perm_inverse(p)});
    } else {
      fail("unknown keyword '" + kw + "'");
    }
    std::string extra;
    if (ls >> extra) fail("trailing tokens");
  }
  if (n < 0) throw Error(ErrorKind::Parse, "missing tets line");
  return Triangulation(n, std::move(gl));
}

std::string serialize_triangulation(const Triangulation& tri) {
  std::ostringstream out;
  out << "tets " << tri.size() << "\n";
  for (int t = 0; t < tri.size(); ++t)
    for (int f = 0; f < 4; ++f) {
      const Gluing& g = tri.glue(t, f);
      if (std::make_pair(g.tet, g.face) < std::make_pair(t, f)) continue;
      out << "glue " << t << ' ' << f << ' ' << g.tet << ' ' << g.face;
      for (int x : g.perm) out << ' ' << x;
      out << "\n";
    }
  return out.str();
}

// ---------------------------------------------------------------------------
// Pachner moves
//
// A move removes a set of tets whose local vertices are labelled by "star"
// ids 0..4 and inserts new tets given directly in star ids. Outer faces are
// matched through their star-id triples.

namespace {

using Vec3 = std::array<double, 3>;

double det3(const Vec3& a, const Vec3& b, const Vec3& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

int geo_sign(const std::array<Vec3, 5>& pos, const std::array<int, 4>& v) {
  Vec3 a, b, c;
  for (int k = 0; k < 3; ++k) {
    a[k] = pos[v[1]][k] - pos[v[0]][k];
    b[k] = pos[v[2]][k] - pos[v[0]][k];
    c[k] = pos[v[3]][k] - pos[v[0]][k];
  }
  const double d = det3(a, b, c);
  if (std::abs(d) < 1e-9) throw Error(ErrorKind::Inconsistent, "degenerate star geometry");
  return d > 0 ? 1 : -1;
}

using FaceKey = std::array<int, 3>;

FaceKey face_key(const std::array<int, 4>& star, int f) {
  FaceKey k{};
  int n = 0;
  for (int i = 0; i < 4; ++i)
    if (i != f) k[n++] = star[i];
  std::sort(k.begin(), k.end());
  return k;
}

Triangulation retriangulate(const Triangulation& tri, const std::vector<int>& old_tets,
                            const std::vector<std::array<int, 4>>& old_star,
                            const std::vector<std::array<int, 4>>& new_tets, const std::array<Vec3, 5>& pos) {
  const int T = tri.size();
  std::vector<int> old_slot(T, -1);
  for (size_t k = 0; k < old_tets.size(); ++k) {
    if (old_slot[old_tets[k]] >= 0) throw Error(ErrorKind::Inapplicable, "move needs distinct tetrahedra");
    old_slot[old_tets[k]] = static_cast<int>(k);
  }

  // orientation constant c with orient(t) = c * geometric sign
  int c = 0;
  for (size_t k = 0; k < old_tets.size(); ++k) {
    const int ck = tri.orientation(old_tets[k]) * geo_sign(pos, old_star[k]);
    if (c == 0)
      c = ck;
    else if (c != ck)
      throw Error(ErrorKind::Inconsistent, "star labelling inconsistent with orientation");
  }

  // new numbering: survivors keep their order, new tets appended
  std::vector<int> renum(T, -1);
  int nt = 0;
  for (int t = 0; t < T; ++t)
    if (old_slot[t] < 0) renum[t] = nt++;
  const int first_new = nt;
  const int total = nt + static_cast<int>(new_tets.size());

  std::vector<std::array<Gluing, 4>> gl(total);
  std::vector<int> orient(total, 1);
  for (int t = 0; t < T; ++t) {
    if (old_slot[t] >= 0) continue;
    orient[renum[t]] = tri.orientation(t);
    for (int f = 0; f < 4; ++f) {
      Gluing g = tri.glue(t, f);
      if (old_slot[g.tet] < 0) {
        g.tet = renum[g.tet];
        gl[renum[t]][f] = g;
      }
    }
  }

  // internal faces among new tets, and the outer-face lookup
  std::map<FaceKey, std::vector<std::pair<int, int>>> new_faces;
  for (size_t k = 0; k < new_tets.size(); ++k) {
    orient[first_new + k] = c * geo_sign(pos, new_tets[k]);
    for (int f = 0; f < 4; ++f) new_faces[face_key(new_tets[k], f)].push_back({static_cast<int>(k), f});
  }
  std::map<FaceKey, std::pair<int, int>> old_outer;
  for (size_t k = 0; k < old_tets.size(); ++k)
    for (int f = 0; f < 4; ++f) {
      const Gluing& g = tri.glue(old_tets[k], f);
      const FaceKey key = face_key(old_star[k], f);
      const bool internal = old_slot[g.tet] >= 0 && face_key(old_star[old_slot[g.tet]], g.face) == key;
      if (internal) continue;
      if (!old_outer.emplace(key, std::make_pair(static_cast<int>(k), f)).second)
        throw Error(ErrorKind::Inapplicable, "outer faces not distinguishable");
    }

  // local vertex of new tet k carrying star id s
  auto local_of = [](const std::array<int, 4>& st, int s) {
    for (int i = 0; i < 4; ++i)
      if (st[i] == s) return i;
    return -1;
  };

  for (auto& [key, users] : new_faces) {
    if (users.size() == 2) {
      auto [k1, f1] = users[0];
      auto [k2, f2] = users[1];
      Perm p{};
      for (int i = 0; i < 4; ++i) p[i] = i == f1 ? f2 : local_of(new_tets[k2], new_tets[k1][i]);
      gl[first_new + k1][f1] = {first_new + k2, f2, p};
      gl[first_new + k2][f2] = {first_new + k1, f1, perm_inverse(p)};
      continue;
    }
    if (users.size() != 1) throw Error(ErrorKind::Inconsistent, "bad star complex");
    auto it = old_outer.find(key);
    if (it == old_outer.end()) throw Error(ErrorKind::Inconsistent, "unmatched outer face");
    auto [k, f] = users[0];
    auto [ok, of] = it->second;
    const int ot = old_tets[ok];
    const Gluing& g = tri.glue(ot, of);
    // new local i -> star -> old local -> partner local
    Perm p{};
    for (int i = 0; i < 4; ++i) {
      if (i == f) {
        p[i] = g.face;
        continue;
      }
      p[i] = g.perm[local_of(old_star[ok], new_tets[k][i])];
    }
    if (old_slot[g.tet] < 0) {
      gl[first_new + k][f] = {renum[g.tet], g.face, p};
      gl[renum[g.tet]][g.face] = {first_new + k, f, perm_inverse(p)};
    } else {
      // partner is another outer face of the removed region
      const int ok2 = old_slot[g.tet];
      const FaceKey key2 = face_key(old_star[ok2], g.face);
      const auto& users2 = new_faces.at(key2);
      auto [k2, f2] = users2[0];
      Perm q{};
      for (int i = 0; i < 4; ++i) {
        if (i == f) {
          q[i] = f2;
          continue;
        }
        q[i] = local_of(new_tets[k2], old_star[ok2][p[i]]);
      }
      gl[first_new + k][f] = {first_new + k2, f2, q};
    }
  }
  return Triangulation(total, std::move(gl), &orient);
}

// regular tetrahedron corners and centroid
const std::array<Vec3, 5> kSimplexPos{{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}, {0, 0, 0}}};
// shared triangle 0,1,2 with apexes 3 above and 4 below
const std::array<Vec3, 5> kBipyramidPos{{{1, 0, 0}, {-0.5, 0.8660254, 0}, {-0.5, -0.8660254, 0}, {0, 0, 1}, {0, 0, -1}}};
// axis 0 (top) - 1 (bottom) with ring 2,3,4
const std::array<Vec3, 5> kRingPos{{{0, 0, 1}, {0, 0, -1}, {1, 0, 0}, {-0.5, 0.8660254, 0}, {-0.5, -0.8660254, 0}}};

}  // namespace

Triangulation pachner_23(const Triangulation& tri, int fc) {
  if (fc < 0 || fc >= tri.num_faces()) throw Error(ErrorKind::Index, "face class out of range");
  auto [s0, s1] = tri.face_sides(fc);
  const int t0 = s0.first, f0 = s0.second;
  const Gluing& g = tri.glue(t0, f0);
  if (g.tet == t0) throw Error(ErrorKind::Inapplicable, "2-3 move needs two distinct tetrahedra");
  std::array<int, 4> st0{}, st1{};
  int n = 0;
  for (int i = 0; i < 4; ++i) {
    if (i == f0) continue;
    st0[i] = n;
    st1[g.perm[i]] = n;
    ++n;
  }
  st0[f0] = 3;
  st1[g.face] = 4;
  return retriangulate(tri, {t0, g.tet}, {st0, st1}, {{0, 1, 3, 4}, {1, 2, 3, 4}, {2, 0, 3, 4}}, kBipyramidPos);
}

Triangulation pachner_32(const Triangulation& tri, int ec) {
  if (ec < 0 || ec >= tri.num_edges()) throw Error(ErrorKind::Index, "edge class out of range");
  if (tri.edge_degree(ec) != 3) throw Error(ErrorKind::Inapplicable, "3-2 move needs an edge of degree 3");
  int ta = -1, ea = -1;
  for (int t = 0; t < tri.size() && ta < 0; ++t)
    for (int e = 0; e < 6; ++e)
      if (tri.edge(t, e) == ec) {
        ta = t;
        ea = e;
        break;
      }
  // walk around the edge: A = (0,1,2,3), B via A's face opposite star 2, C via B's face opposite star 3
  std::array<int, 4> sa{};
  const int i = kEdge[ea][0], j = kEdge[ea][1];
  int k = -1, l = -1;
  for (int x = 0; x < 4; ++x)
    if (x != i && x != j) (k < 0 ? k : l) = x;
  sa[i] = 0;
  sa[j] = 1;
  sa[k] = 2;
  sa[l] = 3;
  auto step = [](const std::array<int, 4>& st, const Gluing& g, int fresh) {
    std::array<int, 4> out{-1, -1, -1, -1};
    for (int x = 0; x < 4; ++x) out[g.perm[x]] = st[x];
    out[g.face] = fresh;
    return out;
  };
  const Gluing& gab = tri.glue(ta, k);
  std::array<int, 4> sb = step(sa, gab, 4);
  int fb = -1;
  for (int x = 0; x < 4; ++x)
    if (sb[x] == 3) fb = x;
  const Gluing& gbc = tri.glue(gab.tet, fb);
  std::array<int, 4> sc = step(sb, gbc, 2);
  // closing face of C must meet A's face opposite star 3 with matching labels
  int fc = -1;
  for (int x = 0; x < 4; ++x)
    if (sc[x] == 4) fc = x;
  const Gluing& gca = tri.glue(gbc.tet, fc);
  if (gca.tet != ta || gca.face != l) throw Error(ErrorKind::Inapplicable, "edge star is not a 3-cycle");
  for (int x = 0; x < 4; ++x)
    if (x != fc && sa[gca.perm[x]] != sc[x]) throw Error(ErrorKind::Inapplicable, "edge star is not a 3-cycle");
  return retriangulate(tri, {ta, gab.tet, gbc.tet}, {sa, sb, sc}, {{0, 2, 3, 4}, {1, 2, 3, 4}}, kRingPos);
}

Triangulation pachner_14(const Triangulation& tri, int tet) {
  if (tet < 0 || tet >= tri.size()) throw Error(ErrorKind::Index, "tet out of range");
  return retriangulate(tri, {tet}, {{0, 1, 2, 3}}, {{4, 1, 2, 3}, {0, 4, 2, 3}, {0, 1, 4, 3}, {0, 1, 2, 4}},
                       kSimplexPos);
}

Triangulation pachner_41(const Triangulation& tri, int vc) {
  if (vc < 0 || vc >= tri.num_vertices()) throw Error(ErrorKind::Index, "vertex class out of range");
  std::vector<std::pair<int, int>> corners;
  for (int t = 0; t < tri.size(); ++t)
    for (int i = 0; i < 4; ++i)
      if (tri.vertex(t, i) == vc) corners.push_back({t, i});
  if (corners.size() != 4) throw Error(ErrorKind::Inapplicable, "4-1 move needs a vertex of degree 4");
  // label by BFS across faces through the vertex; star id 4 is the vertex
  std::map<int, std::array<int, 4>> star;
  std::array<int, 4> s0{};
  {
    auto [t, c] = corners[0];
    int n = 0;
    for (int x = 0; x < 4; ++x) s0[x] = x == c ? 4 : n++;
    star[t] = s0;
  }
  std::deque<int> q{corners[0].first};
  while (!q.empty()) {
    const int t = q.front();
    q.pop_front();
    const auto st = star[t];
    std::set<int> have(st.begin(), st.end());
    for (int f = 0; f < 4; ++f) {
      if (st[f] == 4) continue;  // outer face
      const Gluing& g = tri.glue(t, f);
      std::array<int, 4> s2{};
      for (int x = 0; x < 4; ++x) s2[g.perm[x]] = st[x];
      // the vertex opposite gets the star id missing from this tet
      int missing = -1;
      for (int m = 0; m < 4; ++m)
        if (!have.count(m)) missing = m;
      s2[g.face] = missing;
      auto it = star.find(g.tet);
      if (it == star.end()) {
        star[g.tet] = s2;
        q.push_back(g.tet);
      } else if (it->second != s2) {
        throw Error(ErrorKind::Inapplicable, "vertex link is not a tetrahedron boundary");
      }
    }
  }
  if (star.size() != 4) throw Error(ErrorKind::Inapplicable, "4-1 move needs four distinct tetrahedra");
  std::vector<int> olds;
  std::vector<std::array<int, 4>> stars;
  for (auto& [t, s] : star) {
    olds.push_back(t);
    stars.push_back(s);
  }
  return retriangulate(tri, olds, stars, {{0, 1, 2, 3}}, kSimplexPos);
}

Triangulation random_moves(const Triangulation& tri, std::mt19937_64& rng, int count, std::vector<MoveRecord>* log,
                           int slack) {
  Triangulation cur = tri;
  const int t0 = tri.size();
  int done = 0, attempts = 0;
  while (done < count) {
    if (++attempts > 200 * (count + 1)) throw Error(ErrorKind::Inapplicable, "no applicable moves found");
    std::vector<MoveRecord> options;
    const int T = cur.size();
    if (T + 1 <= t0 + slack)
      for (int f = 0; f < cur.num_faces(); ++f) options.push_back({Move::P23, f});
    if (T + 3 <= t0 + slack)
      for (int t = 0; t < T; ++t) options.push_back({Move::P14, t});
    for (int e = 0; e < cur.num_edges(); ++e)
      if (cur.edge_degree(e) == 3) options.push_back({Move::P32, e});
    for (int v = 0; v < cur.num_vertices(); ++v) {
      int deg = 0;
      for (int t = 0; t < T; ++t)
        for (int i = 0; i < 4; ++i) deg += cur.vertex(t, i) == v;
      if (deg == 4 && cur.num_vertices() > 1) options.push_back({Move::P41, v});
    }
    if (options.empty()) {
      // fall back to growing
      for (int f = 0; f < cur.num_faces(); ++f) options.push_back({Move::P23, f});
    }
    const MoveRecord m = options[std::uniform_int_distribution<size_t>(0, options.size() - 1)(rng)];
    try {
      switch (m.move) {
        case Move::P23: cur = pachner_23(cur, m.target); break;
        case Move::P32: cur = pachner_32(cur, m.target); break;
        case Move::P14: cur = pachner_14(cur, m.target); break;
        case Move::P41: cur = pachner_41(cur, m.target); break;
      }
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Inapplicable) continue;
      throw;
    }
    if (log) log->push_back(m);
    ++done;
  }
  return cur;
}

Triangulation disjoint_union(const Triangulation& a, const Triangulation& b) {
  std::vector<std::array<Gluing, 4>> gl;
  std::vector<int> orient;
  for (int t = 0; t < a.size(); ++t) {
    gl.push_back({a.glue(t, 0), a.glue(t, 1), a.glue(t, 2), a.glue(t, 3)});
    orient.push_back(a.orientation(t));
  }
  for (int t = 0; t < b.size(); ++t) {
    std::array<Gluing, 4> row{};
    for (int f = 0; f < 4; ++f) {
      row[f] = b.glue(t, f);
      row[f].tet += a.size();
    }
    gl.push_back(row);
    orient.push_back(b.orientation(t));
  }
  return Triangulation(a.size() + b.size(), std::move(gl), &orient);
}

bool isomorphic(const Triangulation& a, const Triangulation& b) {
  if (a.size() != b.size() || a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  const int T = a.size();
  Perm p0{0, 1, 2, 3};
  std::vector<Perm> perms;
  do perms.push_back(p0);
  while (std::next_permutation(p0.begin(), p0.end()));
  for (int img = 0; img < T; ++img)
    for (const Perm& start : perms) {
      std::vector<int> tmap(T, -1), used(T, 0);
      std::vector<Perm> pmap(T);
      tmap[0] = img;
      pmap[0] = start;
      used[img] = 1;
      std::deque<int> q{0};
      bool ok = true;
      while (ok && !q.empty()) {
        const int t = q.front();
        q.pop_front();
        for (int f = 0; f < 4 && ok; ++f) {
          const Gluing& ga = a.glue(t, f);
          const Gluing& gb = b.glue(tmap[t], pmap[t][f]);
          // induced map on the neighbour: pmap[ga.tet] = gb.perm o pmap[t] o ga.perm^-1
          const Perm inv = perm_inverse(ga.perm);
          Perm pn{};
          for (int x = 0; x < 4; ++x) pn[x] = gb.perm[pmap[t][inv[x]]];
          if (tmap[ga.tet] < 0) {
            if (used[gb.tet]) {
              ok = false;
              break;
            }
            tmap[ga.tet] = gb.tet;
            pmap[ga.tet] = pn;
            used[gb.tet] = 1;
            q.push_back(ga.tet);
          } else if (tmap[ga.tet] != gb.tet || pmap[ga.tet] != pn) {
            ok = false;
          }
        }
      }
      if (ok && std::find(tmap.begin(), tmap.end(), -1) == tmap.end()) return true;
    }
  return false;
}

// ---------------------------------------------------------------------------
// bundled triangulations

namespace {
const std::map<std::string, std::string>& census_table() {
  static const std::map<std::string, std::string> table{
      {"s3_2tet", "tets 2\nglue 0 0 0 1 1 0 2 3\nglue 0 2 1 0 1 2 0 3\nglue 0 3 1 1 0 2 3 1\nglue 1 2 1 3 0 1 3 2\n"},
      {"s3_3tet",
       "tets 3\nglue 0 0 0 3 3 1 2 0\nglue 0 1 2 3 0 3 2 1\nglue 0 2 1 3 0 1 3 2\nglue 1 0 1 2 2 1 0 3\n"
       "glue 1 1 2 2 0 2 1 3\nglue 2 0 2 1 1 0 2 3\n"},
      {"rp3_2tet", "tets 2\nglue 0 0 1 3 3 1 2 0\nglue 0 1 1 2 0 2 1 3\nglue 0 2 0 3 0 1 3 2\nglue 1 0 1 1 1 2 3 0\n"},
      {"lens_3_1", "tets 2\nglue 0 0 1 2 2 3 0 1\nglue 0 1 1 3 2 3 0 1\nglue 0 2 0 3 2 0 3 1\nglue 1 0 1 1 1 2 3 0\n"},
      {"lens_4_1", "tets 1\nglue 0 0 0 1 1 2 3 0\nglue 0 2 0 3 1 2 3 0\n"},
      {"s2xs1", "tets 2\nglue 0 0 0 3 3 0 1 2\nglue 0 1 1 1 0 1 2 3\nglue 0 2 1 2 0 1 2 3\nglue 1 0 1 3 3 0 1 2\n"},
      {"t3",
       "tets 6\nglue 0 0 1 0 0 1 3 2\nglue 0 1 2 1 0 1 3 2\nglue 0 2 3 3 0 1 3 2\nglue 0 3 4 2 0 1 3 2\n"
       "glue 1 1 5 1 0 1 3 2\nglue 1 2 3 1 2 3 1 0\nglue 1 3 4 1 3 2 0 1\nglue 2 0 5 0 0 1 3 2\n"
       "glue 2 2 3 0 3 2 0 1\nglue 2 3 4 0 2 3 1 0\nglue 3 2 5 2 1 0 2 3\nglue 4 3 5 3 1 0 2 3\n"},
      {"solid_torus_ideal",
       "tets 2\nglue 0 0 0 2 2 0 3 1\nglue 0 1 1 0 3 0 1 2\nglue 0 3 1 1 3 2 0 1\nglue 1 2 1 3 0 1 3 2\n"},
      {"hopf_complement_ideal",
       "tets 3\nglue 0 0 1 3 3 1 2 0\nglue 0 1 1 0 1 0 2 3\nglue 0 2 2 1 0 2 1 3\nglue 0 3 1 1 0 3 2 1\n"
       "glue 1 2 2 0 2 1 0 3\nglue 2 2 2 3 0 1 3 2\n"},
  };
  return table;
}
}  // namespace

const std::vector<std::string>& census_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : census_table()) v.push_back(k);
    return v;
  }();
  return names;
}

Triangulation census(const std::string& name) {
  auto it = census_table().find(name);
  if (it == census_table().end()) throw Error(ErrorKind::UnknownName, "no census triangulation '" + name + "'");
  return parse_triangulation(it->second);
}

}  // namespace alterfold
