#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "alterfold/common.hpp"

namespace alterfold {

using Perm = std::array<int, 4>;

struct Gluing {
  int tet = -1;
  int face = -1;
  Perm perm{0, 1, 2, 3};
};

// local edge e joins kEdge[e][0] < kEdge[e][1]
inline constexpr std::array<std::array<int, 2>, 6> kEdge{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
int local_edge(int i, int j);
int perm_sign(const Perm& p);
Perm perm_inverse(const Perm& p);

struct VertexInfo {
  int link_euler = 2;
  bool inner = true;
};

class Triangulation {
 public:
  Triangulation() = default;
  // Validates and derives the skeleton. `orientation_hint` (one sign per tet)
  // seeds the orientation of each connected component.
  Triangulation(int tets, std::vector<std::array<Gluing, 4>> gluings, const std::vector<int>* orientation_hint = nullptr);

  int size() const { return tets_; }
  const Gluing& glue(int t, int f) const { return gl_[t][f]; }

  int num_vertices() const { return nv_; }
  int num_edges() const { return ne_; }
  int num_faces() const { return nf_; }
  int euler_characteristic() const { return nv_ - ne_ + nf_ - tets_; }

  int vertex(int t, int v) const { return vert_[t * 4 + v]; }
  int edge(int t, int e) const { return edge_[t * 6 + e]; }
  // +1 if the local edge runs low->high along the class's canonical direction
  int edge_dir(int t, int e) const { return edir_[t * 6 + e]; }
  int face(int t, int f) const { return face_[t * 4 + f]; }
  // both sides of a face class, lower (t,f) first
  const std::array<std::pair<int, int>, 2>& face_sides(int cls) const { return fsides_[cls]; }
  int edge_degree(int cls) const { return edeg_[cls]; }
  int orientation(int t) const { return orient_[t]; }
  const std::vector<int>& orientation() const { return orient_; }

  const std::vector<VertexInfo>& vertices() const { return vinfo_; }
  int inner_vertices() const;
  bool closed_manifold() const { return inner_vertices() == nv_; }

 private:
  int tets_ = 0;
  std::vector<std::array<Gluing, 4>> gl_;
  int nv_ = 0, ne_ = 0, nf_ = 0;
  std::vector<int> vert_, edge_, edir_, face_, edeg_, orient_;
  std::vector<std::array<std::pair<int, int>, 2>> fsides_;
  std::vector<VertexInfo> vinfo_;
};

Triangulation parse_triangulation(const std::string& text);
std::string serialize_triangulation(const Triangulation& tri);
std::vector<VertexInfo> classify_vertices(const Triangulation& tri);

Triangulation pachner_23(const Triangulation& tri, int face_class);
Triangulation pachner_32(const Triangulation& tri, int edge_class);
Triangulation pachner_14(const Triangulation& tri, int tet);
Triangulation pachner_41(const Triangulation& tri, int vertex_class);

enum class Move { P23, P32, P14, P41 };
struct MoveRecord {
  Move move;
  int target;
};
// `count` random applicable moves; the tet count is kept within [T0, T0+slack]
// where possible so that state sums stay cheap.
Triangulation random_moves(const Triangulation& tri, std::mt19937_64& rng, int count,
                           std::vector<MoveRecord>* log = nullptr, int slack = 3);

Triangulation disjoint_union(const Triangulation& a, const Triangulation& b);
// combinatorial isomorphism (connected triangulations)
bool isomorphic(const Triangulation& a, const Triangulation& b);

Triangulation census(const std::string& name);
const std::vector<std::string>& census_names();

}  // namespace alterfold
