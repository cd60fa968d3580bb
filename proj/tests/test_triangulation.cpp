#include <fstream>
#include <random>
#include <sstream>

#include "alterfold/triangulation.hpp"
#include "support.hpp"

using namespace alterfold;

namespace {

std::string read(const std::string& name) {
  std::ifstream in(std::string(ALTERFOLD_TEST_DATA) + "/" + name + ".tri");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Triangulation, CensusSkeleta) {
  struct Row {
    const char* name;
    int T, V, E;
    bool closed;
  };
  // T, V, E from the independent oracle parser
  const Row rows[] = {{"s3_2tet", 2, 1, 3, true},      {"s3_3tet", 3, 4, 7, true},
                      {"s2xs1", 2, 1, 3, true},        {"rp3_2tet", 2, 1, 3, true},
                      {"lens_3_1", 2, 1, 3, true},     {"lens_4_1", 1, 1, 2, true},
                      {"t3", 6, 1, 7, true},           {"solid_torus_ideal", 2, 1, 2, false},
                      {"hopf_complement_ideal", 3, 2, 3, false}};
  for (const auto& r : rows) {
    const auto t = census(r.name);
    EXPECT_EQ(t.size(), r.T) << r.name;
    EXPECT_EQ(t.num_vertices(), r.V) << r.name;
    EXPECT_EQ(t.num_edges(), r.E) << r.name;
    EXPECT_EQ(t.num_faces(), 2 * r.T) << r.name;
    EXPECT_EQ(t.closed_manifold(), r.closed) << r.name;
    if (r.closed) EXPECT_EQ(t.euler_characteristic(), 0) << r.name;
  }
  const auto h = census("hopf_complement_ideal");
  for (const auto& v : h.vertices()) {
    EXPECT_FALSE(v.inner);
    EXPECT_EQ(v.link_euler, 0);
  }
  EXPECT_THROW(census("nope"), Error);
}

TEST(Triangulation, FilesMatchCensus) {
  for (const auto& n : census_names()) {
    const auto parsed = parse_triangulation(read(n));
    EXPECT_EQ(serialize_triangulation(parsed), serialize_triangulation(census(n))) << n;
  }
}

TEST(Triangulation, ParseRoundTrip) {
  for (const auto& n : census_names()) {
    const auto t = census(n);
    const auto u = parse_triangulation(serialize_triangulation(t));
    EXPECT_EQ(serialize_triangulation(u), serialize_triangulation(t));
    EXPECT_TRUE(isomorphic(t, u)) << n;
  }
}

TEST(Triangulation, ParseErrors) {
  auto kind = [](const std::string& text) {
    try {
      parse_triangulation(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Unsupported;  // marker: no error
  };
  EXPECT_EQ(kind("tets 1\nglue 0 0 0 1 1 0 2 3\n"), ErrorKind::Unglued);
  EXPECT_EQ(kind("tets x\n"), ErrorKind::Parse);
  EXPECT_EQ(kind("tets 1\nglue 0 0 3 1 1 0 2 3\n"), ErrorKind::Index);
  // face glued to itself
  EXPECT_EQ(kind("tets 1\nglue 0 0 0 0 0 1 2 3\nglue 0 1 0 2 0 2 1 3\nglue 0 3 0 3 0 1 2 3\n"),
            ErrorKind::NonInvolutive);
}

TEST(Triangulation, Orientation) {
  const auto t = census("s3_3tet");
  // adjacent tetrahedra induce opposite orientations on shared faces
  for (int a = 0; a < t.size(); ++a)
    for (int f = 0; f < 4; ++f) {
      const auto& g = t.glue(a, f);
      EXPECT_EQ(t.orientation(g.tet), -perm_sign(g.perm) * t.orientation(a));
    }
}

TEST(Triangulation, PachnerRoundTrips) {
  const auto t = census("s3_3tet");
  for (int f = 0; f < t.num_faces(); ++f) {
    Triangulation u;
    try {
      u = pachner_23(t, f);
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::Inapplicable);
      continue;
    }
    EXPECT_EQ(u.size(), t.size() + 1);
    EXPECT_EQ(u.num_edges(), t.num_edges() + 1);
    // the new edge has degree 3 and is the last class touched by the move
    bool back = false;
    for (int e = 0; e < u.num_edges() && !back; ++e) {
      if (u.edge_degree(e) != 3) continue;
      try {
        back = isomorphic(pachner_32(u, e), t);
      } catch (const Error&) {
      }
    }
    EXPECT_TRUE(back) << f;
  }
  const auto v = pachner_14(t, 0);
  EXPECT_EQ(v.size(), t.size() + 3);
  EXPECT_EQ(v.num_vertices(), t.num_vertices() + 1);
  const int nv = v.vertex(v.size() - 1, 3);
  EXPECT_TRUE(isomorphic(pachner_41(v, nv), t));
}

TEST(Triangulation, RandomMovesPreserveInvariants) {
  std::mt19937_64 rng(99);
  for (const auto& n : census_names()) {
    const auto t = census(n);
    std::vector<MoveRecord> log;
    const auto u = random_moves(t, rng, 6, &log);
    EXPECT_EQ(u.euler_characteristic(), t.euler_characteristic()) << n;
    EXPECT_EQ(u.closed_manifold(), t.closed_manifold()) << n;
    EXPECT_LE(u.size(), t.size() + 3) << n;
    EXPECT_EQ(log.size(), 6u) << n;
  }
}

TEST(Triangulation, DisjointUnion) {
  const auto a = census("s3_2tet"), b = census("lens_4_1");
  const auto u = disjoint_union(a, b);
  EXPECT_EQ(u.size(), a.size() + b.size());
  EXPECT_EQ(u.num_vertices(), a.num_vertices() + b.num_vertices());
  EXPECT_EQ(u.num_edges(), a.num_edges() + b.num_edges());
}
