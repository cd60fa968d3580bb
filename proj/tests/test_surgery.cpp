#include "alterfold/surgery.hpp"
#include "support.hpp"

using namespace alterfold;
using namespace alterfold::test;

namespace {

const ModularData& fib_md() {
  static const ModularData md = modular_data(builtin_category("fibonacci"));
  return md;
}

}  // namespace

TEST(Surgery, Unknots) {
  const auto& md = fib_md();
  const Complex mu = std::sqrt(md.mu_z);
  EXPECT_CNEAR(rt_plumbing(md, {}), 1.0 / mu, 1e-10);            // S3
  EXPECT_CNEAR(rt_plumbing(md, {{0}, {}}), 1.0, 1e-10);          // S2 x S1
  EXPECT_CNEAR(rt_plumbing(md, {{1}, {}}), 1.0 / mu, 1e-10);     // +-1 surgery is S3 again
  EXPECT_CNEAR(rt_plumbing(md, {{-1}, {}}), 1.0 / mu, 1e-10);
  // the Hopf link with framings 0,0 is S3
  EXPECT_CNEAR(rt_plumbing(md, {{0, 0}, {{0, 1}}}), 1.0 / mu, 1e-10);
}

TEST(Surgery, ContinuedFractions) {
  EXPECT_EQ(negative_continued_fraction(3, 2), (std::vector<int>{2, 2}));
  EXPECT_EQ(negative_continued_fraction(4, 3), (std::vector<int>{2, 2, 2}));
  EXPECT_EQ(negative_continued_fraction(5, 1), (std::vector<int>{5}));
  EXPECT_EQ(negative_continued_fraction(7, 3), (std::vector<int>{3, 2, 2}));
  EXPECT_EQ(lens_space_plumbing(1, 0).size(), 0);
  const auto g = lens_space_plumbing(4, 3);
  EXPECT_EQ(g.size(), 3);
  EXPECT_EQ(g.edges.size(), 2u);
}

TEST(Surgery, LensOrientation) {
  // L(3,2) and L(3,1) differ by orientation, so the values are conjugate
  const auto& md = fib_md();
  const Complex a = rt_plumbing(md, lens_space_plumbing(3, 2));
  const Complex b = rt_plumbing(md, lens_space_plumbing(3, 1));
  EXPECT_CNEAR(a, std::conj(b), 1e-10);
  const auto g = lens_space_plumbing(5, 2);
  EXPECT_CNEAR(rt_plumbing(md, g.mirror()), std::conj(rt_plumbing(md, g)), 1e-10);
}

TEST(Surgery, ForestMultiplies) {
  const auto& md = fib_md();
  const Complex mu = std::sqrt(md.mu_z);
  const PlumbingGraph a{{2, 3}, {{0, 1}}}, b{{-1, 0, 4}, {{0, 1}, {1, 2}}};
  PlumbingGraph ab = a;
  for (int f : b.framing) ab.framing.push_back(f);
  for (auto [u, v] : b.edges) ab.edges.push_back({u + a.size(), v + a.size()});
  EXPECT_CNEAR(rt_plumbing(md, ab), rt_plumbing(md, a) * rt_plumbing(md, b) * mu, 1e-10);
}

TEST(Surgery, TrivialCategoryIsOne) {
  const auto md = modular_data(builtin_category("trivial"));
  for (auto [p, q] : std::vector<std::pair<int, int>>{{5, 1}, {7, 3}, {2, 1}})
    EXPECT_CNEAR(rt_plumbing(md, lens_space_plumbing(p, q)), 1.0, 1e-12);
}

TEST(Surgery, ParseAndValidate) {
  const auto g = parse_plumbing("# chain\nvertex 0 2\nvertex 1 -3\nedge 0 1\n");
  EXPECT_EQ(g.framing, (std::vector<int>{2, -3}));
  ASSERT_EQ(g.edges.size(), 1u);
  EXPECT_EQ(parse_plumbing(serialize_plumbing(g)).framing, g.framing);
  auto kind = [](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Unsupported;
  };
  EXPECT_EQ(kind([] { parse_plumbing("vertex 0 x\n"); }), ErrorKind::Parse);
  EXPECT_EQ(kind([] { parse_plumbing("vertex 0 1\nedge 0 3\n"); }), ErrorKind::Index);
  EXPECT_EQ(kind([] { validate_plumbing({{0, 0, 0}, {{0, 1}, {1, 2}, {2, 0}}}); }), ErrorKind::Inconsistent);
  EXPECT_EQ(kind([] { registered_plumbing("t3"); }), ErrorKind::Index);
}

TEST(Surgery, TvEqualsRt) {
  for (const auto& b : all_builtins()) {
    if (b.name == "su2_level" && b.params[0] == 3) continue;  // covered by the benchmark-sized run
    const auto cat = builtin_category(b.name, b.params);
    const auto rep = verify_tv_rt(cat, registered_plumbing_names());
    EXPECT_TRUE(rep.pass) << tag(b) << " " << rep.max_defect;
    EXPECT_LT(rep.max_defect, 1e-7) << tag(b);
  }
}

TEST(Surgery, TwistedZ3FixesOrientation) {
  // a chiral center: the registered chain matches and its mirror does not
  const auto cat = builtin_category("vec_zn", {3, 1});
  const auto md = modular_data(cat);
  const Complex tv = tv_invariant(*cat, census("lens_3_1"));
  EXPECT_CNEAR(tv, rt_plumbing(md, registered_plumbing("lens_3_1")), 1e-8);
  EXPECT_GT(std::abs(tv - rt_plumbing(md, registered_plumbing("lens_3_1").mirror())), 0.1);
}
