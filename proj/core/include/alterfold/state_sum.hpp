#pragma once

#include <cstdint>
#include <vector>

#include "alterfold/fusion.hpp"
#include "alterfold/triangulation.hpp"

namespace alterfold {

struct StateSumConfig {
  Complex zeta{1.0, 0.0};
  int workers = 1;
};

// color per edge class; face multiplicity labels are implicit (multiplicity-free)
using Coloring = std::vector<int>;

bool coloring_admissible(const FusionCategory& cat, const Triangulation& tri, const Coloring& c);
std::uint64_t count_admissible(const FusionCategory& cat, const Triangulation& tri);

// weight of one tetrahedron; throws Mismatch on an inadmissible coloring
Complex tet_weight(const FusionCategory& cat, const Triangulation& tri, int tet, const Coloring& c);

// mu^{-|V_inner|} zeta^{-chi} sum_c prod_e d_c(e) prod_t weight(t, c)
Complex tv_invariant(const FusionCategory& cat, const Triangulation& tri, const StateSumConfig& cfg = {});

}  // namespace alterfold
