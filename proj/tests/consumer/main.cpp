#include <cmath>
#include <cstdio>

#include "alterfold/state_sum.hpp"

int main() {
  const auto cat = alterfold::builtin_category("fibonacci");
  const auto v = alterfold::tv_invariant(*cat, alterfold::census("s3_2tet"));
  std::printf("%.10f\n", v.real());
  return std::abs(v - 1.0 / cat->global_dim) < 1e-9 ? 0 : 1;
}
