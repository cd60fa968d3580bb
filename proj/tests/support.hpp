#pragma once

#include <string>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "alterfold/fusion.hpp"

namespace alterfold::test {

inline const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

struct Builtin {
  std::string name;
  std::vector<int> params;
};

inline std::vector<Builtin> all_builtins() {
  std::vector<Builtin> out{{"trivial", {}}};
  for (int n = 2; n <= 4; ++n)
    for (int p = 0; p < n; ++p) out.push_back({"vec_zn", {n, p}});
  out.push_back({"fibonacci", {}});
  out.push_back({"ising", {}});
  for (int k = 1; k <= 3; ++k) out.push_back({"su2_level", {k}});
  return out;
}

inline std::string tag(const Builtin& b) {
  std::string s = b.name;
  for (int p : b.params) s += "_" + std::to_string(p);
  return s;
}

}  // namespace alterfold::test

#define EXPECT_CNEAR(a, b, tol) EXPECT_LT(std::abs(alterfold::Complex(a) - alterfold::Complex(b)), (tol))
