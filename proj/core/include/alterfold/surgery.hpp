#pragma once

#include <string>
#include <utility>
#include <vector>

#include "alterfold/fusion.hpp"
#include "alterfold/state_sum.hpp"
#include "alterfold/tube.hpp"

namespace alterfold {

// forest of framed unknots; each edge is a Hopf clasp
struct PlumbingGraph {
  std::vector<int> framing;
  std::vector<std::pair<int, int>> edges;

  int size() const { return static_cast<int>(framing.size()); }
  PlumbingGraph mirror() const;  // all framings negated
};

// throws Inconsistent on a cycle, Index on a bad endpoint
void validate_plumbing(const PlumbingGraph& g);

PlumbingGraph parse_plumbing(const std::string& text);
std::string serialize_plumbing(const PlumbingGraph& g);

// mu^{-|L|-1} sum_a prod_v d^{2-deg} theta^f prod_e S
Complex rt_plumbing(const ModularData& md, const PlumbingGraph& g);

// chain from the negative continued fraction of p/q; (1,0) is the empty graph
PlumbingGraph lens_space_plumbing(int p, int q);
std::vector<int> negative_continued_fraction(int p, int q);

// surgery presentation registered for a census manifold; throws Index if none
PlumbingGraph registered_plumbing(const std::string& census_name);
std::vector<std::string> registered_plumbing_names();

struct TvRtEntry {
  std::string name;
  Complex tv, rt;
  double defect = 0.0;
};

struct TvRtReport {
  std::vector<TvRtEntry> entries;
  double max_defect = 0.0;
  bool pass = false;
};

TvRtReport verify_tv_rt(CategoryPtr cat, const std::vector<std::string>& names, const StateSumConfig& cfg = {},
                        double threshold = 1e-7);
TvRtReport verify_tv_rt(CategoryPtr cat, const ModularData& md, const std::vector<std::string>& names,
                        const StateSumConfig& cfg = {}, double threshold = 1e-7);

}  // namespace alterfold
