#include "alterfold/surgery.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "alterfold/triangulation.hpp"

namespace alterfold {

PlumbingGraph PlumbingGraph::mirror() const {
  PlumbingGraph m = *this;
  for (int& f : m.framing) f = -f;
  return m;
}

void validate_plumbing(const PlumbingGraph& g) {
  std::vector<int> parent(g.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : g.edges) {
    if (u < 0 || v < 0 || u >= g.size() || v >= g.size()) throw Error(ErrorKind::Index, "plumbing edge endpoint out of range");
    const int a = find(u), b = find(v);
    if (a == b) throw Error(ErrorKind::Inconsistent, "plumbing graph has a cycle");
    parent[a] = b;
  }
}

PlumbingGraph parse_plumbing(const std::string& text) {
  PlumbingGraph g;
  std::map<int, int> frame;
  std::vector<std::pair<int, int>> edges;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    auto bad = [&] { return Error(ErrorKind::Parse, "plumbing line " + std::to_string(lineno) + ": " + line); };
    int a = 0, b = 0;
    if (!(ls >> a >> b)) throw bad();
    std::string extra;
    if (ls >> extra) throw bad();
    if (kw == "vertex") {
      if (a < 0) throw Error(ErrorKind::Index, "negative vertex id");
      if (!frame.emplace(a, b).second) throw Error(ErrorKind::Inconsistent, "vertex declared twice");
    } else if (kw == "edge") {
      edges.push_back({a, b});
    } else {
      throw bad();
    }
  }
  int expect = 0;
  for (auto& [v, f] : frame) {
    if (v != expect++) throw Error(ErrorKind::Index, "vertex ids must be 0..n-1");
    g.framing.push_back(f);
  }
  g.edges = edges;
  validate_plumbing(g);
  return g;
}

std::string serialize_plumbing(const PlumbingGraph& g) {
  std::ostringstream out;
  for (int v = 0; v < g.size(); ++v) out << "vertex " << v << ' ' << g.framing[v] << '\n';
  for (auto [u, v] : g.edges) out << "edge " << u << ' ' << v << '\n';
  return out.str();
}

Complex rt_plumbing(const ModularData& md, const PlumbingGraph& g) {
  validate_plumbing(g);
  const int R = md.rank;
  if (R <= 0 || md.s_tilde.rows() != R || static_cast<int>(md.twists.size()) != R ||
      static_cast<int>(md.dims.size()) != R)
    throw Error(ErrorKind::Mismatch, "invalid modular data");
  const Complex mu = std::sqrt(md.mu_z);
  const int n = g.size();
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  // vertex factor d^{2-deg} theta^f
  auto local = [&](int v, int a) {
    return std::pow(md.dims[a], 2 - static_cast<int>(adj[v].size())) * std::pow(md.twists[a], g.framing[v]);
  };
  // tree DP, children before parents
  std::vector<int> seen(n, 0);
  std::vector<Eigen::VectorXcd> msg(n);
  Complex total = 1.0;
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<int> order, par;
    std::vector<int> stack{root};
    std::vector<int> parent(n, -1);
    seen[root] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          parent[w] = v;
          stack.push_back(w);
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const int v = *it;
      Eigen::VectorXcd f(R);
      for (int a = 0; a < R; ++a) f(a) = local(v, a);
      for (int w : adj[v])
        if (parent[w] == v) f = f.cwiseProduct(md.s_tilde * msg[w]);
      msg[v] = f;
    }
    total *= msg[root].sum();
  }
  return total * std::pow(mu, -n - 1);
}

std::vector<int> negative_continued_fraction(int p, int q) {
  if (p < 1) throw Error(ErrorKind::Index, "lens space needs p >= 1");
  if (std::gcd(p, q) != 1) throw Error(ErrorKind::Index, "p and q must be coprime");
  if (p == 1 && q == 0) return {};
  if (q <= 0 || q >= p) throw Error(ErrorKind::Index, "lens space needs 0 < q < p");
  // p/q = a1 - 1/(a2 - 1/(...)) with every a_i >= 2
  std::vector<int> a;
  long long x = p, y = q;
  while (y != 0) {
    const long long c = (x + y - 1) / y;  // ceil
    a.push_back(static_cast<int>(c));
    const long long r = c * y - x;
    x = y;
    y = r;
  }
  return a;
}

PlumbingGraph lens_space_plumbing(int p, int q) {
  PlumbingGraph g;
  g.framing = negative_continued_fraction(p, q);
  for (int v = 0; v + 1 < g.size(); ++v) g.edges.push_back({v, v + 1});
  return g;
}

namespace {

struct Registered {
  const char* census;
  int p, q;
};

// lens chains are read with the orientation that matches the census gluings
constexpr Registered kRegistered[] = {
    {"s3_2tet", 1, 0}, {"s3_3tet", 1, 0}, {"rp3_2tet", 2, 1}, {"lens_3_1", 3, 2}, {"lens_4_1", 4, 3},
};

}  // namespace

PlumbingGraph registered_plumbing(const std::string& name) {
  if (name == "s2xs1") return PlumbingGraph{{0}, {}};
  for (const auto& r : kRegistered)
    if (name == r.census) return lens_space_plumbing(r.p, r.q);
  throw Error(ErrorKind::Index, "no plumbing registered for " + name);
}

std::vector<std::string> registered_plumbing_names() {
  std::vector<std::string> out;
  for (const auto& r : kRegistered) out.push_back(r.census);
  out.push_back("s2xs1");
  return out;
}

TvRtReport verify_tv_rt(CategoryPtr cat, const ModularData& md, const std::vector<std::string>& names,
                        const StateSumConfig& cfg, double threshold) {
  TvRtReport rep;
  for (const auto& name : names) {
    const PlumbingGraph g = registered_plumbing(name);
    TvRtEntry e;
    e.name = name;
    e.tv = tv_invariant(*cat, census(name), cfg);
    e.rt = rt_plumbing(md, g);
    e.defect = std::abs(e.tv - e.rt);
    rep.max_defect = std::max(rep.max_defect, e.defect);
    rep.entries.push_back(e);
  }
  rep.pass = rep.max_defect < threshold;
  return rep;
}

TvRtReport verify_tv_rt(CategoryPtr cat, const std::vector<std::string>& names, const StateSumConfig& cfg,
                        double threshold) {
  const DrinfeldCenter z(cat);
  return verify_tv_rt(cat, z.modular_data(), names, cfg, threshold);
}

}  // namespace alterfold
