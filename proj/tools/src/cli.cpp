#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "alterfold/fs_indicator.hpp"
#include "alterfold/state_sum.hpp"
#include "alterfold/surgery.hpp"
#include "alterfold/tube.hpp"

namespace alterfold::cli {

namespace {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

int to_int(const std::string& s) {
  size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw Error(ErrorKind::Parse, "not an integer: '" + s + "'");
  }
  if (pos != s.size()) throw Error(ErrorKind::Parse, "not an integer: '" + s + "'");
  return v;
}

struct Result {
  std::string name;
  std::optional<Complex> value;
  std::optional<bool> pass;
  double defect = 0.0;
  std::string info;
};

struct Report {
  std::string command;
  std::string fingerprint;
  std::vector<Result> results;
  double wall = 0.0;

  void value(std::string name, Complex v, std::string info = {}) {
    results.push_back({std::move(name), v, std::nullopt, 0.0, std::move(info)});
  }
  void check(std::string name, bool ok, double defect, std::string info = {}) {
    results.push_back({std::move(name), std::nullopt, ok, defect, std::move(info)});
  }
  bool all_pass() const {
    for (const auto& r : results)
      if (r.pass && !*r.pass) return false;
    return true;
  }
};

std::string fixed(double x) {
  char buf[64];
  if (std::abs(x) < 5e-11) x = 0.0;  // no "-0.0000000000"
  std::snprintf(buf, sizeof buf, "%.10f", x);
  return buf;
}

void emit(const Report& rep, const std::string& fmt, std::ostream& out) {
  if (fmt == "json") {
    json j;
    j["command"] = rep.command;
    j["fingerprint"] = rep.fingerprint;
    json arr = json::array();
    for (const auto& r : rep.results) {
      json e;
      e["name"] = r.name;
      if (r.value) e["value"] = {{"re", r.value->real()}, {"im", r.value->imag()}};
      if (r.pass) {
        e["pass"] = *r.pass;
        e["defect"] = r.defect;
      }
      if (!r.info.empty()) e["info"] = r.info;
      arr.push_back(e);
    }
    j["results"] = arr;
    j["wall_time_s"] = rep.wall;
    out << j.dump(2) << '\n';
  } else if (fmt == "csv") {
    out << "name,re,im,pass,defect,info\n";
    for (const auto& r : rep.results) {
      out << r.name << ',';
      if (r.value) out << fixed(r.value->real()) << ',' << fixed(r.value->imag());
      else out << ',';
      out << ',' << (r.pass ? (*r.pass ? "true" : "false") : "") << ',';
      if (r.pass) out << r.defect;
      out << ',' << r.info << '\n';
    }
  } else {
    for (const auto& r : rep.results) {
      if (r.value) {
        const double im = r.value->imag();
        out << r.name << " = " << fixed(r.value->real()) << (im < -5e-11 ? " - " : " + ") << fixed(std::abs(im)) << "i";
      }
      else out << r.name << ": " << (*r.pass ? "PASS" : "FAIL") << " (defect " << r.defect << ")";
      if (!r.info.empty()) out << "  [" << r.info << "]";
      out << '\n';
    }
  }
}

std::string join(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) {
    if (!s.empty()) s += ' ';
    s += a;
  }
  return s;
}

int resolve_object(const FusionCategory& C, const std::string& ref) {
  for (int i = 0; i < C.rank; ++i)
    if (C.labels[i] == ref) return i;
  const int v = to_int(ref);
  C.check_index(v);
  return v;
}

// --- verification suites --------------------------------------------------

void suite_pentagon(const CategoryPtr& cat, Report& rep) {
  const auto vr = verify_category(*cat);
  rep.check("pentagon", vr.pentagon_residual < cat->tol, vr.pentagon_residual);
  rep.check("dimension_sum", vr.dimension_defect < cat->tol, vr.dimension_defect);
  rep.check("unit_duality", vr.unit_duality_ok, 0.0);
  rep.check("f_invertible", vr.f_invertible, 0.0);
  rep.check("pivotal", vr.pivotal_residual < cat->tol, vr.pivotal_residual);
  if (vr.has_hexagon) rep.check("hexagon", vr.hexagon_residual < cat->tol, vr.hexagon_residual);
}

void suite_pachner(const CategoryPtr& cat, const StateSumConfig& cfg, Report& rep) {
  std::mt19937_64 rng(1234);
  for (const std::string name : {"s3_2tet", "rp3_2tet"}) {
    const Triangulation base = census(name);
    const Complex ref = tv_invariant(*cat, base, cfg);
    double worst = 0.0;
    for (int trial = 0; trial < 3; ++trial) {
      const Triangulation moved = random_moves(base, rng, 4);
      worst = std::max(worst, std::abs(tv_invariant(*cat, moved, cfg) - ref));
    }
    rep.check("pachner:" + name, worst < 1e-8, worst);
  }
}

void suite_tvrt(const CategoryPtr& cat, const DrinfeldCenter& z, const StateSumConfig& cfg, Report& rep) {
  const auto r = verify_tv_rt(cat, z.modular_data(), {"s3_2tet", "s2xs1", "rp3_2tet", "lens_3_1", "lens_4_1"}, cfg);
  for (const auto& e : r.entries) rep.check("tvrt:" + e.name, e.defect < 1e-7, e.defect);
}

void suite_killing(const DrinfeldCenter& z, Report& rep) {
  for (int i = 0; i < z.category().rank; ++i) {
    const double d = verify_killing(z, i);
    rep.check("killing:" + z.category().labels[i], d < 1e-9, d);
  }
}

void suite_equivariance(const DrinfeldCenter& z, int range, Report& rep) {
  const auto r = equivariance_check(z, -range, range, -range, range);
  rep.check("equivariance:t", r.t_defect < 1e-7, r.t_defect);
  rep.check("equivariance:s", r.s_defect < 1e-7, r.s_defect);
  rep.check("equivariance:dual", r.dual_defect < 1e-7, r.dual_defect);
  rep.check("equivariance:reduced", r.reduced_defect < 1e-7, r.reduced_defect);
}

}  // namespace

// ---------------------------------------------------------------------------

CategoryPtr resolve_category(const std::string& ref) {
  CategoryPtr cat;
  if (ref.rfind("builtin:", 0) == 0) {
    auto parts = split(ref.substr(8), ':');
    std::string name = parts[0];
    std::vector<int> params;
    for (size_t i = 1; i < parts.size(); ++i) params.push_back(to_int(parts[i]));
    // vec_zN shorthand: builtin:vec_z2, builtin:vec_z2:p, builtin:vec_z2:2:p
    static const std::regex vz("vec_z([0-9]+)");
    std::smatch mm;
    if (std::regex_match(name, mm, vz)) {
      const int n = to_int(mm[1]);
      if (params.size() == 2 && params[0] != n) throw Error(ErrorKind::InvalidParams, "order mismatch in " + ref);
      if (params.size() > 2) throw Error(ErrorKind::InvalidParams, "too many parameters in " + ref);
      const int p = params.empty() ? 0 : params.back();
      name = "vec_zn";
      params = {n, p};
    }
    cat = builtin_category(name, params);
  } else if (ref.rfind("file:", 0) == 0) {
    cat = load_category(read_file(ref.substr(5)));
  } else {
    throw Error(ErrorKind::Parse, "category reference must be builtin:NAME or file:PATH, got '" + ref + "'");
  }
  if (const char* t = std::getenv("ALTERFOLD_TOL"); t && *t) {
    char* end = nullptr;
    const double tol = std::strtod(t, &end);
    if (end == t || *end || !(tol >= 0.0)) throw Error(ErrorKind::Parse, "bad ALTERFOLD_TOL");
    auto copy = std::make_shared<FusionCategory>(*cat);
    copy->tol = tol;
    cat = copy;
  }
  return cat;
}

Triangulation resolve_triangulation(const std::string& ref) {
  if (ref.rfind("census:", 0) == 0) return census(ref.substr(7));
  if (ref.rfind("file:", 0) == 0) return parse_triangulation(read_file(ref.substr(5)));
  throw Error(ErrorKind::Parse, "triangulation reference must be census:NAME or file:PATH, got '" + ref + "'");
}

std::string fingerprint(const FusionCategory& cat) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : serialize_category(cat)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"alterfold: quantum invariants from spherical fusion categories"};
  app.require_subcommand(1);
  app.fallthrough();
  int workers = 1;
  std::string fmt = "text";
  app.add_option("--workers", workers, "internal parallelism")->check(CLI::PositiveNumber);
  app.add_option("--emit", fmt, "output format")->check(CLI::IsMember({"text", "json", "csv"}));

  std::string cat_ref, tri_ref, plumbing, suite = "all", object;
  std::vector<double> zeta;
  std::vector<int> lens;
  int center = 0, m = 1, l = 0, range = 3;

  auto* tv = app.add_subcommand("tv", "Turaev-Viro state sum");
  tv->add_option("--category", cat_ref)->required();
  tv->add_option("--triangulation", tri_ref)->required();
  tv->add_option("--zeta", zeta, "Euler weight as RE IM")->expected(2);

  auto* ctr = app.add_subcommand("center", "Drinfeld center modular data");
  ctr->add_option("--category", cat_ref)->required();

  auto* rt = app.add_subcommand("rt", "surgery invariant of a plumbing");
  rt->add_option("--category", cat_ref)->required();
  auto* opt_pl = rt->add_option("--plumbing", plumbing, "plumbing file");
  auto* opt_lens = rt->add_option("--lens", lens, "p q")->expected(2);
  opt_pl->excludes(opt_lens);
  opt_lens->excludes(opt_pl);

  auto* fsi = app.add_subcommand("fs-indicator", "generalized Frobenius-Schur indicator");
  fsi->add_option("--category", cat_ref)->required();
  fsi->add_option("--center", center, "center simple index")->required();
  fsi->add_option("--object", object, "simple of C (index or label)")->required();
  fsi->add_option("--m", m)->required();
  fsi->add_option("--l", l)->required();

  auto* fse = app.add_subcommand("fs-equivariance", "SL2(Z) equivariance sweep");
  fse->add_option("--category", cat_ref)->required();
  fse->add_option("--range", range)->check(CLI::NonNegativeNumber);

  auto* ver = app.add_subcommand("verify", "verification suites");
  ver->add_option("--category", cat_ref)->required();
  ver->add_option("--suite", suite)->check(CLI::IsMember({"pentagon", "pachner", "tvrt", "killing", "equivariance", "all"}));
  ver->add_option("--range", range, "equivariance range")->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
    if (rt->parsed() && plumbing.empty() && lens.empty()) throw CLI::RequiredError("--plumbing or --lens");
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  const auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.command = join(args);
  try {
    const CategoryPtr cat = resolve_category(cat_ref);
    rep.fingerprint = fingerprint(*cat);
    StateSumConfig cfg;
    cfg.workers = workers;
    if (zeta.size() == 2) cfg.zeta = Complex(zeta[0], zeta[1]);

    if (tv->parsed()) {
      const Triangulation tri = resolve_triangulation(tri_ref);
      rep.value("tv", tv_invariant(*cat, tri, cfg));
    } else if (ctr->parsed()) {
      const DrinfeldCenter z(cat);
      const ModularData& md = z.modular_data();
      rep.value("mu_z", md.mu_z);
      for (int A = 0; A < z.rank(); ++A) {
        std::string mult;
        for (int x : z.simple(A).mult) mult += (mult.empty() ? "" : " ") + std::to_string(x);
        rep.value("d_" + std::to_string(A), md.dims[A], "mult " + mult + "; dual " + std::to_string(md.dual[A]));
      }
      for (int A = 0; A < z.rank(); ++A) rep.value("theta_" + std::to_string(A), md.twists[A]);
      for (int A = 0; A < z.rank(); ++A)
        for (int B = 0; B < z.rank(); ++B)
          rep.value("S_" + std::to_string(A) + "_" + std::to_string(B), md.s_tilde(A, B));
    } else if (rt->parsed()) {
      const DrinfeldCenter z(cat);
      // a bare path and file:PATH both work
      if (plumbing.rfind("file:", 0) == 0) plumbing.erase(0, 5);
      const PlumbingGraph g = lens.empty() ? parse_plumbing(read_file(plumbing)) : lens_space_plumbing(lens[0], lens[1]);
      rep.value("rt", rt_plumbing(z.modular_data(), g));
    } else if (fsi->parsed()) {
      const DrinfeldCenter z(cat);
      const int v = resolve_object(*cat, object);
      rep.value("nu", indicator(z, center, {v}, m, l));
    } else if (fse->parsed()) {
      const DrinfeldCenter z(cat);
      suite_equivariance(z, range, rep);
    } else if (ver->parsed()) {
      const bool all = suite == "all";
      if (all || suite == "pentagon") suite_pentagon(cat, rep);
      if (all || suite == "pachner") suite_pachner(cat, cfg, rep);
      if (all || suite == "tvrt" || suite == "killing" || suite == "equivariance") {
        const DrinfeldCenter z(cat);
        if (all || suite == "tvrt") suite_tvrt(cat, z, cfg, rep);
        if (all || suite == "killing") suite_killing(z, rep);
        if (all || suite == "equivariance") suite_equivariance(z, range, rep);
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::Parse:
      case ErrorKind::Index:
      case ErrorKind::UnknownName:
      case ErrorKind::InvalidParams:
        return kUsage;
      default:
        return kFailed;
    }
  }
  rep.wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  emit(rep, fmt, out);
  return rep.all_pass() ? kOk : kFailed;
}

}  // namespace alterfold::cli
