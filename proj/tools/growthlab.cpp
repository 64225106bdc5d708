#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include "growthlab/budget.hpp"
#include "growthlab/census.hpp"
#include "growthlab/epicount.hpp"
#include "growthlab/fingroup.hpp"
#include "growthlab/growth.hpp"
#include "growthlab/lattice.hpp"
#include "growthlab/laws.hpp"
#include "growthlab/numtheory.hpp"

namespace gl = growthlab;

namespace {

constexpr const char* kVersion = "growthlab 1.0.0";

uint64_t parse_n(const std::string& s) {
  double v = std::stod(s);
  if (v < 1 || v > 9e18) throw CLI::ValidationError("n out of range: " + s);
  return static_cast<uint64_t>(std::llround(v));
}

// "a..b" or a single value
std::vector<uint64_t> parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) return {parse_n(s)};
  uint64_t lo = parse_n(s.substr(0, dots));
  uint64_t hi = parse_n(s.substr(dots + 2));
  if (hi < lo) throw CLI::ValidationError("empty range: " + s);
  std::vector<uint64_t> out;
  for (uint64_t n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

// A5 | S4 | Z12 | D8 | PSL2(7), products joined with 'x': Z4xZ9
gl::ConcreteGroup parse_group(const std::string& spec) {
  auto x = spec.find('x');
  if (x != std::string::npos && spec.compare(0, 3, "PSL") != 0) {
    return gl::ConcreteGroup::direct_product(parse_group(spec.substr(0, x)),
                                             parse_group(spec.substr(x + 1)));
  }
  auto num = [&](size_t from, size_t to) {
    return std::stoi(spec.substr(from, to - from));
  };
  if (spec.compare(0, 3, "PSL") == 0) {
    auto open = spec.find('(');
    auto close = spec.find(')');
    if (open == std::string::npos || close == std::string::npos)
      throw CLI::ValidationError("bad PSL spec: " + spec);
    return gl::ConcreteGroup::psl(num(3, open), num(open + 1, close));
  }
  char head = spec.empty() ? '?' : spec[0];
  int m = spec.size() > 1 ? num(1, spec.size()) : -1;
  switch (head) {
    case 'A': return gl::ConcreteGroup::alternating(m);
    case 'S': return gl::ConcreteGroup::symmetric(m);
    case 'Z': return gl::ConcreteGroup::cyclic(m);
    case 'D':
      if (m % 2) throw CLI::ValidationError("dihedral order must be even");
      return gl::ConcreteGroup::dihedral(m / 2);
    default: throw CLI::ValidationError("unknown group spec: " + spec);
  }
}

uint64_t fnv1a(const std::string& bytes) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

struct Output {
  std::string out_path;      // empty = stdout
  std::string manifest_path;
  std::string subcommand;
  std::vector<std::string> args;
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();

  void emit(const std::string& primary) const {
    if (out_path.empty()) {
      std::cout << primary;
    } else {
      std::ofstream f(out_path, std::ios::binary);
      f << primary;
    }
    if (!manifest_path.empty()) {
      nlohmann::json m;
      m["subcommand"] = subcommand;
      m["parameters"] = args;
      m["tool_version"] = kVersion;
      double secs = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - start)
                        .count();
      m["wall_time_secs"] = secs;
      char digest[32];
      std::snprintf(digest, sizeof(digest), "fnv1a64:%016llx",
                    static_cast<unsigned long long>(fnv1a(primary)));
      m["output_digest"] = digest;
      std::ofstream f(manifest_path);
      f << m.dump(2) << "\n";
    }
  }
};

void add_output_opts(CLI::App* cmd, Output& out) {
  cmd->add_option("-o,--out", out.out_path, "write primary output to a file");
  cmd->add_option("--manifest", out.manifest_path,
                  "write a reproducibility manifest (JSON)");
}

gl::GrowthValue zk_value(uint64_t n, int k, gl::Flavor flavor, bool strict_lt,
                         bool log_mode, uint64_t log_threshold_digits) {
  if (!log_mode) {
    gl::BigNat v = gl::ig_zk(n, k, flavor, strict_lt);
    // force log form above the digit threshold
    if (gl::to_decimal(v).size() <= log_threshold_digits)
      return gl::GrowthValue::exact_value(std::move(v));
  }
  return gl::GrowthValue::log_value(gl::log_ig_zk(n, k, flavor, strict_lt),
                                    gl::EvalMode::Exact);
}

std::string render_series(const gl::GrowthSeries& s, const std::string& format,
                          bool gnuplot) {
  if (gnuplot) return gl::series_to_gnuplot(s);
  if (format == "json") return gl::series_to_json(s);
  return gl::series_to_csv(s);
}

}  // namespace

int main(int argc, char** argv) {
  gl::budget::install_from_env();

  CLI::App app{"intersection-growth calculators for Z^k, SL_k(Z) and free "
               "groups, with census, epimorphism-count, law and "
               "brute-force-oracle tools"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  int threads = 0;
  app.add_option("--threads", threads, "cap OpenMP parallelism");

  std::vector<std::string> raw_args(argv + 1, argv + argc);

  // ---- growth ----
  auto* growth = app.add_subcommand("growth", "evaluate a growth series");
  growth->require_subcommand(1);

  struct {
    int k = 1;
    std::string flavor = "all";
    std::string range;
    std::string mode = "exact";
    std::string format = "csv";
    bool strict_lt = false;
    bool log_mode = false;
    bool gnuplot = false;
    uint64_t log_threshold = 4000;
    Output out;
  } g;

  auto add_growth_common = [&](CLI::App* cmd, bool with_mode) {
    cmd->add_option("--k", g.k, "rank")->required();
    cmd->add_option("--flavor", g.flavor,
                    "all | normal | max | max-normal")->required();
    cmd->add_option("--n", g.range, "threshold or range a..b")->required();
    if (with_mode)
      cmd->add_option("--mode", g.mode, "exact | hybrid | estimate");
    cmd->add_option("--format", g.format, "csv | json");
    cmd->add_flag("--log", g.log_mode, "log-space evaluation");
    cmd->add_flag("--gnuplot", g.gnuplot, "two-column n / log-value output");
    cmd->add_option("--log-threshold", g.log_threshold,
                    "digit count above which exact output switches to logs");
    add_output_opts(cmd, g.out);
  };

  auto* growth_zk = growth->add_subcommand("zk", "free abelian group Z^k");
  add_growth_common(growth_zk, false);
  growth_zk->add_flag("--strict-lt", g.strict_lt,
                      "use primes strictly below n in the max flavor");

  auto* growth_slk = growth->add_subcommand("slk", "SL_k(Z), k >= 3");
  add_growth_common(growth_slk, false);

  auto* growth_free = growth->add_subcommand("free", "free group F^k");
  add_growth_common(growth_free, true);

  // ---- fit ----
  auto* fit = app.add_subcommand("fit", "least-squares growth exponent");
  struct {
    std::string target;
    int k = 3;
    std::string flavor = "max-normal";
    std::string mode = "estimate";
    std::string family = "PSL";
    long long family_m = 2;
    std::string nmin = "1000", nmax = "1000000";
    size_t points = 24;
    bool at_steps = false;
    Output out;
  } f;
  fit->add_option("--target", f.target, "zk | slk | free | family | qinvariant")
      ->required();
  fit->add_option("--k", f.k, "rank");
  fit->add_option("--flavor", f.flavor, "growth flavor");
  fit->add_option("--mode", f.mode, "free-group evaluation mode");
  fit->add_option("--family", f.family, "census family tag (family target)");
  fit->add_option("--m", f.family_m, "fixed rank within the family");
  fit->add_option("--n-min", f.nmin, "sample range start");
  fit->add_option("--n-max", f.nmax, "sample range end");
  fit->add_option("--points", f.points, "number of log-spaced samples");
  fit->add_flag("--at-steps", f.at_steps,
                "sample at the step-function jump thresholds (slk)");
  add_output_opts(fit, f.out);

  // ---- census ----
  auto* census = app.add_subcommand("census", "finite simple groups by order");
  struct {
    std::string max_order;
    bool nonabelian = false;
    bool no_sporadic = false;
    std::string format = "csv";
    Output out;
  } c;
  census->add_option("--max-order", c.max_order, "order bound")->required();
  census->add_flag("--nonabelian", c.nonabelian, "omit the cyclic entries");
  census->add_flag("--no-sporadic", c.no_sporadic, "omit sporadic entries");
  census->add_option("--format", c.format, "csv | json");
  add_output_opts(census, c.out);

  // ---- epicount ----
  auto* epi = app.add_subcommand("epicount",
                                 "generating k-tuples modulo automorphisms");
  struct {
    std::string group;
    int k = 2;
    bool naive = false;
    bool estimate = false;
    std::string format = "csv";
    Output out;
  } e;
  epi->add_option("--group", e.group, "A5 | A6 | PSL2(7) | ...")->required();
  epi->add_option("--k", e.k, "tuple length")->required();
  epi->add_flag("--naive", e.naive, "use the serial full-enumeration oracle");
  epi->add_flag("--estimate", e.estimate, "p := 1 asymptotic estimate");
  epi->add_option("--format", e.format, "csv | json");
  add_output_opts(epi, e.out);

  // ---- laws ----
  auto* laws = app.add_subcommand("laws", "identities in finite simple groups");
  laws->require_subcommand(1);
  struct {
    uint64_t n = 60;
    std::string groups;
    int max_radius = 8;
    std::string mode = "exact";
    std::string flavor = "max-normal";
    Output out;
  } l;
  auto* laws_comm = laws->add_subcommand(
      "commutator", "[x^e, y^e] with e = lcm of census exponents");
  laws_comm->add_option("--n", l.n, "group order bound")->required();
  add_output_opts(laws_comm, l.out);
  auto* laws_bfs =
      laws->add_subcommand("bfs", "shortest zero-exponent-sum law");
  laws_bfs->add_option("--groups", l.groups, "comma-separated group specs");
  laws_bfs->add_option("--max-radius", l.max_radius, "search radius (<= 14)");
  add_output_opts(laws_bfs, l.out);
  auto* laws_rf = laws->add_subcommand(
      "rf-bound", "residual-finiteness growth lower bound from i(n)");
  laws_rf->add_option("--n", l.n, "threshold")->required();
  laws_rf->add_option("--mode", l.mode, "free-group evaluation mode");
  laws_rf->add_option("--flavor", l.flavor, "max-normal (default)");
  add_output_opts(laws_rf, l.out);

  // ---- oracle ----
  auto* oracle = app.add_subcommand("oracle", "brute-force ground truth");
  oracle->require_subcommand(1);
  struct {
    uint64_t n = 6;
    int k = 1;
    uint64_t index = 1;
    std::string group;
    std::string flavor = "all";
    uint64_t a = 4, b = 9;
    bool fit = false;
    std::string format = "csv";
    Output out;
  } o;
  auto* o_lambda = oracle->add_subcommand(
      "lambda-zk", "intersection of all sublattices of index <= n");
  o_lambda->add_option("--n", o.n)->required();
  o_lambda->add_option("--k", o.k)->required();
  add_output_opts(o_lambda, o.out);
  auto* o_subl = oracle->add_subcommand("sublattices",
                                        "canonical bases of a given index");
  o_subl->add_option("--k", o.k)->required();
  o_subl->add_option("--index", o.index)->required();
  add_output_opts(o_subl, o.out);
  auto* o_qinv = oracle->add_subcommand(
      "qinvariant", "invariant sublattices under the order-8 matrix group");
  o_qinv->add_option("--n", o.n)->required();
  o_qinv->add_flag("--fit", o.fit, "also fit the growth exponent");
  add_output_opts(o_qinv, o.out);
  auto* o_subs = oracle->add_subcommand("subgroups",
                                        "subgroup sweep of a small group");
  o_subs->add_option("--group", o.group)->required();
  o_subs->add_option("--n", o.n, "index bound");
  add_output_opts(o_subs, o.out);
  auto* o_ig = oracle->add_subcommand("ig", "brute-force intersection growth");
  o_ig->add_option("--group", o.group)->required();
  o_ig->add_option("--n", o.n)->required();
  o_ig->add_option("--flavor", o.flavor);
  add_output_opts(o_ig, o.out);
  auto* o_prod = oracle->add_subcommand(
      "product-check", "direct-product rule on Z/a x Z/b");
  o_prod->add_option("--a", o.a)->required();
  o_prod->add_option("--b", o.b)->required();
  add_output_opts(o_prod, o.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    if (err.get_exit_code() == 0) return app.exit(err);
    app.exit(err);
    return 2;
  }

  if (threads > 0) omp_set_num_threads(threads);

  auto flavor_or_die = [](const std::string& tag) {
    auto fl = gl::flavor_from_tag(tag);
    if (!fl) {
      std::cerr << "unknown flavor: " << tag << "\n";
      std::exit(2);
    }
    return *fl;
  };
  auto mode_or_die = [](const std::string& tag) {
    if (tag == "exact") return gl::EvalMode::Exact;
    if (tag == "hybrid") return gl::EvalMode::Hybrid;
    if (tag == "estimate") return gl::EvalMode::Estimate;
    std::cerr << "unknown mode: " << tag << "\n";
    std::exit(2);
  };

  try {
    // ---- growth ----
    if (growth_zk->parsed() || growth_slk->parsed() || growth_free->parsed()) {
      gl::Flavor fl = flavor_or_die(g.flavor);
      auto ns = parse_range(g.range);
      gl::GrowthSeries series;
      series.flavor = fl;
      // exact cells larger than the digit threshold switch to log form
      auto clip = [&](gl::GrowthValue v) {
        if (v.kind == gl::GrowthValue::Kind::Exact &&
            gl::to_decimal(v.exact).size() > g.log_threshold)
          return gl::GrowthValue::log_value(gl::log_of(v.exact), v.mode);
        return v;
      };
      if (growth_zk->parsed()) {
        series.label = "Z^" + std::to_string(g.k);
        series.method = "closed-form";
        for (uint64_t n : ns)
          series.points.emplace_back(
              n, zk_value(n, g.k, fl, g.strict_lt, g.log_mode, g.log_threshold));
      } else if (growth_slk->parsed()) {
        series.label = "SL_" + std::to_string(g.k) + "(Z)";
        series.method = "prime-factor-product";
        for (uint64_t n : ns) {
          if (fl == gl::Flavor::Normal) {
            auto [lo, hi] = gl::ig_slk_normal_bracket(n, g.k);
            series.points.emplace_back(
                n, gl::GrowthValue::bracket(lo.log, hi.log,
                                            gl::EvalMode::Estimate));
          } else if (fl == gl::Flavor::MaxNormal || fl == gl::Flavor::Max) {
            if (g.log_mode) {
              double lg = fl == gl::Flavor::Max
                              ? gl::log_ig_slk_max(n, g.k)
                              : gl::log_ig_slk_max_normal(n, g.k);
              series.points.emplace_back(
                  n, gl::GrowthValue::log_value(lg, gl::EvalMode::Exact));
            } else {
              gl::BigNat v = fl == gl::Flavor::Max
                                 ? gl::ig_slk_max(n, g.k)
                                 : gl::ig_slk_max_normal(n, g.k);
              series.points.emplace_back(
                  n, clip(gl::GrowthValue::exact_value(std::move(v))));
            }
          } else {
            std::cerr << "slk: flavor all is not computed (use the normal "
                         "bracket)\n";
            return 2;
          }
        }
      } else {
        series = gl::ig_free_series(ns, g.k, fl, mode_or_die(g.mode));
        for (auto& [n, v] : series.points) v = clip(v);
      }
      Output out = g.out;
      out.subcommand = "growth";
      out.args = raw_args;
      out.emit(render_series(series, g.format, g.gnuplot));
      return 0;
    }

    // ---- fit ----
    if (fit->parsed()) {
      uint64_t lo = parse_n(f.nmin), hi = parse_n(f.nmax);
      gl::Flavor fl = flavor_or_die(f.flavor);
      std::vector<std::pair<double, double>> pts;
      if (f.target == "slk") {
        std::vector<uint64_t> ns =
            f.at_steps ? gl::slk_jump_thresholds(f.k, fl, lo, hi)
                       : gl::log_spaced(lo, hi, f.points);
        for (uint64_t n : ns) {
          double lg = fl == gl::Flavor::Max ? gl::log_ig_slk_max(n, f.k)
                                            : gl::log_ig_slk_max_normal(n, f.k);
          pts.emplace_back(static_cast<double>(n), lg);
        }
      } else if (f.target == "zk") {
        for (uint64_t n : gl::log_spaced(lo, hi, f.points))
          pts.emplace_back(static_cast<double>(n),
                           gl::log_ig_zk(n, f.k, fl));
      } else if (f.target == "free") {
        auto series = gl::ig_free_series(gl::log_spaced(lo, hi, f.points), f.k,
                                         fl, mode_or_die(f.mode));
        for (const auto& [n, v] : series.points)
          pts.emplace_back(static_cast<double>(n), v.log_mid());
      } else if (f.target == "family") {
        auto fam = gl::family_from_tag(f.family);
        if (!fam) {
          std::cerr << "unknown family: " << f.family << "\n";
          return 2;
        }
        for (uint64_t n : gl::log_spaced(lo, hi, f.points))
          pts.emplace_back(
              static_cast<double>(n),
              gl::family_growth(*fam, f.family_m, n, f.k, fl).value.log_mid());
      } else if (f.target == "qinvariant") {
        auto found = gl::q_invariant_scan(hi);
        for (uint64_t n : gl::log_spaced(lo, hi, f.points))
          pts.emplace_back(static_cast<double>(n),
                           gl::log_of(gl::fold_q_invariant(found, n).index()));
      } else {
        std::cerr << "unknown fit target: " << f.target << "\n";
        return 2;
      }
      auto res = gl::fit_exponent(pts);
      std::ostringstream os;
      os << "target=" << f.target << " alpha=" << gl::format_double17(res.alpha)
         << " r2=" << gl::format_double17(res.r2) << " points=" << res.points
         << "\n";
      Output out = f.out;
      out.subcommand = "fit";
      out.args = raw_args;
      out.emit(os.str());
      return 0;
    }

    // ---- census ----
    if (census->parsed()) {
      gl::BigNat bound = gl::from_decimal(c.max_order);
      auto slice = gl::enumerate_simple(bound, !c.nonabelian, !c.no_sporadic);
      std::string primary;
      if (c.format == "json") {
        primary = gl::census_to_json(slice);
      } else {
        std::ostringstream os;
        os << "name,family,m,q,order,out_order,min_index,flags\n";
        for (const auto& d : slice.entries) {
          os << d.name << "," << gl::family_tag(d.family) << "," << d.m << ","
             << d.q << "," << gl::to_decimal(d.order) << ",";
          if (d.out_order) os << *d.out_order;
          os << ",";
          if (d.min_index) os << gl::to_decimal(*d.min_index);
          os << ",";
          if (d.min_index_approx) os << "approximate-min-index";
          if (d.constructible)
            os << (d.min_index_approx ? ";constructible" : "constructible");
          os << "\n";
        }
        primary = os.str();
      }
      Output out = c.out;
      out.subcommand = "census";
      out.args = raw_args;
      out.emit(primary);
      return 0;
    }

    // ---- epicount ----
    if (epi->parsed()) {
      // descriptor via the census machinery
      gl::ConcreteGroup grp = parse_group(e.group);
      gl::SimpleGroupDescriptor desc;
      if (grp.kind() == gl::ConcreteGroup::Kind::Alternating)
        desc = gl::describe(gl::Family::Alternating,
                            std::stoll(e.group.substr(1)), 0);
      else if (grp.kind() == gl::ConcreteGroup::Kind::PSL) {
        auto open = e.group.find('('), close = e.group.find(')');
        desc = gl::describe(gl::Family::PSL, std::stoll(e.group.substr(3, open - 3)),
                            std::stoll(e.group.substr(open + 1, close - open - 1)));
      } else {
        std::cerr << "epicount: need a simple group (A_m or PSL)\n";
        return 2;
      }
      std::ostringstream os;
      if (e.estimate) {
        os << "group=" << desc.name << " k=" << e.k
           << " d_estimate=" << gl::to_decimal(gl::d_estimate(desc, e.k))
           << " mode=estimate\n";
      } else {
        gl::BigNat gen = e.naive ? gl::count_generating_tuples_naive(grp, e.k)
                                 : gl::count_generating_tuples(grp, e.k);
        auto ec = gl::epi_count(grp, desc, e.k);
        os << "group=" << desc.name << " k=" << e.k
           << " gen_tuples=" << gl::to_decimal(gen)
           << " d=" << gl::to_decimal(ec.d) << " p=" << gl::to_decimal(ec.p_num)
           << "/" << gl::to_decimal(ec.p_den)
           << " mode=" << (e.naive ? "exact-naive" : "exact") << "\n";
      }
      Output out = e.out;
      out.subcommand = "epicount";
      out.args = raw_args;
      out.emit(os.str());
      return 0;
    }

    // ---- laws ----
    if (laws_comm->parsed()) {
      auto cert = gl::commutator_law(l.n);
      Output out = l.out;
      out.subcommand = "laws";
      out.args = raw_args;
      out.emit(gl::law_to_json(cert) + "\n");
      return 0;
    }
    if (laws_bfs->parsed()) {
      std::vector<gl::ConcreteGroup> gs;
      std::stringstream ss(l.groups);
      std::string tok;
      while (std::getline(ss, tok, ','))
        if (!tok.empty()) gs.push_back(parse_group(tok));
      auto cert = gl::bfs_shortest_law(gs, l.max_radius);
      Output out = l.out;
      out.subcommand = "laws";
      out.args = raw_args;
      if (cert)
        out.emit(gl::law_to_json(*cert) + "\n");
      else
        out.emit("NOT_FOUND radius=" + std::to_string(l.max_radius) + "\n");
      return 0;
    }
    if (laws_rf->parsed()) {
      auto v = gl::ig_free(l.n, 2, flavor_or_die(l.flavor), mode_or_die(l.mode));
      auto d = gl::rf_lower_bound(l.n, v);
      Output out = l.out;
      out.subcommand = "laws";
      out.args = raw_args;
      out.emit(gl::depth_bound_to_json(d) + "\n");
      return 0;
    }

    // ---- oracle ----
    auto lattice_json = [](const gl::Lattice& lat) {
      nlohmann::json rows = nlohmann::json::array();
      for (int i = 0; i < lat.rank; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < lat.rank; ++j)
          row.push_back(gl::to_decimal(lat.at(i, j)));
        rows.push_back(std::move(row));
      }
      return rows;
    };
    if (o_lambda->parsed()) {
      auto lat = gl::brute_lambda_zk(o.n, o.k);
      nlohmann::json j;
      j["basis"] = lattice_json(lat);
      j["index"] = gl::to_decimal(lat.index());
      Output out = o.out;
      out.subcommand = "oracle";
      out.args = raw_args;
      out.emit(j.dump(2) + "\n");
      return 0;
    }
    if (o_subl->parsed()) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& lat : gl::enumerate_sublattices(o.k, o.index))
        arr.push_back(lattice_json(lat));
      Output out = o.out;
      out.subcommand = "oracle";
      out.args = raw_args;
      out.emit(arr.dump(2) + "\n");
      return 0;
    }
    if (o_qinv->parsed()) {
      auto res = gl::q_invariant_lambda(o.n);
      nlohmann::json j;
      j["n"] = o.n;
      j["inner_basis"] = lattice_json(res.inner);
      j["inner_index"] = gl::to_decimal(res.inner.index());
      j["outer_basis"] = lattice_json(res.outer);
      j["outer_index"] = gl::to_decimal(res.outer.index());
      j["invariant_lattices_found"] = res.found.size();
      if (o.fit) {
        std::vector<std::pair<double, double>> pts;
        for (uint64_t n : gl::log_spaced(10, o.n, 16))
          pts.emplace_back(static_cast<double>(n),
                           gl::log_of(gl::fold_q_invariant(res.found, n).index()));
        auto fitr = gl::fit_exponent(pts);
        j["fit_alpha"] = fitr.alpha;
        j["fit_r2"] = fitr.r2;
      }
      Output out = o.out;
      out.subcommand = "oracle";
      out.args = raw_args;
      out.emit(j.dump(2) + "\n");
      return 0;
    }
    if (o_subs->parsed()) {
      auto grp = parse_group(o.group);
      auto subs = gl::brute_subgroups(grp, o.n);
      std::ostringstream os;
      os << "order,index,normal,maximal,maximal_normal\n";
      for (const auto& s : subs)
        os << s.size << "," << gl::to_decimal(s.index) << "," << s.normal << ","
           << s.maximal << "," << s.maximal_normal << "\n";
      Output out = o.out;
      out.subcommand = "oracle";
      out.args = raw_args;
      out.emit(os.str());
      return 0;
    }
    if (o_ig->parsed()) {
      auto grp = parse_group(o.group);
      auto fl = flavor_or_die(o.flavor);
      gl::SubgroupClass cls = fl == gl::Flavor::All ? gl::SubgroupClass::All
                              : fl == gl::Flavor::Normal
                                  ? gl::SubgroupClass::Normal
                              : fl == gl::Flavor::Max ? gl::SubgroupClass::Max
                                  : gl::SubgroupClass::MaxNormal;
      std::ostringstream os;
      os << gl::to_decimal(gl::brute_ig(grp, o.n, cls)) << "\n";
      Output out = o.out;
      out.subcommand = "oracle";
      out.args = raw_args;
      out.emit(os.str());
      return 0;
    }
    if (o_prod->parsed()) {
      auto za = gl::ConcreteGroup::cyclic(static_cast<int>(o.a));
      auto zb = gl::ConcreteGroup::cyclic(static_cast<int>(o.b));
      auto prod = gl::ConcreteGroup::direct_product(za, zb);
      uint64_t ab = o.a * o.b;
      auto subs_p = gl::brute_subgroups(prod, ab);
      auto subs_a = gl::brute_subgroups(za, ab);
      auto subs_b = gl::brute_subgroups(zb, ab);
      std::ostringstream os;
      os << "n,product,factor_a,factor_b,match\n";
      bool all_ok = true;
      for (uint64_t n = 1; n <= ab; ++n) {
        auto lhs = gl::brute_ig_from(subs_p, prod.order(), n,
                                     gl::SubgroupClass::All);
        auto ra = gl::brute_ig_from(subs_a, za.order(), n,
                                    gl::SubgroupClass::All);
        auto rb = gl::brute_ig_from(subs_b, zb.order(), n,
                                    gl::SubgroupClass::All);
        bool ok = lhs == ra * rb;
        all_ok = all_ok && ok;
        os << n << "," << gl::to_decimal(lhs) << "," << gl::to_decimal(ra)
           << "," << gl::to_decimal(rb) << "," << (ok ? "yes" : "NO") << "\n";
      }
      Output out = o.out;
      out.subcommand = "oracle";
      out.args = raw_args;
      out.emit(os.str());
      return all_ok ? 0 : 1;
    }
  } catch (const gl::BudgetExceeded& ex) {
    std::cerr << "budget exceeded: " << ex.what() << "\n";
    return 3;
  } catch (const CLI::ValidationError& ex) {
    std::cerr << ex.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "invalid argument: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 2;
}
