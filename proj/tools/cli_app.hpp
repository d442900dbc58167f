#pragma once

// Command-line front end. Exit codes: 0 success / verification pass,
// 1 statistical verification failure, 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cauchy/cauchy.hpp"

namespace cauchy::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

enum class Format { csv, json, pretty };

inline std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, round_decimals(x, digits));
  return buf;
}

inline std::string full(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::string significant(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline int cmd_table(Streams io, int dmin, int dmax, Format fmt, int digits) {
  if (digits < 3 || digits > 15) throw usage_error("--digits must be in [3, 15]");
  const auto rows = table(dmin, dmax);
  switch (fmt) {
    case Format::csv:
      io.out << "d,k\n";
      for (const auto& r : rows) io.out << r.d << ',' << fixed(r.k, digits) << '\n';
      break;
    case Format::json: {
      auto arr = nlohmann::json::array();
      for (const auto& r : rows) arr.push_back({{"d", r.d}, {"k", r.k}});
      io.out << arr.dump() << '\n';
      break;
    }
    case Format::pretty:
      io.out << std::setw(4) << "d" << "  k(d)\n";
      for (const auto& r : rows) io.out << std::setw(4) << r.d << "  " << fixed(r.k, digits) << '\n';
      if (dmin <= 5 && dmax >= 5 && digits < 4)
        io.out << "note: k(5) = 3/16 = 0.1875 exactly; compare it at 4 decimals\n";
      break;
  }
  return kExitOk;
}

inline int cmd_series(Streams io, int d, int terms, bool compare, Format fmt, int digits) {
  const double s = k_series(d, terms);
  const double k = compare ? k_closed(d) : 0.0;
  const double rel = compare ? std::abs(s / k - 1.0) : 0.0;
  switch (fmt) {
    case Format::csv:
      io.out << "d,terms,series" << (compare ? ",k_closed,rel_err" : "") << '\n';
      io.out << d << ',' << terms << ',' << significant(s, digits);
      if (compare) io.out << ',' << significant(k, digits) << ',' << significant(rel, 3);
      io.out << '\n';
      break;
    case Format::json: {
      nlohmann::json j{{"d", d}, {"terms", terms}, {"series", s}};
      if (compare) {
        j["k_closed"] = k;
        j["rel_err"] = rel;
      }
      io.out << j.dump() << '\n';
      break;
    }
    case Format::pretty:
      io.out << "k_series(" << d << ", " << terms << ") = " << significant(s, digits) << '\n';
      if (compare) {
        io.out << "k_closed(" << d << ")    = " << significant(k, digits) << '\n';
        io.out << "relative error  = " << significant(rel, 3) << '\n';
      }
      break;
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string shape = "cube";
  int d = 0;  // 0 = take from file, 3 for analytic shapes
  std::int64_t n = 100000;
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

inline Shape make_shape(const VerifyArgs& a) {
  if (a.shape.rfind("file:", 0) == 0) {
    Polytope p = read_polytope_file(a.shape.substr(5));
    if (a.d != 0 && a.d != p.dim())
      throw usage_error("--d " + std::to_string(a.d) + " does not match the file's dimension " + std::to_string(p.dim()));
    return p;
  }
  const int d = a.d == 0 ? 3 : a.d;
  if (a.shape == "ball") return Ball(d, 1.0);
  if (a.shape == "cube") return Cube(d, 1.0);
  throw usage_error("--shape must be ball, cube or file:<path>, got '" + a.shape + "'");
}

inline int cmd_verify(Streams io, const VerifyArgs& a, Format fmt, int digits) {
  if (a.n < 2) throw usage_error("--n must be >= 2");
  const Shape shape = make_shape(a);
  const Verification v = verify_ratio(shape, a.n, Seed{a.seed}, EstimatorOptions{a.threads});
  const auto& e = v.estimate;
  switch (fmt) {
    case Format::csv:
      io.out << "shape,d,n,seed,mean,stderr,surface,k,predicted,z,pass\n";
      io.out << a.shape << ',' << e.dim << ',' << e.n_samples << ',' << e.seed.value << ','
             << significant(e.mean, digits) << ',' << significant(e.std_error, digits) << ','
             << significant(v.surface, digits) << ',' << significant(v.k, digits) << ','
             << significant(v.predicted, digits) << ',' << significant(v.z, 4) << ',' << (v.pass ? "true" : "false")
             << '\n';
      break;
    case Format::json:
      io.out << nlohmann::json{{"shape", a.shape},        {"d", e.dim},          {"n", e.n_samples},
                               {"seed", e.seed.value},    {"mean", e.mean},      {"stderr", e.std_error},
                               {"surface", v.surface},    {"k", v.k},            {"predicted", v.predicted},
                               {"z", v.z},                {"pass", v.pass}}
                    .dump()
             << '\n';
      break;
    case Format::pretty:
      io.out << "shape      " << a.shape << " (d=" << e.dim << ")\n"
             << "samples    " << e.n_samples << " (seed " << e.seed.value << ")\n"
             << "mean       " << significant(e.mean, digits) << " +- " << significant(e.std_error, 3) << '\n'
             << "surface    " << significant(v.surface, digits) << '\n'
             << "k(d)       " << significant(v.k, digits) << '\n'
             << "predicted  " << significant(v.predicted, digits) << '\n'
             << "z          " << significant(v.z, 4) << '\n'
             << (v.pass ? "PASS" : "FAIL") << '\n';
      break;
  }
  return v.pass ? kExitOk : kExitFail;
}

inline int cmd_grain(Streams io, const GrainParams& p, Format fmt) {
  const double t = equilibrium_temperature(p);
  switch (fmt) {
    case Format::csv: io.out << "T_grain_K\n" << significant(t, 6) << '\n'; break;
    case Format::json: io.out << nlohmann::json{{"T_grain_K", t}}.dump() << '\n'; break;
    case Format::pretty: io.out << "T_grain = " << significant(t, 6) << " K\n"; break;
  }
  return kExitOk;
}

inline int cmd_plotdata(Streams io, int dmax, Format fmt) {
  const auto rows = table(2, dmax);
  if (fmt == Format::json) {
    auto arr = nlohmann::json::array();
    for (const auto& r : rows)
      arr.push_back({{"d", r.d}, {"k_closed", r.k}, {"k_series5", k_series(r.d, 5)}, {"leading_term", k_series(r.d, 1)}});
    io.out << arr.dump() << '\n';
    return kExitOk;
  }
  io.out << "d,k_closed,k_series5,leading_term\n";
  for (const auto& r : rows)
    io.out << r.d << ',' << full(r.k) << ',' << full(k_series(r.d, 5)) << ',' << full(k_series(r.d, 1)) << '\n';
  return kExitOk;
}

/// Runs the CLI on `args` (program name excluded).
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  Streams io{out, err};
  CLI::App app{"Average projected area to surface area ratio k(d): tables, series, Monte Carlo checks"};
  app.name("cauchy");
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{{"csv", Format::csv}, {"json", Format::json}, {"pretty", Format::pretty}};
  auto add_format = [&](CLI::App* sub, Format& target) {
    sub->add_option("--format", target, "csv, json or pretty")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->default_str(target == Format::csv ? "csv" : "pretty");
  };

  int dmin = 2, dmax = 33, digits = 6;
  auto* table_cmd = app.add_subcommand("table", "k(d) for a range of dimensions");
  table_cmd->add_option("--dmin", dmin, "smallest dimension (>= 2)")->capture_default_str();
  table_cmd->add_option("--dmax", dmax, "largest dimension (<= 64)")->capture_default_str();
  table_cmd->add_option("--digits", digits, "decimals printed in csv/pretty output, 3..15")->capture_default_str();

  int d = 5, terms = 5;
  bool compare = false;
  auto* series_cmd = app.add_subcommand("series", "large-d expansion of k(d)");
  series_cmd->add_option("--d", d, "dimension (>= 2)")->capture_default_str();
  series_cmd->add_option("--terms", terms, "number of series terms, 1..5")->capture_default_str();
  series_cmd->add_flag("--compare", compare, "also print the closed form and the relative error");
  int series_digits = 10;
  series_cmd->add_option("--digits", series_digits, "significant digits in csv/pretty output")->capture_default_str();

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Monte Carlo check of mean shadow = k(d) * surface area");
  verify_cmd->add_option("--shape", va.shape, "ball, cube or file:<path>")->capture_default_str();
  verify_cmd->add_option("--d", va.d, "dimension (default 3; file shapes default to the file's)");
  verify_cmd->add_option("--n", va.n, "number of random directions")->capture_default_str();
  verify_cmd->add_option("--seed", va.seed, "random seed")->capture_default_str();
  verify_cmd->add_option("--threads", va.threads, "worker threads, 0 = all cores")->capture_default_str();
  int verify_digits = 8;
  verify_cmd->add_option("--digits", verify_digits, "significant digits in csv/pretty output")->capture_default_str();

  GrainParams gp{5778.0, 6.957e8, 1.496e11, 0.0, 0.25};
  auto* grain_cmd = app.add_subcommand("grain", "equilibrium temperature of a convex dust grain");
  grain_cmd->add_option("--tstar", gp.star_temperature, "stellar temperature [K]")->capture_default_str();
  grain_cmd->add_option("--rstar", gp.star_radius, "stellar radius [m]")->capture_default_str();
  grain_cmd->add_option("--dist", gp.distance, "grain-star distance [m]")->capture_default_str();
  grain_cmd->add_option("--albedo", gp.albedo, "albedo, 0..1")->capture_default_str();
  grain_cmd->add_option("--ratio", gp.ratio, "mean projected area / surface area")->capture_default_str();

  int plot_dmax = 33;
  auto* plot_cmd = app.add_subcommand("plotdata", "k(d), five-term series and leading term for plotting");
  plot_cmd->add_option("--dmax", plot_dmax, "largest dimension (<= 64)")->capture_default_str();

  Format table_fmt = Format::csv, series_fmt = Format::csv, verify_fmt = Format::pretty,
         grain_fmt = Format::pretty, plot_fmt = Format::csv;
  add_format(table_cmd, table_fmt);
  add_format(series_cmd, series_fmt);
  add_format(verify_cmd, verify_fmt);
  add_format(grain_cmd, grain_fmt);
  add_format(plot_cmd, plot_fmt);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*table_cmd) return cmd_table(io, dmin, dmax, table_fmt, digits);
    if (*series_cmd) return cmd_series(io, d, terms, compare, series_fmt, series_digits);
    if (*verify_cmd) return cmd_verify(io, va, verify_fmt, verify_digits);
    if (*grain_cmd) return cmd_grain(io, gp, grain_fmt);
    if (*plot_cmd) {
      if (plot_dmax < 2 || plot_dmax > kTableMaxDimension) throw usage_error("--dmax must be in [2, 64]");
      return cmd_plotdata(io, plot_dmax, plot_fmt);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cauchy::cli
