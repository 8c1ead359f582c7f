// Command-line front end: evaluation, diagonal series, sharp-constant
// solving, chain/monotonicity verification, and conjecture scanning, with
// deterministic JSON/CSV output.
//
// Exit codes: 0 pass or value, 1 any violation or failed search, 2 usage
// error.

#include <cstdio>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ptmeans/means.hpp"
#include "ptmeans/series.hpp"
#include "ptmeans/sharp.hpp"
#include "ptmeans/verify.hpp"
#include "record.hpp"

using namespace ptmeans;
using ptmcli::format_double;
using ptmcli::Json;
using ptmcli::OutputRecord;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

enum class Format { human, json, csv };

int usage_error(const std::string& msg) {
  std::fprintf(stderr, "error: %s\n", msg.c_str());
  return kExitUsage;
}

void add_format_option(CLI::App* cmd, Format* fmt) {
  cmd->add_option("--format", *fmt, "output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"human", Format::human},
                                        {"json", Format::json},
                                        {"csv", Format::csv}},
          CLI::ignore_case));
}

double parse_order_or_throw(const std::string& text) {
  const auto p = parse_order(text);
  if (!p) throw CLI::ValidationError("--p", "not a number or rational: " + text);
  return *p;
}

MeanKind parse_kind_or_throw(const std::string& tag) {
  const auto kind = parse_mean_tag(tag);
  if (!kind) {
    throw CLI::ValidationError(
        "mean", "unknown mean '" + tag + "' (expected one of A G He L I P T N Z Y)");
  }
  return *kind;
}

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------

struct EvalArgs {
  std::string mean;
  std::string p = "1";
  double a = 0.0, b = 0.0;
  Format format = Format::human;
};

int run_eval(const EvalArgs& args) {
  const PowerTypeSpec spec{parse_kind_or_throw(args.mean),
                           parse_order_or_throw(args.p)};
  MeanValue mv;
  try {
    mv = power_type_eval(spec, args.a, args.b);
  } catch (const std::domain_error& e) {
    return usage_error(e.what());
  }
  switch (args.format) {
    case Format::human:
      std::printf("%s(%s, %s) = %s\n", format_spec(spec).c_str(),
                  format_double(args.a).c_str(), format_double(args.b).c_str(),
                  format_double(mv.value).c_str());
      break;
    case Format::json: {
      OutputRecord rec;
      rec.command = "eval";
      rec.inputs["mean"] = std::string(mean_tag(spec.kind));
      rec.inputs["p"] = spec.p;
      rec.inputs["a"] = args.a;
      rec.inputs["b"] = args.b;
      rec.results["value"] = mv.value;
      rec.results["rel_error_bound"] = mv.rel_error_bound;
      rec.status = "value";
      std::printf("%s\n", rec.to_json().c_str());
      break;
    }
    case Format::csv:
      std::printf("mean,p,a,b,value,rel_error_bound\n%s,%s,%s,%s,%s,%s\n",
                  std::string(mean_tag(spec.kind)).c_str(),
                  format_double(spec.p).c_str(), format_double(args.a).c_str(),
                  format_double(args.b).c_str(), format_double(mv.value).c_str(),
                  format_double(mv.rel_error_bound).c_str());
      break;
  }
  return kExitPass;
}

// ---------------------------------------------------------------------------
// series
// ---------------------------------------------------------------------------

struct SeriesArgs {
  std::string mean;
  std::string p = "1";
  int order = kDefaultSeriesOrder;
  Format format = Format::human;
};

int run_series(const SeriesArgs& args) {
  const MeanKind kind = parse_kind_or_throw(args.mean);
  const double p = parse_order_or_throw(args.p);
  if (args.order < 2) return usage_error("--order must be at least 2");
  if (p == 0.0) {
    return usage_error("p = 0 is unsupported for series (M_0 is sqrt(ab))");
  }
  const Jet jet = p == 1.0 ? mean_series(kind, args.order)
                           : power_type_series({kind, p}, args.order);
  switch (args.format) {
    case Format::human:
      for (int k = 0; k <= jet.order(); ++k) {
        std::printf("c[%d] = %s\n", k, format_double(jet[k]).c_str());
      }
      break;
    case Format::json: {
      OutputRecord rec;
      rec.command = "series";
      rec.inputs["mean"] = std::string(mean_tag(kind));
      rec.inputs["p"] = p;
      rec.inputs["order"] = args.order;
      Json coeffs = Json::array();
      for (int k = 0; k <= jet.order(); ++k) coeffs.push_back(jet[k]);
      rec.results["coefficients"] = coeffs;
      rec.status = "value";
      std::printf("%s\n", rec.to_json().c_str());
      break;
    }
    case Format::csv:
      std::printf("k,coefficient\n");
      for (int k = 0; k <= jet.order(); ++k) {
        std::printf("%d,%s\n", k, format_double(jet[k]).c_str());
      }
      break;
  }
  return kExitPass;
}

// ---------------------------------------------------------------------------
// sharp
// ---------------------------------------------------------------------------

struct SharpArgs {
  std::string family;
  std::string reference;
  std::string direction;
  Format format = Format::human;
};

int run_sharp(const SharpArgs& args) {
  ComparisonPair pair;
  pair.family = parse_kind_or_throw(args.family);
  const auto ref = parse_spec(args.reference);
  if (!ref) return usage_error("bad --reference spec: " + args.reference);
  pair.reference = *ref;
  if (args.direction == "below") {
    pair.direction = Direction::family_below;
  } else if (args.direction == "above") {
    pair.direction = Direction::family_above;
  } else {
    return usage_error("--direction must be 'below' or 'above'");
  }

  const auto report = critical_exponent(pair);
  if (!report) {
    std::fprintf(stderr,
                 "no sharp order found: c2 does not change sign on [-64, 64] "
                 "for this pair\n");
    return kExitViolation;
  }

  // The (T_p, N) comparison is the open conjecture: only its necessity
  // half is proven.
  const bool conjectural = pair.family == MeanKind::SeiffertSecond &&
                           pair.reference.kind == MeanKind::NeumanSandor &&
                           pair.reference.p == 1.0 &&
                           pair.direction == Direction::family_above;
  const std::string fam_tag(mean_tag(pair.family));
  const std::string ref_name = format_spec(pair.reference);
  const std::string verdict =
      pair.direction == Direction::family_below
          ? fam_tag + "_p < " + ref_name + " if and only if p <= " +
                format_double(report->p_star)
          : ref_name + " < " + fam_tag + "_p if and only if p >= " +
                format_double(report->p_star);

  switch (args.format) {
    case Format::human: {
      std::printf("pair:      %s_p vs %s (%s)\n", fam_tag.c_str(),
                  ref_name.c_str(), args.direction.c_str());
      std::printf("p* =       %s\n", format_double(report->p_star).c_str());
      std::printf("c2 slope = %s\n", format_double(report->c2_slope).c_str());
      if (report->endpoint_gap_at_p_star) {
        std::printf("endpoint gap (family - reference) at p*:      %s\n",
                    format_double(*report->endpoint_gap_at_p_star).c_str());
      }
      if (report->endpoint_gap_below) {
        std::printf("endpoint gap at p* - 1e-3:                    %s\n",
                    format_double(*report->endpoint_gap_below).c_str());
      }
      if (report->endpoint_gap_above) {
        std::printf("endpoint gap at p* + 1e-3:                    %s\n",
                    format_double(*report->endpoint_gap_above).c_str());
      }
      std::printf("verdict:   %s%s\n", verdict.c_str(),
                  conjectural ? "  [conjectural sufficiency]" : "");
      break;
    }
    case Format::json: {
      OutputRecord rec;
      rec.command = "sharp";
      rec.inputs["family"] = fam_tag;
      rec.inputs["reference"] = ref_name;
      rec.inputs["direction"] = args.direction;
      rec.results["p_star"] = report->p_star;
      rec.results["c2_slope"] = report->c2_slope;
      Json samples = Json::array();
      for (const auto& [p, c2] : report->c2_samples) {
        Json pt = Json::array();
        pt.push_back(p);
        pt.push_back(c2);
        samples.push_back(pt);
      }
      rec.results["c2_samples"] = samples;
      rec.results["endpoint_gap_at_p_star"] =
          report->endpoint_gap_at_p_star ? Json(*report->endpoint_gap_at_p_star)
                                         : Json();
      rec.results["endpoint_gap_below"] =
          report->endpoint_gap_below ? Json(*report->endpoint_gap_below) : Json();
      rec.results["endpoint_gap_above"] =
          report->endpoint_gap_above ? Json(*report->endpoint_gap_above) : Json();
      rec.results["verdict"] = verdict;
      rec.results["conjectural_sufficiency"] = conjectural;
      rec.status = "value";
      std::printf("%s\n", rec.to_json().c_str());
      break;
    }
    case Format::csv:
      std::printf("family,reference,direction,p_star,c2_slope,conjectural\n");
      std::printf("%s,%s,%s,%s,%s,%d\n", fam_tag.c_str(), ref_name.c_str(),
                  args.direction.c_str(), format_double(report->p_star).c_str(),
                  format_double(report->c2_slope).c_str(), conjectural ? 1 : 0);
      break;
  }
  return kExitPass;
}

// ---------------------------------------------------------------------------
// chain
// ---------------------------------------------------------------------------

struct ChainArgs {
  std::string name;
  int samples = 2000;
  Format format = Format::human;
};

int run_chain(const ChainArgs& args) {
  const ChainSpec* chain = find_chain(args.name);
  if (chain == nullptr) {
    std::string names;
    for (const ChainSpec& c : builtin_chains()) {
      if (!names.empty()) names += ", ";
      names += c.name;
    }
    return usage_error("unknown chain '" + args.name + "'; built-ins: " + names);
  }
  if (args.samples < 2) return usage_error("--samples must be at least 2");
  const auto grid = default_chain_grid(args.samples);
  const ChainReport report = verify_chain(*chain, grid);

  switch (args.format) {
    case Format::human: {
      std::printf("chain %s over %zu grid points on [1e-6, 1-1e-6]\n",
                  chain->name.c_str(), grid.size());
      for (size_t i = 0; i + 1 < chain->links.size(); ++i) {
        std::printf("  %-22s < %-22s min rel gap %13s at x = %s\n",
                    chain->links[i].label.c_str(),
                    chain->links[i + 1].label.c_str(),
                    format_double(report.link_gaps[i].min_gap).c_str(),
                    format_double(report.link_gaps[i].argmin_x).c_str());
      }
      std::printf("violations: %zu\n%s\n", report.violations.size(),
                  report.pass ? "PASS" : "FAIL");
      break;
    }
    case Format::json: {
      OutputRecord rec;
      rec.command = "chain";
      rec.inputs["name"] = chain->name;
      rec.inputs["samples"] = args.samples;
      Json links = Json::array();
      for (size_t i = 0; i + 1 < chain->links.size(); ++i) {
        Json l = Json::object();
        l["lhs"] = chain->links[i].label;
        l["rhs"] = chain->links[i + 1].label;
        l["min_gap"] = report.link_gaps[i].min_gap;
        l["argmin_x"] = report.link_gaps[i].argmin_x;
        links.push_back(l);
      }
      rec.results["links"] = links;
      Json violations = Json::array();
      for (const ChainViolation& v : report.violations) {
        Json o = Json::object();
        o["link"] = v.link;
        o["x"] = v.x;
        o["lhs"] = v.lhs;
        o["rhs"] = v.rhs;
        violations.push_back(o);
      }
      rec.results["violations"] = violations;
      rec.status = report.pass ? "pass" : "fail";
      std::printf("%s\n", rec.to_json().c_str());
      break;
    }
    case Format::csv: {
      // One gap record per (x, link).
      std::printf("name,x,lhs_spec,rhs_spec,lhs,rhs,gap\n");
      for (double x : report.grid) {
        for (size_t i = 0; i + 1 < chain->links.size(); ++i) {
          const double lhs = power_type_eval(chain->links[i].spec, x, 1.0).value;
          const double rhs =
              power_type_eval(chain->links[i + 1].spec, x, 1.0).value;
          std::printf("%s,%s,%s,%s,%s,%s,%s\n", chain->name.c_str(),
                      format_double(x).c_str(), chain->links[i].label.c_str(),
                      chain->links[i + 1].label.c_str(),
                      format_double(lhs).c_str(), format_double(rhs).c_str(),
                      format_double((rhs - lhs) / rhs).c_str());
        }
      }
      break;
    }
  }
  return report.pass ? kExitPass : kExitViolation;
}

// ---------------------------------------------------------------------------
// mono
// ---------------------------------------------------------------------------

struct MonoArgs {
  std::string mean;
  double pmin = -10.0, pmax = 10.0;
  int steps = 41;
  double a = 0.0, b = 0.0;
  Format format = Format::human;
};

int run_mono(const MonoArgs& args) {
  const MeanKind kind = parse_kind_or_throw(args.mean);
  if (args.steps < 2) return usage_error("--steps must be at least 2");
  if (!(args.pmin < args.pmax)) return usage_error("--pmin must be < --pmax");
  std::vector<double> ps(static_cast<size_t>(args.steps));
  for (int i = 0; i < args.steps; ++i) {
    ps[static_cast<size_t>(i)] =
        args.pmin + (args.pmax - args.pmin) * i / (args.steps - 1);
  }
  const std::vector<std::pair<double, double>> pts = {{args.a, args.b}};
  MonotonicityReport report;
  try {
    report = verify_monotonicity_in_p(kind, ps, pts);
  } catch (const std::domain_error& e) {
    return usage_error(e.what());
  }

  switch (args.format) {
    case Format::human:
      std::printf("%s_p on p in [%s, %s] (%d steps) at (%s, %s): %s\n",
                  std::string(mean_tag(kind)).c_str(),
                  format_double(args.pmin).c_str(),
                  format_double(args.pmax).c_str(), args.steps,
                  format_double(args.a).c_str(), format_double(args.b).c_str(),
                  report.pass ? "strictly increasing, PASS" : "FAIL");
      for (const MonotonicityViolation& v : report.violations) {
        std::printf("  violation: M_%s = %s > M_%s = %s\n",
                    format_double(v.p_lo).c_str(), format_double(v.value_lo).c_str(),
                    format_double(v.p_hi).c_str(), format_double(v.value_hi).c_str());
      }
      break;
    case Format::json: {
      OutputRecord rec;
      rec.command = "mono";
      rec.inputs["mean"] = std::string(mean_tag(kind));
      rec.inputs["pmin"] = args.pmin;
      rec.inputs["pmax"] = args.pmax;
      rec.inputs["steps"] = args.steps;
      rec.inputs["a"] = args.a;
      rec.inputs["b"] = args.b;
      Json violations = Json::array();
      for (const MonotonicityViolation& v : report.violations) {
        Json o = Json::object();
        o["p_lo"] = v.p_lo;
        o["p_hi"] = v.p_hi;
        o["value_lo"] = v.value_lo;
        o["value_hi"] = v.value_hi;
        violations.push_back(o);
      }
      rec.results["violations"] = violations;
      rec.status = report.pass ? "pass" : "fail";
      std::printf("%s\n", rec.to_json().c_str());
      break;
    }
    case Format::csv: {
      std::printf("mean,p,a,b,value\n");
      for (double p : ps) {
        std::printf("%s,%s,%s,%s,%s\n", std::string(mean_tag(kind)).c_str(),
                    format_double(p).c_str(), format_double(args.a).c_str(),
                    format_double(args.b).c_str(),
                    format_double(power_type_eval({kind, p}, args.a, args.b).value)
                        .c_str());
      }
      break;
    }
  }
  return report.pass ? kExitPass : kExitViolation;
}

// ---------------------------------------------------------------------------
// conjecture
// ---------------------------------------------------------------------------

struct ConjectureArgs {
  std::string p;
  int samples = 2000;
  Format format = Format::human;
};

int run_conjecture(const ConjectureArgs& args) {
  const double p = parse_order_or_throw(args.p);
  if (!(p > 0.0)) return usage_error("--p must be positive");
  if (args.samples < 1) return usage_error("--samples must be positive");
  const ScanGrid grid = ScanGrid::default_grid(args.samples);
  const PairScanReport report = conjecture_scan(p, grid);

  switch (args.format) {
    case Format::human:
      std::printf("scan of N < T_p at p = %s over %zu points of (0, 1)\n",
                  format_double(p).c_str(), grid.xs.size());
      std::printf("min rel gap %s at x = %s; violations: %zu\n",
                  format_double(report.min_gap).c_str(),
                  format_double(report.argmin_x).c_str(),
                  report.violations.size());
      std::printf("%s\n", report.pass ? "PASS" : "FAIL");
      break;
    case Format::json: {
      OutputRecord rec;
      rec.command = "conjecture";
      rec.inputs["p"] = p;
      rec.inputs["samples"] = args.samples;
      rec.results["min_gap"] = report.min_gap;
      rec.results["argmin_x"] = report.argmin_x;
      Json violations = Json::array();
      for (const ScanViolation& v : report.violations) {
        Json o = Json::object();
        o["x"] = v.x;
        o["lower"] = v.lower;
        o["upper"] = v.upper;
        violations.push_back(o);
      }
      rec.results["violations"] = violations;
      rec.status = report.pass ? "pass" : "fail";
      std::printf("%s\n", rec.to_json().c_str());
      break;
    }
    case Format::csv: {
      std::printf("name,x,lhs_spec,rhs_spec,lhs,rhs,gap\n");
      const std::string tp = "T:" + std::string(format_double(p));
      for (double x : grid.xs) {
        const double n = power_type_eval({MeanKind::NeumanSandor, 1.0}, x, 1.0).value;
        const double t = power_type_eval({MeanKind::SeiffertSecond, p}, x, 1.0).value;
        std::printf("conjecture,%s,N,%s,%s,%s,%s\n", format_double(x).c_str(),
                    tp.c_str(), format_double(n).c_str(), format_double(t).c_str(),
                    format_double((t - n) / t).c_str());
      }
      break;
    }
  }
  return report.pass ? kExitPass : kExitViolation;
}

// ---------------------------------------------------------------------------
// witness
// ---------------------------------------------------------------------------

struct WitnessArgs {
  int which = 0;
  double x = -1.0;
  int samples = 500;
  Format format = Format::human;
};

int run_witness(const WitnessArgs& args) {
  if (args.which < 1 || args.which > 3) {
    return usage_error("--which must be 1, 2, or 3");
  }
  if (args.x >= 0.0) {
    double v;
    try {
      v = witness_f(args.which, args.x);
    } catch (const std::domain_error& e) {
      return usage_error(e.what());
    }
    switch (args.format) {
      case Format::json: {
        OutputRecord rec;
        rec.command = "witness";
        rec.inputs["which"] = args.which;
        rec.inputs["x"] = args.x;
        rec.results["value"] = v;
        rec.status = "value";
        std::printf("%s\n", rec.to_json().c_str());
        break;
      }
      case Format::csv:
        std::printf("which,x,value\n%d,%s,%s\n", args.which,
                    format_double(args.x).c_str(), format_double(v).c_str());
        break;
      case Format::human:
        std::printf("f%d(%s) = %s\n", args.which, format_double(args.x).c_str(),
                    format_double(v).c_str());
        break;
    }
    return kExitPass;
  }

  // Grid scan: positive and strictly decreasing across (0, 1).
  if (args.samples < 2) return usage_error("--samples must be at least 2");
  bool positive = true, decreasing = true;
  double prev = 0.0;
  double last_value = 0.0;
  for (int i = 1; i <= args.samples; ++i) {
    const double x = static_cast<double>(i) / (args.samples + 1);
    const double v = witness_f(args.which, x);
    if (v <= 0.0) positive = false;
    if (i > 1 && v >= prev) decreasing = false;
    prev = v;
    last_value = v;
  }
  const bool pass = positive && decreasing;
  switch (args.format) {
    case Format::json: {
      OutputRecord rec;
      rec.command = "witness";
      rec.inputs["which"] = args.which;
      rec.inputs["samples"] = args.samples;
      rec.results["positive"] = positive;
      rec.results["strictly_decreasing"] = decreasing;
      rec.results["value_at_right_end"] = last_value;
      rec.status = pass ? "pass" : "fail";
      std::printf("%s\n", rec.to_json().c_str());
      break;
    }
    case Format::csv:
      std::printf("which,samples,positive,strictly_decreasing,value_at_right_end\n");
      std::printf("%d,%d,%d,%d,%s\n", args.which, args.samples, positive ? 1 : 0,
                  decreasing ? 1 : 0, format_double(last_value).c_str());
      break;
    case Format::human:
      std::printf("f%d on %d points of (0, 1): positive=%s decreasing=%s\n%s\n",
                  args.which, args.samples, positive ? "yes" : "no",
                  decreasing ? "yes" : "no", pass ? "PASS" : "FAIL");
      break;
  }
  return pass ? kExitPass : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"power-type bivariate means: evaluation, diagonal series, "
               "sharp orders, and inequality verification"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate M_p(a, b)");
  eval_cmd->add_option("--mean", eval_args.mean, "mean tag (A G He L I P T N Z Y)")
      ->required();
  eval_cmd->add_option("--p", eval_args.p, "order p (decimal or rational)");
  eval_cmd->add_option("--a", eval_args.a, "first argument")->required();
  eval_cmd->add_option("--b", eval_args.b, "second argument")->required();
  add_format_option(eval_cmd, &eval_args.format);

  SeriesArgs series_args;
  CLI::App* series_cmd =
      app.add_subcommand("series", "diagonal Taylor coefficients of M_p(x, 1)");
  series_cmd->add_option("--mean", series_args.mean, "mean tag")->required();
  series_cmd->add_option("--p", series_args.p, "order p (default 1)");
  series_cmd->add_option("--order", series_args.order, "truncation order (>= 2)")
      ->required();
  add_format_option(series_cmd, &series_args.format);

  SharpArgs sharp_args;
  CLI::App* sharp_cmd =
      app.add_subcommand("sharp", "solve for the sharp order p* of F_p vs G");
  sharp_cmd->add_option("--family", sharp_args.family, "parametrized mean tag")
      ->required();
  sharp_cmd->add_option("--reference", sharp_args.reference, "fixed side KIND[:P]")
      ->required();
  sharp_cmd
      ->add_option("--direction", sharp_args.direction,
                   "claimed side of the family: below|above")
      ->required();
  add_format_option(sharp_cmd, &sharp_args.format);

  ChainArgs chain_args;
  CLI::App* chain_cmd = app.add_subcommand("chain", "verify a built-in chain");
  chain_cmd->add_option("--name", chain_args.name, "chain name")->required();
  chain_cmd->add_option("--samples", chain_args.samples, "grid size (default 2000)");
  add_format_option(chain_cmd, &chain_args.format);

  MonoArgs mono_args;
  CLI::App* mono_cmd =
      app.add_subcommand("mono", "check monotonicity of p -> M_p(a, b)");
  mono_cmd->add_option("--mean", mono_args.mean, "mean tag")->required();
  mono_cmd->add_option("--pmin", mono_args.pmin, "lower p");
  mono_cmd->add_option("--pmax", mono_args.pmax, "upper p");
  mono_cmd->add_option("--steps", mono_args.steps, "grid size (default 41)");
  mono_cmd->add_option("--a", mono_args.a, "first argument")->required();
  mono_cmd->add_option("--b", mono_args.b, "second argument")->required();
  add_format_option(mono_cmd, &mono_args.format);

  ConjectureArgs conj_args;
  CLI::App* conj_cmd =
      app.add_subcommand("conjecture", "scan the N < T_p claim over (0, 1)");
  conj_cmd->add_option("--p", conj_args.p, "order p > 0")->required();
  conj_cmd->add_option("--samples", conj_args.samples,
                       "uniform grid size (default 2000)");
  add_format_option(conj_cmd, &conj_args.format);

  WitnessArgs wit_args;
  CLI::App* wit_cmd = app.add_subcommand(
      "witness", "evaluate or scan the sufficiency witnesses f1, f2, f3");
  wit_cmd->add_option("--which", wit_args.which, "witness index 1|2|3")->required();
  wit_cmd->add_option("--x", wit_args.x, "evaluate at a single x in (0, 1)");
  wit_cmd->add_option("--samples", wit_args.samples, "scan grid size (default 500)");
  add_format_option(wit_cmd, &wit_args.format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (eval_cmd->parsed()) return run_eval(eval_args);
    if (series_cmd->parsed()) return run_series(series_args);
    if (sharp_cmd->parsed()) return run_sharp(sharp_args);
    if (chain_cmd->parsed()) return run_chain(chain_args);
    if (mono_cmd->parsed()) return run_mono(mono_args);
    if (conj_cmd->parsed()) return run_conjecture(conj_args);
    if (wit_cmd->parsed()) return run_witness(wit_args);
  } catch (const CLI::ValidationError& e) {
    return usage_error(e.what());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
