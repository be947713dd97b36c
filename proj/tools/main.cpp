// Command-line front end: runs the derivation pipeline, evaluates means,
// verifies solution families numerically, and prints the candidate
// refutations. Exit codes: 0 success, 1 verification failure, 2 usage error.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "stolarsky/engine.hpp"
#include "stolarsky/families.hpp"
#include "stolarsky/means.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct CliOptions {
  stolarsky::RunConfig cfg;
  std::string out_path;
  std::string format = "text";
};

void add_common(CLI::App* cmd, CliOptions& opt) {
  cmd->add_option("--order", opt.cfg.order, "series order k (coefficients through x^(k-1))");
  cmd->add_option("--seed", opt.cfg.seed, "seed for sampled verification");
  cmd->add_option("--samples", opt.cfg.samples, "samples per sweep");
  cmd->add_option("--tol", opt.cfg.tol, "relative residual tolerance");
  cmd->add_option("--fixtures", opt.cfg.fixtures_dir, "fixture directory");
  cmd->add_flag("--exact", opt.cfg.exact_q, "compute the final resultant exactly");
  cmd->add_option("--out", opt.out_path, "write the report to this path");
  cmd->add_option("--format", opt.format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));
}

int emit_report(const stolarsky::VerificationReport& rep, const CliOptions& opt) {
  const std::string body = opt.format == "structured" ? rep.to_json() : rep.to_text();
  if (!opt.out_path.empty()) {
    std::ofstream out(opt.out_path);
    if (!out) {
      std::cerr << "cannot write " << opt.out_path << "\n";
      return kExitFailure;
    }
    out << body;
  } else {
    std::cout << body;
  }
  if (!rep.passed) std::cerr << "pipeline failed at stage: " << rep.failed_stage << "\n";
  return rep.passed ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact derivation and numeric verification of the invariance equation "
               "for two-parameter Stolarsky and Gini means"};
  app.require_subcommand(1);

  CliOptions opt;

  auto* cmd_pipeline = app.add_subcommand("pipeline", "run the full machine-checked derivation");
  add_common(cmd_pipeline, opt);

  auto* cmd_eval = app.add_subcommand("eval", "evaluate a mean: eval <stolarsky|gini> p q x y");
  std::string eval_family;
  double ep = 0, eq = 0, ex = 0, ey = 0;
  cmd_eval->add_option("family", eval_family)->required()->check(CLI::IsMember({"stolarsky", "gini"}));
  cmd_eval->add_option("p", ep)->required();
  cmd_eval->add_option("q", eq)->required();
  cmd_eval->add_option("x", ex)->required();
  cmd_eval->add_option("y", ey)->required();

  auto* cmd_family = app.add_subcommand("verify-family",
                                        "sample the invariance residual of a solution family");
  std::string theorem_name_arg, case_id;
  std::vector<double> params;
  cmd_family->add_option("theorem", theorem_name_arg)->required()
      ->check(CLI::IsMember({"S", "G", "CorS", "CorG"}));
  cmd_family->add_option("case", case_id)->required();
  cmd_family->add_option("--params", params, "free parameters of the family case");
  add_common(cmd_family, opt);

  auto* cmd_refute = app.add_subcommand("refute", "exact order-10 coefficient of a candidate");
  std::string refute_case;
  cmd_refute->add_option("case", refute_case)->required();

  auto* cmd_derive = app.add_subcommand("derive", "print one derived Taylor coefficient");
  int derive_order = 4;
  cmd_derive->add_option("--order", derive_order, "even order 2..12")->required();
  cmd_derive->add_option("--fixtures", opt.cfg.fixtures_dir, "fixture directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints help/error text
    return kExitUsage;
  }

  try {
    if (*cmd_pipeline) {
      return emit_report(stolarsky::run_full_pipeline(opt.cfg), opt);
    }

    if (*cmd_eval) {
      if (!(ex > 0) || !(ey > 0)) {
        std::cerr << "x and y must be positive\n";
        return kExitUsage;
      }
      const double value = eval_family == "stolarsky" ? stolarsky::stolarsky_mean(ep, eq, ex, ey)
                                                      : stolarsky::gini_mean(ep, eq, ex, ey);
      std::printf("%.15g\n", value);
      return kExitOk;
    }

    if (*cmd_family) {
      stolarsky::Theorem t = stolarsky::parse_theorem(theorem_name_arg);
      stolarsky::SixTuple tuple;
      try {
        tuple = stolarsky::family_tuple(t, case_id, params);
      } catch (const stolarsky::error& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return kExitUsage;
      }
      auto sweep = stolarsky::sweep_invariance(stolarsky::theorem_mean_family(t), tuple,
                                               opt.cfg.samples, opt.cfg.seed);
      std::printf("tuple (a,b,c,d,p,q) = (%g, %g, %g, %g, %g, %g)\n", tuple.a, tuple.b, tuple.c,
                  tuple.d, tuple.p, tuple.q);
      std::printf("max relative residual over %d samples: %.3e\n", sweep.samples,
                  sweep.max_rel_residual);
      if (sweep.max_rel_residual > opt.cfg.tol) {
        std::printf("worst sample: x = %.17g, y = %.17g\n", sweep.worst_x, sweep.worst_y);
        return kExitFailure;
      }
      return kExitOk;
    }

    if (*cmd_refute) {
      bool v_eq_w;
      if (refute_case == "v=w") {
        v_eq_w = true;
      } else if (refute_case == "v=-w") {
        v_eq_w = false;
      } else {
        std::cerr << "unknown case '" << refute_case << "' (expected v=w or v=-w)\n";
        return kExitUsage;
      }
      auto r = stolarsky::refute_candidate(v_eq_w);
      std::cout << r.order10.to_string() << "\n";
      if (r.order10.is_zero()) return kExitFailure;
      if (v_eq_w && r.order10 != stolarsky::Rational("-12352/5775")) return kExitFailure;
      return kExitOk;
    }

    if (*cmd_derive) {
      std::cout << stolarsky::derive_coefficient_text(derive_order, opt.cfg) << "\n";
      return kExitOk;
    }
  } catch (const stolarsky::bad_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
