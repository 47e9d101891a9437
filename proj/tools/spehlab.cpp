// Command-line front end: parse, compute, verify, export.
//
// Exit codes: 0 success (all checks pass), 1 a verification failed,
// 2 usage or parse error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spehlab/spehlab.hpp"

namespace {

using nlohmann::json;

struct GlobalFlags {
  bool as_json = false;
  bool strict = false;
  std::optional<std::int64_t> budget;
};

json trace_to_json(const std::vector<spehlab::ExtractionRound>& rounds) {
  json out = json::array();
  for (const spehlab::ExtractionRound& r : rounds) {
    json consumed = json::array();
    for (const spehlab::Segment& s : r.consumed) consumed.push_back(spehlab::format(s));
    out.push_back({{"produced", spehlab::format(r.produced)}, {"consumed", std::move(consumed)}});
  }
  return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

/// 0 when everything passed; 1 otherwise (skips only count under --strict).
int report_exit(const std::vector<spehlab::VerificationReport>& reports, bool strict) {
  for (const spehlab::VerificationReport& r : reports) {
    if (r.status == spehlab::Status::fail) return 1;
    if (strict && r.status == spehlab::Status::skipped) return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact multisegment calculus: duality, orders, rectangle characters"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags flags;
  app.add_flag("--json", flags.as_json, "emit JSON instead of plain text");
  app.add_flag("--strict", flags.strict, "treat budget skips as failures");
  app.add_option("--budget", flags.budget, "max support points for exhaustive cores")
      ->envname("SPEHLAB_BUDGET");

  std::string input;
  bool trace = false;
  auto* cmd_dual = app.add_subcommand("dual", "dual multisegment via the extraction algorithm");
  cmd_dual->add_option("multisegment", input, "multisegment, e.g. \"(0..2)+(1..1)\"")->required();
  cmd_dual->add_flag("--trace", trace, "emit the per-round extraction log as JSON");

  std::int64_t opt_l = 1, opt_k = 1, opt_spacing = 1;
  auto* cmd_char = app.add_subcommand("char", "determinantal character F(l,k)");
  cmd_char->add_option("--l", opt_l, "segment length")->required();
  cmd_char->add_option("--k", opt_k, "number of segments")->required();

  auto* cmd_speh = app.add_subcommand("speh", "rectangle multisegment");
  cmd_speh->add_option("--l", opt_l, "segment length")->required();
  cmd_speh->add_option("--k", opt_k, "number of segments")->required();
  cmd_speh->add_option("--spacing", opt_spacing, "center spacing denominator (default 1)");

  std::string input_b;
  auto* cmd_leq = app.add_subcommand("leq", "is the first multisegment below the second?");
  cmd_leq->add_option("first", input, "candidate smaller multisegment")->required();
  cmd_leq->add_option("second", input_b, "candidate larger multisegment")->required();

  auto* cmd_enum = app.add_subcommand("enumerate", "all multisegments with the given support");
  cmd_enum->add_option("points", input, "support points, e.g. \"0,1,1,2\"")->required();

  auto* cmd_hasse = app.add_subcommand("hasse", "Hasse diagram of a support's poset as DOT");
  cmd_hasse->add_option("points", input, "support points, e.g. \"-1,0,1\"")->required();

  auto* cmd_dodgson = app.add_subcommand("dodgson", "condensation identity check at (l,k)");
  cmd_dodgson->add_option("--l", opt_l, "segment length")->required();
  cmd_dodgson->add_option("--k", opt_k, "number of segments")->required();

  std::string suite;
  spehlab::SuiteOptions suite_opt;
  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  cmd_verify->add_option("--suite", suite, "one of: involution, P, Pprime, order-reversal, "
                                           "monotonicity, theorem-a, theorem-i, theorem-ii, "
                                           "dodgson, leading")
      ->required();
  cmd_verify->add_option("--max-l", suite_opt.max_l, "largest l in (l,k) sweeps");
  cmd_verify->add_option("--max-k", suite_opt.max_k, "largest k in (l,k) sweeps");
  cmd_verify->add_option("--max-point", suite_opt.max_point,
                         "largest support point in corpus sweeps");
  cmd_verify->add_option("--max-mult", suite_opt.max_mult,
                         "largest per-point multiplicity in corpus sweeps");
  cmd_verify->add_option("--max-points", suite_opt.max_points,
                         "largest support size in theorem-core sweeps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version are success; everything else is usage
  }

  try {
    if (*cmd_dual) {
      const spehlab::Multisegment m = spehlab::parse_multisegment(input);
      const spehlab::Multisegment dual = spehlab::mwa_dual(m);
      if (trace) {
        emit({{"input", spehlab::format(m)},
              {"dual", spehlab::format(dual)},
              {"rounds", trace_to_json(spehlab::mwa_trace(m))}});
      } else if (flags.as_json) {
        emit(spehlab::to_json(dual));
      } else {
        std::cout << spehlab::format(dual) << "\n";
      }
      return 0;
    }

    if (*cmd_char) {
      const spehlab::RingElement f = spehlab::char_F(opt_l, opt_k);
      if (flags.as_json) emit(spehlab::to_json(f));
      else std::cout << spehlab::format(f) << "\n";
      return 0;
    }

    if (*cmd_speh) {
      const spehlab::Multisegment m = spehlab::bar_u(opt_l, opt_k, opt_spacing);
      if (flags.as_json) emit(spehlab::to_json(m));
      else std::cout << spehlab::format(m) << "\n";
      return 0;
    }

    if (*cmd_leq) {
      const spehlab::Multisegment a = spehlab::parse_multisegment(input);
      const spehlab::Multisegment b = spehlab::parse_multisegment(input_b);
      const bool leq = spehlab::is_leq(a, b);
      if (flags.as_json) emit({{"leq", leq}});
      else std::cout << (leq ? "true" : "false") << "\n";
      return 0;
    }

    if (*cmd_enum) {
      const spehlab::PointMultiset pts = spehlab::parse_points(input);
      const std::vector<spehlab::Multisegment> all = spehlab::enumerate_with_support(pts);
      if (flags.as_json) {
        json arr = json::array();
        for (const spehlab::Multisegment& m : all) arr.push_back(spehlab::format(m));
        emit(arr);
      } else {
        for (const spehlab::Multisegment& m : all) std::cout << spehlab::format(m) << "\n";
      }
      return 0;
    }

    if (*cmd_hasse) {
      const spehlab::PointMultiset pts = spehlab::parse_points(input);
      const spehlab::HasseDiagram g = spehlab::hasse(pts);
      if (flags.as_json) {
        json nodes = json::array();
        for (const spehlab::Multisegment& m : g.nodes) nodes.push_back(spehlab::format(m));
        json edges = json::array();
        for (const auto& [u, v] : g.edges) edges.push_back({u, v});
        emit({{"nodes", std::move(nodes)}, {"edges", std::move(edges)}});
      } else {
        std::cout << spehlab::to_dot(g);
      }
      return 0;
    }

    if (*cmd_dodgson) {
      const spehlab::VerificationReport r = spehlab::dodgson_check(opt_l, opt_k);
      if (flags.as_json) emit(spehlab::to_json(r));
      else
        std::cout << "dodgson l=" << opt_l << " k=" << opt_k << ": "
                  << spehlab::to_string(r.status) << "\n";
      return report_exit({r}, flags.strict);
    }

    if (*cmd_verify) {
      if (!suite_opt.budget) suite_opt.budget = flags.budget;
      const std::vector<spehlab::VerificationReport> reports =
          spehlab::run_suite(suite, suite_opt);
      json arr = json::array();
      for (const spehlab::VerificationReport& r : reports) arr.push_back(spehlab::to_json(r));
      emit(arr);
      return report_exit(reports, flags.strict);
    }
  } catch (const spehlab::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;  // no subcommand matched; require_subcommand should prevent this
}
