// powersemi command-line front end.
//
//   powersemi analyze FILE
//   powersemi power FILE [--summary] [-o OUT]
//   powersemi check FILE (--identity LAW | --quasi LAW)
//   powersemi fixture NAME [-o OUT] | --list
//   powersemi verify-paper [--inject-failure]
//
// Exit codes: 0 pass, 1 check failed, 2 input error, 3 resource cap.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "powersemi/fixtures.hpp"
#include "powersemi/io.hpp"
#include "powersemi/logic.hpp"
#include "powersemi/suite.hpp"
#include "powersemi/term.hpp"
#include "powersemi/witness.hpp"

namespace {

  using namespace powersemi;
  using json = nlohmann::ordered_json;

  enum Exit { pass = 0, failed = 1, input_error = 2, resource_cap = 3 };

  struct Config {
    bool          with_empty    = false;
    bool          no_empty      = false;
    bool          zero_constant = false;
    std::string   format        = "text";
    std::size_t   max_carrier   = PowerAlgebra::default_cap;
    std::uint64_t seed          = 0;

    std::string input;
    std::string output;
    bool        summary = false;
    std::string identity;
    std::string quasi;
    std::string fixture;
    bool        list           = false;
    bool        inject_failure = false;

    EmptySet mode() const {
      if (zero_constant) {
        return EmptySet::constant;
      }
      return no_empty ? EmptySet::excluded : EmptySet::included;
    }

    WitnessOptions witness() const {
      WitnessOptions w;
      w.mode        = mode();
      w.max_carrier = max_carrier;
      w.seed        = seed;
      return w;
    }

    bool json() const {
      return format == "json";
    }
  };

  void emit(Config const& cfg, std::string const& text) {
    if (cfg.output.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(cfg.output);
    if (!out) {
      throw InputError("cannot write " + cfg.output);
    }
    out << text;
  }

  int analyze(Config const& cfg) {
    auto const A = load_algebra(cfg.input);
    auto const r = theorem_verdict(A.semigroup(), cfg.witness());
    emit(cfg,
         cfg.json() ? verdict_json(r, A.semigroup())
                    : verdict_text(r, A.semigroup()));
    return r.verified() ? pass : failed;
  }

  int power(Config const& cfg) {
    auto const         A = load_algebra(cfg.input);
    PowerAlgebra const P(A.semigroup(), cfg.mode(), cfg.max_carrier);
    if (!cfg.summary) {
      auto T = P.to_table_algebra();
      emit(cfg, dump_algebra(T));
      return pass;
    }
    std::size_t idempotent_subsets = 0;
    for (Elem x = 0; x < P.size(); ++x) {
      auto const X = P.code(x);
      idempotent_subsets += P.product(X, X) == X;
    }
    // Two variables: the scan is quadratic in the number of subsets.
    constexpr std::size_t block_group_limit = 4096;
    std::optional<bool>   block_group;
    if (P.size() <= block_group_limit) {
      block_group = is_block_group(P.semigroup_view()).holds;
    }
    if (cfg.json()) {
      json doc;
      doc["base"]               = A.semigroup().name();
      doc["base_size"]          = A.size();
      doc["empty_set"]          = to_string(cfg.mode());
      doc["subsets"]            = P.size();
      doc["involution"]         = P.is_inverse();
      doc["idempotent_subsets"] = idempotent_subsets;
      doc["block_group"] = block_group ? json(*block_group) : json(nullptr);
      emit(cfg, doc.dump(2) + "\n");
    } else {
      std::string text = "P(" + A.semigroup().name() + "): "
                         + std::to_string(P.size()) + " subsets (empty set "
                         + to_string(cfg.mode()) + ")\n";
      text += "  involution: " + std::string(P.is_inverse() ? "yes" : "no")
              + "\n";
      text += "  idempotent subsets: " + std::to_string(idempotent_subsets)
              + "\n";
      text += "  block-group: "
              + std::string(!block_group ? "not checked (too many subsets)"
                            : *block_group ? "pass"
                                           : "fail")
              + "\n";
      emit(cfg, text);
    }
    return !block_group || *block_group ? pass : failed;
  }

  int check(Config const& cfg) {
    if (cfg.identity.empty() == cfg.quasi.empty()) {
      throw InputError("give exactly one of --identity and --quasi");
    }
    auto const  A = load_algebra(cfg.input);
    CheckResult r;
    std::string formula;
    if (!cfg.identity.empty()) {
      auto const id = parse_identity(cfg.identity);
      formula       = to_string(id);
      r             = holds_identity(A, id);
    } else {
      auto const alias = quasi_alias(cfg.quasi);
      auto const qi    = alias ? *alias : parse_quasi_identity(cfg.quasi);
      formula          = to_string(qi);
      r                = holds_quasi_identity(A, qi);
    }
    if (cfg.json()) {
      json doc;
      doc["algebra"] = A.name();
      doc["formula"] = formula;
      doc["holds"]   = r.holds;
      if (r.counterexample) {
        json ce = json::object();
        for (auto const& [var, value] : *r.counterexample) {
          ce[var] = A.label(value);
        }
        doc["counterexample"] = ce;
      }
      emit(cfg, doc.dump(2) + "\n");
    } else {
      std::string text = formula + ": " + (r.holds ? "holds" : "fails") + "\n";
      if (r.counterexample) {
        text += "  counterexample:";
        for (auto const& [var, value] : *r.counterexample) {
          text += " " + var + "=" + A.label(value);
        }
        text += "\n";
      }
      emit(cfg, text);
    }
    return r.holds ? pass : failed;
  }

  int fixture(Config const& cfg) {
    if (cfg.list) {
      std::string text;
      for (auto const& name : fixtures::names()) {
        text += name + "\n";
      }
      emit(cfg, text);
      return pass;
    }
    if (cfg.fixture.empty()) {
      throw InputError("name a fixture (see --list)");
    }
    emit(cfg, dump_algebra(fixtures::named(cfg.fixture)));
    return pass;
  }

  int verify_paper(Config const& cfg) {
    SuiteOptions opts;
    opts.witness        = cfg.witness();
    opts.inject_failure = cfg.inject_failure;
    auto const rows     = run_suite(opts);
    emit(cfg, cfg.json() ? suite_json(rows) : suite_text(rows));
    return suite_passed(rows) ? pass : failed;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Power semirings and power involution semigroups of finite "
               "inverse semigroups"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;

  auto* with = app.add_flag("--with-empty",
                            cfg.with_empty,
                            "Include the empty subset (default)");
  app.add_flag("--no-empty", cfg.no_empty, "Leave out the empty subset")
      ->excludes(with);
  app.add_flag("--zero-constant",
               cfg.zero_constant,
               "Treat the empty subset as a named constant (implies "
               "--with-empty)");
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-carrier", cfg.max_carrier, "Largest base for P(S)");
  app.add_option("--seed", cfg.seed, "Seed for sampled verification");

  auto* analyze_cmd
      = app.add_subcommand("analyze", "Decide the theorem hypotheses");
  analyze_cmd->add_option("file", cfg.input)->required();
  analyze_cmd->add_option("-o,--output", cfg.output);

  auto* power_cmd = app.add_subcommand("power", "Export or summarize P(S)");
  power_cmd->add_option("file", cfg.input)->required();
  power_cmd->add_flag("--summary", cfg.summary);
  power_cmd->add_option("-o,--output", cfg.output);

  auto* check_cmd
      = app.add_subcommand("check", "Check an identity or quasi-identity");
  check_cmd->add_option("file", cfg.input)->required();
  check_cmd->add_option("--identity", cfg.identity);
  check_cmd->add_option("--quasi", cfg.quasi, "Law, or (2.1) / (2.2)");

  auto* fixture_cmd
      = app.add_subcommand("fixture", "Write a built-in algebra file");
  fixture_cmd->add_option("name", cfg.fixture);
  fixture_cmd->add_flag("--list", cfg.list);
  fixture_cmd->add_option("-o,--output", cfg.output);

  auto* verify_cmd = app.add_subcommand(
      "verify-paper", "Run the full verification suite on the fixtures");
  verify_cmd->add_flag("--inject-failure", cfg.inject_failure);
  verify_cmd->add_option("-o,--output", cfg.output);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? pass : input_error;
  }
  if (cfg.zero_constant && cfg.no_empty) {
    std::cerr << "error: --zero-constant needs the empty subset\n";
    return input_error;
  }

  try {
    if (*analyze_cmd) {
      return analyze(cfg);
    }
    if (*power_cmd) {
      return power(cfg);
    }
    if (*check_cmd) {
      return check(cfg);
    }
    if (*fixture_cmd) {
      return fixture(cfg);
    }
    return verify_paper(cfg);
  } catch (CarrierTooLarge const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return resource_cap;
  } catch (TooManyVariables const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return resource_cap;
  } catch (Inconsistency const& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return failed;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return input_error;
  }
}
