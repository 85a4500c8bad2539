#include <CLI11.hpp>
#include <chrono>
#include <iostream>

#include "bhk/errors.hpp"
#include "bhk/verifier.hpp"

namespace {

struct Flags {
  std::string input;
  std::optional<std::string> engine;
  std::string side = "B";
  std::optional<long> window_margin;
  std::optional<long> degree_bound;
  std::optional<unsigned> threads;
  bool json = false;
};

bhk::RunOptions merge(const bhk::InputSpec& spec, const Flags& f) {
  bhk::RunOptions o = spec.options;
  if (f.engine) o.engine = bhk::parse_engine(*f.engine);
  if (f.window_margin) {
    if (*f.window_margin < 0) throw bhk::InputError("--window-margin must be nonnegative");
    o.window_margin = *f.window_margin;
  }
  if (f.degree_bound) o.degree_bound = *f.degree_bound;
  if (f.threads) {
    if (*f.threads == 0) throw bhk::InputError("--threads must be positive");
    o.threads = *f.threads;
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for invertible Landau-Ginzburg orbifold mirror pairs"};
  app.require_subcommand(1);
  Flags f;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", f.input, "JSON input file")->required();
    sub->add_flag("--json", f.json, "print the machine-readable report");
    sub->add_option("--threads", f.threads, "worker threads");
  };
  auto* analyze = app.add_subcommand("analyze", "weights, groups, lattices, nondegeneracy");
  add_common(analyze);
  auto* rings = app.add_subcommand("rings", "bigraded A or B table");
  add_common(rings);
  rings->add_option("--side", f.side, "A or B")->check(CLI::IsMember({"A", "B"}));
  rings->add_option("--engine", f.engine, "complex, orbifold or both");
  rings->add_option("--window-margin", f.window_margin, "extra charge range searched around [0, c]");
  auto* dual = app.add_subcommand("dual", "mirror datum as an input document");
  add_common(dual);
  auto* verify = app.add_subcommand("verify", "duality verdicts for a datum and its mirror");
  add_common(verify);
  verify->add_option("--engine", f.engine, "complex, orbifold (orbifold-only) or both");
  verify->add_option("--window-margin", f.window_margin, "extra charge range searched around [0, c]");
  verify->add_option("--degree-bound", f.degree_bound, "degree bound for membership witnesses");
  auto* unified = app.add_subcommand("check-unified", "primal and dual conditions on unified data");
  add_common(unified);
  unified->add_option("--degree-bound", f.degree_bound, "degree bound for the search");

  CLI11_PARSE(app, argc, argv);

  try {
    const auto start = std::chrono::steady_clock::now();
    bhk::InputSpec spec = bhk::load_input(f.input);
    bhk::RunOptions options = merge(spec, f);
    bhk::Json report;
    if (analyze->parsed()) {
      report = bhk::run_analyze(spec);
    } else if (rings->parsed()) {
      report = bhk::run_rings(spec, f.side == "A" ? bhk::RingSide::A : bhk::RingSide::B, options);
    } else if (dual->parsed()) {
      report = bhk::run_dual(spec);
    } else if (verify->parsed()) {
      report = bhk::run_verify(spec, options);
    } else {
      report = bhk::run_check_unified(spec, options);
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (f.json) {
      std::cout << report.dump(2) << '\n';
    } else {
      std::cout << bhk::render_text(report);
      std::cout << "time: " << seconds << " s\n";
    }
    return bhk::verdict_exit_code(report);
  } catch (const bhk::CapExceeded& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return 3;
  } catch (const bhk::NotCalabiYau& e) {
    std::cerr << "not of Calabi-Yau type: " << e.what() << '\n';
    return 2;
  } catch (const bhk::DegeneratePotential& e) {
    std::cerr << "degenerate potential: " << e.what() << '\n';
    return 2;
  } catch (const bhk::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const bhk::ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const bhk::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
