#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tropolocate/problem_io.hpp"
#include "tropolocate/svg_plot.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitPremise = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw tropo::ParseError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

double resolve_tol(const std::optional<double>& flag_tol) {
  if (flag_tol) {
    if (!(*flag_tol > 0)) throw tropo::ParseError("--tol must be positive");
    return *flag_tol;
  }
  if (const char* env = std::getenv("TROPOLOCATE_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0))
      throw tropo::ParseError("TROPOLOCATE_TOL must be a positive number");
    return v;
  }
  return tropo::kDefaultTol;
}

std::string format_vector(const tropo::Vector& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    out << v[i].value();
  }
  out << ")";
  return out.str();
}

void print_text_report(const tropo::SolutionReport& report,
                       const std::optional<tropo::oracle::GridResult>& oracle_result,
                       std::optional<double> oracle_step) {
  std::cout << "constraint: " << tropo::io::kind_name(report.kind) << "\n"
            << "delta: " << report.delta << "\n"
            << "witness: " << format_vector(report.witness) << "\n";
  if (report.box_lower && report.box_upper)
    std::cout << "solution box: " << format_vector(*report.box_lower) << " .. "
              << format_vector(*report.box_upper) << "\n";
  std::cout << "p: " << format_vector(report.p) << "\n"
            << "q: " << format_vector(report.q) << "\n";
  if (oracle_result) {
    std::cout << "oracle value: " << oracle_result->value << " at (";
    for (std::size_t i = 0; i < oracle_result->argmin.size(); ++i) {
      if (i) std::cout << ", ";
      std::cout << oracle_result->argmin[i];
    }
    std::cout << "), step " << oracle_step.value_or(0.0) << "\n";
  }
}

int run_solve(const std::string& path, bool with_oracle, std::optional<double> step,
              std::optional<double> flag_tol, const std::string& format) {
  const double tol = resolve_tol(flag_tol);
  const tropo::LocationProblem problem = tropo::io::parse_problem(read_file(path));
  const tropo::SolutionReport report = tropo::solve(problem, tol);

  std::optional<tropo::oracle::GridResult> oracle_result;
  std::optional<double> oracle_step;
  if (with_oracle) {
    tropo::oracle::OracleConfig cfg = tropo::oracle::default_config(problem, step);
    oracle_result = tropo::oracle::grid_minimize(problem, cfg);
    oracle_step = cfg.step;
  }

  if (format == "text")
    print_text_report(report, oracle_result, oracle_step);
  else
    std::cout << tropo::io::emit_report(report, oracle_result, oracle_step);
  return kExitOk;
}

int run_plot(const std::string& path, const std::string& out_path,
             std::optional<double> flag_tol) {
  const double tol = resolve_tol(flag_tol);
  const tropo::LocationProblem problem = tropo::io::parse_problem(read_file(path));
  const tropo::SolutionReport report = tropo::solve(problem, tol);
  const std::string svg = tropo::svg::render(problem, report);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw tropo::ParseError("cannot write file: " + out_path);
  out << svg;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimax Chebyshev facility location via max-plus algebra"};
  app.require_subcommand(1);

  std::string solve_path, plot_path, plot_out;
  std::optional<double> step, tol;
  bool with_oracle = false;
  std::string format = "json";

  CLI::App* solve_cmd = app.add_subcommand("solve", "solve a problem file");
  solve_cmd->add_option("file", solve_path, "problem JSON file")->required();
  solve_cmd->add_flag("--oracle", with_oracle, "also run the brute-force grid oracle");
  solve_cmd->add_option("--step", step, "grid step for the oracle");
  solve_cmd->add_option("--tol", tol, "comparison tolerance");
  solve_cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}));

  CLI::App* plot_cmd = app.add_subcommand("plot", "render a 2-D problem as SVG");
  plot_cmd->add_option("file", plot_path, "problem JSON file")->required();
  plot_cmd->add_option("--out", plot_out, "output SVG path")->required();
  plot_cmd->add_option("--tol", tol, "comparison tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (solve_cmd->parsed()) return run_solve(solve_path, with_oracle, step, tol, format);
    return run_plot(plot_path, plot_out, tol);
  } catch (const tropo::NotIrreducible& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPremise;
  } catch (const tropo::PremiseViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPremise;
  } catch (const tropo::EmptyPlus& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPremise;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
