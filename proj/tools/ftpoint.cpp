#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "ftpoint/app.hpp"

int main(int argc, char** argv) {
  using namespace ftpoint;

  CLI::App app{"Fermat-Torricelli point of a tetrahedron: solver and property checks"};
  app.require_subcommand(1);

  RunConfig cfg;
  const std::map<std::string, OutputFormat> formats{{"text", OutputFormat::Text},
                                                    {"json", OutputFormat::Json}};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  auto* solve = app.add_subcommand("solve", "Solve one tetrahedron and report angles and checks");
  solve->add_option("--input", cfg.input_path, "JSON file {\"vertices\": [[x,y,z] x4]}")->required();
  solve->add_option("--grad-tol", cfg.grad_tol, "Balancing residual target")->check(CLI::PositiveNumber);
  solve->add_option("--max-iter", cfg.max_iter, "Iteration budget")->check(CLI::PositiveNumber);
  solve->add_option("--tol", cfg.tol, "Property check tolerance")->check(CLI::PositiveNumber);
  add_format(solve);

  auto* verify = app.add_subcommand("verify", "Solve, check properties, and cross-check against the oracle");
  verify->add_option("--input", cfg.input_path, "JSON file {\"vertices\": [[x,y,z] x4]}")->required();
  verify->add_option("--tol", cfg.tol, "Property check tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--grad-tol", cfg.grad_tol, "Balancing residual target")->check(CLI::PositiveNumber);
  verify->add_option("--max-iter", cfg.max_iter, "Iteration budget")->check(CLI::PositiveNumber);
  verify->add_option("--seed", cfg.seed, "Oracle seed");
  add_format(verify);

  auto* sixth = app.add_subcommand("sixth-angle", "Sixth angle from five angles at a common apex");
  sixth->add_option("--input", cfg.input_path, "JSON file {\"angles_deg\"|\"angles_rad\": [a102,a103,a104,a203,a204]}")
      ->required();
  add_format(sixth);

  auto* batch = app.add_subcommand("batch-verify", "Run every check over a seeded random corpus");
  batch->add_option("--seed", cfg.seed, "Corpus seed");
  batch->add_option("--count", cfg.count, "Number of tetrahedra")->check(CLI::PositiveNumber);
  batch->add_option("--tol", cfg.tol, "Check tolerance")->check(CLI::PositiveNumber);
  batch->add_option("--grad-tol", cfg.grad_tol, "Balancing residual target")->check(CLI::PositiveNumber);
  batch->add_option("--max-iter", cfg.max_iter, "Iteration budget")->check(CLI::PositiveNumber);
  add_format(batch);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : exit_code::kInvalidInput;
  }

  if (*solve) return run_solve(cfg, std::cout, std::cerr);
  if (*verify) return run_verify(cfg, std::cout, std::cerr);
  if (*sixth) return run_sixth_angle(cfg, std::cout, std::cerr);
  return run_batch_verify(cfg, std::cout, std::cerr);
}
