#pragma once

// Command pipelines behind the `ftpoint` tool. Each run_* returns the process
// exit code and writes its report to `out`, diagnostics to `err`.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ftpoint/angles.hpp"
#include "ftpoint/formula.hpp"
#include "ftpoint/solver.hpp"

namespace ftpoint {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kInvalidInput = 2;
inline constexpr int kNonConvergence = 3;
inline constexpr int kVerificationFailed = 4;
}  // namespace exit_code

enum class Command { Solve, Verify, SixthAngle, BatchVerify };
enum class OutputFormat { Text, Json };

struct RunConfig {
  std::string input_path;
  Command command = Command::Solve;
  double tol = kDefaultVerifyTol;
  double grad_tol = 1e-10;
  int max_iter = 10000;
  std::uint64_t seed = 0;
  int count = 1000;
  OutputFormat format = OutputFormat::Text;

  SolverConfig solver_config() const;
};

struct SolutionReport {
  FermatSolution solution;
  std::optional<AngleSextuple> angles;     // interior only
  std::optional<PropertyReport> checks;    // interior only
  std::array<double, 4> pull_norms{};
  std::vector<std::string> flags;

  friend bool operator==(const SolutionReport&, const SolutionReport&);
};

/// Solves `t` and, for interior solutions, measures the angles and runs the
/// property checks at `tol`.
SolutionReport make_report(const Tetrahedron& t, const SolverConfig& cfg, double tol);

void to_json(nlohmann::json& j, const SolutionReport& r);
void from_json(const nlohmann::json& j, SolutionReport& r);

/// {"vertices": [[x,y,z] x 4]}
Tetrahedron parse_tetrahedron(const nlohmann::json& j);
/// {"angles_deg": [a102,a103,a104,a203,a204]} or {"angles_rad": [...]}
FiveAngles parse_five_angles(const nlohmann::json& j);
nlohmann::json read_json_file(const std::string& path);

struct BatchSummary {
  int count = 0;
  int interior = 0;
  int vertex = 0;
  double max_opposite_angle = 0.0;
  double max_cosine_sum = 0.0;
  double max_bisector_dot = 0.0;
  double max_antiparallel = 0.0;
  double max_sixth_angle = 0.0;      // |formula cos a304 - measured|, branch-resolved
  double max_substitution = 0.0;     // ft_substitution_residual
  double max_solver_residual = 0.0;
  std::vector<int> failing;          // instance indices
  bool pass = false;

  std::string to_text(double tol) const;
};

/// Seeded random unit-cube corpus through every check.
BatchSummary batch_verify(std::uint64_t seed, int count, double tol, const SolverConfig& cfg);

int run_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_sixth_angle(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_batch_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace ftpoint
