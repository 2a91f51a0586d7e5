#include "ftpoint/app.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

#include "ftpoint/sampling.hpp"

namespace ftpoint {

using nlohmann::json;

namespace {

constexpr const char* kFlagNearBoundary = "near_boundary";
constexpr const char* kFlagDegenerateBisector = "degenerate_bisector";
constexpr double kOracleGap = 1e-7;  // relative to the longest edge

double degrees(double rad) { return rad * 180.0 / std::numbers::pi; }

bool has_flag(const std::vector<std::string>& flags, const char* name) {
  return std::find(flags.begin(), flags.end(), name) != flags.end();
}

json point_json(const Vec3& p) { return json::array({p.x, p.y, p.z}); }

Vec3 point_from(const json& j) {
  if (!j.is_array() || j.size() != 3)
    throw Error(ErrorCode::ParseError, "expected an array of three numbers");
  for (const auto& c : j)
    if (!c.is_number()) throw Error(ErrorCode::ParseError, "coordinates must be numbers");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

template <std::size_t N>
std::array<double, N> array_from(const json& j) {
  std::array<double, N> a{};
  if (!j.is_array() || j.size() != N) throw Error(ErrorCode::ParseError, "array has the wrong length");
  for (std::size_t i = 0; i < N; ++i) a[i] = j[i].get<double>();
  return a;
}

}  // namespace

SolverConfig RunConfig::solver_config() const {
  SolverConfig c;
  c.grad_tol = grad_tol;
  c.max_iter = max_iter;
  c.seed = seed;
  return c;
}

bool operator==(const SolutionReport& a, const SolutionReport& b) {
  return a.solution == b.solution && a.angles == b.angles && a.checks == b.checks &&
         a.pull_norms == b.pull_norms && a.flags == b.flags;
}

SolutionReport make_report(const Tetrahedron& t, const SolverConfig& cfg, double tol) {
  SolutionReport r;
  r.solution = solve(t, cfg);
  for (int i = 1; i <= 4; ++i) r.pull_norms[static_cast<std::size_t>(i - 1)] = pull_norm(t, i);
  if (r.solution.near_boundary) r.flags.emplace_back(kFlagNearBoundary);
  if (r.solution.kind == SolutionKind::Interior) {
    const Directions u = directions_from(t.vertices(), r.solution.point);
    r.angles = angle_sextuple(u);
    r.checks = verify_fundamental_property(u, tol);
    if (r.checks->degenerate_bisector) r.flags.emplace_back(kFlagDegenerateBisector);
  }
  return r;
}

void to_json(json& j, const SolutionReport& r) {
  const auto& s = r.solution;
  j = json::object();
  j["kind"] = s.kind == SolutionKind::Interior ? "interior" : "vertex";
  j["point"] = point_json(s.point);
  j["vertex_index"] = s.vertex_index ? json(*s.vertex_index) : json(nullptr);
  j["objective"] = s.objective_value;
  j["residual"] = s.residual;
  j["iterations"] = s.iterations;
  j["pull_norms"] = r.pull_norms;
  if (r.angles) {
    const auto& a = *r.angles;
    j["angles_rad"] = {{"a102", a.a102}, {"a103", a.a103}, {"a104", a.a104},
                       {"a203", a.a203}, {"a204", a.a204}, {"a304", a.a304}};
  } else {
    j["angles_rad"] = nullptr;
  }
  if (r.checks) {
    const auto& c = *r.checks;
    j["checks"] = {{"opposite_angles", c.opposite_angle_residuals},
                   {"cosine_sum", c.cosine_sum_residual},
                   {"bisector_orthogonality", c.bisector_dot_residuals},
                   {"bisector_antiparallel", c.antiparallel_residuals},
                   {"pass", c.pass}};
  } else {
    j["checks"] = nullptr;
  }
  j["flags"] = r.flags;
}

void from_json(const json& j, SolutionReport& r) {
  r = SolutionReport{};
  auto& s = r.solution;
  const auto kind = j.at("kind").get<std::string>();
  if (kind != "interior" && kind != "vertex") throw Error(ErrorCode::ParseError, "unknown kind " + kind);
  s.kind = kind == "interior" ? SolutionKind::Interior : SolutionKind::Vertex;
  s.point = point_from(j.at("point"));
  if (!j.at("vertex_index").is_null()) s.vertex_index = j.at("vertex_index").get<int>();
  s.objective_value = j.at("objective").get<double>();
  s.residual = j.at("residual").get<double>();
  s.iterations = j.at("iterations").get<int>();
  r.pull_norms = array_from<4>(j.at("pull_norms"));
  r.flags = j.at("flags").get<std::vector<std::string>>();
  s.near_boundary = has_flag(r.flags, kFlagNearBoundary);
  if (const auto& a = j.at("angles_rad"); !a.is_null()) {
    r.angles = AngleSextuple{a.at("a102").get<double>(), a.at("a103").get<double>(),
                             a.at("a104").get<double>(), a.at("a203").get<double>(),
                             a.at("a204").get<double>(), a.at("a304").get<double>()};
  }
  if (const auto& c = j.at("checks"); !c.is_null()) {
    PropertyReport p;
    p.opposite_angle_residuals = array_from<3>(c.at("opposite_angles"));
    p.cosine_sum_residual = c.at("cosine_sum").get<double>();
    p.bisector_dot_residuals = array_from<3>(c.at("bisector_orthogonality"));
    p.antiparallel_residuals = array_from<3>(c.at("bisector_antiparallel"));
    p.pass = c.at("pass").get<bool>();
    p.degenerate_bisector = has_flag(r.flags, kFlagDegenerateBisector);
    r.checks = p;
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

Tetrahedron parse_tetrahedron(const json& j) {
  if (!j.is_object() || !j.contains("vertices"))
    throw Error(ErrorCode::ParseError, "expected {\"vertices\": [[x,y,z], ...]}");
  const auto& v = j.at("vertices");
  if (!v.is_array() || v.size() != 4) throw Error(ErrorCode::ParseError, "expected exactly four vertices");
  std::array<Point3, 4> pts;
  for (std::size_t i = 0; i < 4; ++i) pts[i] = point_from(v[i]);
  return Tetrahedron::create(pts);
}

FiveAngles parse_five_angles(const json& j) {
  const bool deg = j.is_object() && j.contains("angles_deg");
  const bool rad = j.is_object() && j.contains("angles_rad");
  if (deg == rad)
    throw Error(ErrorCode::ParseError, "expected exactly one of \"angles_deg\" or \"angles_rad\"");
  auto a = array_from<5>(j.at(deg ? "angles_deg" : "angles_rad"));
  if (deg)
    for (auto& x : a) x = x * std::numbers::pi / 180.0;
  return {a[0], a[1], a[2], a[3], a[4]};
}

namespace {

void print_text(std::ostream& out, const SolutionReport& r) {
  const auto& s = r.solution;
  out << std::setprecision(12);
  out << "kind:       " << (s.kind == SolutionKind::Interior ? "interior" : "vertex") << '\n';
  out << "point:      (" << s.point.x << ", " << s.point.y << ", " << s.point.z << ")\n";
  if (s.vertex_index) out << "vertex:     A" << *s.vertex_index << '\n';
  out << "objective:  " << s.objective_value << '\n';
  out << "residual:   " << s.residual << '\n';
  out << "iterations: " << s.iterations << '\n';
  out << "pull norms: " << r.pull_norms[0] << ' ' << r.pull_norms[1] << ' ' << r.pull_norms[2] << ' '
      << r.pull_norms[3] << '\n';
  if (r.angles) {
    const auto& a = *r.angles;
    const std::pair<const char*, double> rows[] = {{"a102", a.a102}, {"a103", a.a103}, {"a104", a.a104},
                                                   {"a203", a.a203}, {"a204", a.a204}, {"a304", a.a304}};
    out << "angles:\n";
    for (const auto& [name, v] : rows)
      out << "  " << name << "  " << std::setw(16) << v << " rad  " << std::setw(16) << degrees(v) << " deg\n";
  }
  if (r.checks) {
    const auto& c = *r.checks;
    out << std::scientific << std::setprecision(3);
    out << "checks:\n";
    out << "  opposite angles        " << c.opposite_angle_residuals[0] << ' ' << c.opposite_angle_residuals[1]
        << ' ' << c.opposite_angle_residuals[2] << '\n';
    out << "  cosine sum             " << c.cosine_sum_residual << '\n';
    out << "  bisector orthogonal    " << c.bisector_dot_residuals[0] << ' ' << c.bisector_dot_residuals[1] << ' '
        << c.bisector_dot_residuals[2] << '\n';
    out << "  bisector antiparallel  " << c.antiparallel_residuals[0] << ' ' << c.antiparallel_residuals[1] << ' '
        << c.antiparallel_residuals[2] << '\n';
    out << "  pass                   " << (c.pass ? "yes" : "no") << '\n';
    out << std::defaultfloat;
  }
  if (!r.flags.empty()) {
    out << "flags:";
    for (const auto& f : r.flags) out << ' ' << f;
    out << '\n';
  }
}

// Shared front half of solve/verify: load, solve, map errors to exit codes.
std::optional<SolutionReport> load_and_solve(const RunConfig& cfg, std::optional<Tetrahedron>& tet,
                                             std::ostream& err, int& code) {
  try {
    tet = parse_tetrahedron(read_json_file(cfg.input_path));
    return make_report(*tet, cfg.solver_config(), cfg.tol);
  } catch (const NonConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    code = exit_code::kNonConvergence;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    code = exit_code::kInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    code = exit_code::kInvalidInput;
  }
  return std::nullopt;
}

}  // namespace

int run_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::optional<Tetrahedron> tet;
  int code = exit_code::kOk;
  const auto report = load_and_solve(cfg, tet, err, code);
  if (!report) return code;
  if (cfg.format == OutputFormat::Json)
    out << json(*report).dump(2) << '\n';
  else
    print_text(out, *report);
  return exit_code::kOk;
}

int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::optional<Tetrahedron> tet;
  int code = exit_code::kOk;
  const auto report = load_and_solve(cfg, tet, err, code);
  if (!report) return code;

  const Point3 oracle = oracle_solve(*tet, cfg.seed);
  const double gap = objective(*tet, report->solution.point) - objective(*tet, oracle);
  const bool oracle_ok = gap <= kOracleGap * tet->max_edge();
  const bool checks_ok = !report->checks || report->checks->pass;
  const bool pass = oracle_ok && checks_ok;

  if (cfg.format == OutputFormat::Json) {
    json j = *report;
    j["verification"] = {{"oracle_objective_gap", gap}, {"pass", pass}};
    out << j.dump(2) << '\n';
  } else {
    print_text(out, *report);
    out << "oracle gap: " << std::scientific << std::setprecision(3) << gap << std::defaultfloat << '\n';
    out << "verified:   " << (pass ? "yes" : "no") << '\n';
  }
  return pass ? exit_code::kOk : exit_code::kVerificationFailed;
}

int run_sixth_angle(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  SixthAngleResult r;
  try {
    r = sixth_angle(parse_five_angles(read_json_file(cfg.input_path)));
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code::kInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kInvalidInput;
  }

  auto angle = [](double c, bool ok) -> std::optional<double> {
    if (!ok) return std::nullopt;
    return std::acos(std::clamp(c, -1.0, 1.0));
  };
  const auto plus = angle(r.cos_plus, r.realizable_plus);
  const auto minus = angle(r.cos_minus, r.realizable_minus);

  if (cfg.format == OutputFormat::Json) {
    auto branch = [](double c, bool ok, const std::optional<double>& a) {
      return json{{"cos", c}, {"realizable", ok}, {"angle_rad", a ? json(*a) : json(nullptr)}};
    };
    const json j = {{"b_magnitude", r.b_magnitude},
                    {"gram_factors", {r.gram3, r.gram4}},
                    {"plus", branch(r.cos_plus, r.realizable_plus, plus)},
                    {"minus", branch(r.cos_minus, r.realizable_minus, minus)}};
    out << j.dump(2) << '\n';
  } else {
    out << std::setprecision(12);
    out << "b:            " << r.b_magnitude << '\n';
    out << "gram factors: " << r.gram3 << ' ' << r.gram4 << '\n';
    auto row = [&](const char* name, double c, const std::optional<double>& a) {
      out << name << " cos a304 = " << c;
      if (a)
        out << "  a304 = " << *a << " rad (" << degrees(*a) << " deg)\n";
      else
        out << "  (not realizable)\n";
    };
    row("+b branch:", r.cos_plus, plus);
    row("-b branch:", r.cos_minus, minus);
  }
  return exit_code::kOk;
}

BatchSummary batch_verify(std::uint64_t seed, int count, double tol, const SolverConfig& cfg) {
  BatchSummary s;
  s.count = count;
  for (int i = 0; i < count; ++i) {
    Rng rng = instance_rng(seed, static_cast<std::uint64_t>(i));
    const Tetrahedron t = random_cube_tetrahedron(rng);
    bool ok = true;
    try {
      const FermatSolution sol = solve(t, cfg);
      if (sol.kind == SolutionKind::Vertex) {
        ++s.vertex;
        ok = pull_norm(t, *sol.vertex_index) <= 1.0 + cfg.boundary_eps;
      } else {
        ++s.interior;
        s.max_solver_residual = std::max(s.max_solver_residual, sol.residual);
        const DirectionConfig frame = canonical_frame(directions_from(t.vertices(), sol.point));
        const PropertyReport p = verify_fundamental_property(frame, tol);
        ok = p.pass;
        for (double v : p.opposite_angle_residuals) s.max_opposite_angle = std::max(s.max_opposite_angle, v);
        s.max_cosine_sum = std::max(s.max_cosine_sum, p.cosine_sum_residual);
        for (double v : p.bisector_dot_residuals) s.max_bisector_dot = std::max(s.max_bisector_dot, v);
        for (double v : p.antiparallel_residuals) s.max_antiparallel = std::max(s.max_antiparallel, v);

        const FiveAngles fa = five_angles(frame.u);
        const double measured = dot(frame.u[2].vec(), frame.u[3].vec());
        const double sixth = std::abs(sixth_angle(fa).cos_for(resolve_branch(frame)) - measured);
        const double subst = ft_substitution_residual(fa.a102, fa.a203);
        s.max_sixth_angle = std::max(s.max_sixth_angle, sixth);
        s.max_substitution = std::max(s.max_substitution, subst);
        ok = ok && sixth <= tol && subst <= tol;
      }
    } catch (const Error&) {
      ok = false;
    }
    if (!ok) s.failing.push_back(i);
  }
  s.pass = s.failing.empty();
  return s;
}

std::string BatchSummary::to_text(double tol) const {
  std::ostringstream os;
  os << "instances:            " << count << " (interior " << interior << ", vertex " << vertex << ")\n";
  os << std::scientific << std::setprecision(6);
  os << "tolerance:            " << tol << '\n';
  os << "max solver residual:  " << max_solver_residual << '\n';
  os << "max opposite angles:  " << max_opposite_angle << '\n';
  os << "max cosine sum:       " << max_cosine_sum << '\n';
  os << "max bisector dot:     " << max_bisector_dot << '\n';
  os << "max antiparallel:     " << max_antiparallel << '\n';
  os << "max sixth angle:      " << max_sixth_angle << '\n';
  os << "max substitution:     " << max_substitution << '\n';
  os << "failures:             " << failing.size() << '\n';
  if (!failing.empty()) {
    os << "failing instances:   ";
    for (int i : failing) os << ' ' << i;
    os << '\n';
  }
  os << "result:               " << (pass ? "PASS" : "FAIL") << '\n';
  return os.str();
}

int run_batch_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!(cfg.tol > 0.0) || cfg.count < 1) {
    err << "error: tol must be positive and count at least 1\n";
    return exit_code::kInvalidInput;
  }
  const BatchSummary s = batch_verify(cfg.seed, cfg.count, cfg.tol, cfg.solver_config());
  if (cfg.format == OutputFormat::Json) {
    const json j = {{"seed", cfg.seed},
                    {"count", s.count},
                    {"interior", s.interior},
                    {"vertex", s.vertex},
                    {"tol", cfg.tol},
                    {"max_residuals",
                     {{"solver", s.max_solver_residual},
                      {"opposite_angles", s.max_opposite_angle},
                      {"cosine_sum", s.max_cosine_sum},
                      {"bisector_orthogonality", s.max_bisector_dot},
                      {"bisector_antiparallel", s.max_antiparallel},
                      {"sixth_angle", s.max_sixth_angle},
                      {"substitution", s.max_substitution}}},
                    {"failing", s.failing},
                    {"pass", s.pass}};
    out << j.dump(2) << '\n';
  } else {
    out << "seed:                 " << cfg.seed << '\n' << s.to_text(cfg.tol);
  }
  return s.pass ? exit_code::kOk : exit_code::kVerificationFailed;
}

}  // namespace ftpoint
