#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "bicentrality/centrality.hpp"
#include "bicentrality/errors.hpp"
#include "bicentrality/io.hpp"
#include "bicentrality/validation.hpp"

namespace bicentrality::cli {
namespace {

struct Config {
  std::string matrix_path;
  std::string edges_path;
  std::string phi = "identity";
  double tolerance = 1e-10;
  std::size_t max_iterations = 100000;
  double tie_tolerance = 1e-9;
  std::string format = "json";
  std::string engine = "alternating";
  std::string target_path;
  std::string reverse_out;
  std::string phi_out;
  long long seed = 0;  // reserved for test utilities
};

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw Error(ErrorCode::kInvalidArgument, "cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) {
    throw Error(ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
  }
}

WeightRelation load_relation(const Config& cfg, std::istream& in) {
  if (!cfg.matrix_path.empty()) {
    return io::read_matrix_csv(read_source(cfg.matrix_path, in));
  }
  return io::read_edge_list(read_source(cfg.edges_path, in));
}

io::ReportFormat report_format(const Config& cfg) {
  return cfg.format == "tsv" ? io::ReportFormat::kTsv : io::ReportFormat::kJson;
}

spectral::PowerSettings power_settings(const Config& cfg) {
  spectral::PowerSettings s;
  s.tolerance = cfg.tolerance;
  s.max_iterations = cfg.max_iterations;
  return s;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNoConvergence:
      return kNoConvergence;
    case ErrorCode::kTransformDomain:
    case ErrorCode::kNotIrreducible:
    case ErrorCode::kPreconditionFailed:
    case ErrorCode::kZeroVector:
    case ErrorCode::kNonPositiveEigenvalue:
    case ErrorCode::kDistinctnessViolation:
    case ErrorCode::kOracleFailure:
      return kPrecondition;
    default:
      return kUsageOrParse;
  }
}

int run_nebs(const Config& cfg, std::istream& in, std::ostream& out) {
  const WeightRelation rel = load_relation(cfg, in);
  const ReverseTransform phi = parse_phi(cfg.phi, in);
  centrality::NebsOptions options;
  options.engine = cfg.engine == "product" ? centrality::NebsEngine::kProduct
                                           : centrality::NebsEngine::kAlternating;
  options.tie_tolerance = cfg.tie_tolerance;
  const auto result =
      centrality::compute_nebs(rel, phi, power_settings(cfg), options);
  out << io::write_nebs_report(
      result, centrality::rank(result.a, rel.a_labels(), cfg.tie_tolerance),
      centrality::rank(result.b, rel.b_labels(), cfg.tie_tolerance),
      report_format(cfg));
  return kOk;
}

int run_necs(const Config& cfg, std::istream& in, std::ostream& out) {
  const auto adjacency =
      io::read_square_matrix_csv(read_source(cfg.matrix_path, in));
  const auto result =
      centrality::compute_necs(adjacency.matrix, power_settings(cfg));
  out << io::write_necs_report(
      result, centrality::rank(result.c, adjacency.labels, cfg.tie_tolerance),
      report_format(cfg));
  return kOk;
}

int run_check(const Config& cfg, std::istream& in, std::ostream& out,
              std::ostream& err) {
  const WeightRelation rel = load_relation(cfg, in);
  const ReverseTransform phi = parse_phi(cfg.phi, in);
  const ValidationReport report = validate(rel, phi);
  std::vector<centrality::Warning> warnings;
  if (report.ok()) {
    warnings = centrality::detect_degeneracy(rel.weights(),
                                             reverse_matrix(rel, phi));
  }
  out << io::write_validation_report(report, warnings, report_format(cfg));
  if (!report.ok()) {
    err << "error: " << report.summary() << '\n';
    return kPrecondition;
  }
  return kOk;
}

int run_baseline(const Config& cfg, std::istream& in, std::ostream& out) {
  const WeightRelation rel = load_relation(cfg, in);
  const auto averages = centrality::baseline_averages(rel);
  out << io::write_baseline_report(
      centrality::rank(averages.a_bar, rel.a_labels(), cfg.tie_tolerance),
      centrality::rank(averages.b_bar, rel.b_labels(), cfg.tie_tolerance),
      report_format(cfg));
  return kOk;
}

int run_construct_reverse(const Config& cfg, std::istream& in,
                          std::ostream& out) {
  const WeightRelation rel = load_relation(cfg, in);
  Vector target = io::read_target(read_source(cfg.target_path, in),
                                  rel.a_labels());
  for (double x : target) {
    if (!(x > 0.0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "target ratings must be positive");
    }
  }
  normalize(target);
  const auto built =
      centrality::construct_reverse_for_target(rel.weights(), target);
  const std::string matrix_csv =
      io::write_matrix_csv(rel.a_labels(), rel.b_labels(), built.reverse);
  const std::string phi_tsv = io::write_phi_table(built.phi);

  if (!cfg.reverse_out.empty()) {
    write_file(cfg.reverse_out, matrix_csv);
  } else {
    out << matrix_csv;
  }
  if (!cfg.phi_out.empty()) {
    write_file(cfg.phi_out, phi_tsv);
  } else {
    if (cfg.reverse_out.empty()) out << '\n';
    out << phi_tsv;
  }
  return kOk;
}

void add_input_options(CLI::App& cmd, Config& cfg, bool allow_edges) {
  auto* matrix =
      cmd.add_option("--matrix", cfg.matrix_path, "Matrix CSV input ('-' = stdin)");
  if (allow_edges) {
    auto* edges = cmd.add_option("--edges", cfg.edges_path,
                                 "Tab-separated edge list input ('-' = stdin)");
    matrix->excludes(edges);
    edges->excludes(matrix);
  } else {
    matrix->required();
  }
}

void add_solver_options(CLI::App& cmd, Config& cfg) {
  cmd.add_option("--tol", cfg.tolerance, "Convergence tolerance")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--max-iter", cfg.max_iterations, "Iteration budget")
      ->check(CLI::PositiveNumber);
}

void add_format_option(CLI::App& cmd, Config& cfg) {
  cmd.add_option("--format", cfg.format, "Report format")
      ->check(CLI::IsMember({"json", "tsv"}));
}

void add_tie_option(CLI::App& cmd, Config& cfg) {
  cmd.add_option("--tie-tol", cfg.tie_tolerance, "Score gap treated as a tie")
      ->check(CLI::NonNegativeNumber);
}

}  // namespace

ReverseTransform parse_phi(const std::string& spec, std::istream& in) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg =
      colon == std::string::npos ? std::string{} : spec.substr(colon + 1);
  const auto number = [&]() {
    try {
      std::size_t used = 0;
      const double v = std::stod(arg, &used);
      if (used != arg.size()) throw std::invalid_argument(arg);
      return v;
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::kInvalidArgument,
                  "--phi " + kind + " needs a numeric parameter, got '" + arg +
                      "'");
    }
  };
  if (kind == "identity" && colon == std::string::npos) {
    return ReverseTransform::identity();
  }
  if (kind == "reciprocal" && colon == std::string::npos) {
    return ReverseTransform::reciprocal();
  }
  if (kind == "scale") return ReverseTransform::scale(number());
  if (kind == "power") return ReverseTransform::power(number());
  if (kind == "table" && !arg.empty()) {
    return io::read_phi_table(read_source(arg, in));
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown --phi '" + spec +
                  "' (expected identity, reciprocal, scale:<g>, power:<p> or "
                  "table:<path>)");
}

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Eigenvector centrality and bicentrality ratings"};
  app.name("bicentrality");
  app.require_subcommand(1, 1);

  Config cfg;

  auto* nebs = app.add_subcommand(
      "nebs", "Rate both item sets of a weight relation");
  add_input_options(*nebs, cfg, true);
  nebs->add_option("--phi", cfg.phi, "Reverse transform");
  add_solver_options(*nebs, cfg);
  add_tie_option(*nebs, cfg);
  add_format_option(*nebs, cfg);
  nebs->add_option("--engine", cfg.engine, "Iteration engine")
      ->check(CLI::IsMember({"alternating", "product"}));
  nebs->add_option("--seed", cfg.seed, "Reserved for test utilities");

  auto* necs = app.add_subcommand(
      "necs", "Eigenvector centrality of a square adjacency matrix");
  add_input_options(*necs, cfg, false);
  add_solver_options(*necs, cfg);
  add_tie_option(*necs, cfg);
  add_format_option(*necs, cfg);
  necs->add_option("--seed", cfg.seed, "Reserved for test utilities");

  auto* check = app.add_subcommand(
      "check", "Validate a relation and transform and report degeneracies");
  add_input_options(*check, cfg, true);
  check->add_option("--phi", cfg.phi, "Reverse transform");
  add_format_option(*check, cfg);

  auto* baseline = app.add_subcommand(
      "baseline", "Row and column weight averages");
  add_input_options(*baseline, cfg, true);
  add_tie_option(*baseline, cfg);
  add_format_option(*baseline, cfg);

  auto* construct = app.add_subcommand(
      "construct-reverse",
      "Build a reverse weight matrix and transform table that realise a "
      "target A-rating");
  add_input_options(*construct, cfg, true);
  construct->add_option("--target", cfg.target_path,
                        "label<TAB>value lines for every A-label")
      ->required();
  construct->add_option("--reverse-out", cfg.reverse_out,
                        "Write the reverse matrix CSV here");
  construct->add_option("--phi-out", cfg.phi_out,
                        "Write the transform table TSV here");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageOrParse;
  }

  if (cfg.matrix_path.empty() && cfg.edges_path.empty()) {
    err << "error: one of --matrix or --edges is required\n";
    return kUsageOrParse;
  }

  try {
    if (*nebs) return run_nebs(cfg, in, out);
    if (*necs) return run_necs(cfg, in, out);
    if (*check) return run_check(cfg, in, out, err);
    if (*baseline) return run_baseline(cfg, in, out);
    return run_construct_reverse(cfg, in, out);
  } catch (const Error& e) {
    err << "error [" << error_code_name(e.code()) << "]: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageOrParse;
  }
}

}  // namespace bicentrality::cli
