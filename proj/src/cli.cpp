#include "sparserips/cli.hpp"

#include <CLI11.hpp>

#include <charconv>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "sparserips/covertree.hpp"
#include "sparserips/diagram.hpp"
#include "sparserips/errors.hpp"
#include "sparserips/generators.hpp"
#include "sparserips/io.hpp"
#include "sparserips/metric.hpp"
#include "sparserips/numeric.hpp"
#include "sparserips/persistence.hpp"
#include "sparserips/sparsify.hpp"
#include "sparserips/svg.hpp"

namespace sparse_rips {

namespace {

using io::Json;
namespace fs = std::filesystem;

struct Options {
  std::string kind;  // generate: circle | solenoid | cloud
  std::string input;
  std::string format = "points";
  std::string tree;
  double eps1 = 0.25;
  std::string keep = "all";
  std::size_t dim = 1;
  std::uint32_t field = 2;
  std::optional<double> threshold;
  std::uint64_t seed = 0;
  std::size_t n = 100;
  std::size_t cloud_dim = 2;
  std::size_t iterations = 12;
  std::string out;
  bool log_plot = false;
  double clip = 1e-3;
  std::optional<double> overlay_eps0;
  std::optional<double> overlay_eps1;
  bool export_only = false;
  std::string full;
  std::string sparse;
};

Json optional_real(const std::optional<double>& v) {
  return v ? io::real_to_json(*v) : Json(nullptr);
}

/// The parsed options that matter for `command`, echoed into output metadata.
Json config_json(const std::string& command, const Options& o) {
  Json j;
  j["command"] = command;
  if (command == "generate") {
    j["kind"] = o.kind;
    j["n"] = o.n;
    if (o.kind == "cloud") j["dim"] = o.cloud_dim;
    if (o.kind == "solenoid") j["iterations"] = o.iterations;
    if (o.kind != "circle") j["seed"] = o.seed;
    j["out"] = o.out;
    return j;
  }
  j["input"] = o.input;
  j["format"] = o.format;
  if (command == "sparsify") {
    j["tree"] = o.tree;
    j["eps1"] = o.eps1;
    j["keep"] = o.keep;
    j["threshold"] = optional_real(o.threshold);
  }
  if (command == "persist") {
    j["dim"] = o.dim;
    j["field"] = o.field;
    j["threshold"] = optional_real(o.threshold);
    j["export_only"] = o.export_only;
  }
  j["out"] = o.out;
  return j;
}

std::unique_ptr<DistanceOracle> load_oracle(const std::string& path, const std::string& format) {
  std::istringstream in(io::read_text_file(path));
  if (format == "points") {
    const std::vector<Point> points = io::read_points(in);
    return std::make_unique<EuclideanOracle>(euclidean_oracle(points));
  }
  if (format == "lower-distance") {
    const std::vector<double> lower = io::read_lower_distance(in);
    if (lower.empty()) throw InputError("no points");
    return std::make_unique<MatrixOracle>(matrix_oracle(lower));
  }
  throw InputError("unknown input format '" + format + "'");
}

std::size_t parse_keep(const std::string& keep, std::size_t n) {
  if (keep == "all") return n;
  std::size_t value = 0;
  const char* begin = keep.data();
  const auto [ptr, ec] = std::from_chars(begin, begin + keep.size(), value);
  if (ec != std::errc() || ptr != begin + keep.size()) {
    throw InputError("--keep expects a count or 'all', got '" + keep + "'");
  }
  if (value == 0 || value > n) {
    throw InputError("--keep " + keep + " is outside 1.." + std::to_string(n));
  }
  return value;
}

std::uint64_t simplex_cap() {
  const char* env = std::getenv(kMaxSimplicesEnv);
  if (!env || !*env) return kDefaultMaxSimplices;
  std::uint64_t value = 0;
  const std::string_view text(env);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InputError(std::string(kMaxSimplicesEnv) + " must be a nonnegative integer");
  }
  return value;
}

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw InputError(std::string(flag) + " is required");
}

int cmd_generate(const Options& o, std::ostream& out) {
  require(o.out, "--out");
  std::ostringstream text;
  if (o.kind == "circle") {
    const std::vector<double> angles = circle_sample(o.n);
    io::write_lower_distance(text, materialize(circle_oracle(angles)));
  } else if (o.kind == "solenoid") {
    io::write_points(text, solenoid_sample({o.iterations, o.n, o.seed}));
  } else {
    io::write_points(text, random_cloud(o.n, o.cloud_dim, o.seed));
  }
  io::write_text_file(o.out, text.str());
  out << "wrote " << o.n << (o.kind == "circle" ? " circle points (lower-distance) to " : " points to ")
      << o.out << "\n";
  return kExitOk;
}

ContractionTree build_tree(const DistanceOracle& oracle) {
  return tighten(build_cover_tree(oracle), oracle);
}

int cmd_tree(const Options& o, std::ostream& out, std::ostream& err) {
  require(o.input, "--input");
  require(o.out, "--out");
  const auto oracle = load_oracle(o.input, o.format);
  const ContractionTree tree = build_tree(*oracle);
  std::ostringstream text;
  io::write_tree(text, tree);
  io::write_text_file(o.out, text.str());
  Json meta;
  meta["n"] = tree.size();
  meta["config"] = config_json("tree", o);
  io::write_text_file(io::sidecar_path(o.out), meta.dump(2) + "\n");

  if (const auto bad = find_density_violation(tree, *oracle)) {
    err << "warning: density bound 4 fails at positions " << bad->first << ", " << bad->second
        << " (the input is probably not a metric)\n";
  }
  std::vector<double> finite(tree.times().begin() + 1, tree.times().end());
  out << "N: " << tree.size() << "\n";
  out << "R = r_1: " << format_real(tree.size() > 1 ? tree.time(1) : 0.0) << "\n";
  if (!finite.empty()) {
    std::vector<double> sorted = finite;
    std::sort(sorted.begin(), sorted.end());
    out << "rad min/median/max: " << format_real(sorted.front()) << " "
        << format_real(sorted[sorted.size() / 2]) << " " << format_real(sorted.back()) << "\n";
  }
  return kExitOk;
}

int cmd_sparsify(const Options& o, std::ostream& out) {
  require(o.input, "--input");
  require(o.out, "--out");
  if (!(o.eps1 >= 0.0) || !std::isfinite(o.eps1)) throw InputError("--eps1 must be finite and >= 0");
  const auto oracle = load_oracle(o.input, o.format);
  std::optional<ContractionTree> tree;
  if (!o.tree.empty()) {
    std::istringstream in(io::read_text_file(o.tree));
    tree.emplace(io::read_tree(in));
    if (tree->size() != oracle->size()) {
      throw InputError("tree has " + std::to_string(tree->size()) + " nodes but the input has " +
                       std::to_string(oracle->size()) + " points");
    }
  } else {
    tree.emplace(build_tree(*oracle));
  }
  const std::size_t keep = parse_keep(o.keep, tree->size());
  PrecisionProfile profile = make_profile(*tree, keep, o.eps1).profile;
  profile.threshold = o.threshold;
  const SparseLengthMatrix matrix = sparsify(*tree, *oracle, profile);

  std::ostringstream text;
  io::write_sparse(text, matrix.edges);
  io::write_text_file(o.out, text.str());
  Json meta = io::profile_to_json(profile);
  meta["config"] = config_json("sparsify", o);
  io::write_text_file(io::sidecar_path(o.out), meta.dump(2) + "\n");

  const std::size_t full = profile.N * (profile.N - 1) / 2;
  out << "edges: " << matrix.edges.size() << "\n";
  out << "full edges: " << full << "\n";
  out << "n: " << profile.n << "  N: " << profile.N << "  eps0: " << format_real(profile.eps0)
      << "  eps1: " << format_real(profile.eps1) << "  R: " << format_real(profile.R) << "\n";
  return kExitOk;
}

int cmd_persist(const Options& o, std::ostream& out) {
  require(o.input, "--input");
  if (o.format == "sparse") {
    const Json sidecar = io::read_json_file(io::sidecar_path(o.input));
    const PrecisionProfile profile = io::profile_from_json(sidecar);
    if (o.export_only) {
      out << "sparse matrix left at " << o.input << " (" << profile.N << " points)\n";
      return kExitOk;
    }
    require(o.out, "--out");
    std::istringstream in(io::read_text_file(o.input));
    const std::vector<Edge> edges = io::read_sparse(in);
    const Filtration f = build_filtration(profile.N, edges, o.dim + 1, o.threshold, simplex_cap());
    const PersistenceDiagram diagram = reduce(f, o.field);
    Json meta;
    meta["config"] = config_json("persist", o);
    const Json json = io::approx_diagram_to_json(approximate(diagram, profile), meta);
    io::write_text_file(o.out, json.dump(2) + "\n");
    out << "simplices: " << f.simplices.size() << "  entries: " << diagram.entries.size() << "\n";
    return kExitOk;
  }

  require(o.out, "--out");
  const auto oracle = load_oracle(o.input, o.format);
  PrecisionProfile profile = PrecisionProfile::exact(oracle->size());
  profile.threshold = o.threshold;
  const SparseLengthMatrix matrix = full_length_matrix(*oracle);
  if (o.export_only) {
    std::ostringstream text;
    io::write_sparse(text, matrix.edges);
    io::write_text_file(o.out, text.str());
    Json meta = io::profile_to_json(profile);
    meta["config"] = config_json("persist", o);
    io::write_text_file(io::sidecar_path(o.out), meta.dump(2) + "\n");
    out << "wrote " << matrix.edges.size() << " edges to " << o.out << "\n";
    return kExitOk;
  }
  const Filtration f = build_filtration(matrix, o.dim + 1, o.threshold, simplex_cap());
  const PersistenceDiagram diagram = reduce(f, o.field);
  Json meta;
  meta["config"] = config_json("persist", o);
  const Json json = io::approx_diagram_to_json(approximate(diagram, profile), meta);
  io::write_text_file(o.out, json.dump(2) + "\n");
  out << "simplices: " << f.simplices.size() << "  entries: " << diagram.entries.size() << "\n";
  return kExitOk;
}

std::optional<PrecisionProfile> profile_of(const Json& json) {
  if (!json.is_object() || !json.contains("meta")) return std::nullopt;
  const Json& meta = json.at("meta");
  if (!meta.is_object() || !meta.contains("profile")) return std::nullopt;
  return io::profile_from_json(meta.at("profile"));
}

int cmd_plot(const Options& o, std::ostream& out, std::ostream& err) {
  require(o.input, "--input");
  const Json json = io::read_json_file(o.input);
  const PersistenceDiagram diagram = io::diagram_from_json(json);
  const std::optional<PrecisionProfile> profile = profile_of(json);
  if (!profile) err << "warning: no profile metadata in " << o.input << "; plotting plain dots\n";
  PlotOptions plot;
  plot.log_axes = o.log_plot;
  plot.clip = o.clip;
  if (o.overlay_eps0 || o.overlay_eps1) {
    plot.overlay = ScaleMap{profile ? profile->R : kInfinity, o.overlay_eps0.value_or(0.0),
                            o.overlay_eps1.value_or(0.0), std::nullopt};
  }
  const std::string svg = render_svg(diagram, profile, plot);
  if (o.out.empty()) {
    out << svg;
  } else {
    io::write_text_file(o.out, svg);
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  require(o.full, "--full");
  require(o.sparse, "--sparse");
  const Json full_json = io::read_json_file(o.full);
  const Json sparse_json = io::read_json_file(o.sparse);
  const PersistenceDiagram full = io::diagram_from_json(full_json);
  const PersistenceDiagram sparse = io::diagram_from_json(sparse_json);
  if (full.field != sparse.field) {
    throw InputError("field mismatch: " + std::to_string(full.field) + " vs " +
                     std::to_string(sparse.field));
  }
  std::optional<PrecisionProfile> profile = profile_of(sparse_json);
  if (!profile) err << "warning: no profile metadata in " << o.sparse << "; using psi = id\n";
  const ScaleMap psi = profile ? profile->psi() : ScaleMap::identity();
  const InterleavingReport report = verify_interleaving(full, sparse, psi);
  out << report.summary();
  out << (report.passed() ? "PASS" : "FAIL") << "\n";
  return report.passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sparsified Vietoris-Rips persistence with interleaving guarantees", "sparse-rips"};
  app.require_subcommand(1);
  Options o;

  auto* generate = app.add_subcommand("generate", "Write a sample data set");
  generate->add_option("kind", o.kind, "circle | solenoid | cloud")
      ->required()
      ->check(CLI::IsMember({"circle", "solenoid", "cloud"}));
  generate->add_option("--n", o.n, "Number of points")->check(CLI::PositiveNumber);
  generate->add_option("--dim", o.cloud_dim, "Cloud dimension")->check(CLI::PositiveNumber);
  generate->add_option("--iterations", o.iterations, "Solenoid map iterations")
      ->check(CLI::PositiveNumber);
  generate->add_option("--seed", o.seed, "RNG seed");
  generate->add_option("--out", o.out, "Output file");

  const auto formats = CLI::IsMember({"points", "lower-distance"});
  auto* tree = app.add_subcommand("tree", "Build and tighten the contraction tree");
  tree->add_option("--input", o.input, "Input file");
  tree->add_option("--format", o.format, "points | lower-distance")->check(formats);
  tree->add_option("--out", o.out, "Tree file");

  auto* sparsify_cmd = app.add_subcommand("sparsify", "Write the sparsified length matrix");
  sparsify_cmd->add_option("--input", o.input, "Input file");
  sparsify_cmd->add_option("--format", o.format, "points | lower-distance")->check(formats);
  sparsify_cmd->add_option("--tree", o.tree, "Tree file from `tree` (built in-process if absent)");
  sparsify_cmd->add_option("--eps1", o.eps1, "Relative error");
  sparsify_cmd->add_option("--keep", o.keep, "Retained points, or 'all'");
  sparsify_cmd->add_option("--threshold", o.threshold, "Drop edges longer than this");
  sparsify_cmd->add_option("--out", o.out, "Sparse 'i j d' file");

  auto* persist = app.add_subcommand("persist", "Compute the persistence diagram");
  persist->add_option("--input", o.input, "Input file");
  persist->add_option("--format", o.format, "sparse | points | lower-distance")
      ->check(CLI::IsMember({"sparse", "points", "lower-distance"}));
  persist->add_option("--dim", o.dim, "Top homology dimension");
  persist->add_option("--field", o.field, "Prime field characteristic");
  persist->add_option("--threshold", o.threshold, "Drop edges longer than this");
  persist->add_option("--out", o.out, "Diagram JSON");
  persist->add_flag("--export-only", o.export_only, "Stop after the sparse matrix file");

  auto* plot = app.add_subcommand("plot", "Render a diagram JSON as SVG");
  plot->add_option("--input", o.input, "Diagram JSON");
  plot->add_option("--out", o.out, "SVG file (stdout if absent)");
  plot->add_flag("--log-plot", o.log_plot, "Log-log axes");
  plot->add_option("--clip", o.clip, "Lower clip for log axes");
  plot->add_option("--overlay-eps0", o.overlay_eps0, "Absolute error of an overlay psi");
  plot->add_option("--overlay-eps1", o.overlay_eps1, "Relative error of an overlay psi");

  auto* verify = app.add_subcommand("verify", "Check a sparse diagram against the full one");
  verify->add_option("--full", o.full, "Diagram JSON of the full filtration");
  verify->add_option("--sparse", o.sparse, "Diagram JSON of the sparsified filtration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (generate->parsed()) return cmd_generate(o, out);
    if (tree->parsed()) return cmd_tree(o, out, err);
    if (sparsify_cmd->parsed()) return cmd_sparsify(o, out);
    if (persist->parsed()) return cmd_persist(o, out);
    if (plot->parsed()) return cmd_plot(o, out, err);
    if (verify->parsed()) return cmd_verify(o, out, err);
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n"
        << "hint: raise " << kMaxSimplicesEnv
        << ", lower --dim, or rerun with --export-only and feed the sparse file to an external "
           "persistence engine\n";
    return kExitResourceGuard;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kExitResourceGuard;
  }
  return kExitInputError;
}

}  // namespace sparse_rips
