#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sparserips/covertree.hpp"
#include "sparserips/diagram.hpp"
#include "sparserips/metric.hpp"
#include "sparserips/persistence.hpp"
#include "sparserips/sparsify.hpp"

namespace sparse_rips::io {

using Json = nlohmann::ordered_json;

/// One point per line, coordinates separated by commas and/or whitespace.
/// Blank lines and lines starting with '#' are skipped. Errors name the line.
std::vector<Point> read_points(std::istream& in);
void write_points(std::ostream& out, const std::vector<Point>& points);

/// Strict lower triangle in row-major order, separated by commas and/or whitespace.
std::vector<double> read_lower_distance(std::istream& in);
void write_lower_distance(std::ostream& out, const MatrixOracle& matrix);

/// Header "n", then per position "point parent_point time" (parent -1 and
/// time inf for the root).
void write_tree(std::ostream& out, const ContractionTree& tree);
ContractionTree read_tree(std::istream& in);

/// "i j d" per edge.
void write_sparse(std::ostream& out, const std::vector<Edge>& edges);
std::vector<Edge> read_sparse(std::istream& in);

Json real_to_json(double value);
double real_from_json(const Json& value, const std::string& what);

/// {n, N, eps0, eps1, R, T}; T is null when absent.
Json profile_to_json(const PrecisionProfile& profile);
PrecisionProfile profile_from_json(const Json& json);

/// {"field", "entries": [{"dim", "birth", "death"}], "meta"}.
Json diagram_to_json(const PersistenceDiagram& diagram, const Json& meta = Json::object());
/// Entries additionally carry "rect" and "class"; meta gains the profile.
Json approx_diagram_to_json(const ApproxDiagram& diagram, const Json& meta = Json::object());
PersistenceDiagram diagram_from_json(const Json& json);

/// "dim birth death" per line.
void write_pairs(std::ostream& out, const PersistenceDiagram& diagram);

std::string read_text_file(const std::filesystem::path& path);
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Sidecar path for a sparse file or tree file: same stem with ".meta.json".
std::filesystem::path sidecar_path(const std::filesystem::path& path);

}  // namespace sparse_rips::io
