#include "sparserips/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string_view>

#include "sparserips/errors.hpp"
#include "sparserips/numeric.hpp"

namespace sparse_rips::io {

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_blank(s.back())) s.remove_suffix(1);
  return s;
}

std::string at_line(std::size_t line) { return "line " + std::to_string(line) + ": "; }

/// Splits on commas and whitespace; consecutive commas are an error.
std::vector<double> parse_numbers(std::string_view text, std::size_t line) {
  std::vector<double> values;
  std::size_t pos = 0;
  bool expect_value = false;  // set after a comma
  while (pos < text.size()) {
    const char c = text[pos];
    if (is_blank(c)) {
      ++pos;
      continue;
    }
    if (c == ',') {
      if (expect_value || values.empty()) throw InputError(at_line(line) + "empty field");
      expect_value = true;
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < text.size() && !is_blank(text[end]) && text[end] != ',') ++end;
    const std::string_view token = text.substr(pos, end - pos);
    const std::optional<double> value = parse_real(token);
    if (!value) throw InputError(at_line(line) + "not a number: '" + std::string(token) + "'");
    values.push_back(*value);
    expect_value = false;
    pos = end;
  }
  if (expect_value) throw InputError(at_line(line) + "trailing comma");
  return values;
}

std::size_t parse_index(std::string_view token, std::size_t line, bool allow_minus_one) {
  if (allow_minus_one && token == "-1") return kNoParent;
  std::size_t value = 0;
  if (token.empty()) throw InputError(at_line(line) + "missing index");
  for (char c : token) {
    if (c < '0' || c > '9') throw InputError(at_line(line) + "bad index '" + std::string(token) + "'");
    value = value * 10 + static_cast<std::size_t>(c - '0');
  }
  return value;
}

std::vector<std::string_view> split_blank(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    while (pos < s.size() && is_blank(s[pos])) ++pos;
    std::size_t end = pos;
    while (end < s.size() && !is_blank(s[end])) ++end;
    if (end > pos) out.push_back(s.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

bool skippable(std::string_view line) {
  const std::string_view t = trim(line);
  return t.empty() || t.front() == '#';
}

}  // namespace

std::vector<Point> read_points(std::istream& in) {
  std::vector<Point> points;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (skippable(line)) continue;
    Point p = parse_numbers(line, number);
    for (double c : p) {
      if (!std::isfinite(c)) throw InputError(at_line(number) + "coordinates must be finite");
    }
    if (!points.empty() && p.size() != points.front().size()) {
      throw InputError(at_line(number) + "expected " + std::to_string(points.front().size()) +
                       " coordinates, found " + std::to_string(p.size()));
    }
    points.push_back(std::move(p));
  }
  if (points.empty()) throw InputError("no points");
  return points;
}

void write_points(std::ostream& out, const std::vector<Point>& points) {
  for (const Point& p : points) {
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k) out << ',';
      out << format_real(p[k]);
    }
    out << '\n';
  }
}

std::vector<double> read_lower_distance(std::istream& in) {
  std::vector<double> values;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    // rows may end with a separating comma
    if (t.back() == ',') t.remove_suffix(1);
    for (double v : parse_numbers(t, number)) {
      if (!std::isfinite(v) || v < 0.0) {
        throw InputError(at_line(number) + "distances must be finite and nonnegative");
      }
      values.push_back(v);
    }
  }
  return values;
}

void write_lower_distance(std::ostream& out, const MatrixOracle& matrix) {
  for (std::size_t i = 1; i < matrix.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (j) out << ',';
      out << format_real(matrix(i, j));
    }
    out << '\n';
  }
}

void write_tree(std::ostream& out, const ContractionTree& tree) {
  out << tree.size() << '\n';
  for (std::size_t k = 0; k < tree.size(); ++k) {
    out << tree.point(k) << ' ';
    if (k == 0) {
      out << "-1";
    } else {
      out << tree.point(tree.parent(k));
    }
    out << ' ' << format_real(tree.time(k)) << '\n';
  }
}

ContractionTree read_tree(std::istream& in) {
  std::string line;
  std::size_t number = 0;
  std::optional<std::size_t> count;
  std::vector<std::size_t> order;
  std::vector<std::size_t> parent_points;
  std::vector<double> times;
  while (std::getline(in, line)) {
    ++number;
    if (skippable(line)) continue;
    const std::vector<std::string_view> tokens = split_blank(line);
    if (!count) {
      if (tokens.size() != 1) throw InputError(at_line(number) + "expected the node count");
      count = parse_index(tokens[0], number, false);
      continue;
    }
    if (tokens.size() != 3) throw InputError(at_line(number) + "expected 'point parent time'");
    order.push_back(parse_index(tokens[0], number, false));
    parent_points.push_back(parse_index(tokens[1], number, true));
    const std::optional<double> t = parse_real(tokens[2]);
    if (!t) throw InputError(at_line(number) + "bad time '" + std::string(tokens[2]) + "'");
    times.push_back(*t);
  }
  if (!count) throw InputError("no points");
  if (order.size() != *count) {
    throw InputError("tree file declares " + std::to_string(*count) + " nodes but lists " +
                     std::to_string(order.size()));
  }
  std::vector<std::size_t> position(*count, kNoParent);
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (order[k] >= *count || position[order[k]] != kNoParent) {
      throw InputError("tree file: node list is not a permutation");
    }
    position[order[k]] = k;
  }
  std::vector<std::size_t> parents(order.size(), kNoParent);
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (parent_points[k] == kNoParent) {
      if (k != 0) throw InputError("tree file: only the first node may be the root");
      continue;
    }
    if (parent_points[k] >= *count) throw InputError("tree file: parent out of range");
    parents[k] = position[parent_points[k]];
  }
  try {
    return ContractionTree(std::move(order), std::move(parents), std::move(times));
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("tree file: ") + e.what());
  }
}

void write_sparse(std::ostream& out, const std::vector<Edge>& edges) {
  for (const Edge& e : edges) out << e.i << ' ' << e.j << ' ' << format_real(e.length) << '\n';
}

std::vector<Edge> read_sparse(std::istream& in) {
  std::vector<Edge> edges;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (skippable(line)) continue;
    const std::vector<std::string_view> tokens = split_blank(line);
    if (tokens.size() != 3) throw InputError(at_line(number) + "expected 'i j d'");
    Edge e;
    e.i = parse_index(tokens[0], number, false);
    e.j = parse_index(tokens[1], number, false);
    const std::optional<double> d = parse_real(tokens[2]);
    if (!d || !std::isfinite(*d) || *d < 0.0) {
      throw InputError(at_line(number) + "bad length '" + std::string(tokens[2]) + "'");
    }
    e.length = *d;
    if (e.i == e.j) throw InputError(at_line(number) + "self-loop");
    if (e.i > e.j) std::swap(e.i, e.j);
    edges.push_back(e);
  }
  return edges;
}

Json real_to_json(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return value;
}

double real_from_json(const Json& value, const std::string& what) {
  if (value.is_number()) return value.get<double>();
  if (value.is_string()) {
    if (const std::optional<double> v = parse_real(value.get<std::string>())) return *v;
  }
  throw InputError(what + ": expected a number or \"inf\"");
}

Json profile_to_json(const PrecisionProfile& profile) {
  Json j;
  j["n"] = profile.n;
  j["N"] = profile.N;
  j["eps0"] = real_to_json(profile.eps0);
  j["eps1"] = real_to_json(profile.eps1);
  j["R"] = real_to_json(profile.R);
  j["T"] = profile.threshold ? real_to_json(*profile.threshold) : Json(nullptr);
  return j;
}

PrecisionProfile profile_from_json(const Json& json) {
  if (!json.is_object()) throw InputError("profile: expected an object");
  for (const char* key : {"n", "N", "eps0", "eps1", "R"}) {
    if (!json.contains(key)) throw InputError(std::string("profile: missing '") + key + "'");
  }
  PrecisionProfile p;
  try {
    p.n = json.at("n").get<std::size_t>();
    p.N = json.at("N").get<std::size_t>();
  } catch (const nlohmann::json::exception&) {
    throw InputError("profile: n and N must be counts");
  }
  p.eps0 = real_from_json(json.at("eps0"), "profile eps0");
  p.eps1 = real_from_json(json.at("eps1"), "profile eps1");
  p.R = real_from_json(json.at("R"), "profile R");
  if (json.contains("T") && !json.at("T").is_null()) p.threshold = real_from_json(json.at("T"), "profile T");
  return p;
}

namespace {

Json entry_to_json(const DiagramEntry& e) {
  Json j;
  j["dim"] = e.dim;
  j["birth"] = real_to_json(e.birth);
  j["death"] = real_to_json(e.death);
  return j;
}

}  // namespace

Json diagram_to_json(const PersistenceDiagram& diagram, const Json& meta) {
  Json j;
  j["field"] = diagram.field;
  Json entries = Json::array();
  for (const DiagramEntry& e : diagram.entries) entries.push_back(entry_to_json(e));
  j["entries"] = std::move(entries);
  j["meta"] = meta;
  return j;
}

Json approx_diagram_to_json(const ApproxDiagram& diagram, const Json& meta) {
  Json j;
  j["field"] = diagram.base.field;
  Json entries = Json::array();
  for (const ApproxEntry& a : diagram.entries) {
    Json e = entry_to_json(a.entry);
    e["rect"] = Json::array({real_to_json(a.rect.birth_lo), real_to_json(a.rect.birth_hi),
                             real_to_json(a.rect.death_lo), real_to_json(a.rect.death_hi)});
    e["class"] = a.cls == EntryClass::Definite ? "definite" : "possible";
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  Json m = meta;
  m["profile"] = profile_to_json(diagram.profile);
  j["meta"] = std::move(m);
  return j;
}

PersistenceDiagram diagram_from_json(const Json& json) {
  if (!json.is_object() || !json.contains("entries") || !json.at("entries").is_array()) {
    throw InputError("diagram: expected an object with an 'entries' array");
  }
  PersistenceDiagram d;
  if (json.contains("field")) {
    if (!json.at("field").is_number_unsigned()) throw InputError("diagram: bad field");
    d.field = json.at("field").get<std::uint32_t>();
  }
  for (const Json& e : json.at("entries")) {
    if (!e.is_object() || !e.contains("dim") || !e.contains("birth") || !e.contains("death")) {
      throw InputError("diagram: entries need dim, birth and death");
    }
    if (!e.at("dim").is_number_unsigned()) throw InputError("diagram: bad dim");
    DiagramEntry entry;
    entry.dim = e.at("dim").get<std::size_t>();
    entry.birth = real_from_json(e.at("birth"), "diagram birth");
    entry.death = real_from_json(e.at("death"), "diagram death");
    if (entry.death < entry.birth) throw InputError("diagram: death before birth");
    d.entries.push_back(entry);
  }
  std::sort(d.entries.begin(), d.entries.end());
  return d;
}

void write_pairs(std::ostream& out, const PersistenceDiagram& diagram) {
  for (const DiagramEntry& e : diagram.entries) {
    out << e.dim << ' ' << format_real(e.birth) << ' ' << format_real(e.death) << '\n';
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw InputError("failed writing '" + path.string() + "'");
}

std::filesystem::path sidecar_path(const std::filesystem::path& path) {
  std::filesystem::path p = path;
  p.replace_extension(".meta.json");
  return p;
}

}  // namespace sparse_rips::io
