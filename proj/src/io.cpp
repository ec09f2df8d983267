#include "bicolor/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace bicolor::io {

namespace {

int as_int(Json const &j, std::string_view what)
{
  if (!j.is_number_integer())
    throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

Json const &field(Json const &j, char const *name)
{
  if (!j.is_object() || !j.contains(name))
    throw ParseError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::string dot_quoted(std::string_view s)
{
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

int parse_int(std::string_view text)
{
  while (!text.empty() && text.front() == ' ')
    text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ')
    text.remove_suffix(1);
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
    throw ParseError("not an integer: '" + std::string(text) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep)
{
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos)
      return out;
    start = pos + 1;
  }
}

} // namespace

Json to_json(BiregularGraph const &g)
{
  Json edges = Json::array();
  for (auto const &e : g.edges)
    edges.push_back({e.y, e.x, e.tag});
  return Json{{"y_count", g.y_count}, {"x_count", g.x_count}, {"lambda", g.lambda}, {"mu", g.mu}, {"edges", edges}};
}

BiregularGraph graph_from_json(Json const &j)
{
  BiregularGraph g;
  g.y_count = as_int(field(j, "y_count"), "y_count");
  g.x_count = as_int(field(j, "x_count"), "x_count");
  g.lambda = as_int(field(j, "lambda"), "lambda");
  g.mu = as_int(field(j, "mu"), "mu");
  auto const &edges = field(j, "edges");
  if (!edges.is_array())
    throw ParseError("edges must be an array");
  for (auto const &e : edges) {
    if (!e.is_array() || e.size() != 3)
      throw ParseError("an edge is [y, x, tag]");
    g.edges.push_back({as_int(e[0], "edge y"), as_int(e[1], "edge x"), as_int(e[2], "edge tag")});
  }
  try {
    g.check_well_formed();
  } catch (std::invalid_argument const &e) {
    throw ParseError(e.what());
  }
  return g;
}

Json to_json(EdgeBicoloring const &c)
{
  Json pairs = Json::array();
  for (auto const &p : c.pairs)
    pairs.push_back({p.alpha, p.beta});
  return Json{{"pairs", pairs}};
}

EdgeBicoloring coloring_from_json(Json const &j)
{
  EdgeBicoloring c;
  auto const &pairs = field(j, "pairs");
  if (!pairs.is_array())
    throw ParseError("pairs must be an array");
  for (auto const &p : pairs) {
    if (!p.is_array() || p.size() != 2)
      throw ParseError("a pair is [alpha, beta]");
    c.pairs.push_back({as_int(p[0], "alpha"), as_int(p[1], "beta")});
  }
  return c;
}

Json to_json(ValidationReport const &r)
{
  Json violations = Json::array();
  for (auto const &v : r.violations)
    violations.push_back(Json{{"kind", v.kind}, {"location", v.location}, {"message", v.message}});
  return Json{{"ok", r.ok()}, {"violations", violations}};
}

ValidationReport report_from_json(Json const &j)
{
  ValidationReport r;
  for (auto const &v : field(j, "violations"))
    r.add(field(v, "kind").get<std::string>(), field(v, "location").get<std::string>(),
          field(v, "message").get<std::string>());
  if (field(j, "ok").get<bool>() != r.ok())
    throw ParseError("\"ok\" disagrees with the violation list");
  return r;
}

Json solution_to_json(gcc::NamedBigraph const &gprime, gcc::GccSolution const &sol, bool ansatz135)
{
  Json entries = Json::array();
  auto const &edges = gprime.graph.edges;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i >= sol.pairs.size() || sol.pairs[i] < 0 || sol.pairs[i] >= gcc::pair_count)
      continue;
    entries.push_back(Json{{"y", gprime.y_names.at(edges[i].y)},
                           {"x", gprime.x_names.at(edges[i].x)},
                           {"w", edges[i].tag},
                           {"pair", std::string(gcc::pair_name(sol.pairs[i]))}});
  }
  return Json{{"ansatz135", ansatz135}, {"entries", entries}};
}

gcc::GccSolution solution_from_json(gcc::NamedBigraph const &gprime, Json const &j)
{
  auto const &edges = gprime.graph.edges;
  gcc::GccSolution sol;
  sol.pairs.assign(edges.size(), -1);
  bool ansatz = false;
  if (j.contains("ansatz135")) {
    if (!j.at("ansatz135").is_boolean())
      throw ParseError("ansatz135 must be a boolean");
    ansatz = j.at("ansatz135").get<bool>();
  }
  auto const &entries = field(j, "entries");
  if (!entries.is_array())
    throw ParseError("entries must be an array");
  std::set<int> seen;
  for (auto const &e : entries) {
    auto y_name = field(e, "y").get<std::string>();
    auto x_name = field(e, "x").get<std::string>();
    int w = as_int(field(e, "w"), "w");
    auto pair_text = field(e, "pair").get<std::string>();
    auto y = gprime.y_index(y_name);
    auto x = gprime.x_index(x_name);
    if (!y || !x)
      throw ParseError("unknown vertex in entry (" + y_name + "," + x_name + ")");
    auto edge = gprime.find_edge(*y, *x);
    if (!edge)
      throw ParseError(y_name + " and " + x_name + " are not adjacent");
    if (edges[*edge].tag != w)
      throw ParseError("edge (" + y_name + "," + x_name + ") has w-color " + std::to_string(edges[*edge].tag));
    auto code = gcc::parse_pair(pair_text);
    if (!code)
      throw ParseError("unknown pair '" + pair_text + "'");
    if (!seen.insert(*edge).second)
      throw ParseError("edge (" + y_name + "," + x_name + ") listed twice");
    sol.pairs[*edge] = *code;
  }
  if (ansatz)
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (sol.pairs[i] < 0) {
        switch (edges[i].tag) {
        case 1:
          sol.pairs[i] = 0;
          break;
        case 3:
          sol.pairs[i] = 3;
          break;
        case 5:
          sol.pairs[i] = 6;
          break;
        default:
          break;
        }
      }
  return sol;
}

Json to_json(gcc::LevelTable const &t)
{
  Json rows = Json::object();
  for (int p = 0; p < gcc::pair_count; ++p)
    rows[std::string(gcc::pair_name(p))] = t.counts[p];
  return Json{{"levels", rows}, {"column_sums", t.column_sums()}};
}

Json to_json(std::vector<gcc::CircleEntry> const &circles)
{
  Json out = Json::array();
  for (auto const &c : circles)
    out.push_back(Json{{"symbol", c.symbol},
                       {"pattern", c.pattern},
                       {"pairs", {std::string(gcc::pair_name(c.pairs[0])), std::string(gcc::pair_name(c.pairs[1]))}}});
  return out;
}

Json to_json(gcc::ImportResult const &r, gcc::NamedBigraph const &gprime)
{
  return Json{{"assigned", r.assigned()},
              {"open", r.partial.size() - r.assigned()},
              {"solution", solution_to_json(gprime, {r.partial}, false)},
              {"report", to_json(r.report)},
              {"declared_levels", to_json(r.declared)},
              {"consistent_levels", to_json(r.consistent)}};
}

std::string level_table_csv(gcc::LevelTable const &t)
{
  std::ostringstream out;
  out << "pair,l1,l2,l3,l4,l5\n";
  for (int p = 0; p < gcc::pair_count; ++p) {
    out << gcc::pair_name(p);
    for (int v : t.counts[p])
      out << ',' << v;
    out << '\n';
  }
  out << "sum";
  for (int v : t.column_sums())
    out << ',' << v;
  out << '\n';
  return out.str();
}

std::string circle_table_csv(std::vector<gcc::CircleEntry> const &circles)
{
  std::ostringstream out;
  out << "symbol,pattern,pair1,pair2\n";
  for (auto const &c : circles)
    out << c.symbol << ',' << c.pattern + 1 << ',' << gcc::pair_name(c.pairs[0]) << ',' << gcc::pair_name(c.pairs[1])
        << '\n';
  return out.str();
}

std::string export_dot(BiregularGraph const &g, std::vector<std::string> const &y_labels,
                       std::vector<std::string> const &x_labels, std::string_view name)
{
  std::ostringstream out;
  out << "graph " << name << " {\n";
  if (g.y_count + g.x_count == 0) {
    out << "}\n";
    return out.str();
  }
  auto label = [](std::vector<std::string> const &labels, int i, char prefix) {
    return i < static_cast<int>(labels.size()) ? labels[i] : prefix + std::to_string(i);
  };
  out << "  node [shape=ellipse];\n";
  out << "  { rank=same;";
  for (int y = 0; y < g.y_count; ++y)
    out << " y" << y << " [label=" << dot_quoted(label(y_labels, y, 'y')) << "];";
  out << " }\n";
  out << "  { rank=same;";
  for (int x = 0; x < g.x_count; ++x)
    out << " x" << x << " [label=" << dot_quoted(label(x_labels, x, 'x')) << "];";
  out << " }\n";
  for (auto const &e : g.edges)
    out << "  y" << e.y << " -- x" << e.x << " [label=\"" << e.tag << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string export_dot(petersen::ColoredGraph const &g, std::string_view name)
{
  std::ostringstream out;
  out << "graph " << name << " {\n";
  if (g.vertices.empty()) {
    out << "}\n";
    return out.str();
  }
  for (auto const &v : g.vertices)
    out << "  v" << v.str() << " [label=\"" << v.str() << "\"];\n";
  for (auto const &e : g.edges)
    out << "  v" << g.vertices[e.u].str() << " -- v" << g.vertices[e.v].str() << " [label=\"" << e.color
        << "\"];\n";
  out << "}\n";
  return out.str();
}

Json to_json(petersen::ColoredGraph const &g)
{
  Json vertices = Json::array();
  for (auto const &v : g.vertices)
    vertices.push_back(v.str());
  Json edges = Json::array();
  for (auto const &e : g.edges)
    edges.push_back({g.vertices[e.u].str(), g.vertices[e.v].str(), e.color});
  return Json{{"vertices", vertices}, {"edges", edges}};
}

std::vector<ColorPair> parse_pair_list(std::string_view text)
{
  std::vector<ColorPair> out;
  for (auto item : split(text, ';')) {
    auto parts = split(item, ',');
    if (parts.size() != 2)
      throw ParseError("a pair is written 'alpha,beta', got '" + std::string(item) + "'");
    out.push_back({parse_int(parts[0]), parse_int(parts[1])});
  }
  return out;
}

std::vector<int> parse_int_list(std::string_view text)
{
  std::vector<int> out;
  for (auto item : split(text, ','))
    out.push_back(parse_int(item));
  return out;
}

Json parse_json_text(std::string_view text)
{
  try {
    return Json::parse(text);
  } catch (Json::parse_error const &e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string read_file(std::string const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParseError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

} // namespace bicolor::io
