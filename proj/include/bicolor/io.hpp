#pragma once

#include "bicolor/core.hpp"
#include "bicolor/dataset.hpp"
#include "bicolor/petersen.hpp"
#include "bicolor/solver.hpp"

#include "json.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace bicolor::io {

using Json = nlohmann::ordered_json;

/// Bad external input. Parsers throw this; the CLI maps it to exit code 2.
class ParseError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

Json to_json(BiregularGraph const &g);
BiregularGraph graph_from_json(Json const &j);

Json to_json(EdgeBicoloring const &c);
EdgeBicoloring coloring_from_json(Json const &j);

Json to_json(ValidationReport const &r);
ValidationReport report_from_json(Json const &j);

/// {"ansatz135":bool,"entries":[{"y","x","w","pair"},...]} in edge order.
Json solution_to_json(gcc::NamedBigraph const &gprime, gcc::GccSolution const &sol, bool ansatz135);

/// Unknown names, non-edges, mismatched w-colors, unknown pairs and repeated
/// edges throw ParseError. Edges left out stay unassigned (-1), except that
/// with "ansatz135" the 1/3/5-colored ones default to 1a/3b/5c.
gcc::GccSolution solution_from_json(gcc::NamedBigraph const &gprime, Json const &j);

Json to_json(gcc::LevelTable const &t);
Json to_json(std::vector<gcc::CircleEntry> const &circles);
Json to_json(gcc::ImportResult const &r, gcc::NamedBigraph const &gprime);

/// Rows 1a..5c, columns l1..l5.
std::string level_table_csv(gcc::LevelTable const &t);
std::string circle_table_csv(std::vector<gcc::CircleEntry> const &circles);

/// Stable DOT text. Y-vertices and X-vertices sit in two rank=same groups;
/// edges carry their tag as label. A graph without vertices gives an empty
/// stanza.
std::string export_dot(BiregularGraph const &g, std::vector<std::string> const &y_labels,
                       std::vector<std::string> const &x_labels, std::string_view name = "G");

/// O_3 with 3-set node names and w-colors "1".."5" as edge labels.
std::string export_dot(petersen::ColoredGraph const &g, std::string_view name = "O3");

Json to_json(petersen::ColoredGraph const &g);

/// "a,b;c,d;..." as pairs.
std::vector<ColorPair> parse_pair_list(std::string_view text);
/// "1,2,3" as integers.
std::vector<int> parse_int_list(std::string_view text);

Json parse_json_text(std::string_view text);
std::string read_file(std::string const &path);

} // namespace bicolor::io
