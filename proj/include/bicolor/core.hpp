#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bicolor {

/// One edge of a bipartite graph. `tag` is an opaque label; parallel edges
/// between the same two vertices are told apart only by it.
struct Edge
{
  int y = 0;
  int x = 0;
  int tag = 0;

  friend auto operator<=>(Edge const &, Edge const &) = default;
};

/// Bipartite graph with parts Y = {0..y_count-1} and X = {0..x_count-1}.
///
/// `lambda` and `mu` are the declared degrees of Y- and X-vertices; whether
/// the graph actually honours them is checked by validate_biregular(), not
/// enforced here. Edge identity is positional.
struct BiregularGraph
{
  int y_count = 0;
  int x_count = 0;
  int lambda = 0;
  int mu = 0;
  std::vector<Edge> edges;

  friend bool operator==(BiregularGraph const &, BiregularGraph const &) = default;

  /// Throws std::invalid_argument on out-of-range endpoints or on parallel
  /// edges carrying the same tag.
  void check_well_formed() const;

  std::vector<int> y_degrees() const;
  std::vector<int> x_degrees() const;

  /// Edge indices incident to each vertex, in edge-list order.
  std::vector<std::vector<int>> y_stars() const;
  std::vector<std::vector<int>> x_stars() const;
};

struct ColorPair
{
  int alpha = 0;
  int beta = 0;

  friend auto operator<=>(ColorPair const &, ColorPair const &) = default;
};

std::string to_string(ColorPair p);

/// A pair alphabet Theta over I_0^lambda x I_0^mu together with its weights.
/// `theta[i]` carries weight `omega[i]`.
struct ColorPairSystem
{
  int lambda = 0;
  int mu = 0;
  std::vector<ColorPair> theta;
  std::vector<int> omega;

  std::optional<int> weight(ColorPair p) const;
  bool contains(ColorPair p) const { return weight(p).has_value(); }
  long total_weight() const;
};

/// Assignment edge index -> (alpha, beta).
struct EdgeBicoloring
{
  std::vector<ColorPair> pairs;

  friend bool operator==(EdgeBicoloring const &, EdgeBicoloring const &) = default;
};

/// Palette relabelling applied to both coordinates of every pair.
struct SymbolPermutationPair
{
  std::vector<int> perm_alpha;
  std::vector<int> perm_beta;

  static SymbolPermutationPair identity(int lambda, int mu);
  /// Throws std::invalid_argument unless both maps are bijections.
  void check_bijective() const;
  ColorPair operator()(ColorPair p) const;
};

struct Violation
{
  std::string kind;
  std::string location;
  std::string message;

  friend auto operator<=>(Violation const &, Violation const &) = default;
};

struct ValidationReport
{
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string kind, std::string location, std::string message);
  void merge(ValidationReport const &other);
  bool has_kind(std::string_view kind) const;
  std::size_t count_kind(std::string_view kind) const;
};

/// Checks the structural invariants of `system` and, when `edge_count` is
/// given, that the weights sum to it.
ValidationReport validate_system(ColorPairSystem const &system,
                                 std::optional<std::size_t> edge_count = {});

ValidationReport validate_biregular(BiregularGraph const &g);

/// True iff theta is a chain in the componentwise order on pairs.
bool is_increasing(std::span<ColorPair const> theta);

/// Star-injectivity: alpha distinct around every Y-vertex, beta distinct
/// around every X-vertex. Throws std::invalid_argument if the coloring is not
/// total on `g`.
ValidationReport check_proper(BiregularGraph const &g, EdgeBicoloring const &coloring);

/// Properness, membership in theta and palette coverage at every vertex.
/// Coverage is computed independently of properness.
ValidationReport check_faithful(BiregularGraph const &g, EdgeBicoloring const &coloring,
                                ColorPairSystem const &system);

ValidationReport check_weight_compatible(EdgeBicoloring const &coloring,
                                         ColorPairSystem const &system);

/// Throws std::invalid_argument if a pair falls outside the permutations'
/// palettes or the permutations are not bijective.
EdgeBicoloring apply_pair_permutation(EdgeBicoloring const &coloring,
                                      SymbolPermutationPair const &perms);

/// Whether the permuted coloring is again faithful and weight-compatible.
/// Throws std::invalid_argument when `coloring` itself fails either check or
/// when the permutation palettes do not match the system.
bool is_symmetrically_reversible(BiregularGraph const &g, EdgeBicoloring const &coloring,
                                 ColorPairSystem const &system,
                                 SymbolPermutationPair const &perms);

} // namespace bicolor
