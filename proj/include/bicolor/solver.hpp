#pragma once

#include "bicolor/core.hpp"
#include "bicolor/dataset.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bicolor::gcc {

/// Pair codes 0..6 stand for 1a, 2a, 2b, 3b, 4b, 4c, 5c. The order is chosen
/// so that the reversal (1 5)(2 4)(a c) acts as c -> 6 - c.
inline constexpr int pair_count = 7;

std::string_view pair_name(int code);
/// "1a" .. "5c"; nullopt for anything outside the GCC alphabet.
std::optional<int> parse_pair(std::string_view text);

/// Piece symbol 1..5.
int pair_alpha(int code);
/// 0, 1, 2 for a, b, c.
int pair_beta(int code);
/// Multiplicity on G': 6 for 1a/3b/5c, 4 for 2a/4c, 2 for 2b/4b.
int pair_weight(int code);

constexpr int reverse_pair(int code)
{
  return pair_count - 1 - code;
}

/// The alphabet in core form (alpha 0..4, beta 0..2), weights times `scale`.
ColorPairSystem gcc_system(int scale = 1);

/// Pair code per G' edge, in the edge order of the graph it belongs to.
struct GccSolution
{
  std::vector<int> pairs;

  friend auto operator<=>(GccSolution const &, GccSolution const &) = default;
};

EdgeBicoloring to_bicoloring(GccSolution const &sol);

/// Faithfulness and weights on `gprime`. Non-total or out-of-alphabet input
/// is reported under kind "range".
ValidationReport verify_gcc_solution(NamedBigraph const &gprime, GccSolution const &sol);

struct EnumerateOptions
{
  /// Color-1/3/5 edges carry 1a/3b/5c.
  bool fix_135 = false;
  bool reversible_only = false;
  /// Count without collecting solutions. Unless `fingerprint` or
  /// `reversible_only` is set the count comes from a memoized recursion that
  /// does not visit individual solutions.
  bool count_only = false;
  /// Visit every solution and accumulate EnumerationResult::fingerprint.
  bool fingerprint = false;
  /// Keep at most this many solutions, the first in canonical order; 0 keeps
  /// all. The count is exact either way.
  std::size_t limit = 0;
  unsigned workers = 1;
};

/// Order-independent digest of a solution set: the wrapping sum of
/// solution_hash over its members.
std::uint64_t solution_hash(std::span<int const> codes);

struct EnumerationResult
{
  std::uint64_t count = 0;
  /// Present whenever every solution was visited.
  std::optional<std::uint64_t> fingerprint;
  /// Lexicographic by pair codes over the edge order of the graph.
  std::vector<GccSolution> solutions;
};

/// Backtracking over Y-stars in edge order. Each star draws from a table of
/// its feasible local assignments indexed by the letters already used at its
/// X-neighbours; global multiplicities are checked as packed counters.
/// Output is identical for every worker count.
///
/// Requires a (5,3)-biregular graph whose Y-stars are contiguous in the edge
/// list, on at most 21 X-vertices; throws std::invalid_argument otherwise.
EnumerationResult enumerate_gcc_solutions(NamedBigraph const &gprime, EnumerateOptions const &opts = {});

/// Sequential streaming variant: `visit` sees every solution in canonical
/// order and may return false to stop. `count_only`, `limit` and `workers`
/// are ignored. Returns the number of solutions visited.
std::uint64_t for_each_gcc_solution(NamedBigraph const &gprime, EnumerateOptions const &opts,
                                    std::function<bool(std::span<int const>)> const &visit);

GccSolution apply_reversal(GccSolution const &sol);

/// counts[p][l] is the number of G pieces carrying pair p at level l+1, the
/// level being the w-color of the edge.
struct LevelTable
{
  std::array<std::array<int, 5>, pair_count> counts{};

  friend bool operator==(LevelTable const &, LevelTable const &) = default;
  std::array<int, 5> column_sums() const;
  int row_sum(int code) const;
};

/// Two pieces per assigned G' edge; negative (unassigned) codes are skipped.
LevelTable level_distribution(NamedBigraph const &gprime, std::span<int const> codes);
LevelTable level_distribution(NamedBigraph const &gprime, GccSolution const &sol);

/// counts[p][l] == counts[rho p][4 - l] throughout.
bool is_mirror_symmetric(LevelTable const &t);

/// Mirror test on the level table of a valid solution. Throws
/// std::invalid_argument when `sol` fails verify_gcc_solution.
bool is_distribution_reversible(NamedBigraph const &gprime, GccSolution const &sol);

/// Pair code per S3P row: both preimages of a G' edge get its pair.
std::vector<int> lift_solution(FoldedGraph const &folded, GccSolution const &sol);

/// Faithfulness on G with doubled weights.
ValidationReport verify_lifted(NamedBigraph const &g, std::span<int const> lifted);

struct CircleEntry
{
  int symbol = 0;
  int pattern = 0;
  /// One pair per G' edge class of the circle, sorted.
  std::array<int, 2> pairs{};
};

/// Throws std::logic_error when a circle does not consist of the two
/// preimages of each of two G' edges.
std::vector<CircleEntry> circle_distribution(std::span<int const> lifted, std::vector<GreatCircle> const &circles,
                                             std::vector<int> const &edge_image);

/// A printed solution: ansatz w-color -> pair, then (x, w, y, pair) entries.
struct PaperSolutionDoc
{
  std::string name;
  std::string description;
  std::map<int, int> ansatz;

  struct Entry
  {
    std::string x;
    int w = 0;
    std::string y;
    int pair = 0;
  };
  std::vector<Entry> entries;
};

/// Names of the built-in transcriptions: ss4, ss5a, ss5b.
std::vector<std::string> paper_solution_names();
/// Throws DataError on an unknown name.
PaperSolutionDoc builtin_paper_solution(std::string_view name);
PaperSolutionDoc parse_paper_solution(std::string_view name, std::string_view json_text);

struct ImportResult
{
  /// Pair code per G' edge, -1 where the document assigns nothing usable.
  std::vector<int> partial;
  /// Discrepancy kinds: unknown-vertex, non-edge, wrong-color, conflict,
  /// partial-proper, partial-weight.
  ValidationReport report;
  /// Levels as the document declares them, consistent or not.
  LevelTable declared;
  /// Levels of the edges that were actually assigned.
  LevelTable consistent;

  std::size_t assigned() const;
};

ImportResult import_paper_solution(NamedBigraph const &gprime, PaperSolutionDoc const &doc);

/// Derived G' with the display naming; same as build_Gprime_quotient on the
/// errata-corrected dataset.
FoldedGraph default_gprime(GccDataset const &ds);

} // namespace bicolor::gcc
