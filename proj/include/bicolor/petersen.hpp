#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bicolor::petersen {

enum class Parity { even, odd };

std::string_view to_string(Parity p);

/// Lexicographically least sequence among all rotations and reflections of
/// `word`.
template <typename T>
std::vector<T> dihedral_min(std::span<T const> word)
{
  std::vector<T> best(word.begin(), word.end());
  std::vector<T> candidate(word.size());
  auto const k = word.size();
  for (std::size_t shift = 0; shift < k; ++shift) {
    for (std::size_t i = 0; i < k; ++i)
      candidate[i] = word[(shift + i) % k];
    best = std::min(best, candidate);
    for (std::size_t i = 0; i < k; ++i)
      candidate[i] = word[(shift + k - i) % k];
    best = std::min(best, candidate);
  }
  return best;
}

/// An unoriented cycle of K_m, stored as the canonical (dihedral-minimal)
/// word over the 1-based palette.
struct CycleClass
{
  std::vector<int> canonical;

  std::size_t length() const { return canonical.size(); }
  /// Written without separators, e.g. "(13524)".
  std::string str() const;

  friend auto operator<=>(CycleClass const &, CycleClass const &) = default;
};

/// Parses a digit string such as "13524" into symbols.
std::vector<int> parse_word(std::string_view digits);

/// Throws std::invalid_argument on repeated or non-positive symbols or on
/// words shorter than 3.
CycleClass canonical_cycle(std::span<int const> word);
CycleClass canonical_cycle(std::string_view digits);

/// Parity by inversion count. Throws std::invalid_argument unless `word` is
/// a permutation of 1..word.size().
Parity permutation_parity(std::span<int const> word);

/// Parity of any representative of the class. The value only depends on the
/// class when n = 1 mod 4; other lengths throw std::domain_error.
Parity cycle_parity(CycleClass const &c);

/// Whether reversing an n-circuit preserves its permutation parity, for odd
/// n = 2k+1 >= 3: true iff k is even. Throws std::invalid_argument otherwise.
bool reversal_preserves_parity(int n);

/// A 3-subset of {1..5}, stored sorted.
struct Triple
{
  std::array<int, 3> elems{};

  bool contains(int v) const { return std::find(elems.begin(), elems.end(), v) != elems.end(); }
  /// Digits in ascending order, e.g. "125".
  std::string str() const;

  friend auto operator<=>(Triple const &, Triple const &) = default;
};

/// Accepts the three digits in any order ("512" and "125" name the same set).
Triple parse_triple(std::string_view digits);
/// Throws std::invalid_argument unless `elems` holds three distinct values.
Triple make_triple(std::span<int const> elems);

struct ColoredEdge
{
  int u = 0;
  int v = 0;
  int color = 0;

  friend auto operator<=>(ColoredEdge const &, ColoredEdge const &) = default;
};

/// Edge-coloured simple graph on 3-subsets.
struct ColoredGraph
{
  std::vector<Triple> vertices;
  std::vector<ColoredEdge> edges;

  std::optional<int> vertex_index(Triple const &t) const;
  std::optional<int> edge_between(int u, int v) const;
  std::vector<std::vector<int>> adjacency() const;
};

/// O_3: the ten 3-subsets of {1..5}, adjacent when they meet in exactly one
/// element, the edge coloured by that element. Vertices are in lexicographic
/// order.
ColoredGraph build_petersen();

/// A cycle given as vertex indices, normalised to its dihedral minimum.
using VertexCycle = std::vector<int>;

/// All simple unoriented k-cycles, sorted. Throws std::invalid_argument
/// unless 3 <= k <= |V|.
std::vector<VertexCycle> enumerate_graph_cycles(ColoredGraph const &g, int k);

/// Colours of successive edges around `cycle`, starting with the edge from
/// cycle[0] to cycle[1]. Throws std::invalid_argument on a non-edge.
std::vector<int> color_word(ColoredGraph const &g, std::span<int const> cycle);

/// Class of the edge-colour word read around `cycle`. When the word has
/// distinct colours that word is used; when it is a word of distinct colours
/// repeated twice the half-word is used. Anything else throws
/// std::invalid_argument.
CycleClass induced_color_cycle(ColoredGraph const &g, std::span<int const> cycle);

/// Resolves a written cycle such as {"123","345",...} to vertex indices.
/// Throws std::invalid_argument on unknown vertices or non-adjacent steps.
VertexCycle resolve_cycle(ColoredGraph const &g, std::span<std::string const> names);

/// Inverses of the induced edge-colour maps on 5- and 6-cycles of O_3.
struct ThetaCorrespondence
{
  ColoredGraph graph;
  /// K5 5-cycle class -> the O_3 5-cycle inducing it.
  std::map<CycleClass, VertexCycle> theta5;
  /// K5 3-cycle class -> the O_3 6-cycle inducing it.
  std::map<CycleClass, VertexCycle> theta3;
};

/// Throws std::logic_error if either induced map fails to be a bijection
/// onto the 12 five-cycle classes / 10 three-subsets of K5.
ThetaCorrespondence theta_correspondence();

/// Edge indices of the O_3 edges on `cycle`.
std::vector<int> cycle_edges(ColoredGraph const &g, std::span<int const> cycle);

/// The single O_3 edge common to theta5(y) and theta3(x), if any. Throws
/// std::logic_error if there are two or more, std::invalid_argument if `y`
/// or `x` is not in the correspondence.
std::optional<int> shared_edge(ThetaCorrespondence const &corr, CycleClass const &y, Triple const &x);

/// All 12 five-cycle classes of K5 and all 10 three-subsets, sorted.
std::vector<CycleClass> k5_five_cycle_classes();
std::vector<Triple> k5_triples();

CycleClass triple_class(Triple const &t);

} // namespace bicolor::petersen
