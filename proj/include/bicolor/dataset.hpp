#pragma once

#include "bicolor/core.hpp"
#include "bicolor/petersen.hpp"

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bicolor::gcc {

/// Malformed dataset, overlay or solution document.
class DataError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Face w_i of G: great-circle symbol w in 1..5, index i in 1..6. Written "w_i".
struct FaceId
{
  int symbol = 0;
  int index = 0;

  std::string str() const;
  friend auto operator<=>(FaceId const &, FaceId const &) = default;
};

FaceId parse_face(std::string_view text);

enum class VertexKind { y, y_prime, x, x_prime, z, z_prime };

/// One of the 32 inner vertices of the S3P graph: y_0..y_5, y'_0..y'_5 and
/// x_i, x'_i, z_i, z'_i for i in 1..5.
struct InnerVertexName
{
  VertexKind kind = VertexKind::y;
  int index = 0;

  bool is_y_kind() const { return kind == VertexKind::y || kind == VertexKind::y_prime; }
  std::string str() const;
  friend auto operator<=>(InnerVertexName const &, InnerVertexName const &) = default;
};

/// Accepts "y_0", "y'_0", "x'_3", "z_5", ... Throws DataError otherwise.
InnerVertexName parse_inner_vertex(std::string_view text);

/// y_0..y_5, y'_0..y'_5, x_1..x_5, x'_1..x'_5, z_1..z_5, z'_1..z'_5.
std::vector<InnerVertexName> all_inner_vertices();

/// One puzzle piece: end faces, degree-5 and degree-3 inner vertices.
struct S3PRecord
{
  FaceId end_a;
  InnerVertexName deg5;
  InnerVertexName deg3;
  FaceId end_b;

  int color() const { return end_a.symbol; }
  /// The printed row, e.g. "4_3 y_5 z'_2 4_2".
  std::string key() const;
  friend bool operator==(S3PRecord const &, S3PRecord const &) = default;
};

struct VertexFaceRecord
{
  InnerVertexName vertex;
  std::vector<FaceId> faces;
};

struct LabeledWord
{
  std::string label;
  std::string word;
};

/// A row of the printed theta displays: source label, the O_3 cycle as
/// written, and (for 5-cycles) the label written after "=".
struct ThetaRow
{
  std::string source;
  std::vector<std::string> cycle;
  std::string label;
};

struct Erratum
{
  std::string id;
  std::string table;
  std::string key;
  std::vector<std::string> original;
  std::vector<std::string> replacement;
  std::string justification;
};

struct ErrataOverlay
{
  std::vector<Erratum> errata;
};

/// The transcribed tables. The built-in copy is verbatim; corrections only
/// enter through an ErrataOverlay, and `applied_errata` records which.
struct GccDataset
{
  std::vector<S3PRecord> s3p;
  std::vector<VertexFaceRecord> vertex_faces;
  std::vector<LabeledWord> display1;
  std::vector<LabeledWord> display2;
  std::vector<ThetaRow> theta5_rows;
  std::vector<ThetaRow> theta3_rows;
  /// Alternating vertex / face tokens, kept as printed.
  std::vector<std::vector<std::string>> pentagon_cycles;
  std::vector<std::array<std::pair<int, int>, 4>> circle_patterns;
  std::vector<std::pair<std::string, std::string>> printed_covering_pairs;
  std::vector<Erratum> applied_errata;

  VertexFaceRecord const *faces_of(InnerVertexName const &v) const;
};

GccDataset parse_dataset(std::string_view json_text);
ErrataOverlay parse_errata(std::string_view json_text);

GccDataset builtin_dataset();
ErrataOverlay builtin_errata();

/// Applies every erratum in order. Throws DataError when an erratum names a
/// table or row that does not exist.
GccDataset apply_errata(GccDataset ds, ErrataOverlay const &overlay);

/// The built-in transcription with `overlay` applied, if any.
GccDataset load_dataset(std::optional<ErrataOverlay> const &overlay);

/// Row counts per symbol, end-face membership, face sharing, face-word
/// shape, face incidence and display distinctness.
ValidationReport validate_dataset(GccDataset const &ds);

/// Each face token must belong to the face lists of both neighbouring inner
/// vertices along the printed cycle.
ValidationReport pentagon_cycles_check(GccDataset const &ds);

/// Checks `overlay` against the raw dataset: every erratum must be needed
/// (dropping it brings back violations) and the overlay as a whole must not
/// introduce violations absent from the raw tables.
ValidationReport audit_errata(GccDataset const &raw, ErrataOverlay const &overlay);

/// Unoriented class of the face symbols around `v` (subindices dropped).
petersen::CycleClass face_word_class(GccDataset const &ds, InnerVertexName const &v);

/// Bipartite graph plus display names for both parts.
struct NamedBigraph
{
  BiregularGraph graph;
  std::vector<std::string> y_names;
  std::vector<std::string> x_names;

  std::optional<int> y_index(std::string_view name) const;
  std::optional<int> x_index(std::string_view name) const;
  /// Edge index joining the two named vertices with the given tag.
  std::optional<int> find_edge(int y, int x) const;
};

/// G: the 60 middle edges, one per S3P row in table order, tagged by w.
/// Y = y_0..y_5, y'_0..y'_5; X = x_*, x'_*, z_*, z'_*. Throws DataError unless
/// validate_dataset(ds) is ok.
NamedBigraph build_G(GccDataset const &ds);

/// Shared vertex naming for G': the six OP classes aliased y_0..y_5 and the
/// ten 3-subsets aliased x_1..x'_5, in display order.
struct GprimeNaming
{
  std::vector<petersen::CycleClass> y_classes;
  std::vector<std::string> y_aliases;
  std::vector<petersen::Triple> x_sets;
  std::vector<std::string> x_aliases;

  std::optional<int> y_index(petersen::CycleClass const &c) const;
  std::optional<int> x_index(petersen::Triple const &t) const;
};

/// Throws DataError unless the y_i rows of display (1) are six distinct ODD
/// classes and display (2) lists ten distinct 3-subsets.
GprimeNaming naming_from_displays(GccDataset const &ds);

struct CoveringMap
{
  struct Fiber
  {
    petersen::CycleClass cls;
    std::array<InnerVertexName, 2> members;
  };

  std::vector<Fiber> fibers;
  std::map<InnerVertexName, int> fiber_of;
};

/// Pairs vertices of G whose face words have equal unoriented classes.
/// Throws DataError if some class is not carried by exactly two vertices.
CoveringMap covering_map(GccDataset const &ds);

/// Printed pairs {v, v'} from the text that the derived covering does not
/// contain.
ValidationReport printed_pairing_discrepancies(GccDataset const &ds, CoveringMap const &cm);

/// G' as the quotient of G under the covering, with the image of every G-edge.
struct FoldedGraph
{
  NamedBigraph gprime;
  std::vector<int> edge_image;
};

/// Edges of the result are sorted by (y index, tag). Throws DataError when
/// the two preimages of some G'-edge disagree or an edge has a single
/// preimage.
FoldedGraph fold_G(GccDataset const &ds, GprimeNaming const &naming);
NamedBigraph build_Gprime_quotient(GccDataset const &ds, GprimeNaming const &naming);

/// G' from the Petersen side: y ~ x iff x lies on theta5(y), tagged by the
/// middle symbol of x along that cycle.
NamedBigraph build_Gprime_theta(petersen::ThetaCorrespondence const &corr, GprimeNaming const &naming);

/// Reports every tagged edge present in one graph and missing from the other.
ValidationReport cross_validate_gprime(NamedBigraph const &quotient, NamedBigraph const &theta);
ValidationReport cross_validate_gprime(GccDataset const &ds);

struct GreatCircle
{
  int symbol = 0;
  int pattern = 0;
  /// Indices into GccDataset::s3p.
  std::array<int, 4> rows{};
};

/// Fifteen circles, by symbol then pattern. Throws DataError when a row
/// matches no pattern or several, or a circle does not get four rows.
std::vector<GreatCircle> great_circles(GccDataset const &ds);

/// Display (1): y_i must be ODD, ybar_i EVEN, twelve distinct classes.
ValidationReport check_display_parity(GccDataset const &ds);

/// Theta displays, label-side reading: each theta5 row is a genuine 5-cycle
/// of O_3 inducing the class of its label; each theta3 row a 6-cycle whose
/// colour triple is its source's 3-set.
ValidationReport check_theta_rows(GccDataset const &ds, petersen::ThetaCorrespondence const &corr);

/// Rows of the theta5 display whose source does not equal the induced class
/// of the displayed cycle.
ValidationReport theta_source_discrepancies(GccDataset const &ds,
                                            petersen::ThetaCorrespondence const &corr);

} // namespace bicolor::gcc
