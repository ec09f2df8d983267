#include "bicolor/dataset.hpp"

#include "bicolor/embedded_data.hpp"
#include "json.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace bicolor::gcc {

using nlohmann::json;
using petersen::CycleClass;
using petersen::Triple;

namespace {

std::vector<std::string> split_ws(std::string_view text)
{
  std::istringstream in{std::string(text)};
  std::vector<std::string> out;
  for (std::string tok; in >> tok;)
    out.push_back(tok);
  return out;
}

S3PRecord parse_s3p_tokens(std::vector<std::string> const &tokens)
{
  if (tokens.size() != 4)
    throw DataError("an S3P row has 4 entries, got " + std::to_string(tokens.size()));
  return {parse_face(tokens[0]), parse_inner_vertex(tokens[1]), parse_inner_vertex(tokens[2]),
          parse_face(tokens[3])};
}

std::string row_loc(std::size_t i)
{
  return "s3p[" + std::to_string(i) + "]";
}

std::vector<int> face_symbols(VertexFaceRecord const &rec)
{
  std::vector<int> word;
  for (auto const &f : rec.faces)
    word.push_back(f.symbol);
  return word;
}

bool has_face(VertexFaceRecord const *rec, FaceId const &f)
{
  return rec && std::find(rec->faces.begin(), rec->faces.end(), f) != rec->faces.end();
}

int shared_face_count(VertexFaceRecord const *a, VertexFaceRecord const *b)
{
  if (!a || !b)
    return 0;
  int n = 0;
  for (auto const &f : a->faces)
    n += has_face(b, f) ? 1 : 0;
  return n;
}

/// Class of a degree-3 vertex as a Triple, or of a degree-5 vertex.
std::optional<CycleClass> try_class(GccDataset const &ds, InnerVertexName const &v)
{
  auto const *rec = ds.faces_of(v);
  if (!rec)
    return std::nullopt;
  try {
    return petersen::canonical_cycle(std::span<int const>(face_symbols(*rec)));
  } catch (std::invalid_argument const &) {
    return std::nullopt;
  }
}

std::string edge_loc(NamedBigraph const &g, Edge const &e)
{
  return g.y_names.at(e.y) + "-" + g.x_names.at(e.x);
}

struct UncheckedFold
{
  FoldedGraph folded;
  ValidationReport anomalies;
};

/// Projects every S3P row onto G' without requiring a clean dataset. Rows
/// whose endpoints cannot be named are skipped and reported.
UncheckedFold fold_unchecked(GccDataset const &ds, GprimeNaming const &naming)
{
  UncheckedFold out;
  auto &gp = out.folded.gprime;
  gp.y_names = naming.y_aliases;
  gp.x_names = naming.x_aliases;
  gp.graph.y_count = static_cast<int>(naming.y_classes.size());
  gp.graph.x_count = static_cast<int>(naming.x_sets.size());
  gp.graph.lambda = 5;
  gp.graph.mu = 3;

  std::map<Edge, std::vector<int>> preimages;
  std::vector<std::optional<Edge>> image(ds.s3p.size());
  for (std::size_t i = 0; i < ds.s3p.size(); ++i) {
    auto const &row = ds.s3p[i];
    auto yc = try_class(ds, row.deg5);
    auto xc = try_class(ds, row.deg3);
    std::optional<int> yi, xi;
    if (yc)
      yi = naming.y_index(*yc);
    if (xc && xc->length() == 3)
      xi = naming.x_index(petersen::make_triple(xc->canonical));
    if (!yi || !xi) {
      out.anomalies.add("projection", row_loc(i), row.key() + " has an endpoint outside the G' naming");
      continue;
    }
    Edge e{*yi, *xi, row.color()};
    image[i] = e;
    preimages[e].push_back(static_cast<int>(i));
  }

  for (auto const &[e, rows] : preimages) {
    gp.graph.edges.push_back(e);
    if (rows.size() != 2) {
      std::string which;
      for (int r : rows)
        which += " " + ds.s3p[r].key() + ";";
      out.anomalies.add("projection", edge_loc(gp, e),
                        "tag " + std::to_string(e.tag) + " edge has " + std::to_string(rows.size()) +
                          " preimages:" + which);
    }
  }
  // std::map orders by (y, x, tag); the canonical order is (y, tag).
  std::sort(gp.graph.edges.begin(), gp.graph.edges.end(), [](Edge const &a, Edge const &b) {
    return std::tie(a.y, a.tag, a.x) < std::tie(b.y, b.tag, b.x);
  });
  out.folded.edge_image.assign(ds.s3p.size(), -1);
  for (std::size_t i = 0; i < ds.s3p.size(); ++i)
    if (image[i]) {
      auto it = std::find(gp.graph.edges.begin(), gp.graph.edges.end(), *image[i]);
      out.folded.edge_image[i] = static_cast<int>(it - gp.graph.edges.begin());
    }
  return out;
}

void require_valid(GccDataset const &ds)
{
  auto report = validate_dataset(ds);
  if (!report.ok()) {
    auto const &v = report.violations.front();
    throw DataError("dataset fails validation (" + std::to_string(report.violations.size()) +
                    " violations, first: " + v.kind + " at " + v.location + ": " + v.message + ")");
  }
}

std::optional<std::string> display_word(std::vector<LabeledWord> const &table, std::string_view label)
{
  for (auto const &w : table)
    if (w.label == label)
      return w.word;
  return std::nullopt;
}

} // namespace

std::string FaceId::str() const
{
  return std::to_string(symbol) + "_" + std::to_string(index);
}

FaceId parse_face(std::string_view text)
{
  if (text.size() != 3 || text[1] != '_' || text[0] < '1' || text[0] > '5' || text[2] < '1' ||
      text[2] > '6')
    throw DataError("malformed face '" + std::string(text) + "'");
  return {text[0] - '0', text[2] - '0'};
}

std::string InnerVertexName::str() const
{
  static constexpr std::string_view prefixes[] = {"y_", "y'_", "x_", "x'_", "z_", "z'_"};
  return std::string(prefixes[static_cast<int>(kind)]) + std::to_string(index);
}

InnerVertexName parse_inner_vertex(std::string_view text)
{
  auto fail = [&]() -> InnerVertexName { throw DataError("malformed vertex name '" + std::string(text) + "'"); };
  if (text.size() < 3)
    return fail();
  char letter = text[0];
  bool prime = text[1] == '\'';
  auto rest = text.substr(prime ? 2 : 1);
  if (rest.size() != 2 || rest[0] != '_' || rest[1] < '0' || rest[1] > '9')
    return fail();
  int index = rest[1] - '0';
  InnerVertexName v;
  v.index = index;
  switch (letter) {
  case 'y':
    v.kind = prime ? VertexKind::y_prime : VertexKind::y;
    if (index > 5)
      return fail();
    return v;
  case 'x':
    v.kind = prime ? VertexKind::x_prime : VertexKind::x;
    break;
  case 'z':
    v.kind = prime ? VertexKind::z_prime : VertexKind::z;
    break;
  default:
    return fail();
  }
  if (index < 1 || index > 5)
    return fail();
  return v;
}

std::vector<InnerVertexName> all_inner_vertices()
{
  std::vector<InnerVertexName> out;
  for (auto kind : {VertexKind::y, VertexKind::y_prime})
    for (int i = 0; i <= 5; ++i)
      out.push_back({kind, i});
  for (auto kind : {VertexKind::x, VertexKind::x_prime, VertexKind::z, VertexKind::z_prime})
    for (int i = 1; i <= 5; ++i)
      out.push_back({kind, i});
  return out;
}

std::string S3PRecord::key() const
{
  return end_a.str() + " " + deg5.str() + " " + deg3.str() + " " + end_b.str();
}

VertexFaceRecord const *GccDataset::faces_of(InnerVertexName const &v) const
{
  for (auto const &rec : vertex_faces)
    if (rec.vertex == v)
      return &rec;
  return nullptr;
}

GccDataset parse_dataset(std::string_view json_text)
{
  try {
    auto doc = json::parse(json_text);
    GccDataset ds;
    for (auto const &row : doc.at("s3p"))
      ds.s3p.push_back(parse_s3p_tokens(row.get<std::vector<std::string>>()));
    for (auto const &row : doc.at("vertex_faces")) {
      VertexFaceRecord rec{parse_inner_vertex(row.at("vertex").get<std::string>()), {}};
      for (auto const &f : row.at("faces"))
        rec.faces.push_back(parse_face(f.get<std::string>()));
      ds.vertex_faces.push_back(std::move(rec));
    }
    for (auto const &[field, table] : {std::pair{"display1", &ds.display1}, std::pair{"display2", &ds.display2}})
      for (auto const &row : doc.at(field))
        table->push_back({row.at("label").get<std::string>(), row.at("word").get<std::string>()});
    for (auto const &row : doc.at("theta5_rows"))
      ds.theta5_rows.push_back({row.at("source").get<std::string>(),
                                row.at("cycle").get<std::vector<std::string>>(),
                                row.at("label").get<std::string>()});
    for (auto const &row : doc.at("theta3_rows"))
      ds.theta3_rows.push_back(
        {row.at("source").get<std::string>(), row.at("cycle").get<std::vector<std::string>>(), ""});
    for (auto const &cycle : doc.at("pentagon_cycles"))
      ds.pentagon_cycles.push_back(cycle.get<std::vector<std::string>>());
    for (auto const &pattern : doc.at("circle_patterns")) {
      if (pattern.size() != 4)
        throw DataError("a circle pattern has 4 index pairs");
      std::array<std::pair<int, int>, 4> p;
      for (std::size_t k = 0; k < 4; ++k)
        p[k] = {pattern[k].at(0).get<int>(), pattern[k].at(1).get<int>()};
      ds.circle_patterns.push_back(p);
    }
    for (auto const &pair : doc.at("printed_covering_pairs"))
      ds.printed_covering_pairs.emplace_back(pair.at(0).get<std::string>(), pair.at(1).get<std::string>());
    return ds;
  } catch (json::exception const &e) {
    throw DataError(std::string("dataset JSON: ") + e.what());
  }
}

ErrataOverlay parse_errata(std::string_view json_text)
{
  try {
    auto doc = json::parse(json_text);
    ErrataOverlay overlay;
    for (auto const &e : doc.at("errata"))
      overlay.errata.push_back({e.at("id").get<std::string>(), e.at("table").get<std::string>(),
                                e.at("key").get<std::string>(), {},
                                e.at("replacement").get<std::vector<std::string>>(),
                                e.at("justification").get<std::string>()});
    return overlay;
  } catch (json::exception const &e) {
    throw DataError(std::string("errata JSON: ") + e.what());
  }
}

GccDataset builtin_dataset()
{
  return parse_dataset(embedded::gcc_dataset_json);
}

ErrataOverlay builtin_errata()
{
  return parse_errata(embedded::errata_json);
}

GccDataset apply_errata(GccDataset ds, ErrataOverlay const &overlay)
{
  for (auto e : overlay.errata) {
    if (e.table == "s3p") {
      auto it = std::find_if(ds.s3p.begin(), ds.s3p.end(), [&](S3PRecord const &r) { return r.key() == e.key; });
      if (it == ds.s3p.end())
        throw DataError("erratum " + e.id + ": no s3p row '" + e.key + "'");
      e.original = split_ws(it->key());
      *it = parse_s3p_tokens(e.replacement);
    } else if (e.table == "vertex_faces") {
      auto v = parse_inner_vertex(e.key);
      auto it = std::find_if(ds.vertex_faces.begin(), ds.vertex_faces.end(),
                             [&](VertexFaceRecord const &r) { return r.vertex == v; });
      if (it == ds.vertex_faces.end())
        throw DataError("erratum " + e.id + ": no vertex_faces row '" + e.key + "'");
      e.original.clear();
      for (auto const &f : it->faces)
        e.original.push_back(f.str());
      it->faces.clear();
      for (auto const &f : e.replacement)
        it->faces.push_back(parse_face(f));
    } else if (e.table == "pentagon_cycles") {
      std::size_t idx = 0;
      try {
        idx = std::stoul(e.key);
      } catch (std::exception const &) {
        throw DataError("erratum " + e.id + ": pentagon cycle key must be an index");
      }
      if (idx >= ds.pentagon_cycles.size())
        throw DataError("erratum " + e.id + ": no pentagon cycle " + e.key);
      e.original = ds.pentagon_cycles[idx];
      ds.pentagon_cycles[idx] = e.replacement;
    } else {
      throw DataError("erratum " + e.id + ": unknown table '" + e.table + "'");
    }
    ds.applied_errata.push_back(std::move(e));
  }
  return ds;
}

GccDataset load_dataset(std::optional<ErrataOverlay> const &overlay)
{
  auto ds = builtin_dataset();
  if (overlay)
    ds = apply_errata(std::move(ds), *overlay);
  return ds;
}

ValidationReport validate_dataset(GccDataset const &ds)
{
  ValidationReport report;
  auto const vertices = all_inner_vertices();

  // Face lists: presence, shape and face-word validity.
  std::map<FaceId, int> incidence;
  for (auto const &v : vertices) {
    int copies = std::count_if(ds.vertex_faces.begin(), ds.vertex_faces.end(),
                               [&](VertexFaceRecord const &r) { return r.vertex == v; });
    if (copies != 1) {
      report.add("face-table", v.str(), "listed " + std::to_string(copies) + " times in the face table");
      continue;
    }
    auto const *rec = ds.faces_of(v);
    std::size_t expected = v.is_y_kind() ? 5 : 3;
    if (rec->faces.size() != expected) {
      report.add("face-word", v.str(),
                 std::to_string(rec->faces.size()) + " faces, expected " + std::to_string(expected));
      continue;
    }
    std::set<FaceId> faces(rec->faces.begin(), rec->faces.end());
    auto word = face_symbols(*rec);
    std::set<int> symbols(word.begin(), word.end());
    if (faces.size() != expected || symbols.size() != expected)
      report.add("face-word", v.str(), "face symbols do not form a cycle word");
    for (auto const &f : rec->faces)
      ++incidence[f];
  }
  for (int w = 1; w <= 5; ++w)
    for (int i = 1; i <= 6; ++i) {
      FaceId f{w, i};
      if (incidence[f] != 4)
        report.add("face-incidence", f.str(),
                   "on " + std::to_string(incidence[f]) + " vertex face lists, expected 4");
    }

  // S3P rows.
  std::map<InnerVertexName, std::vector<int>> symbols_at;
  for (std::size_t i = 0; i < ds.s3p.size(); ++i) {
    auto const &row = ds.s3p[i];
    if (row.end_a.symbol != row.end_b.symbol)
      report.add("row-shape", row_loc(i), row.key() + ": end faces carry different symbols");
    if (!row.deg5.is_y_kind() || row.deg3.is_y_kind())
      report.add("row-shape", row_loc(i), row.key() + ": inner vertices of the wrong kinds");
    symbols_at[row.deg5].push_back(row.color());
    symbols_at[row.deg3].push_back(row.color());

    auto const *f5 = ds.faces_of(row.deg5);
    auto const *f3 = ds.faces_of(row.deg3);
    bool ends_ok = (has_face(f5, row.end_a) && has_face(f3, row.end_b)) ||
                   (has_face(f5, row.end_b) && has_face(f3, row.end_a));
    if (!ends_ok)
      report.add("end-face", row_loc(i), row.key() + ": end faces not on the inner vertices' face lists");
    int shared = shared_face_count(f5, f3);
    if (shared != 2)
      report.add("face-sharing", row_loc(i),
                 row.key() + ": inner vertices share " + std::to_string(shared) + " faces, expected 2");
  }
  if (ds.s3p.size() != 60)
    report.add("row-count", "s3p", std::to_string(ds.s3p.size()) + " rows, expected 60");

  for (auto const &v : vertices) {
    auto const &got = symbols_at[v];
    std::vector<int> expected;
    if (v.is_y_kind())
      expected = {1, 2, 3, 4, 5};
    else if (auto const *rec = ds.faces_of(v))
      expected = face_symbols(*rec);
    for (int w : std::set<int>(expected.begin(), expected.end())) {
      auto n = std::count(got.begin(), got.end(), w);
      if (n != 1)
        report.add("row-count", v.str(),
                   "symbol " + std::to_string(w) + " in " + std::to_string(n) + " rows, expected 1");
    }
    for (int w : std::set<int>(got.begin(), got.end()))
      if (std::find(expected.begin(), expected.end(), w) == expected.end())
        report.add("row-count", v.str(), "symbol " + std::to_string(w) + " not among the vertex's faces");
  }
  for (auto const &[v, got] : symbols_at)
    if (std::find(vertices.begin(), vertices.end(), v) == vertices.end())
      report.add("unknown-vertex", v.str(), "appears in the S3P table only");

  // Displays.
  std::set<CycleClass> five;
  for (auto const &w : ds.display1) {
    try {
      auto c = petersen::canonical_cycle(w.word);
      if (c.length() != 5)
        report.add("display", w.label, "display (1) word is not a 5-cycle");
      five.insert(c);
    } catch (std::invalid_argument const &e) {
      report.add("display", w.label, e.what());
    }
  }
  if (five.size() != 12 || ds.display1.size() != 12)
    report.add("display", "display1", std::to_string(five.size()) + " distinct 5-classes, expected 12");
  std::set<Triple> triples;
  for (auto const &w : ds.display2) {
    try {
      triples.insert(petersen::parse_triple(w.word));
    } catch (std::invalid_argument const &e) {
      report.add("display", w.label, e.what());
    }
  }
  if (triples.size() != 10 || ds.display2.size() != 10)
    report.add("display", "display2", std::to_string(triples.size()) + " distinct 3-subsets, expected 10");
  return report;
}

ValidationReport pentagon_cycles_check(GccDataset const &ds)
{
  ValidationReport report;
  for (std::size_t c = 0; c < ds.pentagon_cycles.size(); ++c) {
    auto const &tokens = ds.pentagon_cycles[c];
    auto loc = "pentagon[" + std::to_string(c) + "]";
    std::vector<InnerVertexName> verts;
    std::vector<FaceId> faces;
    bool malformed = false;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      try {
        if (i % 2 == 0)
          verts.push_back(parse_inner_vertex(tokens[i]));
        else
          faces.push_back(parse_face(tokens[i]));
      } catch (DataError const &e) {
        report.add("pentagon", loc, "entry " + std::to_string(i) + " '" + tokens[i] + "': " + e.what());
        malformed = true;
        break;
      }
    }
    if (malformed)
      continue;
    if (tokens.size() % 2 != 0) {
      report.add("pentagon", loc, "odd number of entries");
      continue;
    }
    for (std::size_t k = 0; k < faces.size(); ++k) {
      auto const &before = verts[k];
      auto const &after = verts[(k + 1) % verts.size()];
      if (!has_face(ds.faces_of(before), faces[k]) || !has_face(ds.faces_of(after), faces[k]))
        report.add("pentagon", loc,
                   "face " + faces[k].str() + " is not on both " + before.str() + " and " + after.str());
    }
  }
  return report;
}

ValidationReport audit_errata(GccDataset const &raw, ErrataOverlay const &overlay)
{
  using Key = std::pair<std::string, std::string>;
  auto keys = [](GccDataset const &ds) {
    auto r = validate_dataset(ds);
    r.merge(pentagon_cycles_check(ds));
    std::set<Key> out;
    for (auto const &v : r.violations)
      out.insert({v.kind, v.location});
    return out;
  };

  ValidationReport report;
  auto const before = keys(raw);
  auto const after = keys(apply_errata(raw, overlay));
  for (auto const &k : after)
    if (!before.count(k))
      report.add("erratum-introduces", k.second, "overlay introduces a " + k.first + " violation");

  for (std::size_t i = 0; i < overlay.errata.size(); ++i) {
    ErrataOverlay without = overlay;
    without.errata.erase(without.errata.begin() + static_cast<std::ptrdiff_t>(i));
    auto dropped = keys(apply_errata(raw, without));
    bool needed = std::any_of(dropped.begin(), dropped.end(), [&](Key const &k) { return !after.count(k); });
    if (!needed)
      report.add("erratum-unneeded", overlay.errata[i].id, "dropping it cures nothing less");
  }
  return report;
}

CycleClass face_word_class(GccDataset const &ds, InnerVertexName const &v)
{
  auto const *rec = ds.faces_of(v);
  if (!rec)
    throw DataError("no face list for " + v.str());
  try {
    return petersen::canonical_cycle(std::span<int const>(face_symbols(*rec)));
  } catch (std::invalid_argument const &e) {
    throw DataError(v.str() + ": " + e.what());
  }
}

std::optional<int> NamedBigraph::y_index(std::string_view name) const
{
  auto it = std::find(y_names.begin(), y_names.end(), name);
  return it == y_names.end() ? std::nullopt : std::optional<int>(static_cast<int>(it - y_names.begin()));
}

std::optional<int> NamedBigraph::x_index(std::string_view name) const
{
  auto it = std::find(x_names.begin(), x_names.end(), name);
  return it == x_names.end() ? std::nullopt : std::optional<int>(static_cast<int>(it - x_names.begin()));
}

std::optional<int> NamedBigraph::find_edge(int y, int x) const
{
  for (std::size_t i = 0; i < graph.edges.size(); ++i)
    if (graph.edges[i].y == y && graph.edges[i].x == x)
      return static_cast<int>(i);
  return std::nullopt;
}

NamedBigraph build_G(GccDataset const &ds)
{
  require_valid(ds);
  NamedBigraph g;
  std::map<InnerVertexName, int> y_id, x_id;
  for (auto const &v : all_inner_vertices()) {
    if (v.is_y_kind()) {
      y_id[v] = static_cast<int>(g.y_names.size());
      g.y_names.push_back(v.str());
    } else {
      x_id[v] = static_cast<int>(g.x_names.size());
      g.x_names.push_back(v.str());
    }
  }
  g.graph.y_count = static_cast<int>(g.y_names.size());
  g.graph.x_count = static_cast<int>(g.x_names.size());
  g.graph.lambda = 5;
  g.graph.mu = 3;
  for (auto const &row : ds.s3p)
    g.graph.edges.push_back({y_id.at(row.deg5), x_id.at(row.deg3), row.color()});
  return g;
}

std::optional<int> GprimeNaming::y_index(CycleClass const &c) const
{
  auto it = std::find(y_classes.begin(), y_classes.end(), c);
  return it == y_classes.end() ? std::nullopt : std::optional<int>(static_cast<int>(it - y_classes.begin()));
}

std::optional<int> GprimeNaming::x_index(Triple const &t) const
{
  auto it = std::find(x_sets.begin(), x_sets.end(), t);
  return it == x_sets.end() ? std::nullopt : std::optional<int>(static_cast<int>(it - x_sets.begin()));
}

GprimeNaming naming_from_displays(GccDataset const &ds)
{
  GprimeNaming naming;
  try {
    for (auto const &w : ds.display1) {
      if (w.label.rfind("y_", 0) != 0)
        continue;
      auto c = petersen::canonical_cycle(w.word);
      if (c.length() != 5 || petersen::cycle_parity(c) != petersen::Parity::odd)
        throw DataError(w.label + " is not an OP 5-cycle");
      naming.y_classes.push_back(c);
      naming.y_aliases.push_back(w.label);
    }
    for (auto const &w : ds.display2) {
      naming.x_sets.push_back(petersen::parse_triple(w.word));
      naming.x_aliases.push_back(w.label);
    }
  } catch (std::invalid_argument const &e) {
    throw DataError(std::string("display tables: ") + e.what());
  }
  if (std::set<CycleClass>(naming.y_classes.begin(), naming.y_classes.end()).size() != 6 ||
      naming.y_classes.size() != 6)
    throw DataError("display (1) must name six distinct OP 5-cycles");
  if (std::set<Triple>(naming.x_sets.begin(), naming.x_sets.end()).size() != 10 || naming.x_sets.size() != 10)
    throw DataError("display (2) must name ten distinct 3-subsets");
  return naming;
}

CoveringMap covering_map(GccDataset const &ds)
{
  CoveringMap cm;
  std::map<CycleClass, std::vector<InnerVertexName>> by_class;
  std::vector<CycleClass> order;
  for (auto const &v : all_inner_vertices()) {
    auto c = face_word_class(ds, v);
    if (!by_class.count(c))
      order.push_back(c);
    by_class[c].push_back(v);
  }
  for (auto const &c : order) {
    auto const &members = by_class[c];
    if (members.size() != 2) {
      std::string names;
      for (auto const &m : members)
        names += " " + m.str();
      throw DataError("class " + c.str() + " is carried by " + std::to_string(members.size()) +
                      " vertices:" + names);
    }
    cm.fiber_of[members[0]] = static_cast<int>(cm.fibers.size());
    cm.fiber_of[members[1]] = static_cast<int>(cm.fibers.size());
    cm.fibers.push_back({c, {members[0], members[1]}});
  }
  return cm;
}

ValidationReport printed_pairing_discrepancies(GccDataset const &ds, CoveringMap const &cm)
{
  ValidationReport report;
  for (auto const &[a_text, b_text] : ds.printed_covering_pairs) {
    auto a = parse_inner_vertex(a_text);
    auto b = parse_inner_vertex(b_text);
    auto fa = cm.fiber_of.at(a);
    if (fa == cm.fiber_of.at(b))
      continue;
    auto const &fiber = cm.fibers[fa];
    auto partner = fiber.members[0] == a ? fiber.members[1] : fiber.members[0];
    report.add("covering-pairing", "{" + a_text + "," + b_text + "}",
               "printed pair not identified by face classes; " + a_text + " pairs with " + partner.str());
  }
  return report;
}

FoldedGraph fold_G(GccDataset const &ds, GprimeNaming const &naming)
{
  require_valid(ds);
  (void)covering_map(ds);
  auto result = fold_unchecked(ds, naming);
  if (!result.anomalies.ok())
    throw DataError("quotient is not a double cover: " + result.anomalies.violations.front().message);
  return std::move(result.folded);
}

NamedBigraph build_Gprime_quotient(GccDataset const &ds, GprimeNaming const &naming)
{
  return fold_G(ds, naming).gprime;
}

NamedBigraph build_Gprime_theta(petersen::ThetaCorrespondence const &corr, GprimeNaming const &naming)
{
  NamedBigraph gp;
  gp.y_names = naming.y_aliases;
  gp.x_names = naming.x_aliases;
  gp.graph.y_count = static_cast<int>(naming.y_classes.size());
  gp.graph.x_count = static_cast<int>(naming.x_sets.size());
  gp.graph.lambda = 5;
  gp.graph.mu = 3;
  auto const &o3 = corr.graph;
  for (std::size_t y = 0; y < naming.y_classes.size(); ++y) {
    auto it = corr.theta5.find(naming.y_classes[y]);
    if (it == corr.theta5.end())
      throw DataError(naming.y_aliases[y] + " has no theta5 image");
    auto const &cycle = it->second;
    auto colors = petersen::color_word(o3, cycle);
    auto const k = cycle.size();
    for (std::size_t i = 0; i < k; ++i) {
      // colors[i] leaves cycle[i]; colors[i-1] enters it.
      auto const &t = o3.vertices[cycle[i]];
      int in = colors[(i + k - 1) % k];
      int out = colors[i];
      std::vector<int> middle;
      for (int s : t.elems)
        if (s != in && s != out)
          middle.push_back(s);
      if (middle.size() != 1)
        throw std::logic_error("middle symbol undefined at " + t.str());
      auto x = naming.x_index(t);
      if (!x)
        throw DataError(t.str() + " is not named in display (2)");
      gp.graph.edges.push_back({static_cast<int>(y), *x, middle.front()});
    }
  }
  std::sort(gp.graph.edges.begin(), gp.graph.edges.end(), [](Edge const &a, Edge const &b) {
    return std::tie(a.y, a.tag, a.x) < std::tie(b.y, b.tag, b.x);
  });
  return gp;
}

ValidationReport cross_validate_gprime(NamedBigraph const &quotient, NamedBigraph const &theta)
{
  ValidationReport report;
  if (quotient.y_names != theta.y_names || quotient.x_names != theta.x_names) {
    report.add("naming", "G'", "the two graphs use different vertex naming");
    return report;
  }
  std::set<Edge> a(quotient.graph.edges.begin(), quotient.graph.edges.end());
  std::set<Edge> b(theta.graph.edges.begin(), theta.graph.edges.end());
  for (auto const &e : a)
    if (!b.count(e))
      report.add("edge-mismatch", edge_loc(quotient, e),
                 "tag " + std::to_string(e.tag) + " edge only in the quotient route");
  for (auto const &e : b)
    if (!a.count(e))
      report.add("edge-mismatch", edge_loc(theta, e),
                 "tag " + std::to_string(e.tag) + " edge only in the theta route");
  if (quotient.graph.edges.size() != a.size() || theta.graph.edges.size() != b.size())
    report.add("edge-mismatch", "G'", "repeated edges");
  return report;
}

ValidationReport cross_validate_gprime(GccDataset const &ds)
{
  auto naming = naming_from_displays(ds);
  auto folded = fold_unchecked(ds, naming);
  auto theta = build_Gprime_theta(petersen::theta_correspondence(), naming);
  auto report = folded.anomalies;
  report.merge(cross_validate_gprime(folded.folded.gprime, theta));
  return report;
}

std::vector<GreatCircle> great_circles(GccDataset const &ds)
{
  std::map<std::pair<int, int>, std::vector<int>> groups;
  for (std::size_t i = 0; i < ds.s3p.size(); ++i) {
    auto const &row = ds.s3p[i];
    auto ends = std::minmax(row.end_a.index, row.end_b.index);
    std::vector<int> hits;
    for (std::size_t p = 0; p < ds.circle_patterns.size(); ++p)
      for (auto const &[a, b] : ds.circle_patterns[p])
        if (std::minmax(a, b) == ends) {
          hits.push_back(static_cast<int>(p));
          break;
        }
    if (hits.size() != 1)
      throw DataError(row.key() + " matches " + std::to_string(hits.size()) + " circle patterns");
    groups[{row.color(), hits.front()}].push_back(static_cast<int>(i));
  }
  std::vector<GreatCircle> circles;
  for (auto const &[key, rows] : groups) {
    if (rows.size() != 4)
      throw DataError("circle " + std::to_string(key.first) + "/" + std::to_string(key.second) + " has " +
                      std::to_string(rows.size()) + " rows");
    circles.push_back({key.first, key.second, {rows[0], rows[1], rows[2], rows[3]}});
  }
  return circles;
}

ValidationReport check_display_parity(GccDataset const &ds)
{
  ValidationReport report;
  std::set<CycleClass> seen;
  for (auto const &w : ds.display1) {
    auto c = petersen::canonical_cycle(w.word);
    seen.insert(c);
    auto parity = petersen::cycle_parity(c);
    bool bar = w.label.rfind("ybar_", 0) == 0;
    auto expected = bar ? petersen::Parity::even : petersen::Parity::odd;
    if (parity != expected)
      report.add("parity", w.label,
                 w.word + " is " + std::string(petersen::to_string(parity)) + ", expected " +
                   std::string(petersen::to_string(expected)));
  }
  if (seen.size() != 12)
    report.add("parity", "display1", "classes are not distinct");
  return report;
}

ValidationReport check_theta_rows(GccDataset const &ds, petersen::ThetaCorrespondence const &corr)
{
  ValidationReport report;
  auto const &o3 = corr.graph;
  auto check = [&](ThetaRow const &row, std::size_t length, std::vector<LabeledWord> const &table,
                   std::string const &expected_label) {
    auto loc = row.source + "->" + (row.label.empty() ? "" : row.label);
    try {
      auto cycle = petersen::resolve_cycle(o3, row.cycle);
      if (cycle.size() != length || std::set<int>(cycle.begin(), cycle.end()).size() != length) {
        report.add("theta-row", loc, "not a simple " + std::to_string(length) + "-cycle of O_3");
        return;
      }
      auto word = display_word(table, expected_label);
      if (!word) {
        report.add("theta-row", loc, "label " + expected_label + " not in the displays");
        return;
      }
      auto induced = petersen::induced_color_cycle(o3, cycle);
      auto expected = petersen::canonical_cycle(*word);
      if (induced != expected)
        report.add("theta-row", loc, "induces " + induced.str() + ", expected " + expected.str());
    } catch (std::exception const &e) {
      report.add("theta-row", loc, e.what());
    }
  };
  for (auto const &row : ds.theta5_rows)
    check(row, 5, ds.display1, row.label);
  for (auto const &row : ds.theta3_rows)
    check(row, 6, ds.display2, row.source);
  return report;
}

ValidationReport theta_source_discrepancies(GccDataset const &ds, petersen::ThetaCorrespondence const &corr)
{
  ValidationReport report;
  for (auto const &row : ds.theta5_rows) {
    auto word = display_word(ds.display1, row.source);
    if (!word)
      continue;
    try {
      auto cycle = petersen::resolve_cycle(corr.graph, row.cycle);
      auto induced = petersen::induced_color_cycle(corr.graph, cycle);
      auto source = petersen::canonical_cycle(*word);
      if (induced != source)
        report.add("theta-source", row.source + "->" + row.label,
                   "displayed cycle induces " + induced.str() + " (" + row.label + "), not the source " +
                     source.str());
    } catch (std::exception const &e) {
      report.add("theta-source", row.source, e.what());
    }
  }
  return report;
}

} // namespace bicolor::gcc
