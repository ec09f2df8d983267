#include "bicolor/dataset.hpp"
#include "bicolor/solver.hpp"

#include "doctest.h"

#include <map>
#include <set>

using namespace bicolor;
using namespace bicolor::gcc;

namespace {

GccDataset corrected()
{
  return load_dataset(builtin_errata());
}

/// Neighbours of a degree-5 vertex read straight off the S3P rows, by w.
std::map<int, std::string> scan_rows(GccDataset const &ds, std::string const &y)
{
  std::map<int, std::string> out;
  for (auto const &r : ds.s3p)
    if (r.deg5.str() == y)
      out[r.color()] = r.deg3.str();
  return out;
}

std::map<int, std::string> gprime_neighbours(NamedBigraph const &g, std::string const &y)
{
  std::map<int, std::string> out;
  auto yi = g.y_index(y);
  REQUIRE(yi.has_value());
  for (auto const &e : g.graph.edges)
    if (e.y == *yi)
      out[e.tag] = g.x_names[e.x];
  return out;
}

std::set<std::tuple<std::string, std::string, int>> tagged_edges(NamedBigraph const &g)
{
  std::set<std::tuple<std::string, std::string, int>> out;
  for (auto const &e : g.graph.edges)
    out.insert({g.y_names[e.y], g.x_names[e.x], e.tag});
  return out;
}

} // namespace

TEST_SUITE("dataset")
{
  TEST_CASE("names and faces")
  {
    CHECK(parse_face("4_3") == FaceId{4, 3});
    CHECK(parse_face("4_3").str() == "4_3");
    CHECK_THROWS_AS(parse_face("6_1"), DataError);
    CHECK_THROWS_AS(parse_face("1_7"), DataError);
    CHECK_THROWS_AS(parse_face("12"), DataError);
    CHECK(parse_inner_vertex("y'_5").str() == "y'_5");
    CHECK(parse_inner_vertex("z_1").kind == VertexKind::z);
    CHECK_THROWS_AS(parse_inner_vertex("y_6"), DataError);
    CHECK_THROWS_AS(parse_inner_vertex("x_0"), DataError);
    CHECK_THROWS_AS(parse_inner_vertex("w_1"), DataError);
    CHECK(all_inner_vertices().size() == 32);
  }

  TEST_CASE("raw transcription")
  {
    auto raw = builtin_dataset();
    CHECK(raw.s3p.size() == 60);
    CHECK(raw.vertex_faces.size() == 32);
    CHECK(raw.display1.size() == 12);
    CHECK(raw.display2.size() == 10);
    CHECK(raw.applied_errata.empty());

    // Counting oracle: symbol-4 rows per degree-5 vertex.
    std::map<std::string, int> symbol4;
    for (auto const &r : raw.s3p)
      if (r.color() == 4)
        ++symbol4[r.deg5.str()];
    CHECK(symbol4["y_5"] == 2);
    CHECK(symbol4["y'_5"] == 0);

    auto report = validate_dataset(raw);
    CHECK_FALSE(report.ok());
    bool dup = false, missing = false;
    for (auto const &v : report.violations) {
      dup = dup || (v.kind == "row-count" && v.location == "y_5" && v.message.find("symbol 4") != std::string::npos);
      missing = missing ||
                (v.kind == "row-count" && v.location == "y'_5" && v.message.find("symbol 4") != std::string::npos);
    }
    CHECK(dup);
    CHECK(missing);
    CHECK_FALSE(pentagon_cycles_check(raw).ok());
    CHECK_THROWS_AS(build_G(raw), DataError);
  }

  TEST_CASE("shipped errata")
  {
    auto ds = corrected();
    CHECK(ds.applied_errata.size() == builtin_errata().errata.size());
    for (auto const &e : ds.applied_errata) {
      CHECK_FALSE(e.original.empty());
      CHECK_FALSE(e.justification.empty());
    }
    CHECK(validate_dataset(ds).ok());
    CHECK(pentagon_cycles_check(ds).ok());
    CHECK(audit_errata(builtin_dataset(), builtin_errata()).ok());
    CHECK(check_display_parity(ds).ok());
  }

  TEST_CASE("errata mechanics")
  {
    ErrataOverlay ghost{{Erratum{"ghost", "s3p", "9_9 y_0 z_1 9_9", {}, {"1_4", "y_0", "z_1", "1_5"}, "none"}}};
    CHECK_THROWS_AS(apply_errata(builtin_dataset(), ghost), DataError);
    ErrataOverlay table{{Erratum{"t", "nowhere", "0", {}, {"1"}, "none"}}};
    CHECK_THROWS_AS(apply_errata(builtin_dataset(), table), DataError);

    // Replace a good row by a copy of another: loads, then fails validation.
    auto ds = corrected();
    auto dup_key = ds.s3p[0].key();
    auto target = ds.s3p[1].key();
    std::vector<std::string> copy = {ds.s3p[0].end_a.str(), ds.s3p[0].deg5.str(), ds.s3p[0].deg3.str(),
                                     ds.s3p[0].end_b.str()};
    ErrataOverlay overlay{{Erratum{"dup", "s3p", target, {}, copy, "test"}}};
    GccDataset broken;
    CHECK_NOTHROW(broken = apply_errata(ds, overlay));
    CHECK(broken.s3p[1].key() == dup_key);
    CHECK_FALSE(validate_dataset(broken).ok());

    // An unneeded erratum is flagged by the audit.
    auto extra = builtin_errata();
    extra.errata.push_back(Erratum{"noop", "s3p", target, {}, {ds.s3p[1].end_a.str(), ds.s3p[1].deg5.str(),
                                                                  ds.s3p[1].deg3.str(), ds.s3p[1].end_b.str()},
                                   "test"});
    CHECK(audit_errata(builtin_dataset(), extra).has_kind("erratum-unneeded"));

    CHECK_THROWS_AS(parse_errata("{\"errata\": 3}"), DataError);
    CHECK_THROWS_AS(parse_dataset("not json"), DataError);
  }

  TEST_CASE("renamed face breaks face sharing")
  {
    auto ds = corrected();
    // Shift every face index of row 0's degree-3 vertex.
    for (auto &rec : ds.vertex_faces)
      if (rec.vertex == ds.s3p[0].deg3)
        for (auto &f : rec.faces)
          f = FaceId{f.symbol, f.index == 6 ? 1 : f.index + 1};
    auto report = validate_dataset(ds);
    CHECK(report.has_kind("face-sharing"));
  }

  TEST_CASE("build_G")
  {
    auto ds = corrected();
    auto g = build_G(ds);
    CHECK(g.graph.y_count == 12);
    CHECK(g.graph.x_count == 20);
    CHECK(g.graph.edges.size() == 60);
    CHECK(g.graph.lambda == 5);
    CHECK(g.graph.mu == 3);
    CHECK(validate_biregular(g.graph).ok());

    for (auto const &star : g.graph.y_stars()) {
      std::set<int> tags;
      for (int e : star)
        tags.insert(g.graph.edges[e].tag);
      CHECK(tags == std::set<int>{1, 2, 3, 4, 5});
    }
    auto xstars = g.graph.x_stars();
    for (std::size_t x = 0; x < xstars.size(); ++x) {
      std::set<int> tags;
      for (int e : xstars[x])
        tags.insert(g.graph.edges[e].tag);
      auto cls = face_word_class(ds, parse_inner_vertex(g.x_names[x]));
      CHECK(tags == std::set<int>(cls.canonical.begin(), cls.canonical.end()));
    }

    std::map<int, std::string> y0;
    auto yi = *g.y_index("y_0");
    for (auto const &e : g.graph.edges)
      if (e.y == yi)
        y0[e.tag] = g.x_names[e.x];
    CHECK(y0 == std::map<int, std::string>{{1, "z_1"}, {2, "z_2"}, {3, "z_3"}, {4, "z_4"}, {5, "z_5"}});
    CHECK(y0 == scan_rows(ds, "y_0"));

    // After the symbol-4 erratum y_5 keeps the row through x_2.
    std::map<int, std::string> y5;
    auto y5i = *g.y_index("y_5");
    for (auto const &e : g.graph.edges)
      if (e.y == y5i)
        y5[e.tag] = g.x_names[e.x];
    CHECK(y5 == std::map<int, std::string>{{1, "x'_2"}, {2, "x_4"}, {3, "z'_3"}, {4, "x_2"}, {5, "x'_4"}});
    CHECK(y5 == scan_rows(ds, "y_5"));
  }

  TEST_CASE("covering_map")
  {
    auto ds = corrected();
    auto cm = covering_map(ds);
    CHECK(cm.fibers.size() == 16);
    CHECK(cm.fiber_of.size() == 32);
    auto together = [&](char const *a, char const *b) {
      return cm.fiber_of.at(parse_inner_vertex(a)) == cm.fiber_of.at(parse_inner_vertex(b));
    };
    for (int i = 0; i <= 5; ++i) {
      auto y = "y_" + std::to_string(i), yp = "y'_" + std::to_string(i);
      CHECK(together(y.c_str(), yp.c_str()));
    }
    CHECK(together("y_0", "y'_0"));
    CHECK(together("x'_1", "z_1"));
    CHECK(together("x_3", "z'_3"));
    CHECK_FALSE(together("x_3", "z_3"));
    CHECK(face_word_class(ds, parse_inner_vertex("y_0")) == face_word_class(ds, parse_inner_vertex("y'_0")));

    // Tag-isomorphic fibers and no edge inside a fiber.
    auto g = build_G(ds);
    auto stars_y = g.graph.y_stars();
    auto stars_x = g.graph.x_stars();
    auto tags_of = [&](std::string const &name) {
      std::multiset<int> tags;
      if (auto y = g.y_index(name))
        for (int e : stars_y[*y])
          tags.insert(g.graph.edges[e].tag);
      if (auto x = g.x_index(name))
        for (int e : stars_x[*x])
          tags.insert(g.graph.edges[e].tag);
      return tags;
    };
    for (auto const &f : cm.fibers)
      CHECK(tags_of(f.members[0].str()) == tags_of(f.members[1].str()));
    for (auto const &e : g.graph.edges)
      CHECK(cm.fiber_of.at(parse_inner_vertex(g.y_names[e.y])) !=
            cm.fiber_of.at(parse_inner_vertex(g.x_names[e.x])));

    auto printed = printed_pairing_discrepancies(ds, cm);
    CHECK(printed.count_kind("covering-pairing") == 10);
  }

  TEST_CASE("G' by both routes")
  {
    auto ds = corrected();
    auto naming = naming_from_displays(ds);
    CHECK(naming.y_classes.size() == 6);
    CHECK(naming.x_sets.size() == 10);
    for (auto const &c : naming.y_classes)
      CHECK(petersen::cycle_parity(c) == petersen::Parity::odd);

    auto quotient = build_Gprime_quotient(ds, naming);
    auto theta = build_Gprime_theta(petersen::theta_correspondence(), naming);
    CHECK(quotient.graph.edges.size() == 30);
    CHECK(quotient.graph.y_count == 6);
    CHECK(quotient.graph.x_count == 10);
    CHECK(validate_biregular(quotient.graph).ok());
    CHECK(tagged_edges(quotient) == tagged_edges(theta));
    CHECK(cross_validate_gprime(quotient, theta).ok());
    CHECK(cross_validate_gprime(theta, theta).ok());
    CHECK(cross_validate_gprime(ds).ok());
    CHECK_FALSE(cross_validate_gprime(builtin_dataset()).ok());

    CHECK(gprime_neighbours(quotient, "y_0") ==
          std::map<int, std::string>{{1, "x'_1"}, {2, "x'_2"}, {3, "x'_3"}, {4, "x'_4"}, {5, "x'_5"}});
    CHECK(gprime_neighbours(quotient, "y_1") ==
          std::map<int, std::string>{{1, "x'_5"}, {2, "x'_3"}, {3, "x_5"}, {4, "x_4"}, {5, "x_3"}});

    // Every 3-set gets three edges tagged by its own elements.
    auto xstars = theta.graph.x_stars();
    for (std::size_t x = 0; x < xstars.size(); ++x) {
      std::set<int> tags;
      for (int e : xstars[x])
        tags.insert(theta.graph.edges[e].tag);
      auto const &t = naming.x_sets[x].elems;
      CHECK(tags == std::set<int>(t.begin(), t.end()));
    }

    // Folded edges come sorted by (y, tag) and every G edge has an image.
    auto folded = fold_G(ds, naming);
    CHECK(folded.edge_image.size() == 60);
    auto const &edges = folded.gprime.graph.edges;
    for (std::size_t i = 1; i < edges.size(); ++i)
      CHECK(std::pair{edges[i - 1].y, edges[i - 1].tag} < std::pair{edges[i].y, edges[i].tag});
    std::vector<int> preimages(30, 0);
    auto g = build_G(ds);
    for (std::size_t e = 0; e < 60; ++e) {
      ++preimages[folded.edge_image[e]];
      CHECK(g.graph.edges[e].tag == edges[folded.edge_image[e]].tag);
    }
    for (int p : preimages)
      CHECK(p == 2);
  }

  TEST_CASE("shared edges on G'")
  {
    auto ds = corrected();
    auto naming = naming_from_displays(ds);
    auto gp = build_Gprime_quotient(ds, naming);
    auto corr = petersen::theta_correspondence();
    for (auto const &e : gp.graph.edges) {
      auto shared = petersen::shared_edge(corr, naming.y_classes[e.y], naming.x_sets[e.x]);
      REQUIRE(shared.has_value());
      CHECK(corr.graph.edges[*shared].color == e.tag);
    }
  }

  TEST_CASE("great_circles")
  {
    auto ds = corrected();
    auto circles = great_circles(ds);
    CHECK(circles.size() == 15);
    std::vector<int> seen(60, 0);
    for (auto const &c : circles) {
      std::set<std::string> deg5;
      for (int r : c.rows) {
        ++seen[r];
        CHECK(ds.s3p[r].color() == c.symbol);
        deg5.insert(ds.s3p[r].deg5.str());
      }
      CHECK(deg5.size() == 4);
    }
    for (int s : seen)
      CHECK(s == 1);

    bool found = false;
    for (auto const &c : circles)
      if (c.symbol == 1 && c.pattern == 0)
        for (int r : c.rows)
          found = found || ds.s3p[r].key() == "1_4 y_0 z_1 1_5";
    CHECK(found);
  }

  TEST_CASE("pentagon cycles")
  {
    auto ds = corrected();
    REQUIRE(ds.pentagon_cycles.size() == 3);
    auto const &ten = ds.pentagon_cycles[1];
    CHECK(ten[0] == "x'_1");
    CHECK(ten[1] == "2_2");
    auto has = [&](char const *v, FaceId f) {
      auto const &faces = ds.faces_of(parse_inner_vertex(v))->faces;
      return std::find(faces.begin(), faces.end(), f) != faces.end();
    };
    CHECK(has("x'_1", {2, 2}));
    CHECK(has("x'_3", {2, 2}));

    auto perturbed = ds;
    perturbed.pentagon_cycles[1][1] = "2_3";
    CHECK(pentagon_cycles_check(perturbed).has_kind("pentagon"));
  }

  TEST_CASE("theta displays")
  {
    auto ds = corrected();
    auto corr = petersen::theta_correspondence();
    CHECK(ds.theta5_rows.size() == 12);
    CHECK(ds.theta3_rows.size() == 10);
    CHECK(check_theta_rows(ds, corr).ok());
    CHECK_FALSE(theta_source_discrepancies(ds, corr).ok());
  }

  TEST_CASE("display (1) splits the classes by parity")
  {
    auto ds = corrected();
    std::set<petersen::CycleClass> odd, even;
    for (auto const &w : ds.display1) {
      auto cls = petersen::canonical_cycle(w.word);
      (w.label.find("bar") == std::string::npos ? odd : even).insert(cls);
    }
    CHECK(odd.size() == 6);
    CHECK(even.size() == 6);
    for (auto const &c : petersen::k5_five_cycle_classes())
      CHECK((petersen::cycle_parity(c) == petersen::Parity::odd) == odd.contains(c));
  }
}
