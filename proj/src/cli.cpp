#include "bicolor/cli.hpp"

#include "bicolor/cyclic.hpp"
#include "bicolor/io.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

namespace bicolor::cli {

namespace {

using io::Json;

struct RunConfig
{
  std::string errata_path;
  bool raw = false;
  unsigned workers = 1;
  std::uint64_t seed = 0;
  std::string output;
};

gcc::GccDataset dataset_for(RunConfig const &cfg)
{
  if (cfg.raw)
    return gcc::builtin_dataset();
  std::string path = cfg.errata_path;
  if (path.empty())
    if (char const *env = std::getenv("BICOLOR_ERRATA"))
      path = env;
  auto overlay = path.empty() ? gcc::builtin_errata() : gcc::parse_errata(io::read_file(path));
  return gcc::apply_errata(gcc::builtin_dataset(), overlay);
}

/// A solution document, or `gcc solve` output holding exactly one.
gcc::GccSolution read_solution(gcc::NamedBigraph const &gprime, std::string const &path)
{
  auto doc = io::parse_json_text(io::read_file(path));
  if (doc.is_object() && doc.contains("solutions")) {
    auto const &list = doc.at("solutions");
    if (!list.is_array() || list.size() != 1)
      throw io::ParseError("expected exactly one entry under \"solutions\"");
    return io::solution_from_json(gprime, list.at(0));
  }
  return io::solution_from_json(gprime, doc);
}

int report_exit(ValidationReport const &r)
{
  return r.ok() ? exit_ok : exit_violations;
}

void print(std::ostream &out, Json const &j)
{
  out << j.dump(2) << '\n';
}

/// Sets up one verb: the callback runs after a successful parse.
using Action = std::function<int(std::ostream &)>;

void add_cyclic(CLI::App &app, Action &action)
{
  auto *cyclic = app.add_subcommand("cyclic", "Cyclic Z_m/Z_n biregular graphs");
  cyclic->require_subcommand(1);

  struct BuildArgs
  {
    int m = 0, n = 0;
    std::string format = "json";
  };
  auto build_args = std::make_shared<BuildArgs>();
  auto *build = cyclic->add_subcommand("build", "Build the cyclic bigraph");
  build->add_option("--m", build_args->m, "Modulus of Y")->required();
  build->add_option("--n", build_args->n, "Modulus of X")->required();
  build->add_option("--format", build_args->format)->check(CLI::IsMember({"json", "dot"}));
  build->callback([build_args, &action] {
    action = [a = *build_args](std::ostream &out) {
      auto g = cyclic::build_cyclic_bigraph(cyclic::CyclicParams(a.m, a.n));
      if (a.format == "dot")
        out << io::export_dot(g, {}, {});
      else
        print(out, io::to_json(g));
      return exit_ok;
    };
  });

  struct ColorArgs
  {
    int m = 0, n = 0;
    std::string theta, weights, perm_alpha, perm_beta;
    bool check = false, reversible = false;
  };
  auto color_args = std::make_shared<ColorArgs>();
  auto *color = cyclic->add_subcommand("color", "Greedy bicoloring along the edge order");
  color->add_option("--m", color_args->m)->required();
  color->add_option("--n", color_args->n)->required();
  color->add_option("--theta", color_args->theta, "Ordered pairs 'a,b;c,d;...'")->required();
  color->add_option("--weights", color_args->weights, "Weights 'w1,w2,...'")->required();
  color->add_flag("--check", color_args->check, "Check faithfulness and weights");
  color->add_flag("--reversible", color_args->reversible, "Test symmetric reversibility");
  color->add_option("--perm-alpha", color_args->perm_alpha, "Image of 0..lambda-1, e.g. '1,0'");
  color->add_option("--perm-beta", color_args->perm_beta, "Image of 0..mu-1, e.g. '2,1,0'");
  color->callback([color_args, &action] {
    action = [a = *color_args](std::ostream &out) {
      cyclic::CyclicParams params(a.m, a.n);
      auto theta = io::parse_pair_list(a.theta);
      auto omega = io::parse_int_list(a.weights);
      auto coloring = cyclic::greedy_bicolor(params, theta, omega);
      auto g = cyclic::build_cyclic_bigraph(params);
      auto sys = cyclic::make_system(params, theta, omega);
      Json j = io::to_json(coloring);
      int code = exit_ok;
      if (a.check) {
        auto report = check_faithful(g, coloring, sys);
        report.merge(check_weight_compatible(coloring, sys));
        j["check"] = io::to_json(report);
        code = std::max(code, report_exit(report));
      }
      if (a.reversible) {
        if (a.perm_alpha.empty() || a.perm_beta.empty())
          throw io::ParseError("--reversible needs --perm-alpha and --perm-beta");
        SymbolPermutationPair perms{io::parse_int_list(a.perm_alpha), io::parse_int_list(a.perm_beta)};
        bool ok = is_symmetrically_reversible(g, coloring, sys, perms);
        j["reversible"] = ok;
        if (!ok)
          code = exit_violations;
      }
      print(out, j);
      return code;
    };
  });
}

void add_petersen(CLI::App &app, Action &action)
{
  auto *pet = app.add_subcommand("petersen", "K5 cycles and the Petersen graph O_3");
  pet->require_subcommand(1);

  auto build_format = std::make_shared<std::string>("json");
  auto *build = pet->add_subcommand("build", "Emit O_3");
  build->add_option("--format", *build_format)->check(CLI::IsMember({"json", "dot"}));
  build->callback([build_format, &action] {
    action = [format = *build_format](std::ostream &out) {
      auto g = petersen::build_petersen();
      if (format == "dot")
        out << io::export_dot(g);
      else
        print(out, io::to_json(g));
      return exit_ok;
    };
  });

  struct CyclesArgs
  {
    int length = 5;
    std::string format = "json";
  };
  auto cycles_args = std::make_shared<CyclesArgs>();
  auto *cycles = pet->add_subcommand("cycles", "Canonical cycles of O_3");
  cycles->add_option("--length", cycles_args->length)->required();
  cycles->add_option("--format", cycles_args->format)->check(CLI::IsMember({"json", "csv"}));
  cycles->callback([cycles_args, &action] {
    action = [a = *cycles_args](std::ostream &out) {
      auto g = petersen::build_petersen();
      auto found = petersen::enumerate_graph_cycles(g, a.length);
      if (a.format == "csv") {
        out << "cycle,colors\n";
        for (auto const &c : found) {
          std::string names;
          for (int v : c)
            names += (names.empty() ? "" : " ") + g.vertices[v].str();
          out << names << ',' << petersen::induced_color_cycle(g, c).str() << '\n';
        }
        return exit_ok;
      }
      Json list = Json::array();
      for (auto const &c : found) {
        Json names = Json::array();
        for (int v : c)
          names.push_back(g.vertices[v].str());
        list.push_back(Json{{"vertices", names}, {"colors", petersen::induced_color_cycle(g, c).str()}});
      }
      print(out, Json{{"length", a.length}, {"count", found.size()}, {"cycles", list}});
      return exit_ok;
    };
  });

  auto check_paper = std::make_shared<bool>(false);
  auto *theta = pet->add_subcommand("theta", "The correspondences theta5 and theta3");
  theta->add_flag("--check-paper", *check_paper, "Check the printed theta displays");
  theta->callback([check_paper, &action] {
    action = [check = *check_paper](std::ostream &out) {
      auto corr = petersen::theta_correspondence();
      auto cycle_names = [&](petersen::VertexCycle const &c) {
        Json names = Json::array();
        for (int v : c)
          names.push_back(corr.graph.vertices[v].str());
        return names;
      };
      Json t5 = Json::array(), t3 = Json::array();
      for (auto const &[cls, cyc] : corr.theta5)
        t5.push_back(Json{{"class", cls.str()}, {"parity", petersen::to_string(petersen::cycle_parity(cls))},
                          {"cycle", cycle_names(cyc)}});
      for (auto const &[cls, cyc] : corr.theta3)
        t3.push_back(Json{{"class", cls.str()}, {"cycle", cycle_names(cyc)}});
      Json j{{"theta5", t5}, {"theta3", t3}};
      int code = exit_ok;
      if (check) {
        auto ds = gcc::builtin_dataset();
        auto rows = gcc::check_theta_rows(ds, corr);
        j["check"] = io::to_json(rows);
        j["source_discrepancies"] = io::to_json(gcc::theta_source_discrepancies(ds, corr));
        code = report_exit(rows);
      }
      print(out, j);
      return code;
    };
  });

  auto word = std::make_shared<std::string>();
  auto *parity = pet->add_subcommand("parity", "Parity of a cycle word");
  parity->add_option("--word", *word, "Digits, e.g. 13524")->required();
  parity->callback([word, &action] {
    action = [w = *word](std::ostream &out) {
      auto symbols = petersen::parse_word(w);
      auto cls = petersen::canonical_cycle(std::span<int const>(symbols));
      Json j{{"word", w}, {"class", cls.str()},
             {"word_parity", petersen::to_string(petersen::permutation_parity(symbols))}};
      if (cls.length() % 4 == 1)
        j["class_parity"] = petersen::to_string(petersen::cycle_parity(cls));
      print(out, j);
      return exit_ok;
    };
  });
}

void add_gcc(CLI::App &app, Action &action, RunConfig &cfg)
{
  auto *gcc_cmd = app.add_subcommand("gcc", "The GCC graphs, tables and solutions");
  gcc_cmd->require_subcommand(1);

  auto *validate = gcc_cmd->add_subcommand("validate-data", "Validate the transcribed tables");
  validate->add_option("--errata", cfg.errata_path, "Errata overlay JSON");
  validate->add_flag("--raw", cfg.raw, "Skip errata");
  validate->callback([&action, &cfg] {
    action = [&cfg](std::ostream &out) {
      auto ds = dataset_for(cfg);
      auto validation = gcc::validate_dataset(ds);
      auto pentagons = gcc::pentagon_cycles_check(ds);
      Json applied = Json::array();
      for (auto const &e : ds.applied_errata)
        applied.push_back(e.id);
      Json j{{"errata", applied}, {"validation", io::to_json(validation)}, {"pentagons", io::to_json(pentagons)}};
      auto status = validation;
      status.merge(pentagons);
      if (!ds.applied_errata.empty()) {
        gcc::ErrataOverlay overlay{ds.applied_errata};
        auto audit = gcc::audit_errata(gcc::builtin_dataset(), overlay);
        j["errata_audit"] = io::to_json(audit);
        status.merge(audit);
      }
      if (validation.ok()) {
        auto cross = gcc::cross_validate_gprime(ds);
        j["gprime_cross_check"] = io::to_json(cross);
        status.merge(cross);
        j["printed_pairing"] = io::to_json(gcc::printed_pairing_discrepancies(ds, gcc::covering_map(ds)));
      }
      print(out, j);
      return report_exit(status);
    };
  });

  struct GraphArgs
  {
    std::string which = "Gprime", route = "phi", format = "json";
  };
  auto graph_args = std::make_shared<GraphArgs>();
  auto *graph = gcc_cmd->add_subcommand("graph", "Emit G or G'");
  graph->add_option("--which", graph_args->which)->check(CLI::IsMember({"G", "Gprime"}));
  graph->add_option("--route", graph_args->route)->check(CLI::IsMember({"phi", "theta"}));
  graph->add_option("--format", graph_args->format)->check(CLI::IsMember({"json", "dot"}));
  graph->add_option("--errata", cfg.errata_path, "Errata overlay JSON");
  graph->add_flag("--raw", cfg.raw, "Skip errata");
  graph->callback([graph_args, &action, &cfg] {
    action = [a = *graph_args, &cfg](std::ostream &out) {
      auto ds = dataset_for(cfg);
      gcc::NamedBigraph g;
      std::vector<std::string> y_labels, x_labels;
      if (a.which == "G") {
        g = gcc::build_G(ds);
        for (auto const &name : g.y_names)
          y_labels.push_back(name + "\n" + gcc::face_word_class(ds, gcc::parse_inner_vertex(name)).str());
        for (auto const &name : g.x_names)
          x_labels.push_back(name + "\n" + gcc::face_word_class(ds, gcc::parse_inner_vertex(name)).str());
      } else {
        auto naming = gcc::naming_from_displays(ds);
        g = a.route == "phi" ? gcc::build_Gprime_quotient(ds, naming)
                             : gcc::build_Gprime_theta(petersen::theta_correspondence(), naming);
        for (std::size_t y = 0; y < naming.y_classes.size(); ++y)
          y_labels.push_back(naming.y_aliases[y] + "\n" + naming.y_classes[y].str());
        for (std::size_t x = 0; x < naming.x_sets.size(); ++x)
          x_labels.push_back(naming.x_aliases[x] + "\n" + naming.x_sets[x].str());
      }
      if (a.format == "dot") {
        out << io::export_dot(g.graph, y_labels, x_labels, a.which);
        return exit_ok;
      }
      auto j = io::to_json(g.graph);
      j["y_names"] = g.y_names;
      j["x_names"] = g.x_names;
      print(out, j);
      return exit_ok;
    };
  });

  struct SolveArgs
  {
    bool fix_135 = false, reversible_only = false, count_only = false;
    std::size_t limit = 0;
    std::string format = "json";
  };
  auto solve_args = std::make_shared<SolveArgs>();
  auto *solve = gcc_cmd->add_subcommand("solve", "Enumerate faithful weight-compatible bicolorings of G'");
  solve->add_flag("--fix-135", solve_args->fix_135, "Color-1/3/5 edges carry 1a/3b/5c");
  solve->add_flag("--reversible-only", solve_args->reversible_only, "Keep level-table mirror solutions");
  solve->add_flag("--count-only", solve_args->count_only, "Print the count only");
  solve->add_option("--limit", solve_args->limit, "Emit at most N solutions (0: all)");
  solve->add_option("--format", solve_args->format)->check(CLI::IsMember({"json", "csv"}));
  solve->callback([solve_args, &action, &cfg] {
    action = [a = *solve_args, &cfg](std::ostream &out) {
      auto folded = gcc::default_gprime(dataset_for(cfg));
      auto const &gp = folded.gprime;
      gcc::EnumerateOptions opts;
      opts.fix_135 = a.fix_135;
      opts.reversible_only = a.reversible_only;
      opts.workers = cfg.workers;
      if (a.count_only) {
        opts.count_only = true;
        out << gcc::enumerate_gcc_solutions(gp, opts).count << '\n';
        return exit_ok;
      }
      std::size_t emitted = 0;
      bool first = true;
      if (a.format == "csv") {
        out << "solution";
        for (auto const &e : gp.graph.edges)
          out << ',' << gp.y_names[e.y] << ':' << gp.x_names[e.x] << ':' << e.tag;
        out << '\n';
      } else {
        out << "{\"solutions\":[";
      }
      auto count = gcc::for_each_gcc_solution(gp, opts, [&](std::span<int const> codes) {
        if (a.limit && emitted >= a.limit)
          return false;
        if (a.format == "csv") {
          out << emitted;
          for (int c : codes)
            out << ',' << gcc::pair_name(c);
          out << '\n';
        } else {
          out << (first ? "\n" : ",\n")
              << io::solution_to_json(gp, {std::vector<int>(codes.begin(), codes.end())}, a.fix_135).dump();
        }
        first = false;
        ++emitted;
        return true;
      });
      if (a.limit && emitted >= a.limit) {
        opts.count_only = true;
        count = gcc::enumerate_gcc_solutions(gp, opts).count;
      }
      if (a.format != "csv")
        out << "\n],\"count\":" << count << "}\n";
      return exit_ok;
    };
  });

  auto verify_file = std::make_shared<std::string>();
  auto *verify = gcc_cmd->add_subcommand("verify", "Verify a solution file");
  verify->add_option("--solution", *verify_file)->required();
  verify->callback([verify_file, &action, &cfg] {
    action = [path = *verify_file, &cfg](std::ostream &out) {
      auto folded = gcc::default_gprime(dataset_for(cfg));
      auto sol = read_solution(folded.gprime, path);
      auto report = gcc::verify_gcc_solution(folded.gprime, sol);
      auto j = io::to_json(report);
      if (report.ok())
        j["distribution_reversible"] = gcc::is_distribution_reversible(folded.gprime, sol);
      print(out, j);
      return report_exit(report);
    };
  });

  struct TablesArgs
  {
    std::string solution, format = "csv";
    bool levels = false, circles = false;
  };
  auto tables_args = std::make_shared<TablesArgs>();
  auto *tables = gcc_cmd->add_subcommand("tables", "Level and great-circle tables of a solution");
  tables->add_option("--solution", tables_args->solution)->required();
  auto *lv = tables->add_flag("--levels", tables_args->levels, "Level distribution (default)");
  tables->add_flag("--circles", tables_args->circles, "Great-circle distribution")->excludes(lv);
  tables->add_option("--format", tables_args->format)->check(CLI::IsMember({"csv", "json"}));
  tables->callback([tables_args, &action, &cfg] {
    action = [a = *tables_args, &cfg](std::ostream &out) {
      auto ds = dataset_for(cfg);
      auto folded = gcc::default_gprime(ds);
      auto sol = read_solution(folded.gprime, a.solution);
      auto report = gcc::verify_gcc_solution(folded.gprime, sol);
      if (!report.ok()) {
        print(out, io::to_json(report));
        return exit_violations;
      }
      if (a.circles) {
        auto circles = gcc::circle_distribution(gcc::lift_solution(folded, sol), gcc::great_circles(ds),
                                                folded.edge_image);
        if (a.format == "csv")
          out << io::circle_table_csv(circles);
        else
          print(out, io::to_json(circles));
        return exit_ok;
      }
      auto table = gcc::level_distribution(folded.gprime, sol);
      if (a.format == "csv")
        out << io::level_table_csv(table);
      else
        print(out, io::to_json(table));
      return exit_ok;
    };
  });

  auto paper = std::make_shared<std::string>();
  auto *import = gcc_cmd->add_subcommand("import", "Map a printed solution onto G'");
  import->add_option("--paper", *paper)->required()->check(CLI::IsMember({"ss4", "ss5a", "ss5b"}));
  import->callback([paper, &action, &cfg] {
    action = [name = *paper, &cfg](std::ostream &out) {
      auto folded = gcc::default_gprime(dataset_for(cfg));
      auto doc = gcc::builtin_paper_solution(name);
      auto result = gcc::import_paper_solution(folded.gprime, doc);
      auto j = io::to_json(result, folded.gprime);
      j["name"] = doc.name;
      j["description"] = doc.description;
      print(out, j);
      return report_exit(result.report);
    };
  });
}

} // namespace

int dispatch(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Faithful bicolorings of biregular bipartite graphs", "bicolor"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--workers", cfg.workers, "Search threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Accepted for reproducible runs; every algorithm is deterministic");
  app.add_option("-o,--output", cfg.output, "Write output to this file");
  app.add_option("--errata", cfg.errata_path, "Errata overlay JSON (default: $BICOLOR_ERRATA, then built-in)");
  app.add_flag("--raw", cfg.raw, "Use the tables exactly as transcribed");

  Action action;
  add_cyclic(app, action);
  add_petersen(app, action);
  add_gcc(app, action, cfg);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::CallForHelp const &e) {
    app.exit(e, out, err);
    return exit_ok;
  } catch (CLI::ParseError const &e) {
    app.exit(e, err, err);
    if (e.get_exit_code() != 0)
      err << app.help();
    return e.get_exit_code() == 0 ? exit_ok : exit_malformed;
  }
  if (!action)
    return exit_malformed;

  try {
    if (cfg.output.empty())
      return action(out);
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file)
      throw io::ParseError("cannot write " + cfg.output);
    return action(file);
  } catch (std::exception const &e) {
    err << "error: " << e.what() << '\n';
    return exit_malformed;
  }
}

} // namespace bicolor::cli
