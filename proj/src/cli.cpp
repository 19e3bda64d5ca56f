#include "kempe/cli.hpp"

#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "kempe/canonical.hpp"
#include "kempe/compose.hpp"
#include "kempe/families.hpp"
#include "kempe/kempe_classes.hpp"
#include "kempe/planarity.hpp"

namespace kempe {
namespace {

// Exit code 1: the requested check ran and found a violation.
struct verification_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Graph arguments are file paths or family://<kind>[?k=<k>] pseudo-URLs.
MultiGraph load_graph(const std::string& arg) {
  if (arg.rfind("family://", 0) == 0) {
    std::string rest = arg.substr(9);
    FamilySpec spec;
    bool has_k = false;
    if (auto q = rest.find('?'); q != std::string::npos) {
      std::string query = rest.substr(q + 1);
      rest = rest.substr(0, q);
      if (query.rfind("k=", 0) != 0)
        throw parse_error("family url: expected ?k=<int>, got '" + query + "'");
      try {
        spec.k = std::stoi(query.substr(2));
        has_k = true;
      } catch (const std::exception&) {
        throw parse_error("family url: bad k value");
      }
    }
    auto kind = family_kind_from_name(rest);
    if (!kind) throw parse_error("unknown family kind: " + rest);
    spec.kind = *kind;
    if (!has_k) {
      switch (spec.kind) {
        case FamilyKind::crossed_prism: spec.k = 2; break;
        case FamilyKind::moebius_ladder:
        case FamilyKind::prism: spec.k = 3; break;
        default: spec.k = 1; break;
      }
    }
    if (spec.kind == FamilyKind::y_power_of)
      throw parse_error("family url: y_power_of needs the family subcommand");
    try {
      return generate(spec);
    } catch (const std::invalid_argument& ex) {
      throw parse_error(ex.what());
    }
  }
  return parse_graph_auto(read_file(arg));
}

std::array<Color, 2> parse_pair_arg(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw parse_error("--pair expects <a>,<b>");
  int a, b;
  try {
    a = std::stoi(text.substr(0, comma));
    b = std::stoi(text.substr(comma + 1));
  } catch (const std::exception&) {
    throw parse_error("--pair expects integers");
  }
  if (a < 0 || b < 0 || a > 254 || b > 254 || a == b)
    throw parse_error("--pair needs two distinct non-negative colors");
  return {static_cast<Color>(std::min(a, b)), static_cast<Color>(std::max(a, b))};
}

ClassMethod parse_method(const std::string& name) {
  if (name == "fixed") return ClassMethod::fixed_vertex;
  if (name == "raw") return ClassMethod::raw;
  throw parse_error("--method must be fixed or raw");
}

nlohmann::json class_report_json(const MultiGraph& g, const ClassReport& report) {
  nlohmann::json j;
  j["graph"] = canonical_hex(g);
  j["n"] = report.palette;
  j["method"] = report.method == ClassMethod::raw ? "raw" : "fixed";
  j["coloring_count"] = report.coloring_count;
  j["k_prime"] = report.class_count;
  j["class_sizes"] = report.class_sizes;
  auto reps = nlohmann::json::array();
  for (const auto& rep : report.representatives) {
    auto one = nlohmann::json::array();
    for (Color c : rep) one.push_back(static_cast<int>(c));
    reps.push_back(one);
  }
  j["representatives"] = reps;
  return j;
}

void cmd_verify_parity(const MultiGraph& g, std::ostream& out) {
  auto cuts2 = find_edge_cuts(g, 2, false);
  auto cuts3 = find_edge_cuts(g, 3, false);
  auto colorings = enumerate_colorings(g, 3);
  long long checks = 0;
  for (const EdgeColoring& c : colorings) {
    for (const EdgeCut& cut : cuts2) {
      try {
        cut_color_check(c, cut);
      } catch (const std::logic_error& ex) {
        throw verification_failure(std::string("parity violated: ") + ex.what());
      }
      ++checks;
    }
    for (const EdgeCut& cut : cuts3) {
      try {
        cut_color_check(c, cut);
      } catch (const std::logic_error& ex) {
        throw verification_failure(std::string("parity violated: ") + ex.what());
      }
      ++checks;
    }
  }
  out << "parity: " << colorings.size() << " colorings x " << cuts2.size()
      << " 2-cuts + " << cuts3.size() << " 3-cuts, " << checks
      << " checks, all consistent\n";
}

void cmd_verify_fix(const MultiGraph& g, int trials, uint64_t seed, int max_steps,
                    std::ostream& out) {
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    int v = static_cast<int>(rng() % g.vertex_count());
    int steps = 1 + static_cast<int>(rng() % max_steps);
    SwitchSequence seq = random_sequence_fixed_at(g, v, steps, rng());
    EdgeColoring d = seq.replay();
    SwitchSequence norm = normalize_switch_sequence(seq, v);
    EdgeColoring cur = norm.start;
    for (const Switch& s : norm.steps) {
      KempeChain chain = kempe_chain(cur, s.color_pair, s.seed_edge);
      if (!chain_avoids_vertex(g, chain, v))
        throw verification_failure("normalized sequence touched the fixed vertex");
      cur = apply_switch(cur, chain);
    }
    if (cur.colors != d.colors)
      throw verification_failure("normalized sequence missed its endpoint");
  }
  out << "fix: " << trials << " randomized sequences normalized, all exact\n";
}

void cmd_verify_families(int max_k, std::ostream& out) {
  bool ok = true;
  auto line = [&](const std::string& name, long long got, long long expected) {
    bool match = got == expected;
    ok = ok && match;
    out << name << ": K'=" << got << " expected " << expected
        << (match ? "" : "  MISMATCH") << "\n";
  };
  for (int k = 3; k <= max_k; ++k) {
    MultiGraph ml = generate({FamilyKind::moebius_ladder, k});
    line("ML_" + std::to_string(k), count_classes(ml, 3).class_count,
         k % 2 == 1 ? 2 : 1);
  }
  for (int k = 3; k <= max_k; ++k) {
    MultiGraph pr = generate({FamilyKind::prism, k});
    line("Pr_" + std::to_string(k), count_classes(pr, 3).class_count, 1);
  }
  for (int k = 2; k <= std::min(4, max_k); ++k) {
    MultiGraph cpr = generate({FamilyKind::crossed_prism, k});
    line("CPr_" + std::to_string(k), count_classes(cpr, 3).class_count, 1);
  }
  if (!ok) throw verification_failure("family class counts do not match");
  out << "families: all class counts match\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"edge-Kempe equivalence classes of 3-edge-colored cubic graphs"};
  app.require_subcommand(1);
  int jobs = 1;
  app.add_option("--jobs", jobs, "worker cap for parallel stages")
      ->default_val(1);

  // count
  std::string count_graph, count_method = "fixed";
  int count_n = 3;
  auto* count = app.add_subcommand("count", "print K'(G, n)");
  count->add_option("graph", count_graph)->required();
  count->add_option("--n", count_n);
  count->add_option("--method", count_method)->check(CLI::IsMember({"fixed", "raw"}));
  count->callback([&] {
    MultiGraph g = load_graph(count_graph);
    out << count_classes(g, count_n, parse_method(count_method)).class_count << "\n";
  });

  // classes
  std::string classes_graph, classes_method = "fixed";
  int classes_n = 3;
  bool classes_dot = false;
  auto* classes = app.add_subcommand("classes", "class report as JSON (or DOT)");
  classes->add_option("graph", classes_graph)->required();
  classes->add_option("--n", classes_n);
  classes->add_option("--method", classes_method)
      ->check(CLI::IsMember({"fixed", "raw"}));
  classes->add_flag("--dot", classes_dot, "emit the switch graph in DOT form");
  classes->callback([&] {
    MultiGraph g = load_graph(classes_graph);
    if (classes_dot) {
      out << export_kempe_graph(g, classes_n);
    } else {
      ClassReport report = count_classes(g, classes_n, parse_method(classes_method));
      out << class_report_json(g, report).dump(2) << "\n";
    }
  });

  // chains
  std::string chains_graph, chains_coloring, chains_pair;
  int chains_n = 3;
  auto* chains = app.add_subcommand("chains", "list the chains of a color pair");
  chains->add_option("graph", chains_graph)->required();
  chains->add_option("coloring", chains_coloring)->required();
  chains->add_option("--pair", chains_pair)->required();
  chains->add_option("--n", chains_n);
  chains->callback([&] {
    MultiGraph g = load_graph(chains_graph);
    EdgeColoring c = parse_coloring_text(g, chains_n, read_file(chains_coloring));
    auto pair = parse_pair_arg(chains_pair);
    auto list = all_chains(c, pair);
    out << list.size() << " chains for pair {" << int(pair[0]) << ","
        << int(pair[1]) << "}\n";
    for (size_t i = 0; i < list.size(); ++i) {
      out << "chain " << i << ":";
      for (int e : list[i].edge_ids) out << " " << e;
      out << (list[i].cycle ? " (cycle)" : " (path)") << "\n";
    }
  });

  // switch
  std::string switch_graph, switch_coloring, switch_pair;
  int switch_seed = -1, switch_n = 3;
  bool switch_json = false;
  auto* switch_cmd = app.add_subcommand("switch", "apply one switch, print the result");
  switch_cmd->add_option("graph", switch_graph)->required();
  switch_cmd->add_option("coloring", switch_coloring)->required();
  switch_cmd->add_option("--pair", switch_pair)->required();
  switch_cmd->add_option("--seed", switch_seed, "seed edge of the chain")->required();
  switch_cmd->add_option("--n", switch_n);
  switch_cmd->add_flag("--json", switch_json);
  switch_cmd->callback([&] {
    MultiGraph g = load_graph(switch_graph);
    EdgeColoring c = parse_coloring_text(g, switch_n, read_file(switch_coloring));
    EdgeColoring d = apply_switch(c, Switch{parse_pair_arg(switch_pair), switch_seed});
    out << (switch_json ? coloring_json(d) : to_coloring_text(d)) << "\n";
  });

  // compose
  std::string compose_op, compose_g1, compose_g2, compose_plan;
  auto* compose = app.add_subcommand("compose", "glue two cubic graphs");
  compose->add_option("--op", compose_op)->required()->check(CLI::IsMember({"y", "h"}));
  compose->add_option("g1", compose_g1)->required();
  compose->add_option("g2", compose_g2)->required();
  compose->add_option("--plan", compose_plan, "plan text; defaults to lowest ids");
  compose->callback([&] {
    MultiGraph g1 = load_graph(compose_g1);
    MultiGraph g2 = load_graph(compose_g2);
    if (compose_op == "y") {
      YPlan plan = compose_plan.empty() ? default_y_plan(g1, g2)
                                        : parse_y_plan(g1, g2, compose_plan);
      out << to_graph_text(y_compose(plan).graph);
    } else {
      HPlan plan = compose_plan.empty() ? default_h_plan(g1, g2)
                                        : parse_h_plan(g1, g2, compose_plan);
      out << to_graph_text(h_compose(plan).graph);
    }
  });

  // decompose
  std::string decompose_graph;
  auto* decompose = app.add_subcommand("decompose",
                                       "split along 2-cuts into 3-connected pieces");
  decompose->add_option("graph", decompose_graph)->required();
  decompose->callback([&] {
    MultiGraph g = load_graph(decompose_graph);
    out << decomposition_tree_json(decompose_to_3connected(g)) << "\n";
  });

  // family
  std::string family_kind, family_base;
  int family_k = 0;
  bool family_g6 = false;
  auto* family = app.add_subcommand("family", "generate a named graph family member");
  family->add_option("kind", family_kind)->required();
  family->add_option("--k", family_k);
  family->add_option("--base", family_base, "base graph for y_power_of");
  family->add_flag("--graph6", family_g6);
  family->callback([&] {
    auto kind = family_kind_from_name(family_kind);
    if (!kind) throw parse_error("unknown family kind: " + family_kind);
    FamilySpec spec;
    spec.kind = *kind;
    spec.k = family_k;
    if (family_k == 0) {
      switch (*kind) {
        case FamilyKind::crossed_prism: spec.k = 2; break;
        case FamilyKind::moebius_ladder:
        case FamilyKind::prism: spec.k = 3; break;
        default: spec.k = 1; break;
      }
    }
    if (*kind == FamilyKind::y_power_of) {
      if (family_base.empty()) throw parse_error("y_power_of requires --base");
      spec.base = load_graph(family_base);
    }
    MultiGraph g = generate(spec);
    out << (family_g6 ? to_graph6(g) + "\n" : to_graph_text(g));
  });

  // census
  int census_max_n = 0;
  bool census_multi = false, census_bip = false, census_nonbip = false;
  bool census_planar = false, census_nonplanar = false;
  auto* census_cmd = app.add_subcommand("census", "connected cubic graphs up to max-n");
  census_cmd->add_option("--max-n", census_max_n)->required();
  census_cmd->add_flag("--multi", census_multi, "include multigraphs");
  census_cmd->add_flag("--bipartite", census_bip);
  census_cmd->add_flag("--nonbipartite", census_nonbip);
  census_cmd->add_flag("--planar", census_planar);
  census_cmd->add_flag("--nonplanar", census_nonplanar);
  census_cmd->callback([&] {
    CensusFilters filters;
    filters.simple = !census_multi;
    if (census_bip) filters.bipartite = true;
    if (census_nonbip) filters.bipartite = false;
    if (census_planar) filters.planar = true;
    if (census_nonplanar) filters.planar = false;
    bool first = true;
    for (const MultiGraph& g : census(census_max_n, filters)) {
      if (census_multi) {
        if (!first) out << "\n";
        out << to_graph_text(g);
      } else {
        out << to_graph6(g) << "\n";
      }
      first = false;
    }
  });

  // verify
  auto* verify = app.add_subcommand("verify", "run a property suite");
  verify->require_subcommand(1);

  std::string vm_g1, vm_g2, vm_op, vm_plan;
  auto* vmult = verify->add_subcommand("multiplicativity",
                                       "K' of a composite equals the product");
  vmult->add_option("g1", vm_g1)->required();
  vmult->add_option("g2", vm_g2)->required();
  vmult->add_option("--op", vm_op)->required()->check(CLI::IsMember({"y", "h"}));
  vmult->add_option("--plan", vm_plan);
  vmult->callback([&] {
    MultiGraph g1 = load_graph(vm_g1);
    MultiGraph g2 = load_graph(vm_g2);
    MultiplicativityReport report;
    if (vm_op == "y") {
      YPlan plan =
          vm_plan.empty() ? default_y_plan(g1, g2) : parse_y_plan(g1, g2, vm_plan);
      report = verify_multiplicativity(plan);
    } else {
      HPlan plan =
          vm_plan.empty() ? default_h_plan(g1, g2) : parse_h_plan(g1, g2, vm_plan);
      report = verify_multiplicativity(plan);
    }
    out << "multiplicativity: " << report.detail
        << (report.bijection_ok ? ", class bijection holds" : ", class bijection BROKEN")
        << "\n";
    if (!report.passed()) throw verification_failure(report.detail);
  });

  std::string vp_graph;
  auto* vparity = verify->add_subcommand("parity", "cut color parity over all colorings");
  vparity->add_option("graph", vp_graph)->required();
  vparity->callback([&] { cmd_verify_parity(load_graph(vp_graph), out); });

  std::string vf_graph;
  int vf_trials = 100, vf_max_steps = 8;
  uint64_t vf_seed = 1;
  auto* vfix = verify->add_subcommand("fix", "switch-sequence normalization");
  vfix->add_option("graph", vf_graph)->required();
  vfix->add_option("--trials", vf_trials);
  vfix->add_option("--seed", vf_seed);
  vfix->add_option("--max-steps", vf_max_steps);
  vfix->callback([&] {
    cmd_verify_fix(load_graph(vf_graph), vf_trials, vf_seed, vf_max_steps, out);
  });

  int vfam_max_k = 6;
  auto* vfam = verify->add_subcommand("families", "ladder/prism class counts");
  vfam->add_option("--max-k", vfam_max_k);
  vfam->callback([&] { cmd_verify_families(vfam_max_k, out); });

  // spectrum
  int spectrum_max_n = 0;
  bool spectrum_multi = false, spectrum_bip = false, spectrum_nonbip = false;
  bool spectrum_planar = false, spectrum_nonplanar = false;
  auto* spectrum = app.add_subcommand("spectrum", "observed K' values over the census");
  spectrum->add_option("--max-n", spectrum_max_n)->required();
  spectrum->add_flag("--multi", spectrum_multi);
  spectrum->add_flag("--bipartite", spectrum_bip);
  spectrum->add_flag("--nonbipartite", spectrum_nonbip);
  spectrum->add_flag("--planar", spectrum_planar);
  spectrum->add_flag("--nonplanar", spectrum_nonplanar);
  spectrum->callback([&] {
    CensusFilters filters;
    filters.simple = !spectrum_multi;
    if (spectrum_bip) filters.bipartite = true;
    if (spectrum_nonbip) filters.bipartite = false;
    if (spectrum_planar) filters.planar = true;
    if (spectrum_nonplanar) filters.planar = false;
    nlohmann::json j;
    j["max_n"] = spectrum_max_n;
    j["simple"] = filters.simple;
    auto arr = nlohmann::json::array();
    for (const SpectrumEntry& entry : kprime_spectrum(spectrum_max_n, filters, jobs)) {
      nlohmann::json e;
      e["k_prime"] = entry.k_prime;
      e["order"] = entry.order;
      if (entry.witness.is_simple()) e["graph6"] = to_graph6(entry.witness);
      else e["graph"] = to_graph_text(entry.witness);
      arr.push_back(e);
    }
    j["spectrum"] = arr;
    out << j.dump(2) << "\n";
  });

  // let --jobs (and any global flag) appear after the subcommand too
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* node) {
    for (CLI::App* sub : node->get_subcommands([](const CLI::App*) { return true; })) {
      sub->fallthrough();
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  std::vector<const char*> argv;
  argv.push_back("kempe");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& ex) {
    err << "usage error: " << ex.what() << "\n";
    return 2;
  } catch (const verification_failure& ex) {
    err << "verification failed: " << ex.what() << "\n";
    return 1;
  } catch (const parse_error& ex) {
    err << "input error: " << ex.what() << "\n";
    return 2;
  } catch (const guard_error& ex) {
    err << "guard exceeded: " << ex.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& ex) {
    err << "invalid input: " << ex.what() << "\n";
    return 2;
  } catch (const std::logic_error& ex) {
    err << "internal consistency failure: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace kempe
