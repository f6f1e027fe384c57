// Command-line front end: exact evaluation of homomorphism partition
// functions and catalog parameters, connection-matrix slices (rank / PSD
// certificates / rank profiles), flow counting and flow targets, labeled
// graph enumeration, the quotient-algebra claims suite, and target
// reconstruction from an evaluation oracle.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphhom/claims.hpp"
#include "graphhom/connmat.hpp"
#include "graphhom/enumerate.hpp"
#include "graphhom/graph_io.hpp"
#include "graphhom/reconstruct.hpp"

namespace gh = graphhom;

namespace {

std::ostream& out_stream(std::ofstream& file, const std::string& path) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

// Row names like K2, O3, P4, C5: the first min(n,k) nodes carry labels 1..k.
gh::LabeledGraph named_row(const std::string& name, std::uint32_t k) {
  if (name.size() < 2)
    throw std::invalid_argument("bad row name: " + name);
  const char kind = name[0];
  const std::uint32_t n = std::stoul(name.substr(1));
  gh::MultiGraph g(0, std::vector<gh::Edge>{});
  switch (kind) {
    case 'K': g = gh::complete_graph(n); break;
    case 'O': g = gh::MultiGraph(n, std::vector<gh::Edge>{}); break;
    case 'P': g = gh::path_graph(n); break;
    case 'C': g = gh::cycle_graph(n); break;
    default:
      throw std::invalid_argument("bad row name: " + name);
  }
  if (n < k)
    throw std::invalid_argument("row " + name + " has fewer nodes than labels");
  std::map<gh::Label, std::uint32_t> labels;
  for (std::uint32_t i = 0; i < k; ++i) labels[i + 1] = i;
  return gh::LabeledGraph(std::move(g), std::move(labels));
}

std::vector<gh::LabeledGraph> rows_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open rows file: " + path);
  std::vector<gh::LabeledGraph> rows;
  while (true) {
    in >> std::ws;
    if (!in || in.peek() == EOF) break;
    rows.push_back(gh::read_graph(in));
  }
  return rows;
}

void print_slice_tsv(std::ostream& out, const gh::ConnectionSlice& slice) {
  for (std::size_t j = 0; j < slice.row_codes.size(); ++j) {
    out << (j ? "\t" : "") << slice.row_codes[j].hex();
  }
  out << '\n';
  for (std::size_t i = 0; i < slice.entries.rows(); ++i) {
    for (std::size_t j = 0; j < slice.entries.cols(); ++j) {
      out << (j ? "\t" : "") << gh::rational_to_string(slice.entries.at(i, j));
    }
    out << '\n';
  }
}

void print_slice_json(std::ostream& out, const gh::ConnectionSlice& slice) {
  nlohmann::json j;
  j["k"] = slice.k;
  std::vector<std::string> codes;
  for (const auto& c : slice.row_codes) codes.push_back(c.hex());
  j["rows"] = std::move(codes);
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < slice.entries.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < slice.entries.cols(); ++c)
      row.push_back(gh::rational_to_string(slice.entries.at(i, c)));
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  out << j.dump(2) << '\n';
}

struct ConnmatArgs {
  std::string param;
  std::uint32_t k = 1;
  std::uint32_t max_nodes = 0;  // 0 = default k+3
  std::uint32_t max_edges = 0;  // 0 = default k+4
  bool multi = false;
  bool multi_set = false;
  std::string rows;
  std::string rows_from;
  std::string out;
  std::string format = "tsv";
  int threads = 1;
};

gh::ConnectionSlice build_requested_slice(const ConnmatArgs& args) {
  gh::GraphParameter f = gh::parameter_by_name(args.param);
  const bool multi = args.multi_set ? args.multi : f.multiplicity_sensitive;
  if (!args.rows.empty()) {
    std::vector<gh::LabeledGraph> rows;
    std::stringstream ss(args.rows);
    std::string name;
    while (std::getline(ss, name, ','))
      rows.push_back(named_row(name, args.k));
    return gh::build_slice_rows(f, args.k, rows, args.threads);
  }
  if (!args.rows_from.empty()) {
    return gh::build_slice_rows(f, args.k, rows_from_file(args.rows_from),
                                args.threads);
  }
  gh::SliceBudget budget;
  budget.max_nodes = args.max_nodes ? args.max_nodes : args.k + 3;
  budget.max_edges = args.max_edges ? args.max_edges : args.k + 4;
  budget.multi = multi;
  budget.threads = args.threads;
  return gh::build_slice(f, args.k, budget);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact graph-homomorphism partition functions, connection "
               "matrices, and target reconstruction"};
  app.require_subcommand(1);

  // hom <graph> <target>
  std::string hom_graph, hom_target;
  bool hom_brute = false;
  auto* cmd_hom = app.add_subcommand("hom", "evaluate hom(G,H) exactly");
  cmd_hom->add_option("graph", hom_graph, "graph file")->required();
  cmd_hom->add_option("target", hom_target, "weighted target JSON")->required();
  cmd_hom->add_flag("--brute", hom_brute, "force the direct sum");

  // param eval <name> <graph>
  std::string param_action, param_name, param_graph;
  auto* cmd_param = app.add_subcommand("param", "evaluate a catalog parameter");
  cmd_param->add_option("action", param_action, "eval")->required();
  cmd_param->add_option("name", param_name, "parameter name")->required();
  cmd_param->add_option("graph", param_graph, "graph file")->required();

  // enumerate
  std::uint32_t en_labels = 0;
  std::string en_label_set;
  std::uint32_t en_max_nodes = 4, en_max_edges = 5;
  bool en_multi = false;
  bool en_graphs = false;
  auto* cmd_enum = app.add_subcommand(
      "enumerate", "canonical k-labeled graphs within a budget");
  cmd_enum->add_option("--labels", en_labels, "number of labels (1..k)");
  cmd_enum->add_option("--label-set", en_label_set,
                       "explicit label set, e.g. 1,3,4");
  cmd_enum->add_option("--max-nodes", en_max_nodes, "node budget");
  cmd_enum->add_option("--max-edges", en_max_edges, "edge budget");
  cmd_enum->add_flag("--multi", en_multi, "allow parallel edges");
  cmd_enum->add_flag("--graphs", en_graphs, "print graph blocks, not codes");

  // connmat build|rank|psd|profile
  ConnmatArgs cm;
  std::string cm_action;
  std::uint32_t cm_kmax = 3;
  auto* cmd_cm = app.add_subcommand("connmat", "connection-matrix tooling");
  cmd_cm->add_option("action", cm_action, "build | rank | psd | profile")
      ->required();
  cmd_cm->add_option("--param", cm.param, "parameter name")->required();
  cmd_cm->add_option("--k", cm.k, "number of labels");
  cmd_cm->add_option("--k-max", cm_kmax, "profile depth");
  cmd_cm->add_option("--max-nodes", cm.max_nodes, "row node budget");
  cmd_cm->add_option("--max-edges", cm.max_edges, "row edge budget");
  cmd_cm->add_flag("--multi,!--no-multi", cm.multi, "parallel-edge rows")
      ->each([&](const std::string&) { cm.multi_set = true; });
  cmd_cm->add_option("--rows", cm.rows, "named rows, e.g. K1,K2");
  cmd_cm->add_option("--rows-from", cm.rows_from, "graph blocks file");
  cmd_cm->add_option("--out", cm.out, "output path (default stdout)");
  cmd_cm->add_option("--format", cm.format, "tsv | json")
      ->check(CLI::IsMember({"tsv", "json"}));
  cmd_cm->add_option("--threads", cm.threads, "entry evaluation workers");

  // algebra dump
  std::string al_param, al_labels = "1", al_out;
  std::uint32_t al_nodes = 2, al_edges = 4;
  std::uint64_t al_seed = 0;
  auto* cmd_al = app.add_subcommand(
      "algebra", "dump a label-level quotient algebra as JSON");
  cmd_al->add_option("--param", al_param, "parameter name")->required();
  cmd_al->add_option("--label-set", al_labels, "labels, e.g. 1,2");
  cmd_al->add_option("--budget-nodes", al_nodes, "extra generator nodes");
  cmd_al->add_option("--budget-edges", al_edges, "extra generator edges");
  cmd_al->add_option("--seed", al_seed, "random seed");
  cmd_al->add_option("--out", al_out, "output path (default stdout)");

  // flows count|target
  std::string fl_action, fl_spec, fl_graph, fl_out;
  auto* cmd_fl = app.add_subcommand("flows", "group-valued flow tooling");
  cmd_fl->add_option("action", fl_action, "count | target")->required();
  cmd_fl->add_option("spec", fl_spec, "flow spec file")->required();
  cmd_fl->add_option("graph", fl_graph, "graph file (count)");
  cmd_fl->add_option("--out", fl_out, "target output path");

  // reconstruct
  std::string rc_param, rc_out, rc_report;
  std::uint32_t rc_nodes = 3, rc_edges = 4, rc_levels = 2;
  std::uint64_t rc_seed = 0;
  double rc_tol = 1e-6;
  auto* cmd_rc = app.add_subcommand(
      "reconstruct", "build a weighted target from an evaluation oracle");
  cmd_rc->add_option("--param", rc_param, "parameter name")->required();
  cmd_rc->add_option("--budget-nodes", rc_nodes,
                     "extra generator nodes per algebra");
  cmd_rc->add_option("--budget-edges", rc_edges, "extra generator edges");
  cmd_rc->add_option("--levels", rc_levels, "deepest label level tried");
  cmd_rc->add_option("--seed", rc_seed, "random seed");
  cmd_rc->add_option("--tol", rc_tol, "verification tolerance");
  cmd_rc->add_option("--out", rc_out, "target JSON output path");
  cmd_rc->add_option("--report", rc_report, "full report JSON path");

  // claims
  std::string cl_param;
  std::uint64_t cl_seed = 0;
  auto* cmd_cl = app.add_subcommand(
      "claims", "run the quotient-algebra property suite");
  cmd_cl->add_option("--param", cl_param, "parameter name")->required();
  cmd_cl->add_option("--seed", cl_seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // parse errors land on 2, --help on 0
  }

  try {
    if (cmd_hom->parsed()) {
      const auto g = gh::read_graph_file(hom_graph);
      const auto h = gh::read_target_file(hom_target);
      const gh::Rational value = hom_brute ? gh::hom(g.graph(), h)
                                           : gh::hom_fast(g.graph(), h);
      std::cout << gh::rational_to_string(value) << '\n';
      return 0;
    }

    if (cmd_param->parsed()) {
      if (param_action != "eval")
        throw std::invalid_argument("param action must be 'eval'");
      const auto f = gh::parameter_by_name(param_name);
      const auto g = gh::read_graph_file(param_graph);
      std::cout << gh::rational_to_string(f(g)) << '\n';
      return 0;
    }

    if (cmd_enum->parsed()) {
      gh::LabelSet labels;
      if (!en_label_set.empty()) {
        std::stringstream ss(en_label_set);
        std::string tok;
        while (std::getline(ss, tok, ','))
          labels.insert(std::stoul(tok));
      } else {
        for (std::uint32_t i = 1; i <= en_labels; ++i) labels.insert(i);
      }
      const auto graphs =
          gh::enumerate_labeled(labels, en_max_nodes, en_max_edges, en_multi);
      for (const auto& g : graphs) {
        if (en_graphs)
          std::cout << gh::graph_to_string(g) << '\n';
        else
          std::cout << gh::canonical(g).hex() << '\n';
      }
      return 0;
    }

    if (cmd_cm->parsed()) {
      std::ofstream file;
      std::ostream& out = out_stream(file, cm.out);
      if (cm_action == "profile") {
        const auto f = gh::parameter_by_name(cm.param);
        const auto profile = gh::rank_profile(f, cm_kmax, 3, cm.threads);
        out << "k\trank\trows\tmax_nodes\tmax_edges\tsaturated\n";
        for (const auto& e : profile) {
          out << e.k << '\t' << e.rank << '\t' << e.rows_used << '\t'
              << e.max_nodes << '\t' << e.max_edges << '\t'
              << (e.saturated ? "yes" : "no") << '\n';
        }
        return 0;
      }
      const auto slice = build_requested_slice(cm);
      if (cm_action == "build") {
        if (cm.format == "json")
          print_slice_json(out, slice);
        else
          print_slice_tsv(out, slice);
      } else if (cm_action == "rank") {
        out << gh::exact_rank(slice.entries) << '\n';
      } else if (cm_action == "psd") {
        const auto verdict = gh::psd_check(slice.entries);
        if (verdict.psd) {
          out << "psd\n";
        } else {
          out << "not_psd\nwitness";
          for (const auto& x : verdict.witness)
            out << ' ' << gh::rational_to_string(x);
          out << "\nvalue " << gh::rational_to_string(verdict.witness_value)
              << '\n';
        }
      } else {
        throw std::invalid_argument("unknown connmat action: " + cm_action);
      }
      return 0;
    }

    if (cmd_fl->parsed()) {
      const auto spec = gh::read_flow_spec_file(fl_spec);
      if (fl_action == "count") {
        if (fl_graph.empty())
          throw std::invalid_argument("flows count needs a graph file");
        const auto g = gh::read_graph_file(fl_graph);
        std::cout << gh::rational_to_string(gh::count_flows(g.graph(), spec))
                  << '\n';
      } else if (fl_action == "target") {
        const auto h = gh::flow_target(spec);
        if (fl_out.empty())
          std::cout << gh::target_to_json(h) << '\n';
        else
          gh::write_target_file(fl_out, h);
      } else {
        throw std::invalid_argument("unknown flows action: " + fl_action);
      }
      return 0;
    }

    if (cmd_rc->parsed()) {
      const auto f = gh::parameter_by_name(rc_param);
      gh::ReconstructOptions options;
      options.algebra.extra_nodes = rc_nodes;
      options.algebra.extra_edges = rc_edges;
      options.algebra.multi = f.multiplicity_sensitive;
      options.max_levels = rc_levels;
      options.seed = rc_seed;
      options.tol = rc_tol;
      const auto report = gh::reconstruct(f, options);
      if (!rc_report.empty()) {
        std::ofstream rep(rc_report);
        rep << report.to_json() << '\n';
      }
      std::cout << report.to_json() << '\n';
      if (report.success()) {
        if (!rc_out.empty()) gh::write_target_file(rc_out, *report.target);
        return 0;
      }
      if (report.status == gh::ReconstructStatus::not_psd) return 3;
      return 4;
    }

    if (cmd_al->parsed()) {
      const auto f = gh::parameter_by_name(al_param);
      const auto fn = gh::normalize(f).first;
      gh::LabelSet labels;
      {
        std::stringstream ss(al_labels);
        std::string tok;
        while (std::getline(ss, tok, ',')) labels.insert(std::stoul(tok));
      }
      gh::AlgebraBudget budget;
      budget.extra_nodes = al_nodes;
      budget.extra_edges = al_edges;
      budget.multi = f.multiplicity_sensitive;
      const auto a = gh::build_algebra(fn, labels, budget);
      const auto idem = gh::idempotent_basis(a, al_seed);
      std::ofstream file;
      std::ostream& out = out_stream(file, al_out);
      out << gh::algebra_dump(a, &idem) << '\n';
      return 0;
    }

    if (cmd_cl->parsed()) {
      const auto f = gh::parameter_by_name(cl_param);
      auto [fn, scale] = gh::normalize(f);
      gh::AlgebraBudget budget;
      budget.extra_nodes = 2;
      budget.multi = f.multiplicity_sensitive;
      const auto results = gh::run_section4_claims(fn, budget, cl_seed);
      bool ok = true;
      for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << ' ' << r.name
                  << " residual=" << r.residual << '\n';
        ok = ok && r.pass;
      }
      return ok ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
