#include "vpotts/cli.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "vpotts/crosscheck.hpp"
#include "vpotts/document.hpp"
#include "vpotts/error.hpp"
#include "vpotts/potts.hpp"
#include "vpotts/tutte.hpp"
#include "vpotts/vpoly.hpp"

namespace vpotts {

namespace {

std::string format_complex(Complex z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g %.15g", z.real(), z.imag());
  return buf;
}

GraphDocument load(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return parse_graph(in);
  std::ifstream file(path);
  if (!file) throw InputError("cannot open '" + path + "'");
  return parse_graph(file);
}

const PottsParams& require_params(const GraphDocument& doc) {
  if (!doc.params) throw InputError("this command needs q, beta and a coupling J on every edge");
  return *doc.params;
}

Complex shared_coupling(const GraphDocument& doc) {
  return constant_coupling(doc.graph, require_params(doc)).value_or(0.0);
}

template <class F>
auto pick(const std::map<std::string, F>& table, const std::string& method) {
  return table.at(method);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"V-polynomial and Potts partition function engine", "vpotts"};
  app.require_subcommand(1);
  std::string input;
  std::string method;

  auto* vpoly = app.add_subcommand("vpoly", "V-polynomial in canonical text form");
  vpoly->add_option("--method", method, "expansion")
      ->check(CLI::IsMember({"delcon", "statesum", "tree", "forest", "partition"}))
      ->default_str("delcon");
  vpoly->add_option("input", input, "graph document (default: standard input)");

  auto* zt = app.add_subcommand("zt", "multivariate Tutte polynomial Z_T");
  zt->add_option("--method", method, "expansion")
      ->check(CLI::IsMember({"subset", "traldi"}))
      ->default_str("subset");
  zt->add_option("input", input, "graph document");

  auto* tutte = app.add_subcommand("tutte", "Tutte polynomial in x and y");
  tutte->add_option("input", input, "graph document");

  auto* zext = app.add_subcommand("zext", "Potts partition function with external field");
  zext->add_option("--method", method, "expansion")
      ->check(CLI::IsMember({"v", "tree", "forest", "partition", "brute"}))
      ->default_str("v");
  zext->add_option("input", input, "graph document");

  auto* zzero = app.add_subcommand("zzero", "zero-field Potts partition function");
  zzero->add_option("--method", method, "route")
      ->check(CLI::IsMember({"zt", "brute", "tutte", "tree"}))
      ->default_str("zt");
  zzero->add_option("input", input, "graph document");

  bool literal_beta = false;
  auto* rfim = app.add_subcommand("rfim", "random-field Ising partition function (constant J, site fields z)");
  rfim->add_option("--method", method, "expansion")
      ->check(CLI::IsMember({"brute", "forest", "tree"}))
      ->default_str("brute");
  rfim->add_flag("--literal-beta", literal_beta, "drop beta from the field exponents");
  rfim->add_option("input", input, "graph document");

  CrosscheckOptions cc;
  auto* crosscheck = app.add_subcommand("crosscheck", "compare every expansion on random instances");
  crosscheck->add_option("--trials", cc.trials, "number of instances")->capture_default_str();
  crosscheck->add_option("--seed", cc.seed, "generator seed")->capture_default_str();
  crosscheck->add_option("--max-vertices", cc.max_vertices, "vertex bound")->capture_default_str();
  crosscheck->add_option("--max-edges", cc.max_edges, "edge bound")->capture_default_str();

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "vpotts: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (vpoly->parsed()) {
      const auto doc = load(input, in);
      const std::map<std::string, std::function<Polynomial(const WeightedGraph&)>> table{
          {"delcon", v_deletion_contraction},        {"statesum", v_state_sum},
          {"tree", v_spanning_tree},                 {"forest", v_spanning_forest},
          {"partition", v_connected_partition}};
      out << pick(table, method.empty() ? "delcon" : method)(doc.graph).str() << "\n";
    } else if (zt->parsed()) {
      const auto doc = load(input, in);
      const Polynomial p = (method == "traldi") ? zt_traldi(doc.graph) : zt_subset_sum(doc.graph);
      out << p.str() << "\n";
    } else if (tutte->parsed()) {
      out << tutte_polynomial(load(input, in).graph).str() << "\n";
    } else if (zext->parsed()) {
      const auto doc = load(input, in);
      const PottsParams& p = require_params(doc);
      const std::map<std::string, std::function<Complex(const WeightedGraph&, const PottsParams&)>>
          table{{"v", z_ext_via_v},
                {"tree", z_ext_tree_expansion},
                {"forest", z_ext_forest_expansion},
                {"partition", z_ext_partition_expansion},
                {"brute", [](const WeightedGraph& g, const PottsParams& pp) {
                   return z_brute_force(g, pp);
                 }}};
      out << format_complex(pick(table, method.empty() ? "v" : method)(doc.graph, p)) << "\n";
    } else if (zzero->parsed()) {
      const auto doc = load(input, in);
      PottsParams p = require_params(doc);
      Complex z;
      if (method == "brute") {
        for (auto& [id, m] : p.field) std::fill(m.begin(), m.end(), Complex(0.0, 0.0));
        z = z_brute_force(doc.graph, p);
      } else if (method == "tutte") {
        z = check_potts_tutte_identity(doc.graph, p).tutte_side;
      } else if (method == "tree") {
        z = z_zero_tree_expansion(doc.graph, p);
      } else {
        z = z_zero(doc.graph, p);
      }
      out << format_complex(z) << "\n";
    } else if (rfim->parsed()) {
      const auto doc = load(input, in);
      const PottsParams& p = require_params(doc);
      if (p.q != 2) throw InputError("rfim needs q = 2");
      const RfimResult r =
          rfim_partition(doc.graph, p.beta, shared_coupling(doc), doc.site_field,
                         literal_beta ? BetaPlacement::Literal : BetaPlacement::InExponent);
      const Complex z = method == "forest" ? r.forest : method == "tree" ? r.tree : r.brute_force;
      out << format_complex(z) << "\n";
    } else if (crosscheck->parsed()) {
      const CrosscheckReport report = run_crosscheck(cc);
      for (const auto& f : report.failures)
        err << "disagreement: seed " << cc.seed << " trial " << f.trial << " " << f.check << ": "
            << f.detail << "\n  graph: " << f.graph_json << "\n";
      out << report.trials << " instances, " << report.failures.size()
          << " disagreements, max relative error " << report.max_relative_error << "\n";
      return report.ok() ? kExitOk : kExitDisagreement;
    }
  } catch (const CapacityError& e) {
    err << "vpotts: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const ParseError& e) {
    err << "vpotts: parse error at " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "vpotts: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace vpotts
