#include "vpotts/document.hpp"

#include <istream>
#include <iterator>
#include <set>

#include <json.hpp>

#include "vpotts/error.hpp"

namespace vpotts {

namespace {

using nlohmann::json;

const json& require(const json& node, const char* key, const std::string& path) {
  auto it = node.find(key);
  if (it == node.end()) throw ParseError(path + "/" + key, "missing required field");
  return *it;
}

std::string require_string(const json& node, const char* key, const std::string& path) {
  const json& v = require(node, key, path);
  if (!v.is_string()) throw ParseError(path + "/" + key, "expected a string");
  return v.get<std::string>();
}

double as_real(const json& v, const std::string& path) {
  if (!v.is_number()) throw ParseError(path, "expected a number");
  return v.get<double>();
}

Complex as_complex(const json& v, const std::string& path) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (!v.is_array() || v.size() != 2) throw ParseError(path, "expected a number or [re, im]");
  return {as_real(v[0], path + "/0"), as_real(v[1], path + "/1")};
}

struct ParsedWeight {
  WeightElement weight;
  std::vector<Complex> field;  // empty for formal weights
};

ParsedWeight parse_weight(const json& w, const std::string& path) {
  if (!w.is_object()) throw ParseError(path, "expected a weight object");
  const std::string kind = require_string(w, "kind", path);
  if (kind == "formal") {
    if (auto it = w.find("labels"); it != w.end()) {
      if (!it->is_array() || it->empty()) throw ParseError(path + "/labels", "expected labels");
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < it->size(); ++i) {
        if (!(*it)[i].is_string())
          throw ParseError(path + "/labels/" + std::to_string(i), "expected a string");
        labels.push_back((*it)[i].get<std::string>());
      }
      return {WeightElement::formal(std::move(labels)), {}};
    }
    return {WeightElement::formal(require_string(w, "label", path)), {}};
  }
  if (kind == "field") {
    const json& values = require(w, "values", path);
    if (!values.is_array() || values.empty())
      throw ParseError(path + "/values", "expected a nonempty array of [re, im]");
    std::vector<Complex> field;
    for (std::size_t i = 0; i < values.size(); ++i)
      field.push_back(as_complex(values[i], path + "/values/" + std::to_string(i)));
    return {WeightElement::field(field), field};
  }
  throw ParseError(path + "/kind", "unknown weight kind '" + kind + "'");
}

GraphDocument build(const json& root) {
  if (!root.is_object()) throw ParseError("", "document must be an object");
  const json& version = require(root, "format_version", "");
  if (!version.is_number_integer() || version.get<int>() != kGraphFormatVersion)
    throw ParseError("/format_version",
                     "unsupported format version (expected " + std::to_string(kGraphFormatVersion) + ")");

  GraphDocument doc;
  std::optional<unsigned> q;
  if (auto it = root.find("q"); it != root.end()) {
    if (!it->is_number_integer() || it->get<long long>() < 1)
      throw ParseError("/q", "q must be a positive integer");
    q = it->get<unsigned>();
  }
  std::optional<double> beta;
  if (auto it = root.find("beta"); it != root.end()) beta = as_real(*it, "/beta");
  if (q.has_value() != beta.has_value())
    throw ParseError(q ? "/beta" : "/q", "q and beta must be given together");

  const json& vertices = require(root, "vertices", "");
  if (!vertices.is_array()) throw ParseError("/vertices", "expected an array");
  std::optional<bool> field_kind;
  std::optional<std::size_t> field_length;
  std::map<std::string, std::vector<Complex>> fields;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string path = "/vertices/" + std::to_string(i);
    const json& vx = vertices[i];
    if (!vx.is_object()) throw ParseError(path, "expected a vertex object");
    const std::string id = require_string(vx, "id", path);
    ParsedWeight w{WeightElement::formal(id), {}};
    if (auto it = vx.find("weight"); it != vx.end()) w = parse_weight(*it, path + "/weight");
    const bool is_field = w.weight.is_field();
    if (field_kind && *field_kind != is_field)
      throw ParseError(path + "/weight", "mixed weight kinds: all vertices must be formal or all field");
    field_kind = is_field;
    if (is_field) {
      if (field_length && *field_length != w.field.size())
        throw ParseError(path + "/weight/values", "field vectors must all have the same length");
      if (q && *q != w.field.size())
        throw ParseError(path + "/weight/values", "field vector length differs from q");
      field_length = w.field.size();
      fields[id] = w.field;
    }
    if (auto it = vx.find("z"); it != vx.end()) doc.site_field[id] = as_complex(*it, path + "/z");
    try {
      doc.graph.add_vertex(id, std::move(w.weight));
    } catch (const InputError& e) {
      throw ParseError(path + "/id", e.what());
    }
  }
  for (const auto& v : doc.graph.vertices()) doc.site_field.try_emplace(v.id, Complex(0.0, 0.0));

  std::map<std::string, Complex> coupling;
  if (auto eit = root.find("edges"); eit != root.end()) {
    if (!eit->is_array()) throw ParseError("/edges", "expected an array");
    for (std::size_t i = 0; i < eit->size(); ++i) {
      const std::string path = "/edges/" + std::to_string(i);
      const json& ed = (*eit)[i];
      if (!ed.is_object()) throw ParseError(path, "expected an edge object");
      const std::string id = require_string(ed, "id", path);
      const std::string u = require_string(ed, "u", path);
      const std::string v = require_string(ed, "v", path);
      for (const auto& [end, key] : {std::pair{u, "u"}, std::pair{v, "v"}})
        if (!doc.graph.find_vertex(end))
          throw ParseError(path + "/" + key,
                           "edge '" + id + "' references unknown vertex '" + end + "'");
      Gamma gamma = SymbolicGamma{};
      if (auto git = ed.find("gamma"); git != ed.end()) {
        if (git->is_string()) {
          if (git->get<std::string>() != "symbolic")
            throw ParseError(path + "/gamma", "expected \"symbolic\" or [re, im]");
        } else {
          const Complex c = as_complex(*git, path + "/gamma");
          if (c.imag() != 0.0)
            throw ParseError(path + "/gamma", "gamma constants must be real");
          gamma = rational_from_double(c.real());
        }
      }
      if (auto jit = ed.find("J"); jit != ed.end()) coupling[id] = as_complex(*jit, path + "/J");
      try {
        doc.graph.add_edge(id, u, v, std::move(gamma));
      } catch (const InputError& e) {
        throw ParseError(path + "/id", e.what());
      }
    }
  }

  if (auto oit = root.find("edge_order"); oit != root.end()) {
    if (!oit->is_array()) throw ParseError("/edge_order", "expected an array of edge ids");
    if (oit->size() != doc.graph.edge_count())
      throw ParseError("/edge_order", "must list every edge exactly once");
    std::vector<std::string> order;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < oit->size(); ++i) {
      const std::string path = "/edge_order/" + std::to_string(i);
      if (!(*oit)[i].is_string()) throw ParseError(path, "expected an edge id");
      order.push_back((*oit)[i].get<std::string>());
      if (!doc.graph.find_edge(order.back()))
        throw ParseError(path, "unknown edge '" + order.back() + "'");
      if (!seen.insert(order.back()).second)
        throw ParseError(path, "edge '" + order.back() + "' listed twice");
    }
    doc.graph = with_edge_order(doc.graph, order);
  }

  if (q) {
    PottsParams params;
    params.q = *q;
    params.beta = *beta;
    for (std::size_t i = 0; i < doc.graph.edge_count(); ++i) {
      const auto& e = doc.graph.edge(i);
      auto it = coupling.find(e.id);
      if (it == coupling.end())
        throw ParseError("/edges/" + std::to_string(i) + "/J",
                         "edge '" + e.id + "' needs a coupling J when q and beta are given");
      params.coupling[e.id] = it->second;
    }
    for (const auto& v : doc.graph.vertices()) {
      auto it = fields.find(v.id);
      params.field[v.id] = it != fields.end() ? it->second : std::vector<Complex>(*q, 0.0);
    }
    doc.params = std::move(params);
  }
  return doc;
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

}  // namespace

GraphDocument parse_graph(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("", std::string("invalid JSON: ") + e.what());
  }
  return build(root);
}

GraphDocument parse_graph(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_graph(std::string_view(text));
}

std::string to_json(const WeightedGraph& g, const std::optional<PottsParams>& params) {
  json root;
  root["format_version"] = kGraphFormatVersion;
  json vertices = json::array();
  for (const auto& v : g.vertices()) {
    json w;
    if (v.weight.is_formal()) {
      w["kind"] = "formal";
      const auto& gens = v.weight.as_formal().generators;
      if (gens.size() == 1)
        w["label"] = gens.front();
      else
        w["labels"] = gens;
    } else {
      w["kind"] = "field";
      w["values"] = json::array();
      for (const auto& c : v.weight.as_field().values) w["values"].push_back(complex_json(c.to_complex()));
    }
    vertices.push_back({{"id", v.id}, {"weight", w}});
  }
  root["vertices"] = vertices;
  json edges = json::array();
  for (const auto& e : g.edges()) {
    json ed = {{"id", e.id}, {"u", g.vertex(e.u).id}, {"v", g.vertex(e.v).id}};
    if (const auto* c = std::get_if<Rational>(&e.gamma))
      ed["gamma"] = complex_json({c->get_d(), 0.0});
    else
      ed["gamma"] = "symbolic";
    if (params) ed["J"] = complex_json(params->coupling.at(e.id));
    edges.push_back(ed);
  }
  root["edges"] = edges;
  json order = json::array();
  for (auto p : g.edges_by_order()) order.push_back(g.edge(p).id);
  root["edge_order"] = order;
  if (params) {
    root["q"] = params->q;
    root["beta"] = params->beta;
  }
  return root.dump();
}

}  // namespace vpotts
