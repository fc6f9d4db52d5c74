#include "mcclab/io.hpp"

#include "mcclab/errors.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace mcclab {

namespace {

using Json = nlohmann::ordered_json;

Json parse_object(const std::string& text, const char* list_key) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw IoError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer() || !doc.contains(list_key) ||
      !doc[list_key].is_array())
    throw IoError(std::string("expected an object with integer \"n\" and array \"") + list_key + "\"");
  return doc;
}

std::vector<std::vector<int>> int_lists(const Json& array) {
  std::vector<std::vector<int>> out;
  for (const auto& item : array) {
    if (!item.is_array()) throw IoError("expected an array of integer arrays");
    std::vector<int> row;
    for (const auto& v : item) {
      if (!v.is_number_integer()) throw IoError("expected integer vertex labels");
      row.push_back(v.get<int>());
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.10g", value);
  return buffer;
}

} // namespace

std::string complex_to_json(const SimplicialComplex& complex) {
  Json doc;
  doc["n"] = complex.vertex_count();
  doc["facets"] = Json::array();
  for (const auto& f : complex.facets()) doc["facets"].push_back(f);
  return doc.dump();
}

SimplicialComplex complex_from_json(const std::string& text) {
  const auto doc = parse_object(text, "facets");
  return SimplicialComplex(doc["n"].get<int>(), int_lists(doc["facets"]));
}

PureComplex as_pure(const SimplicialComplex& complex) {
  if (complex.facets().empty()) throw DomainError("a complex without facets has no dimension");
  return PureComplex(complex, complex.dimension());
}

std::string graph_to_json(const Graph& graph) {
  Json doc;
  doc["n"] = graph.vertex_count();
  doc["edges"] = Json::array();
  for (const auto& [a, b] : graph.edges()) doc["edges"].push_back({a, b});
  return doc.dump();
}

Graph graph_from_json(const std::string& text) {
  const auto doc = parse_object(text, "edges");
  std::vector<Edge> edges;
  for (const auto& pair : int_lists(doc["edges"])) {
    if (pair.size() != 2) throw IoError("every edge needs exactly two endpoints");
    edges.emplace_back(pair[0], pair[1]);
  }
  return Graph(doc["n"].get<int>(), std::move(edges));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return buffer.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  auto temp = path;
  temp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + temp.string());
    out << content;
    out.flush();
    if (!out) throw IoError("cannot write " + temp.string());
  }
  std::error_code ec;
  std::filesystem::rename(temp, path, ec);
  if (ec) {
    std::filesystem::remove(temp, ec);
    throw IoError("cannot replace " + path.string());
  }
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "alpha,p,trials,frac_isolated_simplex,frac_giant_dust,frac_isolated_vertex,frac_connected\n";
  for (const auto& row : rows) {
    out += format_double(row.alpha) + ',' + format_double(row.p) + ',' + std::to_string(row.trials) + ',' +
           format_double(row.fraction(row.isolated_simplex)) + ',' + format_double(row.fraction(row.giant_dust)) +
           ',' + format_double(row.fraction(row.isolated_vertex)) + ',' + format_double(row.fraction(row.connected)) +
           '\n';
  }
  return out;
}

std::string q_scan_csv(const std::vector<QEvaluation>& scan) {
  std::string out = "x,Q,q_numerator,q_denominator,q_float\n";
  for (const auto& e : scan)
    out += std::to_string(e.x) + ',' + e.Q_value.get_str() + ',' + e.q_value.get_num().get_str() + ',' +
           e.q_value.get_den().get_str() + ',' + format_double(e.q_value.get_d()) + '\n';
  return out;
}

} // namespace mcclab
