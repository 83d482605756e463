#include <algorithm>
#include <set>
#include <sstream>

#include "prosopo/citation_graph.hpp"
#include "prosopo/error.hpp"

namespace prosopo {
namespace {

std::string dot_quote(std::string_view id) {
  std::string out = "\"";
  for (char c : id) {
    if (c == '"') out += '\\';  // the only escape DOT defines inside quotes
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string to_csv(std::vector<EdgeRecord> records) {
  std::sort(records.begin(), records.end());
  std::string out = "src,dst,kind,label\n";
  for (const auto& r : records) {
    out += csv_field(r.src) + ',' + csv_field(r.dst) + ',' + csv_field(r.kind) + ',' + csv_field(r.label) + '\n';
  }
  return out;
}

}  // namespace

ExportFormat parse_export_format(std::string_view text) {
  if (text == "dot") return ExportFormat::dot;
  if (text == "edge-csv") return ExportFormat::edge_csv;
  throw InvalidArgument("unknown export format '" + std::string(text) + "' (expected dot or edge-csv)");
}

std::vector<EdgeRecord> edge_records(const CitationGraph& graph) {
  std::vector<EdgeRecord> out;
  for (const auto& e : graph.edges) {
    out.push_back({e.source, e.target, std::string(to_string(e.status)), std::to_string(e.reference_index)});
  }
  for (const auto& [a, b] : graph.keyword_links) out.push_back({a, b, "keyword", ""});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeRecord> edge_records(const PersonGraph& graph) {
  std::vector<EdgeRecord> out;
  for (const auto& e : graph.edges) out.push_back({e.from, e.to, e.kind, e.label});
  std::sort(out.begin(), out.end());
  return out;
}

std::string export_graph(const CitationGraph& graph, ExportFormat format) {
  if (format == ExportFormat::edge_csv) return to_csv(edge_records(graph));
  std::ostringstream out;
  out << "digraph citations {\n";
  std::set<std::string> nodes;
  for (const auto& a : graph.articles) nodes.insert(a.id);
  for (const auto& w : graph.externals) nodes.insert(w.id);
  for (const auto& n : nodes) {
    out << "  " << dot_quote(n) << (n.starts_with("ext:") ? " [shape=box]" : "") << ";\n";
  }
  for (const auto& r : edge_records(graph)) {
    out << "  " << dot_quote(r.src) << " -> " << dot_quote(r.dst) << " [label=" << dot_quote(r.kind);
    if (r.kind == "keyword") out << ", dir=none";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_graph(const PersonGraph& graph, ExportFormat format) {
  if (format == ExportFormat::edge_csv) return to_csv(edge_records(graph));
  std::ostringstream out;
  out << "graph persons {\n";
  for (const auto& n : graph.nodes) out << "  " << dot_quote(n) << ";\n";
  for (const auto& r : edge_records(graph)) {
    out << "  " << dot_quote(r.src) << " -- " << dot_quote(r.dst) << " [label=" << dot_quote(r.kind);
    if (r.kind == "cites") out << ", dir=forward, weight=" << dot_quote(r.label);
    else if (!r.label.empty()) out << ", period=" << dot_quote(r.label);
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::vector<EdgeRecord> import_edge_csv(std::string_view csv) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool any = false;
  for (std::size_t i = 0; i < csv.size(); ++i) {
    const char c = csv[i];
    if (quoted) {
      if (c == '"' && i + 1 < csv.size() && csv[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
      any = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
      any = true;
    } else if (c == '\n') {
      row.push_back(std::move(field));
      field.clear();
      rows.push_back(std::move(row));
      row.clear();
      any = false;
    } else if (c != '\r') {
      field += c;
      any = true;
    }
  }
  if (quoted) throw InvalidArgument("edge-csv: unterminated quoted field");
  if (any) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  if (rows.empty() || rows.front() != std::vector<std::string>{"src", "dst", "kind", "label"}) {
    throw InvalidArgument("edge-csv: missing header src,dst,kind,label");
  }
  std::vector<EdgeRecord> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].size() != 4) {
      throw InvalidArgument("edge-csv: line " + std::to_string(i + 1) + " does not have 4 fields");
    }
    out.push_back({rows[i][0], rows[i][1], rows[i][2], rows[i][3]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace prosopo
