#include "pascalgamma/document.hpp"

#include <sstream>

#include <json.hpp>

#include "pascalgamma/errors.hpp"

namespace pascalgamma {

using ordered_json = nlohmann::ordered_json;

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "plain") return Format::Plain;
  throw ParseError("unknown format '" + std::string(name) + "'");
}

TriangleDocument make_document(std::string kind, std::map<std::string, std::string> params,
                               const std::vector<std::vector<Rational>>& rows,
                               std::map<std::string, std::string> meta) {
  TriangleDocument doc;
  doc.kind = std::move(kind);
  doc.params = std::move(params);
  doc.meta = std::move(meta);
  for (const auto& row : rows) {
    auto& out = doc.rows.emplace_back();
    out.reserve(row.size());
    for (const auto& v : row) out.push_back(v.to_string());
  }
  return doc;
}

std::vector<std::vector<Rational>> document_values(const TriangleDocument& doc) {
  std::vector<std::vector<Rational>> out;
  out.reserve(doc.rows.size());
  for (const auto& row : doc.rows) {
    auto& vals = out.emplace_back();
    for (const auto& s : row) vals.push_back(Rational::parse(s));
  }
  return out;
}

Triangle document_triangle(const TriangleDocument& doc) {
  return Triangle(document_values(doc));
}

std::string to_json(const TriangleDocument& doc) {
  ordered_json j;
  j["schema_version"] = doc.schema_version;
  j["kind"] = doc.kind;
  j["params"] = ordered_json::object();
  for (const auto& [k, v] : doc.params) j["params"][k] = v;
  j["rows"] = ordered_json::array();
  for (const auto& row : doc.rows) j["rows"].push_back(row);
  j["meta"] = ordered_json::object();
  for (const auto& [k, v] : doc.meta) j["meta"][k] = v;
  return j.dump(2) + "\n";
}

TriangleDocument parse_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    TriangleDocument doc;
    doc.schema_version = j.at("schema_version").get<int>();
    if (doc.schema_version != TriangleDocument::kSchemaVersion) {
      throw ParseError("unsupported schema_version " + std::to_string(doc.schema_version));
    }
    doc.kind = j.at("kind").get<std::string>();
    if (j.contains("params")) {
      for (const auto& [k, v] : j.at("params").items()) doc.params[k] = v.get<std::string>();
    }
    for (const auto& row : j.at("rows")) {
      auto& out = doc.rows.emplace_back();
      for (const auto& v : row) {
        const auto s = v.get<std::string>();
        Rational::parse(s);  // validates
        out.push_back(s);
      }
    }
    if (j.contains("meta")) {
      for (const auto& [k, v] : j.at("meta").items()) doc.meta[k] = v.get<std::string>();
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed triangle document: ") + e.what());
  }
}

std::string to_delimited(const std::vector<std::vector<Rational>>& rows, Format format) {
  const char* sep = format == Format::Csv ? "," : " ";
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k > 0) out += sep;
      out += row[k].to_string();
    }
    out += '\n';
  }
  return out;
}

std::vector<std::vector<Rational>> parse_delimited(std::string_view text, Format format) {
  std::vector<std::vector<Rational>> out;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto& row = out.emplace_back();
    if (format == Format::Csv) {
      std::istringstream cells(line);
      std::string cell;
      while (std::getline(cells, cell, ',')) row.push_back(Rational::parse(cell));
    } else {
      std::istringstream cells(line);
      std::string cell;
      while (cells >> cell) row.push_back(Rational::parse(cell));
    }
  }
  return out;
}

std::string serialize(const TriangleDocument& doc, Format format) {
  if (format == Format::Json) return to_json(doc);
  return to_delimited(document_values(doc), format);
}

TriangleDocument parse_any(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
  const Format f = text.find(',') != std::string_view::npos ? Format::Csv : Format::Plain;
  return make_document("triangle", {}, parse_delimited(text, f));
}

}  // namespace pascalgamma
