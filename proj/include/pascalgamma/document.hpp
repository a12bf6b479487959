#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pascalgamma/rational.hpp"
#include "pascalgamma/triangle.hpp"

namespace pascalgamma {

enum class Format { Json, Csv, Plain };

/// Throws ParseError for anything but "json", "csv" or "plain".
Format parse_format(std::string_view name);

/// Serialized triangle or gamma-matrix. Entries are decimal strings ("a" or
/// "a/b") so no precision is lost.
struct TriangleDocument {
  static constexpr int kSchemaVersion = 1;

  int schema_version = kSchemaVersion;
  std::string kind;  // "triangle" or "gamma"
  std::map<std::string, std::string> params;
  std::vector<std::vector<std::string>> rows;
  std::map<std::string, std::string> meta;

  friend bool operator==(const TriangleDocument&, const TriangleDocument&) = default;
};

TriangleDocument make_document(std::string kind, std::map<std::string, std::string> params,
                               const std::vector<std::vector<Rational>>& rows,
                               std::map<std::string, std::string> meta = {});

std::vector<std::vector<Rational>> document_values(const TriangleDocument& doc);

/// Interprets the document rows as a triangle (InvalidSpec on bad shape).
Triangle document_triangle(const TriangleDocument& doc);

std::string to_json(const TriangleDocument& doc);
/// Throws ParseError on malformed input or an unsupported schema_version.
TriangleDocument parse_json(std::string_view text);

/// One row per line, entries joined by ',' (csv) or ' ' (plain).
std::string to_delimited(const std::vector<std::vector<Rational>>& rows, Format format);
std::vector<std::vector<Rational>> parse_delimited(std::string_view text, Format format);

std::string serialize(const TriangleDocument& doc, Format format);

/// Accepts a JSON document or, failing that, plain/csv rows (sniffed by
/// the presence of a comma).
TriangleDocument parse_any(std::string_view text);

}  // namespace pascalgamma
