#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "config.hpp"

namespace hejc::app {

using Cell = std::variant<double, std::int64_t, bool, std::string>;

std::string cell_text(const Cell& c);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Result of one subcommand: a flat summary plus an optional table.
struct Document {
  std::string command;
  std::map<std::string, std::string> config;
  std::vector<std::pair<std::string, Cell>> summary;
  std::vector<std::string> warnings;
  Table table;

  void add(std::string key, Cell value) { summary.emplace_back(std::move(key), std::move(value)); }
};

/// CSV with a '#'-prefixed header block (config echo, summary, warnings).
std::string render_csv(const Document& doc);
/// The whole document as one JSON object.
std::string render_json(const Document& doc);
/// Summary and config only, as JSON.
std::string render_summary_json(const Document& doc);

/// JSON string literal with escapes.
std::string json_quote(const std::string& s);

/// Writes via a temporary file in the same directory and a rename.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace hejc::app
