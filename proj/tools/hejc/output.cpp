#include "output.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <system_error>

#include "hejc/error.hpp"
#include "hejc/format.hpp"

namespace hejc::app {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string json_number(double v) {
  if (!std::isfinite(v)) return "null";
  return format_sci(v);
}

std::string cell_json(const Cell& c) {
  return std::visit(overloaded{
                        [](double v) { return json_number(v); },
                        [](std::int64_t v) { return std::to_string(v); },
                        [](bool v) { return std::string(v ? "true" : "false"); },
                        [](const std::string& v) { return json_quote(v); },
                    },
                    c);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void json_config(std::ostringstream& os, const Document& doc) {
  os << "\"config\":{";
  bool first = true;
  for (const auto& [k, v] : doc.config) {
    os << (first ? "" : ",") << json_quote(k) << ':' << json_quote(v);
    first = false;
  }
  os << '}';
}

void json_summary(std::ostringstream& os, const Document& doc) {
  os << "\"summary\":{";
  for (std::size_t i = 0; i < doc.summary.size(); ++i) {
    os << (i ? "," : "") << json_quote(doc.summary[i].first) << ':'
       << cell_json(doc.summary[i].second);
  }
  os << "},\"warnings\":[";
  for (std::size_t i = 0; i < doc.warnings.size(); ++i) {
    os << (i ? "," : "") << json_quote(doc.warnings[i]);
  }
  os << ']';
}

}  // namespace

std::string cell_text(const Cell& c) {
  return std::visit(overloaded{
                        [](double v) { return format_sci(v); },
                        [](std::int64_t v) { return std::to_string(v); },
                        [](bool v) { return std::string(v ? "true" : "false"); },
                        [](const std::string& v) { return v; },
                    },
                    c);
}

std::string json_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out + "\"";
}

std::string render_csv(const Document& doc) {
  std::ostringstream os;
  os << "# hejc " << doc.command << '\n';
  for (const auto& [k, v] : doc.config) os << "# config " << k << " = " << v << '\n';
  for (const auto& [k, v] : doc.summary) os << "# summary " << k << " = " << cell_text(v) << '\n';
  for (const auto& w : doc.warnings) os << "# warning " << w << '\n';
  if (!doc.table.columns.empty()) {
    for (std::size_t i = 0; i < doc.table.columns.size(); ++i) {
      os << (i ? "," : "") << csv_field(doc.table.columns[i]);
    }
    os << '\n';
    for (const auto& row : doc.table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(cell_text(row[i]));
      os << '\n';
    }
  }
  return os.str();
}

std::string render_json(const Document& doc) {
  std::ostringstream os;
  os << "{\"command\":" << json_quote(doc.command) << ',';
  json_config(os, doc);
  os << ',';
  json_summary(os, doc);
  os << ",\"table\":{\"columns\":[";
  for (std::size_t i = 0; i < doc.table.columns.size(); ++i) {
    os << (i ? "," : "") << json_quote(doc.table.columns[i]);
  }
  os << "],\"rows\":[";
  for (std::size_t r = 0; r < doc.table.rows.size(); ++r) {
    os << (r ? "," : "") << '[';
    const auto& row = doc.table.rows[r];
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_json(row[i]);
    os << ']';
  }
  os << "]}}\n";
  return os.str();
}

std::string render_summary_json(const Document& doc) {
  std::ostringstream os;
  os << "{\"command\":" << json_quote(doc.command) << ',';
  json_config(os, doc);
  os << ',';
  json_summary(os, doc);
  os << "}\n";
  return os.str();
}

void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + tmp.string() + "'");
    out << content;
    out.flush();
    if (!out) throw Error("write failed for '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error("cannot rename to '" + path + "': " + ec.message());
  }
}

}  // namespace hejc::app
