/* This file is part of sigvol.
 * Copyright (c) 2026 the sigvol authors.
 * SPDX-License-Identifier: Apache-2.0
 */
#include "sigvol/output.hpp"

#include <charconv>
#include <sstream>
#include <system_error>
#include <type_traits>

namespace sigvol {
namespace {

void append_field(std::string& row, const std::string& v) {
  if (!row.empty()) row += ',';
  row += v;
}

template <typename T>
void append_optional(std::string& row, const std::optional<T>& v) {
  if (!v.has_value()) {
    append_field(row, std::string());
  } else if constexpr (std::is_same_v<T, double>) {
    append_field(row, format_real(*v));
  } else {
    append_field(row, std::to_string(static_cast<long long>(*v)));
  }
}

void json_string(std::ostringstream& out, const std::string& s) {
  out << '"';
  for (char c : s) {
    switch (c) {
      case '"': out << "\\\""; break;
      case '\\': out << "\\\\"; break;
      case '\n': out << "\\n"; break;
      default: out << c; break;
    }
  }
  out << '"';
}

template <typename T>
void json_field(std::ostringstream& out, const char* key,
                const std::optional<T>& v) {
  out << ",\"" << key << "\":";
  if (!v.has_value()) {
    out << "null";
  } else if constexpr (std::is_same_v<T, double>) {
    out << format_real(*v);
  } else {
    out << static_cast<long long>(*v);
  }
}

}  // namespace

std::string format_real(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v,
                           std::chars_format::general, 17);
  if (res.ec != std::errc()) return "nan";
  return std::string(buf, res.ptr);
}

std::string csv_header() {
  return "command,d,s,value,stderr,samples,B,seed,discarded,wall_ms";
}

std::string to_csv_row(const OutputRecord& r) {
  std::string row;
  append_field(row, r.command);
  append_field(row, std::to_string(r.degree));
  append_optional(row, r.nonreal_pairs);
  append_field(row, format_real(r.value));
  append_optional(row, r.std_error);
  append_optional(row, r.samples);
  append_optional(row, r.height);
  append_optional(row, r.seed);
  append_optional(row, r.discarded);
  append_optional(row, r.wall_ms);
  return row;
}

std::string to_json(const std::vector<OutputRecord>& records) {
  std::ostringstream out;
  out << "[";
  bool first = true;
  for (const auto& r : records) {
    if (!first) out << ",";
    first = false;
    out << "\n  {\"command\":";
    json_string(out, r.command);
    out << ",\"d\":" << r.degree;
    json_field(out, "s", r.nonreal_pairs);
    out << ",\"value\":" << format_real(r.value);
    json_field(out, "stderr", r.std_error);
    json_field(out, "samples", r.samples);
    json_field(out, "B", r.height);
    json_field(out, "seed", r.seed);
    json_field(out, "discarded", r.discarded);
    json_field(out, "wall_ms", r.wall_ms);
    out << "}";
  }
  out << "\n]\n";
  return out.str();
}

}  // namespace sigvol
