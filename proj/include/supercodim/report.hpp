#pragma once

// Uniform result rows for checks: exact values (integer, rational, or
// a + b*sqrt(3)) plus pass/fail verdicts, rendered as aligned text, CSV
// or JSON. Output is bit-deterministic: no timestamps, no addresses,
// no float formatting.

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "quadext.hpp"
#include "rational.hpp"

namespace supercodim {

struct ExactValue {
  enum class Kind { none, integer, rational, quadext, text };

  Kind kind = Kind::none;
  BigRat rat;
  QuadExt3 irr;
  std::string str;

  static ExactValue none() { return ExactValue{}; }

  static ExactValue of(const BigInt& v) {
    ExactValue x;
    x.kind = Kind::integer;
    x.rat = BigRat(v);
    return x;
  }

  static ExactValue of(const BigRat& v) {
    ExactValue x;
    x.kind = v.is_integer() ? Kind::integer : Kind::rational;
    x.rat = v;
    return x;
  }

  static ExactValue of(const QuadExt3& v) {
    if (v.is_rational()) return of(v.rational_part());
    ExactValue x;
    x.kind = Kind::quadext;
    x.irr = v;
    return x;
  }

  static ExactValue of(std::string s) {
    ExactValue x;
    x.kind = Kind::text;
    x.str = std::move(s);
    return x;
  }

  std::string display() const {
    switch (kind) {
      case Kind::none: return "";
      case Kind::integer:
      case Kind::rational: return rat.to_string();
      case Kind::quadext: return irr.to_string();
      case Kind::text: return str;
    }
    return "";
  }
};

struct ReportRow {
  std::string check;
  std::string params;  // space separated "k=2 l=1"
  ExactValue lhs;
  ExactValue rhs;
  std::string verdict;  // pass | fail | pass(out-of-hypothesis) | value
  std::vector<std::string> notes;

  bool failed() const { return verdict == "fail"; }
};

inline bool all_pass(const std::vector<ReportRow>& rows) {
  return std::none_of(rows.begin(), rows.end(),
                      [](const ReportRow& r) { return r.failed(); });
}

namespace detail {

inline std::string csv_cell(std::string s) {
  for (char& c : s)
    if (c == ',' || c == '\n') c = ';';
  return s;
}

inline std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

inline std::string json_value(const ExactValue& v) {
  switch (v.kind) {
    case ExactValue::Kind::none:
      return "null";
    case ExactValue::Kind::integer:
      return v.rat.to_string();  // arbitrary precision JSON number
    case ExactValue::Kind::rational:
      return "\"" + v.rat.to_string() + "\"";
    case ExactValue::Kind::quadext:
      return "{\"rat\":\"" + v.irr.rational_part().to_string() +
             "\",\"irr\":\"" + v.irr.sqrt3_part().to_string() + "\"}";
    case ExactValue::Kind::text:
      return "\"" + json_escape(v.str) + "\"";
  }
  return "null";
}

}  // namespace detail

inline std::string to_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  out << "check,params,lhs,rhs,verdict\n";
  for (const auto& r : rows)
    out << detail::csv_cell(r.check) << ',' << detail::csv_cell(r.params)
        << ',' << detail::csv_cell(r.lhs.display()) << ','
        << detail::csv_cell(r.rhs.display()) << ','
        << detail::csv_cell(r.verdict) << '\n';
  return out.str();
}

inline std::string to_json(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  out << "{\"rows\":[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (i) out << ',';
    out << "{\"check\":\"" << detail::json_escape(r.check) << "\""
        << ",\"params\":\"" << detail::json_escape(r.params) << "\""
        << ",\"lhs\":" << detail::json_value(r.lhs)
        << ",\"rhs\":" << detail::json_value(r.rhs) << ",\"verdict\":\""
        << detail::json_escape(r.verdict) << "\",\"notes\":[";
    for (std::size_t j = 0; j < r.notes.size(); ++j) {
      if (j) out << ',';
      out << "\"" << detail::json_escape(r.notes[j]) << "\"";
    }
    out << "]}";
  }
  out << "],\"all_pass\":" << (all_pass(rows) ? "true" : "false") << "}\n";
  return out.str();
}

inline std::string to_text(const std::vector<ReportRow>& rows) {
  std::size_t wc = 5, wp = 6, wl = 3, wr = 3;
  for (const auto& r : rows) {
    wc = std::max(wc, r.check.size());
    wp = std::max(wp, r.params.size());
    wl = std::max(wl, r.lhs.display().size());
    wr = std::max(wr, r.rhs.display().size());
  }
  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w - s.size(), ' ');
  };
  std::ostringstream out;
  out << pad("check", wc) << "  " << pad("params", wp) << "  " << pad("lhs", wl)
      << "  " << pad("rhs", wr) << "  verdict\n";
  for (const auto& r : rows) {
    out << pad(r.check, wc) << "  " << pad(r.params, wp) << "  "
        << pad(r.lhs.display(), wl) << "  " << pad(r.rhs.display(), wr) << "  "
        << r.verdict << '\n';
    for (const auto& n : r.notes) out << "    note: " << n << '\n';
  }
  return out.str();
}

}  // namespace supercodim
