#pragma once

// Row records for the command-line drivers and their JSON / CSV / text forms.

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "tsym/bigint.hpp"
#include "tsym/error.hpp"

namespace tsym {

enum class OutputFormat { Json, Csv, Text };

inline OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "text") return OutputFormat::Text;
  throw Error(ErrorCode::InvalidArgument, "unknown format '" + s + "'");
}

struct ReportRow {
  int ell = 3;
  BigInt p1, p2, p3;
  std::optional<std::array<BigInt, 3>> solution;  // (x, y, w)
  std::optional<std::string> z;                   // "num/den"
  std::optional<int> symbol_exponent;
  std::optional<std::string> symbol_rendered;
  std::optional<int> mu;
  std::optional<int> li2_z;             // balanced: -1, 0, 1 for l = 3
  std::optional<int> li2_one_minus_z;
  std::string status = "ok";

  bool ok() const { return status == "ok"; }
  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

namespace detail {

using ojson = nlohmann::ordered_json;

inline ojson bigint_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return ojson(v.get_si());
  return ojson(v.get_str());
}

inline BigInt bigint_from_json(const ojson& j) {
  if (j.is_number_integer()) return BigInt(j.get<long>());
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  throw Error(ErrorCode::InvalidArgument, "expected an integer, got " + j.dump());
}

template <class T>
ojson optional_to_json(const std::optional<T>& v) {
  return v ? ojson(*v) : ojson(nullptr);
}

template <class T>
std::optional<T> optional_from_json(const ojson& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

template <class T>
std::string optional_str(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, std::string>) {
    return *v;
  } else {
    return std::to_string(*v);
  }
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const ReportRow& r) {
  using detail::ojson;
  ojson j;
  j["ell"] = r.ell;
  j["p1"] = detail::bigint_to_json(r.p1);
  j["p2"] = detail::bigint_to_json(r.p2);
  j["p3"] = detail::bigint_to_json(r.p3);
  if (r.solution) {
    ojson s = ojson::array();
    for (const auto& v : *r.solution) s.push_back(detail::bigint_to_json(v));
    j["solution"] = s;
  } else {
    j["solution"] = nullptr;
  }
  j["z"] = detail::optional_to_json(r.z);
  j["symbol_exponent"] = detail::optional_to_json(r.symbol_exponent);
  j["symbol_rendered"] = detail::optional_to_json(r.symbol_rendered);
  j["mu"] = detail::optional_to_json(r.mu);
  j["li2_z"] = detail::optional_to_json(r.li2_z);
  j["li2_one_minus_z"] = detail::optional_to_json(r.li2_one_minus_z);
  j["status"] = r.status;
  return j;
}

inline ReportRow report_row_from_json(const nlohmann::ordered_json& j) {
  ReportRow r;
  r.ell = j.at("ell").get<int>();
  r.p1 = detail::bigint_from_json(j.at("p1"));
  r.p2 = detail::bigint_from_json(j.at("p2"));
  r.p3 = detail::bigint_from_json(j.at("p3"));
  if (j.contains("solution") && !j.at("solution").is_null()) {
    const auto& s = j.at("solution");
    if (!s.is_array() || s.size() != 3) throw Error(ErrorCode::InvalidArgument, "solution must have 3 entries");
    r.solution = std::array<BigInt, 3>{detail::bigint_from_json(s[0]), detail::bigint_from_json(s[1]),
                                       detail::bigint_from_json(s[2])};
  }
  r.z = detail::optional_from_json<std::string>(j, "z");
  r.symbol_exponent = detail::optional_from_json<int>(j, "symbol_exponent");
  r.symbol_rendered = detail::optional_from_json<std::string>(j, "symbol_rendered");
  r.mu = detail::optional_from_json<int>(j, "mu");
  r.li2_z = detail::optional_from_json<int>(j, "li2_z");
  r.li2_one_minus_z = detail::optional_from_json<int>(j, "li2_one_minus_z");
  r.status = j.at("status").get<std::string>();
  return r;
}

inline ReportRow report_row_from_json(const std::string& text) {
  return report_row_from_json(nlohmann::ordered_json::parse(text));
}

/// Fixed CSV column order. The solution occupies three columns x, y, w.
inline const char* report_csv_header() {
  return "ell,p1,p2,p3,x,y,w,z,symbol_exponent,symbol_rendered,mu,li2_z,li2_one_minus_z,status";
}

inline std::string to_csv(const ReportRow& r) {
  std::ostringstream os;
  os << r.ell << ',' << r.p1 << ',' << r.p2 << ',' << r.p3 << ',';
  if (r.solution) {
    os << (*r.solution)[0] << ',' << (*r.solution)[1] << ',' << (*r.solution)[2];
  } else {
    os << ",,";
  }
  os << ',' << detail::optional_str(r.z) << ',' << detail::optional_str(r.symbol_exponent) << ','
     << detail::optional_str(r.symbol_rendered) << ',' << detail::optional_str(r.mu) << ','
     << detail::optional_str(r.li2_z) << ',' << detail::optional_str(r.li2_one_minus_z) << ',' << r.status;
  return os.str();
}

inline std::string to_text(const ReportRow& r) {
  std::ostringstream os;
  os << '[' << r.p1 << ", " << r.p2 << ", " << r.p3 << "]_" << r.ell;
  if (r.symbol_rendered) os << " = " << *r.symbol_rendered;
  if (r.solution) os << "  alpha=(" << (*r.solution)[0] << ", " << (*r.solution)[1] << ", " << (*r.solution)[2] << ")";
  if (r.z) os << "  z=" << *r.z;
  if (r.mu) os << "  mu=" << *r.mu;
  if (r.li2_z) os << "  li2(z)=" << *r.li2_z;
  if (r.li2_one_minus_z) os << "  li2(1-z)=" << *r.li2_one_minus_z;
  if (!r.ok()) os << "  status=" << r.status;
  return os.str();
}

inline std::string render_rows(const std::vector<ReportRow>& rows, OutputFormat fmt) {
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::Json: {
      if (rows.size() == 1) {
        os << to_json(rows.front()).dump() << '\n';
      } else {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : rows) arr.push_back(to_json(r));
        os << arr.dump(2) << '\n';
      }
      break;
    }
    case OutputFormat::Csv:
      os << report_csv_header() << '\n';
      for (const auto& r : rows) os << to_csv(r) << '\n';
      break;
    case OutputFormat::Text:
      for (const auto& r : rows) os << to_text(r) << '\n';
      break;
  }
  return os.str();
}

}  // namespace tsym
