#pragma once

// Text and JSON renderers for property reports, element reports and
// verification rows. JSON field order is fixed; all numbers are integers.

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ringlab/polarity.hpp"
#include "ringlab/theorems.hpp"
#include "ringlab/verify.hpp"

namespace ringlab {

using Json = nlohmann::ordered_json;

/// Per-class certificate summary of one element.
struct ClassResult {
  PolarityClass class_name;
  std::optional<PolarityCertificate> certificate;
  std::optional<std::size_t> count;  // uniquely clean: number of clean idempotents
};

struct FastPathResult {
  std::string criterion;
  FastPathVerdict verdict;
  bool agrees = true;
};

struct ElementReport {
  std::string ring;
  std::string element;
  std::size_t comm_size = 0;
  std::size_t comm2_size = 0;
  bool in_radical = false;
  bool in_j_sharp = false;
  bool is_unit = false;
  bool is_idempotent = false;
  std::vector<ClassResult> classes;
  std::optional<std::vector<FastPathResult>> fast_path;
  std::int64_t elapsed_ms = 0;
};

namespace detail {

inline std::string sign_char(int sign) { return sign > 0 ? "+" : "-"; }

inline std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

// Aligned columns, two spaces apart; trailing blanks trimmed.
inline std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], row[i].size());
    }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i)
      line += i + 1 < row.size() ? pad(row[i], width[i] + 2) : row[i];
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

inline std::string bool_text(bool b) { return b ? "true" : "false"; }

}  // namespace detail

// -- property reports -------------------------------------------------------

struct ReportView {
  std::vector<std::string> properties;  // empty selects all
  bool witnesses = false;
};

inline bool shows(const ReportView& view, std::string_view name) {
  return view.properties.empty() ||
         std::find(view.properties.begin(), view.properties.end(), name) != view.properties.end();
}

inline Json to_json(const FiniteRing& r, const PropertyReport& report, const ReportView& view = {}) {
  Json props = Json::array();
  for (const auto& p : report.properties) {
    if (!shows(view, p.name)) continue;
    Json e;
    e["name"] = p.name;
    e["verdict"] = p.verdict;
    e["witness"] = view.witnesses && !p.witness.empty() ? Json(detail::join_literals(r, p.witness))
                                                        : Json(nullptr);
    e["count"] = p.count ? Json(*p.count) : Json(nullptr);
    props.push_back(std::move(e));
  }
  Json sets = Json::array();
  for (const auto& s : report.sets) {
    Json members = Json::array();
    for (Index x : s.members) members.push_back(r.render(x));
    Json e;
    e["name"] = std::string(to_string(s.name));
    e["size"] = s.members.size();
    e["members"] = std::move(members);
    sets.push_back(std::move(e));
  }
  Json out;
  out["ring"] = report.ring;
  out["order"] = report.order;
  out["properties"] = std::move(props);
  out["sets"] = std::move(sets);
  out["elapsed_ms"] = report.elapsed_ms;
  return out;
}

inline std::string to_text(const FiniteRing& r, const PropertyReport& report,
                           const ReportView& view = {}) {
  std::string out = detail::table({{"ring", report.ring}, {"order", std::to_string(report.order)}});
  std::vector<std::vector<std::string>> rows{{"property", "verdict", "witness", "count"}};
  for (const auto& p : report.properties) {
    if (!shows(view, p.name)) continue;
    rows.push_back({p.name, detail::bool_text(p.verdict),
                    view.witnesses ? detail::join_literals(r, p.witness) : "",
                    p.count ? std::to_string(*p.count) : ""});
  }
  out += "\n" + detail::table(rows);
  std::vector<std::vector<std::string>> sets{{"set", "size", "members"}};
  for (const auto& s : report.sets) {
    std::string members;
    for (std::size_t i = 0; i < s.members.size(); ++i)
      members += (i ? " " : "") + r.render(s.members[i]);
    sets.push_back({std::string(to_string(s.name)), std::to_string(s.members.size()), members});
  }
  out += "\n" + detail::table(sets);
  out += "\nelapsed_ms " + std::to_string(report.elapsed_ms) + "\n";
  return out;
}

// -- element reports --------------------------------------------------------

inline Json to_json(const ElementReport& e) {
  Json classes = Json::array();
  for (const auto& c : e.classes) {
    Json j;
    j["class"] = std::string(to_string(c.class_name));
    j["present"] = c.certificate.has_value();
    j["idempotent"] = c.certificate ? Json(c.certificate->idempotent.str()) : Json(nullptr);
    j["sign"] = c.certificate ? Json(c.certificate->sign) : Json(nullptr);
    j["witness"] = c.certificate ? Json(c.certificate->witness.str()) : Json(nullptr);
    j["both_signs"] = c.certificate && c.class_name == PolarityClass::weakly_j_quasipolar
                          ? Json(c.certificate->both_signs)
                          : Json(nullptr);
    j["count"] = c.count ? Json(*c.count) : Json(nullptr);
    classes.push_back(std::move(j));
  }
  Json out;
  out["ring"] = e.ring;
  out["element"] = e.element;
  out["comm_size"] = e.comm_size;
  out["comm2_size"] = e.comm2_size;
  out["in_radical"] = e.in_radical;
  out["in_j_sharp"] = e.in_j_sharp;
  out["is_unit"] = e.is_unit;
  out["is_idempotent"] = e.is_idempotent;
  out["certificates"] = std::move(classes);
  if (e.fast_path) {
    Json fp = Json::array();
    for (const auto& f : *e.fast_path) {
      Json j;
      j["criterion"] = f.criterion;
      j["applicable"] = f.verdict.applicable;
      j["verdict"] = f.verdict.verdict ? Json(*f.verdict.verdict) : Json(nullptr);
      j["case"] = f.verdict.case_tag;
      j["idempotent"] =
          f.verdict.certificate ? Json(f.verdict.certificate->idempotent.str()) : Json(nullptr);
      j["agrees"] = f.agrees;
      fp.push_back(std::move(j));
    }
    out["fast_path"] = std::move(fp);
  }
  out["elapsed_ms"] = e.elapsed_ms;
  return out;
}

inline std::string to_text(const ElementReport& e) {
  std::string out = detail::table({
      {"ring", e.ring},
      {"element", e.element},
      {"comm", std::to_string(e.comm_size)},
      {"comm2", std::to_string(e.comm2_size)},
      {"in J", detail::bool_text(e.in_radical)},
      {"in J#", detail::bool_text(e.in_j_sharp)},
      {"unit", detail::bool_text(e.is_unit)},
      {"idempotent", detail::bool_text(e.is_idempotent)},
  });
  std::vector<std::vector<std::string>> rows{
      {"class", "present", "idempotent", "sign", "witness", "count"}};
  for (const auto& c : e.classes) {
    std::string sign;
    if (c.certificate) {
      sign = detail::sign_char(c.certificate->sign);
      if (c.certificate->both_signs) sign = "+-";
    }
    rows.push_back({std::string(to_string(c.class_name)), detail::bool_text(c.certificate.has_value()),
                    c.certificate ? c.certificate->idempotent.str() : "", sign,
                    c.certificate ? c.certificate->witness.str() : "",
                    c.count ? std::to_string(*c.count) : ""});
  }
  out += "\n" + detail::table(rows);
  if (e.fast_path) {
    std::vector<std::vector<std::string>> fp{
        {"criterion", "applicable", "verdict", "case", "idempotent", "agrees"}};
    for (const auto& f : *e.fast_path)
      fp.push_back({f.criterion, detail::bool_text(f.verdict.applicable),
                    f.verdict.verdict ? detail::bool_text(*f.verdict.verdict) : "",
                    f.verdict.case_tag,
                    f.verdict.certificate ? f.verdict.certificate->idempotent.str() : "",
                    detail::bool_text(f.agrees)});
    out += "\n" + detail::table(fp);
  }
  out += "\nelapsed_ms " + std::to_string(e.elapsed_ms) + "\n";
  return out;
}

// -- verification rows ------------------------------------------------------

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

inline std::string to_csv(const std::vector<VerifyRow>& rows) {
  std::string out = "ring,order,check,result,witness,elapsed_ms\n";
  for (const auto& r : rows)
    out += detail::csv_field(r.ring) + "," + std::to_string(r.order) + "," +
           detail::csv_field(r.check) + "," + std::string(to_string(r.result)) + "," +
           detail::csv_field(r.witness) + "," + std::to_string(r.elapsed_ms) + "\n";
  return out;
}

inline Json to_json(const std::vector<VerifyRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json j;
    j["ring"] = r.ring;
    j["order"] = r.order;
    j["check"] = r.check;
    j["result"] = std::string(to_string(r.result));
    j["witness"] = r.witness;
    j["elapsed_ms"] = r.elapsed_ms;
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace ringlab
