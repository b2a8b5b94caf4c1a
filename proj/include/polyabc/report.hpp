#pragma once

// JSON rendering of verdicts, reports and whole command documents.
// Key order is fixed so documents are byte-stable for golden tests.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "polyabc/abc.hpp"
#include "polyabc/corollaries.hpp"
#include "polyabc/error.hpp"
#include "polyabc/harness.hpp"

namespace polyabc {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

inline Json to_json(const MsVerdict& v) {
  return Json{{"kind", to_string(v.kind)},
              {"max3_degree", v.max3_degree},
              {"radical_degree", v.radical_degree},
              {"margin", optional_json(v.margin)},
              {"wronskian_degree", optional_json(v.wronskian_degree)},
              {"tight", v.is_tight()}};
}

inline Json to_json(const ConstancyReport& r) {
  Json trace = Json::array();
  for (const auto& step : r.descent_trace) trace.push_back(step);
  return Json{{"kind", to_string(r.kind)}, {"degrees", r.degrees}, {"descent_trace", trace}};
}

inline Json to_json(const DavenportResult& r) {
  return Json{{"lhs", r.lhs}, {"rhs", r.rhs}, {"holds", r.holds}};
}

inline Json to_json(const SearchConfig& c) {
  return Json{{"field", c.field.to_string()},   {"max_degree", c.max_degree},
              {"target", to_string(c.target)},  {"flt_n", c.flt_n},
              {"seed", c.seed},                 {"workers", c.workers},
              {"samples", c.samples},           {"record_limit", c.record_limit}};
}

inline Json to_json(const Witness& w) {
  Json j{{"triple", w.triple}, {"verdict", to_json(w.verdict)}};
  j["constancy"] = w.constancy ? to_json(*w.constancy) : Json(nullptr);
  j["note"] = w.note;
  return j;
}

/// Wall time is left to the enclosing document's timing block.
inline Json to_json(const SearchReport& r) {
  Json tight = Json::array(), viol = Json::array(), laws = Json::object();
  for (const auto& w : r.tight_instances) tight.push_back(to_json(w));
  for (const auto& w : r.violations) viol.push_back(to_json(w));
  for (const auto& [name, t] : r.laws) laws[name] = Json{{"passed", t.passed}, {"failed", t.failed}};
  return Json{{"config", to_json(r.config)},
              {"mode", r.mode},
              {"pairs_enumerated", r.pairs_enumerated},
              {"triples_examined", r.triples_examined},
              {"holds_count", r.holds_count},
              {"vanishing_count", r.vanishing_count},
              {"violation_count", r.violation_count},
              {"tight_count", r.tight_count},
              {"tight_instances", tight},
              {"violations", viol},
              {"laws", laws}};
}

inline Json to_json(const ReproductionRecord& r) {
  return Json{{"name", r.name},
              {"expected", r.expected},
              {"actual", r.actual},
              {"pass", r.pass},
              {"informational", r.informational}};
}

inline Json to_json(const Error& e) {
  return Json{{"kind", to_string(e.kind())},
              {"message", e.detail()},
              {"hypothesis", optional_json(e.hypothesis())},
              {"position", optional_json(e.position())}};
}

struct ReportDocument {
  Json command;
  std::optional<Json> result;
  std::optional<Json> error;
  std::optional<double> wall_time_ms;

  Json to_json() const {
    Json j{{"schema_version", kSchemaVersion}, {"command", command}};
    if (result) j["result"] = *result;
    if (error) j["error"] = *error;
    j["timing"] = Json{{"wall_time_ms", wall_time_ms ? Json(*wall_time_ms) : Json(nullptr)}};
    return j;
  }
};

}  // namespace polyabc
