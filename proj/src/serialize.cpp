#include "vuza/serialize.hpp"

#include <cstdio>

#include <nlohmann/json.hpp>

namespace vuza {

namespace {

using Json = nlohmann::ordered_json;

const char* mode_name(EquivalenceMode mode) {
  return mode == EquivalenceMode::translation ? "translation" : "affine";
}

const char* status_name(EnumerationStatus status) {
  switch (status) {
    case EnumerationStatus::complete:
      return "complete";
    case EnumerationStatus::solution_limit:
      return "solution_limit";
    case EnumerationStatus::time_limit:
      return "time_limit";
  }
  return "unknown";
}

Json stats_json(const SearchStats& s) {
  return Json{{"decisions", s.decisions},
              {"propagations", s.propagations},
              {"conflicts", s.conflicts}};
}

}  // namespace

std::string enumeration_json(const TilingEnumeration& e,
                             bool include_timings) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["n"] = e.period;
  doc["inner"] = e.rhythm;
  doc["complement_size"] = e.complement_size;
  doc["mode"] = mode_name(e.mode);
  doc["status"] = status_name(e.status);
  doc["solution_count"] = e.solutions.size();
  doc["class_count"] = e.classes.size();
  doc["solutions"] = e.solutions;
  doc["classes"] = Json::array();
  for (const TilingClass& c : e.classes) {
    doc["classes"].push_back(
        Json{{"representative", c.representative},
             {"anchored_orbit_size", c.anchored_orbit_size},
             {"translation_classes", c.translation_classes}});
  }
  doc["search"] = stats_json(e.totals);
  if (include_timings) {
    doc["iteration_times"] = e.iteration_seconds;
    doc["total_seconds"] = e.totals.seconds;
  }
  return doc.dump(2) + "\n";
}

std::string timings_csv(const TilingEnumeration& e) {
  std::string out = "iteration,seconds\n";
  char line[64];
  for (std::size_t i = 0; i < e.iteration_seconds.size(); ++i) {
    std::snprintf(line, sizeof(line), "%zu,%.9f\n", i + 1,
                  e.iteration_seconds[i]);
    out += line;
  }
  return out;
}

std::string check_json(const Rhythm& r, const CMReport& report,
                       const GroupOrderClass& order) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["n"] = r.period();
  doc["rhythm"] = r.elements();
  doc["R_A"] = report.r_set;
  doc["S_A"] = report.s_set;
  doc["t1"] = report.t1;
  doc["t2"] = report.t2;
  doc["t2_witness"] = report.t2_witness;
  doc["order"] = Json{{"order", order.order},
                      {"good", order.good},
                      {"pattern", order.pattern}};
  return doc.dump(2) + "\n";
}

std::string order_json(const GroupOrderClass& order) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["order"] = Json{{"order", order.order},
                      {"good", order.good},
                      {"pattern", order.pattern}};
  return doc.dump(2) + "\n";
}

}  // namespace vuza
