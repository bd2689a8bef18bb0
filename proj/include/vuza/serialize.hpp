// JSON and CSV renderings of results.  Output is byte-deterministic for
// identical inputs; wall-clock timings only appear when asked for, so the
// deterministic fields can be compared across runs.
#pragma once

#include <string>

#include "vuza/cm.hpp"
#include "vuza/csa.hpp"

namespace vuza {

inline constexpr int kSchemaVersion = 1;

std::string enumeration_json(const TilingEnumeration& e,
                             bool include_timings = true);

/// Lines "iteration,seconds" then one row per solve call, 1-based.
std::string timings_csv(const TilingEnumeration& e);

std::string check_json(const Rhythm& r, const CMReport& report,
                       const GroupOrderClass& order);

std::string order_json(const GroupOrderClass& order);

}  // namespace vuza
