#include "vuza.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "vuza/csa.hpp"
#include "vuza/model.hpp"
#include "vuza/oracle.hpp"
#include "vuza/rhythm.hpp"
#include "vuza/serialize.hpp"

struct vuza_rhythm {
  vuza::Rhythm impl;
};

struct vuza_enumeration {
  vuza::TilingEnumeration impl;
};

namespace {

thread_local std::string g_last_error = "no error";

vuza_status fail(vuza_status code, const char* what) {
  g_last_error = what;
  return code;
}

// Runs fn, translating exceptions to status codes.  invalid_argument maps to
// arg_code so that parse entry points can report VUZA_PARSE_ERROR.
template <typename Fn>
vuza_status guarded(vuza_status arg_code, Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    return fail(arg_code, e.what());
  } catch (const std::bad_alloc&) {
    return fail(VUZA_NO_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(VUZA_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(VUZA_INTERNAL_ERROR, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

vuza::CsaOptions to_csa_options(const vuza_search_options* opts) {
  vuza::CsaOptions csa;
  if (!opts) return csa;
  csa.mode = opts->affine_classes ? vuza::EquivalenceMode::affine
                                  : vuza::EquivalenceMode::translation;
  csa.cut_whole_orbit = opts->cut_whole_orbit != 0;
  csa.max_solutions = opts->max_solutions;
  csa.max_seconds = opts->max_seconds;
  csa.build.aperiodicity = opts->aperiodicity_rows != 0;
  csa.build.include_cardinality = opts->cardinality_row != 0;
  csa.build.replace_first_family = opts->replace_first_family != 0;
  return csa;
}

}  // namespace

extern "C" {

const char* vuza_version(void) { return "1.0.0"; }

const char* vuza_last_error(void) { return g_last_error.c_str(); }

void vuza_string_free(char* s) { std::free(s); }

vuza_status vuza_rhythm_create(int period, const int* elements, size_t count,
                               vuza_rhythm** out) {
  if (!elements || !out || count == 0)
    return fail(VUZA_INVALID_ARGUMENT, "null or empty argument");
  *out = nullptr;
  return guarded(VUZA_INVALID_ARGUMENT, [&] {
    std::vector<int> elems(elements, elements + count);
    *out = new vuza_rhythm{vuza::Rhythm(period, std::move(elems))};
    return VUZA_OK;
  });
}

vuza_status vuza_rhythm_parse(const char* text, vuza_rhythm** out) {
  if (!text || !out) return fail(VUZA_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded(VUZA_PARSE_ERROR, [&] {
    *out = new vuza_rhythm{vuza::parse_rhythm(text)};
    return VUZA_OK;
  });
}

void vuza_rhythm_free(vuza_rhythm* r) { delete r; }

int vuza_rhythm_period(const vuza_rhythm* r) {
  return r ? r->impl.period() : -1;
}

int vuza_rhythm_size(const vuza_rhythm* r) { return r ? r->impl.size() : -1; }

vuza_status vuza_rhythm_elements(const vuza_rhythm* r, int* buffer,
                                 size_t capacity) {
  if (!r || !buffer) return fail(VUZA_INVALID_ARGUMENT, "null argument");
  const auto& elems = r->impl.elements();
  if (capacity < elems.size())
    return fail(VUZA_INVALID_ARGUMENT, "buffer too small");
  std::memcpy(buffer, elems.data(), elems.size() * sizeof(int));
  return VUZA_OK;
}

vuza_status vuza_rhythm_format(const vuza_rhythm* r, char** out) {
  if (!r || !out) return fail(VUZA_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded(VUZA_INVALID_ARGUMENT, [&] {
    *out = dup_string(vuza::format_rhythm(r->impl));
    return VUZA_OK;
  });
}

int vuza_rhythm_is_aperiodic(const vuza_rhythm* r) {
  if (!r) return -1;
  int result = -1;
  guarded(VUZA_INVALID_ARGUMENT, [&] {
    result = vuza::is_aperiodic(r->impl) ? 1 : 0;
    return VUZA_OK;
  });
  return result;
}

void vuza_search_options_init(vuza_search_options* opts) {
  if (!opts) return;
  opts->affine_classes = 0;
  opts->cut_whole_orbit = 1;
  opts->aperiodicity_rows = 1;
  opts->cardinality_row = 1;
  opts->replace_first_family = 0;
  opts->max_solutions = 0;
  opts->max_seconds = 0.0;
}

vuza_status vuza_enumerate(const vuza_rhythm* r,
                           const vuza_search_options* opts,
                           vuza_enumeration** out) {
  if (!r || !out) return fail(VUZA_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded(VUZA_INVALID_ARGUMENT, [&] {
    auto result = vuza::run_csa(r->impl, to_csa_options(opts));
    *out = new vuza_enumeration{std::move(result)};
    return VUZA_OK;
  });
}

void vuza_enumeration_free(vuza_enumeration* e) { delete e; }

int vuza_enumeration_complete(const vuza_enumeration* e) {
  if (!e) return 0;
  return e->impl.status == vuza::EnumerationStatus::complete ? 1 : 0;
}

long long vuza_enumeration_solution_count(const vuza_enumeration* e) {
  return e ? static_cast<long long>(e->impl.solutions.size()) : -1;
}

long long vuza_enumeration_class_count(const vuza_enumeration* e) {
  return e ? static_cast<long long>(e->impl.classes.size()) : -1;
}

vuza_status vuza_enumeration_json(const vuza_enumeration* e,
                                  int include_timings, char** out) {
  if (!e || !out) return fail(VUZA_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded(VUZA_INVALID_ARGUMENT, [&] {
    *out = dup_string(vuza::enumeration_json(e->impl, include_timings != 0));
    return VUZA_OK;
  });
}

vuza_status vuza_enumeration_timings_csv(const vuza_enumeration* e,
                                         char** out) {
  if (!e || !out) return fail(VUZA_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded(VUZA_INVALID_ARGUMENT, [&] {
    *out = dup_string(vuza::timings_csv(e->impl));
    return VUZA_OK;
  });
}

vuza_status vuza_exists_aperiodic(const vuza_rhythm* r, double max_seconds,
                                  int* answer, char** witness) {
  if (!r || !answer) return fail(VUZA_INVALID_ARGUMENT, "null argument");
  *answer = -1;
  if (witness) *witness = nullptr;
  return guarded(VUZA_INVALID_ARGUMENT, [&] {
    const auto result =
        vuza::exists_aperiodic_complement(r->impl, max_seconds);
    *answer = result.answer;
    if (result.answer == 1 && witness) {
      *witness = dup_string(vuza::format_rhythm(
          vuza::Rhythm(r->impl.period(), result.witness)));
    }
    return VUZA_OK;
  });
}

vuza_status vuza_check_json(const vuza_rhythm* r, int full_scan, char** out) {
  if (!r || !out) return fail(VUZA_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded(VUZA_INVALID_ARGUMENT, [&] {
    const auto report = vuza::cm_report(
        r->impl,
        full_scan ? vuza::ScanRange::full : vuza::ScanRange::divisors);
    const auto order = vuza::classify_order(r->impl.period());
    *out = dup_string(vuza::check_json(r->impl, report, order));
    return VUZA_OK;
  });
}

vuza_status vuza_classify_order_json(long long order, char** out) {
  if (!out) return fail(VUZA_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded(VUZA_INVALID_ARGUMENT, [&] {
    *out = dup_string(vuza::order_json(vuza::classify_order(order)));
    return VUZA_OK;
  });
}

vuza_status vuza_export_lp(const vuza_rhythm* r,
                           const vuza_search_options* opts, char** out) {
  if (!r || !out) return fail(VUZA_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded(VUZA_INVALID_ARGUMENT, [&] {
    const vuza::CsaOptions csa = to_csa_options(opts);
    const auto sys = vuza::build_master_problem(r->impl, csa.build);
    *out = dup_string(vuza::export_lp(sys));
    return VUZA_OK;
  });
}

}  // extern "C"
