// Command-line front end over the C API: enumeration, feasibility,
// divisor-condition reports and LP export.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "vuza.h"

namespace {

[[noreturn]] void fail_with(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  std::exit(1);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail_with("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) fail_with("cannot open " + out_path);
  out << payload;
  if (!out) fail_with("cannot write " + out_path);
}

struct RhythmArgs {
  int n = 0;
  std::string rhythm;
  std::string rhythm_file;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--n", n, "Period of the cyclic group");
    cmd.add_option("--rhythm", rhythm,
                   "Comma-separated elements, increasing, in [0, n)");
    cmd.add_option("--rhythm-file", rhythm_file,
                   "File holding one rhythm in the form \"n: e1,e2,...\"");
  }

  vuza_rhythm* make() const {
    std::string text;
    if (!rhythm_file.empty()) {
      if (!rhythm.empty() || n != 0)
        fail_with("give either --rhythm-file or --n with --rhythm");
      text = slurp(rhythm_file);
    } else {
      if (rhythm.empty() || n <= 0)
        fail_with("need --n and --rhythm, or --rhythm-file");
      text = std::to_string(n) + ": " + rhythm;
    }
    vuza_rhythm* r = nullptr;
    if (vuza_rhythm_parse(text.c_str(), &r) != VUZA_OK)
      fail_with(vuza_last_error());
    return r;
  }
};

struct SearchArgs {
  std::string mode = "translation";
  long long max_solutions = 0;
  double max_time = 0.0;
  bool no_aperiodicity = false;
  bool no_cardinality = false;
  bool keep_first_family = false;
  bool replace_first_family = false;

  void add_to(CLI::App& cmd, bool with_mode) {
    if (with_mode) {
      cmd.add_option("--mode", mode, "Equivalence used for classes")
          ->check(CLI::IsMember({"translation", "affine"}));
      cmd.add_option("--max-solutions", max_solutions,
                     "Stop after this many solutions (0: no limit)");
    }
    cmd.add_option("--max-time", max_time,
                   "Wall-clock budget in seconds (0: no limit)");
    cmd.add_flag("--no-aperiodicity", no_aperiodicity,
                 "Drop the aperiodicity rows (diagnostic)");
    cmd.add_flag("--no-cardinality", no_cardinality,
                 "Drop the cardinality row");
    cmd.add_flag("--keep-first-family", keep_first_family,
                 "Keep every aperiodicity family (the default)");
    cmd.add_flag("--replace-first-family", replace_first_family,
                 "Swap the largest aperiodicity family for a single bound "
                 "row; can miss classes");
  }

  vuza_search_options make() const {
    if (keep_first_family && replace_first_family)
      fail_with("--keep-first-family conflicts with --replace-first-family");
    vuza_search_options opts;
    vuza_search_options_init(&opts);
    opts.affine_classes = mode == "affine" ? 1 : 0;
    opts.aperiodicity_rows = no_aperiodicity ? 0 : 1;
    opts.cardinality_row = no_cardinality ? 0 : 1;
    opts.replace_first_family = replace_first_family ? 1 : 0;
    opts.max_solutions = max_solutions;
    opts.max_seconds = max_time;
    return opts;
  }
};

std::vector<int> rhythm_elements(const vuza_rhythm* r) {
  std::vector<int> elems(static_cast<std::size_t>(vuza_rhythm_size(r)));
  vuza_rhythm_elements(r, elems.data(), elems.size());
  return elems;
}

int cmd_enumerate(const RhythmArgs& rhythm_args, const SearchArgs& search_args,
                  const std::string& out_path, const std::string& format,
                  bool no_timings) {
  vuza_rhythm* r = rhythm_args.make();
  const vuza_search_options opts = search_args.make();
  vuza_enumeration* e = nullptr;
  if (vuza_enumerate(r, &opts, &e) != VUZA_OK) fail_with(vuza_last_error());
  char* text = nullptr;
  const vuza_status st =
      format == "csv" ? vuza_enumeration_timings_csv(e, &text)
                      : vuza_enumeration_json(e, no_timings ? 0 : 1, &text);
  if (st != VUZA_OK) fail_with(vuza_last_error());
  const int code = vuza_enumeration_complete(e) ? 0 : 2;
  write_output(text, out_path);
  vuza_string_free(text);
  vuza_enumeration_free(e);
  vuza_rhythm_free(r);
  return code;
}

int cmd_exists(const RhythmArgs& rhythm_args, double max_time,
               const std::string& out_path) {
  vuza_rhythm* r = rhythm_args.make();
  int answer = -1;
  char* witness = nullptr;
  if (vuza_exists_aperiodic(r, max_time, &answer, &witness) != VUZA_OK)
    fail_with(vuza_last_error());
  nlohmann::ordered_json doc;
  doc["schema_version"] = 1;
  doc["n"] = vuza_rhythm_period(r);
  doc["rhythm"] = rhythm_elements(r);
  doc["answer"] = answer == 1 ? "yes" : answer == 0 ? "no" : "unknown";
  if (witness) {
    doc["witness"] = std::string(witness);
    vuza_string_free(witness);
  }
  write_output(doc.dump(2) + "\n", out_path);
  vuza_rhythm_free(r);
  return answer == 1 ? 0 : answer == 0 ? 3 : 2;
}

int cmd_check(const RhythmArgs& rhythm_args, long long order, bool full_scan,
              const std::string& out_path) {
  char* text = nullptr;
  if (order > 0) {
    if (!rhythm_args.rhythm.empty() || rhythm_args.n != 0 ||
        !rhythm_args.rhythm_file.empty())
      fail_with("--order excludes the rhythm options");
    if (vuza_classify_order_json(order, &text) != VUZA_OK)
      fail_with(vuza_last_error());
    write_output(text, out_path);
    vuza_string_free(text);
    return 0;
  }
  vuza_rhythm* r = rhythm_args.make();
  if (vuza_check_json(r, full_scan ? 1 : 0, &text) != VUZA_OK)
    fail_with(vuza_last_error());
  write_output(text, out_path);
  vuza_string_free(text);
  vuza_rhythm_free(r);
  return 0;
}

int cmd_export(const RhythmArgs& rhythm_args, const SearchArgs& search_args,
               const std::string& out_path) {
  vuza_rhythm* r = rhythm_args.make();
  const vuza_search_options opts = search_args.make();
  char* text = nullptr;
  if (vuza_export_lp(r, &opts, &text) != VUZA_OK) fail_with(vuza_last_error());
  write_output(text, out_path);
  vuza_string_free(text);
  vuza_rhythm_free(r);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Aperiodic tiling complements of rhythms in cyclic groups"};
  app.set_version_flag("--version", std::string(vuza_version()));
  app.require_subcommand(1);

  RhythmArgs enum_rhythm;
  SearchArgs enum_search;
  std::string enum_out, enum_format = "json";
  bool enum_no_timings = false;
  CLI::App* enumerate =
      app.add_subcommand("enumerate", "List the tiling complements");
  enum_rhythm.add_to(*enumerate);
  enum_search.add_to(*enumerate, true);
  enumerate->add_option("--out", enum_out, "Write the result to a file");
  enumerate->add_option("--format", enum_format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  enumerate->add_flag("--no-timings", enum_no_timings,
                      "Omit wall-clock fields from the JSON");

  RhythmArgs exists_rhythm;
  double exists_max_time = 0.0;
  std::string exists_out;
  CLI::App* exists = app.add_subcommand(
      "exists", "Decide whether an aperiodic complement exists");
  exists_rhythm.add_to(*exists);
  exists->add_option("--max-time", exists_max_time,
                     "Wall-clock budget in seconds (0: no limit)");
  exists->add_option("--out", exists_out, "Write the result to a file");

  RhythmArgs check_rhythm;
  long long check_order = 0;
  bool check_full_scan = false;
  std::string check_out;
  CLI::App* check = app.add_subcommand(
      "check", "Report the cyclotomic divisor conditions or classify an "
               "order as good or bad");
  check_rhythm.add_to(*check);
  check->add_option("--order", check_order,
                    "Classify this group order instead of checking a rhythm");
  check->add_flag("--full-scan", check_full_scan,
                  "Scan all cyclotomic indices up to deg + n, not only the "
                  "divisors of n");
  check->add_option("--out", check_out, "Write the result to a file");

  RhythmArgs export_rhythm;
  SearchArgs export_search;
  std::string export_out;
  CLI::App* exporter =
      app.add_subcommand("export", "Write the feasibility program as LP text");
  export_rhythm.add_to(*exporter);
  export_search.add_to(*exporter, false);
  exporter->add_option("--out", export_out, "Write the LP to a file");

  CLI11_PARSE(app, argc, argv);

  if (enumerate->parsed())
    return cmd_enumerate(enum_rhythm, enum_search, enum_out, enum_format,
                         enum_no_timings);
  if (exists->parsed())
    return cmd_exists(exists_rhythm, exists_max_time, exists_out);
  if (check->parsed())
    return cmd_check(check_rhythm, check_order, check_full_scan, check_out);
  if (exporter->parsed())
    return cmd_export(export_rhythm, export_search, export_out);
  return 1;
}
