// Acceptance checklist: nine end-to-end checks covering enumeration against
// the exhaustive oracle, published class counts, divisor conditions,
// cyclotomic identities, determinism and timing data.  Run without arguments
// for the whole list, or with a single number 1..9 to run one check.
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lp_reparse.hpp"
#include "vuza/cm.hpp"
#include "vuza/csa.hpp"
#include "vuza/model.hpp"
#include "vuza/oracle.hpp"
#include "vuza/polynomial.hpp"
#include "vuza/serialize.hpp"

using namespace vuza;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome ok(std::string detail) { return {true, std::move(detail)}; }
Outcome bad(std::string detail) { return {false, std::move(detail)}; }

using SetOfSets = std::set<std::vector<int>>;

SetOfSets to_set(const std::vector<std::vector<int>>& v) {
  return SetOfSets(v.begin(), v.end());
}

std::string join(const std::vector<int>& v) {
  std::ostringstream ss;
  for (size_t i = 0; i < v.size(); ++i) ss << (i ? "," : "") << v[i];
  return ss.str();
}

// All subsets of Z_n of the given size that contain 0.
std::vector<std::vector<int>> anchored_subsets(int n, int size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur{0};
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(cur.size()) == size) {
      out.push_back(cur);
      return;
    }
    for (int e = next; e < n; ++e) {
      cur.push_back(e);
      rec(e + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

int distinct_prime_count(int m) {
  int count = 0;
  for (int p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      ++count;
      while (m % p == 0) m /= p;
    }
  if (m > 1) ++count;
  return count;
}

int phi_by_gcd(int n) {
  int count = 0;
  for (int k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

double env_budget(double fallback) {
  const char* s = std::getenv("VUZA_ACCEPT_BUDGET");
  if (!s || !*s) return fallback;
  char* end = nullptr;
  const double v = std::strtod(s, &end);
  return (end && *end == '\0' && v > 0.0) ? v : fallback;
}

bool write_file(const std::string& path, const std::string& payload) {
  std::ofstream out(path, std::ios::binary);
  out << payload;
  return static_cast<bool>(out);
}

// t1 must hold for every tile; t2 whenever the cardinality has at most two
// distinct prime factors.
bool cm_pair_ok(const Rhythm& a, const Rhythm& b, std::string& err) {
  for (const Rhythm* r : {&a, &b}) {
    const CMReport rep = cm_report(*r);
    if (!rep.t1) {
      err = "t1 fails for " + format_rhythm(*r);
      return false;
    }
    if (distinct_prime_count(r->size()) <= 2 && !rep.t2) {
      err = "t2 fails for " + format_rhythm(*r);
      return false;
    }
  }
  return true;
}

const std::vector<int> kB72 = {0, 8, 16, 18, 26, 34};
const std::vector<int> kA72 = {0, 1, 4, 7, 13, 24, 28, 37, 43, 48, 49, 52};
const std::vector<int> kB120 = {0, 8, 16, 30, 38, 46};
const std::vector<int> kA120 = {0,  1,  4,  7,  13, 19, 24, 25, 28, 48,
                                52, 61, 67, 72, 73, 76, 79, 85, 96, 100};
const std::vector<int> kA180 = {0, 12, 24, 45, 57, 69};
const std::vector<int> kA1050 = {0, 15, 30, 35, 45, 60, 70, 75, 90, 105};
const std::vector<int> kA27225 = {
    0,    9,    15,   18,   24,   27,   30,   36,   39,   45,   54,
    3025, 3034, 3040, 3043, 3049, 3052, 3055, 3061, 3064, 3070, 3079,
    6050, 6059, 6065, 6068, 6074, 6077, 6080, 6086, 6089, 6095, 6104};

// Criterion 1: on every anchored rhythm of size at most 4 over small
// periods, the search with single-solution cuts reproduces the exhaustive
// oracle exactly, with and without the aperiodicity rows.
Outcome criterion1() {
  const int periods[] = {4, 6, 8, 9, 12, 16, 18, 24};
  long long instances = 0;
  long long tilings = 0;
  for (int n : periods) {
    for (int size = 1; size <= 4; ++size) {
      if (n % size != 0) continue;
      for (const auto& elems : anchored_subsets(n, size)) {
        const Rhythm a(n, elems);
        const auto all = enumerate_complements_bruteforce(a, true);
        const SetOfSets all_set = to_set(all);
        SetOfSets aper_set;
        for (const auto& b : all)
          if (is_aperiodic(Rhythm(n, b))) aper_set.insert(b);

        CsaOptions plain;
        plain.cut_whole_orbit = false;
        plain.build.aperiodicity = false;
        const TilingEnumeration ep = run_csa(a, plain);
        if (ep.status != EnumerationStatus::complete)
          return bad("n=" + std::to_string(n) + " A={" + join(elems) +
                     "}: full enumeration did not terminate");
        if (to_set(ep.solutions) != all_set)
          return bad("n=" + std::to_string(n) + " A={" + join(elems) +
                     "}: complements disagree with the oracle");

        CsaOptions strict;
        strict.cut_whole_orbit = false;
        const TilingEnumeration es = run_csa(a, strict);
        if (es.status != EnumerationStatus::complete ||
            to_set(es.solutions) != aper_set)
          return bad("n=" + std::to_string(n) + " A={" + join(elems) +
                     "}: aperiodic complements disagree with the oracle");

        ++instances;
        tilings += static_cast<long long>(all.size());
      }
    }
  }
  return ok(std::to_string(instances) + " rhythms checked, " +
            std::to_string(tilings) + " tilings matched both ways");
}

// Criterion 2: aperiodic tiles over good orders tile only with periodic
// complements; the search proves the aperiodic set empty and the oracle
// confirms it.
Outcome criterion2() {
  struct Sample {
    int n;
    std::vector<int> elems;
  };
  const Sample samples[] = {
      {12, {0, 1, 2}},    {12, {0, 1, 2, 3}}, {16, {0, 1}},
      {16, {0, 1, 4, 5}}, {16, {0, 2, 4, 6}}, {30, {0, 1, 2}},
      {30, {0, 1, 2, 3, 4}}, {36, {0, 1, 2}}, {36, {0, 1, 2, 3}},
      {60, {0, 1, 2}},    {60, {0, 1, 2, 3}}};
  for (const Sample& s : samples) {
    const Rhythm a(s.n, s.elems);
    const std::string label =
        "n=" + std::to_string(s.n) + " A={" + join(s.elems) + "}";
    if (!classify_order(s.n).good) return bad(label + ": order not good");
    if (!is_aperiodic(a)) return bad(label + ": tile not aperiodic");

    CsaOptions witness;
    witness.build.aperiodicity = false;
    witness.max_solutions = 1;
    const TilingEnumeration w = run_csa(a, witness);
    if (w.solutions.size() != 1 ||
        !verify_tiling(a, Rhythm(s.n, w.solutions[0])))
      return bad(label + ": no periodic complement found");

    const TilingEnumeration e = run_csa(a);
    if (e.status != EnumerationStatus::complete || !e.classes.empty())
      return bad(label + ": aperiodic classes reported");
    if (exists_aperiodic_complement(a).answer != 0)
      return bad(label + ": feasibility query did not answer no");

    const auto all = enumerate_complements_bruteforce(a, true);
    if (all.empty()) return bad(label + ": oracle found no complement");
    for (const auto& b : all)
      if (is_aperiodic(Rhythm(s.n, b)))
        return bad(label + ": oracle found an aperiodic complement");
  }
  return ok("11 tiles over the orders 12, 16, 30, 36, 60");
}

struct ClassExpectation {
  int translation_classes;
  int affine_classes;
  long long aperiodic_anchored;
};

// Shared by criteria 3 and 4: enumerate both ways, reconstruct full
// solution sets from the class orbits and compare with the oracle.
Outcome check_counts(const Rhythm& tile, const ClassExpectation& expect,
                     const SetOfSets& oracle_aperiodic,
                     const std::string& label) {
  const TilingEnumeration et = run_csa(tile);
  if (et.status != EnumerationStatus::complete)
    return bad(label + ": enumeration did not terminate");
  if (static_cast<int>(et.classes.size()) != expect.translation_classes)
    return bad(label + ": " + std::to_string(et.classes.size()) +
               " translation classes, expected " +
               std::to_string(expect.translation_classes));

  long long anchored_total = 0;
  SetOfSets reconstructed;
  for (const TilingClass& c : et.classes) {
    const Rhythm rep(tile.period(), c.representative);
    if (!verify_tiling(tile, rep) || !is_aperiodic(rep))
      return bad(label + ": class representative {" +
                 join(c.representative) + "} invalid");
    anchored_total += c.anchored_orbit_size;
    for (const auto& member :
         orbit_index_sets(rep, EquivalenceMode::translation))
      reconstructed.insert(member);
  }
  if (anchored_total != expect.aperiodic_anchored)
    return bad(label + ": anchored orbit sizes sum to " +
               std::to_string(anchored_total) + ", expected " +
               std::to_string(expect.aperiodic_anchored));
  if (reconstructed != oracle_aperiodic)
    return bad(label + ": class orbits do not match the oracle set");

  CsaOptions affine;
  affine.mode = EquivalenceMode::affine;
  const TilingEnumeration ea = run_csa(tile, affine);
  if (ea.status != EnumerationStatus::complete ||
      static_cast<int>(ea.classes.size()) != expect.affine_classes)
    return bad(label + ": " + std::to_string(ea.classes.size()) +
               " affine classes, expected " +
               std::to_string(expect.affine_classes));
  long long translation_total = 0;
  SetOfSets affine_reconstructed;
  for (const TilingClass& c : ea.classes) {
    translation_total += c.translation_classes;
    for (const auto& member : orbit_index_sets(
             Rhythm(tile.period(), c.representative), EquivalenceMode::affine))
      affine_reconstructed.insert(member);
  }
  if (translation_total != expect.translation_classes)
    return bad(label + ": affine classes split into " +
               std::to_string(translation_total) +
               " translation classes, expected " +
               std::to_string(expect.translation_classes));
  if (affine_reconstructed != oracle_aperiodic)
    return bad(label + ": affine orbits do not match the oracle set");
  return ok("");
}

// Criterion 3: period 72.  The complements of the size-6 tile split into
// 6 translation classes in 2 affine classes; the size-12 tile found through
// its divisor set gives 3 classes in 1.
Outcome criterion3() {
  const Rhythm b6(72, kB72);
  const auto all = enumerate_complements_bruteforce(b6, true);
  if (all.size() != 216)
    return bad("oracle found " + std::to_string(all.size()) +
               " complements of the size-6 tile, expected 216");
  SetOfSets aper;
  for (const auto& b : all)
    if (is_aperiodic(Rhythm(72, b))) aper.insert(b);
  if (aper.size() != 72)
    return bad(std::to_string(aper.size()) +
               " aperiodic complements, expected 72");

  const std::vector<long long> target = {2, 8, 9, 18, 72};
  std::vector<std::vector<int>> with_target;
  for (const auto& b : all)
    if (cm_report(Rhythm(72, b)).r_set == target) with_target.push_back(b);
  if (with_target.size() != 72)
    return bad(std::to_string(with_target.size()) +
               " complements carry the divisor set 2,8,9,18,72; expected 72");
  if (with_target.front() != kA72)
    return bad("first complement with that divisor set is {" +
               join(with_target.front()) + "}");
  const Rhythm a12(72, kA72);

  SetOfSets a12_aper;
  for (const auto& b : enumerate_complements_bruteforce(a12, true))
    if (is_aperiodic(Rhythm(72, b))) a12_aper.insert(b);
  const Outcome forward =
      check_counts(a12, {3, 1, 18}, a12_aper, "size-12 tile");
  if (!forward.pass) return forward;

  const Outcome reverse = check_counts(b6, {6, 2, 72}, aper, "size-6 tile");
  if (!reverse.pass) return reverse;

  // single-solution cuts agree solution by solution
  CsaOptions solo;
  solo.cut_whole_orbit = false;
  const TilingEnumeration es = run_csa(b6, solo);
  if (es.status != EnumerationStatus::complete ||
      to_set(es.solutions) != aper)
    return bad("single-solution cuts disagree with the oracle");

  return ok("size-12 tile: 3 classes (1 affine); size-6 tile: 6 (2); all 72 "
            "aperiodic complements matched");
}

// Criterion 4: period 120, divisor set {2,5,8,10,15,30,40,120}; class
// counts 8 (2) and, reversed, 18 (4), cross-checked against the oracle.
Outcome criterion4() {
  const Rhythm b6(120, kB120);
  const auto all = enumerate_complements_bruteforce(b6, true);
  if (all.size() != 1944)
    return bad("oracle found " + std::to_string(all.size()) +
               " complements of the size-6 tile, expected 1944");
  SetOfSets aper;
  for (const auto& b : all)
    if (is_aperiodic(Rhythm(120, b))) aper.insert(b);
  if (aper.size() != 360)
    return bad(std::to_string(aper.size()) +
               " aperiodic complements, expected 360");

  const std::vector<long long> target = {2, 5, 8, 10, 15, 30, 40, 120};
  std::vector<std::vector<int>> with_target;
  for (const auto& b : all)
    if (cm_report(Rhythm(120, b)).r_set == target) with_target.push_back(b);
  if (with_target.size() != 360)
    return bad(std::to_string(with_target.size()) +
               " complements carry the target divisor set, expected 360");
  if (with_target.front() != kA120)
    return bad("first complement with the target divisor set is {" +
               join(with_target.front()) + "}");
  const Rhythm a20(120, kA120);

  SetOfSets a20_aper;
  for (const auto& b : enumerate_complements_bruteforce(a20, true))
    if (is_aperiodic(Rhythm(120, b))) a20_aper.insert(b);
  if (a20_aper.size() != 48)
    return bad(std::to_string(a20_aper.size()) +
               " aperiodic complements of the size-20 tile, expected 48");

  const Outcome forward =
      check_counts(a20, {8, 2, 48}, a20_aper, "size-20 tile");
  if (!forward.pass) return forward;
  const Outcome reverse = check_counts(b6, {18, 4, 360}, aper, "size-6 tile");
  if (!reverse.pass) return reverse;

  return ok("size-20 tile: 8 classes (2 affine); size-6 tile: 18 (4); all "
            "360 aperiodic complements matched");
}

// Criterion 5: both divisor conditions on every tiling pair the other
// criteria touch: the full small sweep plus both period-72 and period-120
// factors, pairs taken from the oracle.
Outcome criterion5() {
  long long pairs = 0;
  std::string err;
  auto sweep = [&](const Rhythm& a) -> bool {
    for (const auto& b : enumerate_complements_bruteforce(a, true)) {
      if (!cm_pair_ok(a, Rhythm(a.period(), b), err)) {
        err += " (tile " + format_rhythm(a) + ")";
        return false;
      }
      ++pairs;
    }
    return true;
  };
  for (int n : {4, 6, 8, 9, 12, 16, 18}) {
    for (int size = 1; size <= 4; ++size) {
      if (n % size != 0) continue;
      for (const auto& elems : anchored_subsets(n, size))
        if (!sweep(Rhythm(n, elems))) return bad(err);
    }
  }
  for (const Rhythm& tile : {Rhythm(72, kB72), Rhythm(72, kA72),
                             Rhythm(120, kB120), Rhythm(120, kA120)})
    if (!sweep(tile)) return bad(err);
  return ok(std::to_string(pairs) + " tiling pairs satisfy t1, and t2 "
            "wherever at most two primes divide the cardinality");
}

// Criterion 6: product identities and degrees of the cyclotomic
// polynomials up to 200.
Outcome criterion6() {
  for (int n = 1; n <= 200; ++n) {
    IntPoly full = IntPoly::monomial(0);
    IntPoly proper = IntPoly::monomial(0);
    for (int d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      const IntPoly phi = cyclotomic(d);
      if (phi.degree() != phi_by_gcd(d))
        return bad("degree of the " + std::to_string(d) +
                   "th cyclotomic polynomial is " +
                   std::to_string(phi.degree()));
      full = full * phi;
      if (d > 1) proper = proper * phi;
    }
    if (!(full == IntPoly::cycle(n)))
      return bad("divisor product misses x^" + std::to_string(n) + " - 1");
    if (!(proper == IntPoly(std::vector<BigInt>(n, 1))))
      return bad("proper divisor product misses the length-" +
                 std::to_string(n) + " all-ones polynomial");
  }
  return ok("both products and all degrees verified for n up to 200");
}

// Criterion 7: the period-1050 instance, attempted within a wall-clock
// budget (VUZA_ACCEPT_BUDGET seconds, default 60); when undecided, the
// solver-ready program export stands in.  The period-27225 instance is
// export-only.
Outcome criterion7() {
  const Rhythm a1050(1050, kA1050);
  const double budget = env_budget(60.0);
  const ExistsResult r = exists_aperiodic_complement(a1050, budget);
  std::string route;
  if (r.answer == 0) {
    route = "decided: no aperiodic complement";
  } else if (r.answer == 1) {
    return bad("found an aperiodic complement; expected none");
  } else {
    const ConstraintSystem sys = build_master_problem(a1050);
    const std::string lp = export_lp(sys);
    const LpProgram parsed = parse_lp(lp);
    if (parsed.rows.size() != sys.rows.size() ||
        parsed.binaries.size() != static_cast<size_t>(sys.var_count()))
      return bad("period-1050 export does not round-trip");
    if (!write_file("acceptance_1050.lp", lp))
      return bad("cannot write acceptance_1050.lp");
    route = "undecided in " + std::to_string(budget) +
            "s; exported acceptance_1050.lp (" +
            std::to_string(sys.var_count()) + " variables, " +
            std::to_string(sys.rows.size()) + " rows)";
  }

  const Rhythm big(27225, kA27225);
  const ConstraintSystem sys = build_master_problem(big);
  const std::string lp = export_lp(sys);
  if (lp.rfind("Minimize\n", 0) != 0 || lp.find("\nEnd\n") == std::string::npos)
    return bad("period-27225 export malformed");
  const LpProgram parsed = parse_lp(lp);
  if (parsed.rows.size() != sys.rows.size() ||
      parsed.binaries.size() != static_cast<size_t>(sys.var_count()))
    return bad("period-27225 export does not round-trip");
  if (!write_file("acceptance_27225.lp", lp))
    return bad("cannot write acceptance_27225.lp");
  return ok(route + "; period-27225 program exported (" +
            std::to_string(sys.var_count()) + " variables, " +
            std::to_string(sys.rows.size()) + " rows)");
}

// Criterion 8: repeated runs are byte-identical once timing fields are
// dropped: the small sweep rerun plus both period-72 enumerations.
Outcome criterion8() {
  for (int n : {4, 6, 8, 9, 12}) {
    for (int size = 1; size <= 4; ++size) {
      if (n % size != 0) continue;
      for (const auto& elems : anchored_subsets(n, size)) {
        const Rhythm a(n, elems);
        CsaOptions solo;
        solo.cut_whole_orbit = false;
        if (enumeration_json(run_csa(a, solo), false) !=
            enumeration_json(run_csa(a, solo), false))
          return bad("n=" + std::to_string(n) + " A={" + join(elems) +
                     "}: repeated runs differ");
      }
    }
  }
  const Rhythm b6(72, kB72);
  if (enumeration_json(run_csa(b6), false) !=
      enumeration_json(run_csa(b6), false))
    return bad("period-72 translation runs differ");
  CsaOptions affine;
  affine.mode = EquivalenceMode::affine;
  const Rhythm a12(72, kA72);
  if (enumeration_json(run_csa(a12, affine), false) !=
      enumeration_json(run_csa(a12, affine), false))
    return bad("period-72 affine runs differ");
  return ok("small sweep and both period-72 enumerations byte-identical");
}

// Criterion 9: per-iteration timing data at period 180 under a one-hour
// cap: at least 10 iterations, all strictly positive, written as CSV.
Outcome criterion9() {
  const Rhythm a180(180, kA180);
  CsaOptions opts;
  opts.cut_whole_orbit = false;
  opts.max_solutions = 120;
  opts.max_seconds = 3600.0;
  const TilingEnumeration e = run_csa(a180, opts);
  const size_t iterations = e.iteration_seconds.size();
  if (iterations < 10)
    return bad("only " + std::to_string(iterations) + " iterations");
  for (double t : e.iteration_seconds)
    if (!(t > 0.0)) return bad("nonpositive iteration time recorded");
  const std::string csv = timings_csv(e);
  const long rows = std::count(csv.begin(), csv.end(), '\n');
  if (rows != static_cast<long>(iterations) + 1)
    return bad("CSV row count disagrees with the iteration count");
  if (!write_file("acceptance_tail_180.csv", csv))
    return bad("cannot write acceptance_tail_180.csv");
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.2f", e.totals.seconds);
  return ok(std::to_string(iterations) + " iterations in " + buffer +
            "s, CSV written to acceptance_tail_180.csv");
}

}  // namespace

int main(int argc, char** argv) {
  struct Entry {
    int id;
    const char* name;
    Outcome (*fn)();
  };
  const Entry entries[] = {
      {1, "oracle equivalence over all small instances", criterion1},
      {2, "good orders yield no aperiodic complement", criterion2},
      {3, "period-72 class counts", criterion3},
      {4, "period-120 class counts", criterion4},
      {5, "divisor conditions on every tiling pair", criterion5},
      {6, "cyclotomic product identities up to 200", criterion6},
      {7, "large-instance feasibility and export", criterion7},
      {8, "byte-identical repeated runs", criterion8},
      {9, "per-iteration timing data at period 180", criterion9},
  };

  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > 9) {
      std::fprintf(stderr, "usage: %s [1..9]\n", argv[0]);
      return 2;
    }
  }

  bool all_pass = true;
  for (const Entry& entry : entries) {
    if (only != 0 && entry.id != only) continue;
    Outcome outcome;
    try {
      outcome = entry.fn();
    } catch (const std::exception& e) {
      outcome = bad(std::string("exception: ") + e.what());
    }
    std::printf("[%s] criterion %d: %s%s%s\n",
                outcome.pass ? "PASS" : "FAIL", entry.id, entry.name,
                outcome.detail.empty() ? "" : " -- ",
                outcome.detail.c_str());
    std::fflush(stdout);
    all_pass = all_pass && outcome.pass;
  }
  return all_pass ? 0 : 1;
}
