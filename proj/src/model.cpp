#include "vuza/model.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace vuza {

namespace {

const char* tag_name(RowTag t) {
  switch (t) {
    case RowTag::c1: return "c1";
    case RowTag::c2: return "c2";
    case RowTag::c3: return "c3";
    case RowTag::c4: return "c4";
    case RowTag::c5: return "c5";
    case RowTag::c6: return "c6";
    case RowTag::c7: return "c7";
    case RowTag::anchor: return "anchor";
    case RowTag::cardinality: return "cardinality";
    case RowTag::cut: return "cut";
  }
  return "?";
}

std::vector<int> prime_list(int n) {
  std::vector<int> primes;
  int rest = n;
  for (int p = 2; static_cast<long long>(p) * p <= rest; ++p)
    if (rest % p == 0) {
      primes.push_back(p);
      while (rest % p == 0) rest /= p;
    }
  if (rest > 1) primes.push_back(rest);
  return primes;
}

}  // namespace

std::string ConstraintSystem::var_name(int id) const {
  const Variable& v = variables.at(id);
  switch (v.kind) {
    case VarKind::b: return "b" + std::to_string(v.index);
    case VarKind::r: return "r" + std::to_string(v.index);
    case VarKind::u:
      return "u" + std::to_string(v.family) + "_" + std::to_string(v.index);
  }
  return "?";
}

ConstraintSystem build_master_problem(const Rhythm& a,
                                      const BuildOptions& opts) {
  const int n = a.period();
  if (!a.contains(0))
    throw std::invalid_argument("inner rhythm must contain 0");
  if (n % a.size() != 0)
    throw std::invalid_argument("inner rhythm size must divide the period");

  ConstraintSystem sys;
  sys.n = n;
  sys.n_a = a.size();
  sys.n_b = n / a.size();

  std::vector<char> ind(n, 0);
  for (int e : a.elements()) ind[e] = 1;

  for (int i = 0; i < n; ++i)
    sys.variables.push_back({VarKind::b, i, 0});
  for (int i = 0; i < 2 * n - 1; ++i)
    sys.variables.push_back({VarKind::r, i, 0});
  const auto b_id = [](int i) { return i; };
  const auto r_id = [n](int i) { return n + i; };

  // c1: the coefficient of x^i in p_a * p_b for i < n.
  for (int i = 0; i < n; ++i) {
    LinearRow row{RowTag::c1, Relation::eq, 0, {}};
    for (int j = 0; j <= i; ++j)
      if (ind[i - j]) row.terms.push_back({b_id(j), 1});
    row.terms.push_back({r_id(i), -1});
    sys.rows.push_back(std::move(row));
  }
  // c2: the coefficient of x^{n+i}; only b_l with l > i can contribute.
  for (int i = 0; i + 1 < n; ++i) {
    LinearRow row{RowTag::c2, Relation::eq, 0, {}};
    for (int l = i + 1; l < n; ++l)
      if (ind[i + n - l]) row.terms.push_back({b_id(l), 1});
    row.terms.push_back({r_id(n + i), -1});
    sys.rows.push_back(std::move(row));
  }
  // c3: exactly one of each coefficient pair survives the reduction.  The
  // partner of r_{n-1} would be r_{2n-1}, which is identically zero.
  for (int i = 0; i < n; ++i) {
    LinearRow row{RowTag::c3, Relation::eq, 1, {}};
    row.terms.push_back({r_id(i), 1});
    if (i + n <= 2 * n - 2) row.terms.push_back({r_id(i + n), 1});
    sys.rows.push_back(std::move(row));
  }

  if (opts.aperiodicity) {
    struct Family {
      int prime_pos;  // 1-based among the primes of n
      int p;
      int m;
    };
    std::vector<Family> families;
    auto primes = prime_list(n);
    for (size_t k = 0; k < primes.size(); ++k)
      if (sys.n_b % primes[k] == 0)
        families.push_back({static_cast<int>(k) + 1, primes[k],
                            n / primes[k]});
    size_t first_u = opts.replace_first_family && !families.empty() ? 1 : 0;

    if (first_u == 1) {
      const Family& f = families.front();
      LinearRow row{RowTag::c4, Relation::le, sys.n_b / f.p - 1, {}};
      for (int i = 0; i < f.m; ++i) row.terms.push_back({b_id(i), 1});
      sys.rows.push_back(std::move(row));
    }

    std::map<int, int> u_base;  // prime_pos -> id of u^{(j)}_0
    for (size_t k = first_u; k < families.size(); ++k) {
      const Family& f = families[k];
      u_base[f.prime_pos] = sys.var_count();
      for (int i = 0; i < f.m; ++i)
        sys.variables.push_back({VarKind::u, i, f.prime_pos});
    }
    for (RowTag tag : {RowTag::c5, RowTag::c6}) {
      for (size_t k = first_u; k < families.size(); ++k) {
        const Family& f = families[k];
        for (int i = 0; i < f.m; ++i) {
          LinearRow row{tag,
                        tag == RowTag::c5 ? Relation::le : Relation::ge,
                        tag == RowTag::c5 ? f.p - 1 : 0,
                        {}};
          for (int kk = 0; kk < f.p; ++kk)
            row.terms.push_back({b_id(i + kk * f.m), 1});
          row.terms.push_back({u_base[f.prime_pos] + i, -f.p});
          sys.rows.push_back(std::move(row));
        }
      }
    }
    for (size_t k = first_u; k < families.size(); ++k) {
      const Family& f = families[k];
      LinearRow row{RowTag::c7, Relation::le, sys.n_b / f.p - 1, {}};
      for (int i = 0; i < f.m; ++i)
        row.terms.push_back({u_base[f.prime_pos] + i, 1});
      sys.rows.push_back(std::move(row));
    }
  }

  sys.rows.push_back({RowTag::anchor, Relation::eq, 1, {{b_id(0), 1}}});
  if (opts.include_cardinality) {
    LinearRow row{RowTag::cardinality, Relation::eq, sys.n_b, {}};
    for (int i = 0; i < n; ++i) row.terms.push_back({b_id(i), 1});
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

LinearRow orbit_cut(const ConstraintSystem& sys,
                    const std::vector<int>& index_set) {
  if (static_cast<int>(index_set.size()) != sys.n_b)
    throw std::invalid_argument("cut index set must have n_B elements");
  std::vector<int> sorted = index_set;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("cut index set must be distinct");
  if (sorted.front() < 0 || sorted.back() >= sys.n)
    throw std::invalid_argument("cut index out of range [0, n)");
  LinearRow row{RowTag::cut, Relation::le, sys.n_b - 1, {}};
  for (int i : sorted) row.terms.push_back({i, 1});
  return row;
}

std::vector<LinearRow> cuts_for_solution(const ConstraintSystem& sys,
                                         const Rhythm& b,
                                         EquivalenceMode mode) {
  if (b.period() != sys.n)
    throw std::invalid_argument("solution period does not match the system");
  std::vector<LinearRow> cuts;
  for (const auto& member : orbit_index_sets(b, mode))
    cuts.push_back(orbit_cut(sys, member));
  return cuts;
}

namespace {

void append_row_lp(std::string& out, const ConstraintSystem& sys,
                   const LinearRow& row, int ordinal) {
  out += " ";
  out += tag_name(row.tag);
  out += "_" + std::to_string(ordinal) + ":";
  for (size_t t = 0; t < row.terms.size(); ++t) {
    long long c = row.terms[t].coeff;
    if (c >= 0)
      out += t == 0 ? " " : " + ";
    else
      out += t == 0 ? " -" : " - ";
    if (c != 1 && c != -1) out += std::to_string(c < 0 ? -c : c) + " ";
    out += sys.var_name(row.terms[t].var);
  }
  switch (row.rel) {
    case Relation::eq: out += " = "; break;
    case Relation::le: out += " <= "; break;
    case Relation::ge: out += " >= "; break;
  }
  out += std::to_string(row.rhs);
  out += "\n";
}

}  // namespace

std::string export_lp(const ConstraintSystem& sys) {
  std::string out;
  out.reserve(64 * sys.rows.size() + 16 * sys.variables.size() + 64);
  out += "Minimize\n obj: 0\nSubject To\n";
  std::map<RowTag, int> ordinals;
  for (const LinearRow& row : sys.rows)
    append_row_lp(out, sys, row, ordinals[row.tag]++);
  out += "Binary\n";
  for (int id = 0; id < sys.var_count(); ++id)
    out += " " + sys.var_name(id) + "\n";
  out += "End\n";
  return out;
}

std::string system_summary_json(const ConstraintSystem& sys) {
  std::map<std::string, int> by_tag;
  for (const LinearRow& row : sys.rows) ++by_tag[tag_name(row.tag)];
  int nb = 0, nr = 0, nu = 0;
  for (const Variable& v : sys.variables) {
    if (v.kind == VarKind::b) ++nb;
    else if (v.kind == VarKind::r) ++nr;
    else ++nu;
  }
  std::string out = "{\"n\":" + std::to_string(sys.n) +
                    ",\"n_A\":" + std::to_string(sys.n_a) +
                    ",\"n_B\":" + std::to_string(sys.n_b) + ",\"rows_by_tag\":{";
  bool first = true;
  for (const auto& [tag, count] : by_tag) {
    if (!first) out += ",";
    first = false;
    out += "\"" + tag + "\":" + std::to_string(count);
  }
  out += "},\"variables\":{\"b\":" + std::to_string(nb) +
         ",\"r\":" + std::to_string(nr) + ",\"u\":" + std::to_string(nu) +
         ",\"total\":" + std::to_string(sys.var_count()) + "}}";
  return out;
}

}  // namespace vuza
