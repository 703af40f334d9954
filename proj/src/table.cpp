#include <sstream>

#include "xorkneser/analysis.hpp"
#include "xorkneser/constructions.hpp"
#include "xorkneser/errors.hpp"

namespace xorkneser {

namespace {

Family extend_to(Family f, int ell) {
  std::vector<int> offsets(f.layout().k());
  for (int i = 0; i < f.layout().k(); ++i)
    offsets[i] = i;
  while (f.layout().ell() < ell)
    f = extend_power(f, offsets);
  return f;
}

} // namespace

std::pair<Family, std::string> best_construction(int n, int k, int ell) {
  std::vector<std::pair<Family, std::string>> candidates;
  candidates.emplace_back(kneser_family(n, k, ell), "kneser");
  auto attempt = [&](const char *name, auto &&build) {
    try {
      Family f = build();
      if (verify_family(f).valid)
        candidates.emplace_back(std::move(f), name);
    } catch (const PreconditionError &) {
    } catch (const BudgetError &) {
    }
  };
  if (ell >= 2 && k <= 8 && n >= f2_lower_min_n(k))
    attempt("f2_lower", [&] { return extend_to(construct_f2_lower(n, k), ell); });
  if (k == 1 && ell >= 3)
    attempt("core", [&] {
      const std::vector<int> sizes(ell, n);
      return core_to_family(build_core(ell), sizes);
    });
  if (k == 1 && n >= 3 && n % 2 == 1 && ell >= n + 1)
    attempt("plane", [&] { return extend_to(plane_family(n), ell); });
  const int t = floor_log2(static_cast<std::uint64_t>(ell) + 1);
  if (t >= 2 && k >= t)
    attempt("matrix", [&] { return extend_to(matrix_family(n, k, t), ell); });

  std::size_t best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i)
    if (candidates[i].first.size() > candidates[best].first.size())
      best = i;
  return std::move(candidates[best]);
}

std::pair<BigInt, std::string> best_upper_bound(int n, int k, int ell) {
  std::pair<BigInt, std::string> best{power_upper(n, k, ell), "power_chain"};
  auto offer = [&](BigInt value, const char *name) {
    if (value < best.first)
      best = {std::move(value), name};
  };
  if (k == 1 && ell >= 2)
    offer(BigInt(static_cast<long long>(ell) * n - ell + 1), "rank");
  if (ell == 2 && k >= 2) {
    const BigRational u = upper_c2(n, k);
    offer(BigInt(boost::multiprecision::numerator(u) / boost::multiprecision::denominator(u)),
          "c2_upper");
  }
  return best;
}

bool TableRow::tight() const {
  return solved && solved->status == CliqueStatus::Exact && BigInt(solved->size) == upper_formula;
}

bool TableRow::consistent() const {
  if (BigInt(lower_construction) > upper_formula)
    return false;
  if (!solved)
    return true;
  if (BigInt(solved->size) > upper_formula)
    return false;
  return solved->status != CliqueStatus::Exact || lower_construction <= solved->size;
}

TableRow table_row(int n, int k, int ell, const TableOptions &options) {
  TableRow row;
  row.ell = ell;
  row.n = n;
  row.k = k;
  auto [family, source] = best_construction(n, k, ell);
  row.lower_construction = family.size();
  row.lower_source = std::move(source);
  try {
    row.solved = brute_force_f(n, k, ell, options.clique, options.vertex_budget);
  } catch (const BudgetError &) {
  }
  std::tie(row.upper_formula, row.upper_source) = best_upper_bound(n, k, ell);
  return row;
}

std::string table_csv(const std::vector<TableRow> &rows) {
  std::ostringstream out;
  out << "ell,n,k,lower_construction,exact_or_lb,upper_formula,tight\n";
  for (const auto &r : rows) {
    out << r.ell << ',' << r.n << ',' << r.k << ',' << r.lower_construction << ',';
    if (r.solved)
      out << (r.solved->status == CliqueStatus::Exact ? "" : ">=") << r.solved->size;
    out << ',' << r.upper_formula << ',' << (r.tight() ? "yes" : "no") << '\n';
  }
  return out.str();
}

} // namespace xorkneser
