#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xorkneser/combinatorics.hpp"
#include "xorkneser/setsystem.hpp"
#include "xorkneser/solver.hpp"

namespace xorkneser {

// ---------------------------------------------------------------------------
// Slack in the cross-intersecting matching bound
// ---------------------------------------------------------------------------

// γ(k) as defined by
//   1/(1+γ) = 1 - (k-2)(k-3)/(2 C(2k,k)) - (k-2)/C(3k,2k) - (k-2) C(2k,k)/C(3k,k).
// gamma_raw(2) = 0. Requires k >= 2.
BigRational gamma_raw(int k);

// gamma_raw with γ(2) replaced by 1/3, the value used by the two-block
// upper bound.
BigRational gamma_upper(int k);

double to_double(const BigRational &r);
std::string to_string(const BigRational &r);

// ---------------------------------------------------------------------------
// Closed-form bounds
// ---------------------------------------------------------------------------

// C(2k,k) k/2 - k: the additive gain of the two-block construction.
BigInt lower_c2(int k);

// floor(n/k) + (1 + γ(k)) k C(2k,k), with the γ(2) = 1/3 convention.
// Requires n >= 1, k >= 2.
BigRational upper_c2(int n, int k);

// (ell n - 2 ell - 1, ell n - ell + 1) for k = 1. Requires ell >= 3.
std::pair<long long, long long> t1_bounds(int n, int ell);

// Degree-chain upper bound: 2·4···ell · n^{ell/2} for even ell,
// floor(2·4···(ell-1) · n^{(ell+1)/2} / k) for odd ell.
BigInt power_upper(int n, int k, int ell);

// The summarized form 2^{floor(ell/2)} floor(ell/2)! n^{floor((ell+1)/2)}.
BigInt power_upper_summary(int n, int ell);

// floor(n/k)^{floor(log2(ell+1))}; nullopt when k < floor(log2(ell+1)).
std::optional<BigInt> power_lower(int n, int k, int ell);

// floor(log2(x)) for x >= 1.
int floor_log2(std::uint64_t x);

// ---------------------------------------------------------------------------
// Cross-intersecting matchings
// ---------------------------------------------------------------------------

struct CrossMatching {
  int k = 0;
  // groups[i] lists the d_i sets of group i; each set is a list of ground
  // elements.
  std::vector<std::vector<std::vector<int>>> groups;
};

struct MatchingReport {
  bool valid = false;
  std::string reason; // empty when valid
  std::uint64_t weight = 0; // Σ d_i (d_i - 1)
  BigRational bound;        // (1 + gamma_raw(k)) C(2k,k); zero if k < 2
  bool within_bound = false;
};

MatchingReport verify_matching(const CrossMatching &matching);

struct PermutationTypeEstimate {
  std::uint64_t samples = 0;
  std::vector<std::uint64_t> type_counts; // per group
  std::uint64_t typeless = 0;
  std::uint64_t doubly_typed = 0; // must stay zero for a valid matching
  std::vector<double> probability;    // type_counts / samples
  std::vector<double> standard_error; // sqrt(p(1-p)/samples)
};

// Samples uniform orderings π of the ground set; π has type i when some
// X, X' in group i satisfy max π(X) < min π(X'). Deterministic in
// (samples, seed). Throws UsageError when samples == 0.
PermutationTypeEstimate permutation_type_mc(const CrossMatching &matching, std::uint64_t samples,
                                            std::uint64_t seed);

// ---------------------------------------------------------------------------
// Peeling of two-block families
// ---------------------------------------------------------------------------

struct PeelRound {
  std::size_t pivot;                  // p_i, a global element of block B
  std::vector<std::size_t> containing; // Z_i, member indices
  std::vector<std::size_t> touching;   // M_i, member indices
  std::size_t d;                      // |Z_i|
  bool accounting_ok;                 // |Z_i| + |M_i| <= d + (k-1) d (d-1)
};

struct PeelingTrace {
  std::vector<PeelRound> rounds;
  std::vector<std::size_t> residual; // S_q, member indices
  // A-traces of each round: {Z ∩ A : Z ∈ Z_i}, as offsets inside block A.
  std::vector<std::vector<std::vector<int>>> a_traces;
  bool degree_exceeds_k = false; // some B-degree of the input exceeds k
  bool residual_b_disjoint = false;
  bool partition_ok = false; // |S| = |S_q| + Σ(|Z_i| + |M_i|)

  std::size_t q() const noexcept { return rounds.size(); }
  // The A-traces as a cross-intersecting matching (meaningful when q >= 2).
  CrossMatching matching(int k) const;
};

// Repeatedly removes the members through a maximum-degree element of B
// (lowest index on ties) together with the members meeting them in B, until
// the rest is pairwise disjoint in B. Requires ell = 2.
PeelingTrace peel(const Family &family);

enum class Dichotomy { Holds, Violated, Inapplicable };

// Max A-degree <= k or max B-degree <= k; Inapplicable when |S| <= 2k^3.
// Requires ell = 2.
Dichotomy degree_dichotomy(const Family &family);

// ---------------------------------------------------------------------------
// Bound tables
// ---------------------------------------------------------------------------

struct TableRow {
  int ell = 0, n = 0, k = 0;
  std::size_t lower_construction = 0; // largest verified construction
  std::string lower_source;
  std::optional<CliqueResult> solved;  // absent when the product graph is over budget
  BigInt upper_formula;                // smallest applicable closed-form upper bound
  std::string upper_source;
  bool tight() const;
  bool consistent() const; // lower <= solved <= upper
};

// Largest verified family among the constructions applicable to (n,k,ell),
// and its name.
std::pair<Family, std::string> best_construction(int n, int k, int ell);

// Smallest applicable closed-form upper bound on f_ell(n,k) and its name.
std::pair<BigInt, std::string> best_upper_bound(int n, int k, int ell);

struct TableOptions {
  CliqueOptions clique;
  std::uint64_t vertex_budget = kDefaultVertexBudget;
};

TableRow table_row(int n, int k, int ell, const TableOptions &options = {});

// CSV with header ell,n,k,lower_construction,exact_or_lb,upper_formula,tight.
// exact_or_lb is the solved value, prefixed with ">=" when the search ran out
// of budget and left empty when the graph was over the vertex budget.
std::string table_csv(const std::vector<TableRow> &rows);

} // namespace xorkneser
