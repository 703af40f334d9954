#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "xorkneser/setsystem.hpp"

namespace xorkneser {

// ---------------------------------------------------------------------------
// Two-block lower-bound family
// ---------------------------------------------------------------------------

// Smallest n admitted by construct_f2_lower for this k: (C(2k,k)-2) k^2 / 2,
// and at least k.
int f2_lower_min_n(int k);

// Size of construct_f2_lower(n, k): floor(n/k) + C(2k,k) k/2 - k.
std::size_t f2_lower_size(int n, int k);

// Semi-intersecting family on blocks A (block 0) and B (block 1).
//
// K = {0..2k-1} ⊂ A is split into complementary k-set pairs (H_i, G_i),
// H_i ranging over the k-subsets of K that contain element 0 in
// lexicographic order, so H_1 = {0..k-1}. For i = 2..m the lattice L_i is
// the run of k^2 consecutive elements of B starting at (i-2) k^2; row r is
// {r k .. r k + k - 1} and column c the elements congruent to c mod k.
// Members are H_i ∪ row and G_i ∪ column for every lattice, plus H_1 ∪ F_j
// for the d leftover disjoint k-sets F_j after the lattices.
//
// Throws PreconditionError when n < f2_lower_min_n(k).
Family construct_f2_lower(int n, int k);

// ---------------------------------------------------------------------------
// Cores
// ---------------------------------------------------------------------------

// An ell-core over a local universe {0..|U|-1}. Element u lies in class
// class_of[u]; sets[i] is B_i, sorted ascending.
struct Core {
  int ell = 0;
  std::vector<int> class_of;
  std::vector<std::vector<int>> sets;

  std::size_t universe_size() const noexcept { return class_of.size(); }
  std::vector<std::vector<int>> classes() const;
  // Class sizes |U ∩ A_i| in class order.
  std::vector<int> type() const;
};

// First violated core condition, or nullopt if the core is valid:
// |B_i| = ell-1, B_i misses class i and meets every other class once, and
// |B_i ∩ B_j| + ell is odd for all i, j.
std::optional<std::string> core_violation(const Core &core);

Core core3();
Core core4();
Core core5();

// Reorders classes: class i of the result is class order[i] of the input
// (and B_i follows its class).
Core permute_classes(const Core &core, std::span<const int> order);

// Moves the last class to the front.
Core rotate_classes_right(const Core &core);

// (p+q-1)-core from a p-core and a q-core. The second universe is shifted
// past the first; class p of the result is A'_p ∪ A''_1.
Core fuse(const Core &first, const Core &second);

// Valid ell-core with |U| <= 2 ell + 1 for every ell >= 3.
Core build_core(int ell);

// {B_i ∪ {x} : x ∈ A_i \ U} over a k = 1 layout with n = max(n_sizes).
// Class i occupies the first |U ∩ A_i| positions of block i; positions at or
// beyond n_sizes[i] are never used.
Family core_to_family(const Core &core, std::span<const int> n_sizes);

// ---------------------------------------------------------------------------
// Projective planes
// ---------------------------------------------------------------------------

// The q^2 lines of PG(2,q) avoiding v = (1:0:0), over blocks formed by the
// q+1 lines through v with v removed. Requires q an odd prime.
Family plane_family(int q);

// ---------------------------------------------------------------------------
// Power-of-two-minus-one construction
// ---------------------------------------------------------------------------

struct MatrixPlan {
  int t = 0;
  // (2^t - 1) x t; row r is the binary expansion of r + 1 (bit β in column β).
  std::vector<std::vector<int>> h;
  // Same shape; c[r][β] > 0 exactly where h[r][β] = 1 and each row sums to k.
  std::vector<std::vector<int>> c;
};

MatrixPlan make_matrix_plan(int k, int t);

// (2^t - 1)-semi-intersecting family of size floor(n/k)^t. Requires t >= 2,
// k >= t, n >= k.
Family matrix_family(int n, int k, int t);

// Appends a block and adds the same k-set (offsets into the new block) to
// every member.
Family extend_power(const Family &family, std::span<const int> extra_offsets);

// floor(n/k) pairwise disjoint k-sets in block 0, every other block fixed to
// its first k elements.
Family kneser_family(int n, int k, int ell);

} // namespace xorkneser
