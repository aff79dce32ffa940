#pragma once

#include "degcrit/numeric.hpp"

#include <cstddef>
#include <vector>

namespace degcrit {

using Vec = std::vector<Rational>;

// Subspace of Q^d held in canonical form: the reduced row echelon basis.
// Canonical form makes operator== decide genuine equality of subspaces.
class Subspace {
 public:
  // The zero subspace of Q^d.
  static Subspace zero(std::size_t ambient_dim);
  // All of Q^d.
  static Subspace full(std::size_t ambient_dim);
  // Row space of the given generators (need not be independent). Throws
  // MalformedFiltrationError if a generator has the wrong length.
  static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& generators);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  // Reduced row echelon basis, pivot columns strictly increasing.
  const std::vector<Vec>& basis() const { return basis_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& lhs, const Subspace& rhs) {
    return lhs.ambient_dim_ == rhs.ambient_dim_ && lhs.basis_ == rhs.basis_;
  }
  friend bool operator!=(const Subspace& lhs, const Subspace& rhs) {
    return !(lhs == rhs);
  }

 private:
  Subspace(std::size_t ambient_dim, std::vector<Vec> echelon_basis)
      : ambient_dim_(ambient_dim), basis_(std::move(echelon_basis)) {}
  std::size_t ambient_dim_ = 0;
  std::vector<Vec> basis_;
};

// Exact intersection via the row-space splitting trick: echelonize the
// stacked [basis | basis] / [basis | 0] block matrix and read the
// intersection off the rows whose left half vanished.
Subspace intersect(const Subspace& a, const Subspace& b);

// Descending chain of subspaces V = W_1 >= W_2 >= ... >= W_h, always stored
// with the full ambient space first. Construction validates the containments
// and throws MalformedFiltrationError otherwise. Repeated (equal) levels are
// allowed.
class Filtration {
 public:
  static Filtration from_levels(std::size_t ambient_dim,
                                const std::vector<Subspace>& levels);

  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<Subspace>& chain() const { return chain_; }

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<Subspace> chain_;
};

// A basis of the common ambient space adapted to two filtrations at once:
// every level of either chain is spanned by exactly the basis vectors it
// contains. Built by refining the first chain to a complete flag and
// recursing on a hyperplane, mirroring the inductive construction that
// powers the dimension bookkeeping. per_level_counts_* report, for each
// level of the respective original chain, how many basis vectors lie in it
// (equal to the level's dimension when the construction succeeded).
struct AdaptedBasis {
  std::vector<Vec> vectors;  // a basis of Q^d, in construction order
  std::vector<std::size_t> per_level_counts_a;
  std::vector<std::size_t> per_level_counts_b;
};

// Requires matching ambient dimensions (PreconditionError) and d >= 1.
AdaptedBasis common_adapted_basis(const Filtration& fa, const Filtration& fb);

// Checks the adapted property directly: for every level W of either chain,
// the vectors of `basis` lying in W number dim W and are independent.
bool verify_adapted(const std::vector<Vec>& basis, const Filtration& fa,
                    const Filtration& fb);

// Weighted-sum floor for capacity-bounded level dimensions: given caps
// U_1..U_h, a total demand d and a level cutoff r with
// U_1 + ... + U_r <= d, any x with 0 <= x_j <= U_j and sum x_j = d has
//   sum_j j x_j >= sum_{j<=r} j U_j  restricted to the first r levels —
// returned here as that right-hand side. Preconditions are enforced
// (PreconditionError): r <= h, caps non-negative, prefix sum <= d.
Integer weighted_sum_lower_bound(const std::vector<Integer>& caps,
                                 const Integer& demand, std::size_t r);

// Exact minimum of sum_j j x_j over real 0 <= x_j <= U_j with
// sum x_j = demand, attained by greedy filling from the cheapest level with a
// fractional remainder on the boundary level (integral whenever the inputs
// are, but typed Rational to match the relaxed problem). Throws
// InfeasibleError when the caps cannot absorb the demand, PreconditionError
// for negative demand or caps.
Rational min_weighted_sum(const std::vector<Integer>& caps, const Integer& demand);

// sum_j (j - 1 - offset) x_j for 1-based levels; the order bookkeeping sum
// used by the degree-level models. x_j >= 0 required.
Integer order_sum(const std::vector<Integer>& dims, const Integer& offset);

}  // namespace degcrit
