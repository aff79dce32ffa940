#include "degcrit/filtration.hpp"

#include "degcrit/errors.hpp"

#include <algorithm>
#include <utility>

namespace degcrit {

namespace {

// In-place reduced row echelon form; drops zero rows; rows end up with
// leading 1s on strictly increasing pivot columns and zeros above and below
// each pivot. This is the canonical representative of the row space.
void rref(std::vector<Vec>& rows) {
  if (rows.empty()) return;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Rational lead = rows[rank][col];
    for (std::size_t c = col; c < cols; ++c) rows[rank][c] /= lead;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational factor = rows[r][col];
      for (std::size_t c = col; c < cols; ++c) {
        rows[r][c] -= factor * rows[rank][c];
      }
    }
    ++rank;
  }
  rows.resize(rank);
}

// Reduces v against an echelon basis; returns the residue (zero iff v lies in
// the span).
Vec reduce_against(const std::vector<Vec>& echelon, Vec v) {
  for (const Vec& row : echelon) {
    std::size_t pivot = 0;
    while (pivot < row.size() && row[pivot] == 0) ++pivot;
    if (pivot == row.size()) continue;
    if (v[pivot] == 0) continue;
    const Rational factor = v[pivot];
    for (std::size_t c = pivot; c < v.size(); ++c) {
      v[c] -= factor * row[c];
    }
  }
  return v;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Rational& x) { return x == 0; });
}

}  // namespace

Subspace Subspace::zero(std::size_t ambient_dim) {
  return Subspace(ambient_dim, {});
}

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<Vec> rows(ambient_dim, Vec(ambient_dim, Rational(0)));
  for (std::size_t i = 0; i < ambient_dim; ++i) rows[i][i] = 1;
  return Subspace(ambient_dim, std::move(rows));
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& generators) {
  std::vector<Vec> rows;
  for (const Vec& g : generators) {
    if (g.size() != ambient_dim) {
      throw MalformedFiltrationError(
          "generator has " + std::to_string(g.size()) +
          " coordinates in ambient dimension " + std::to_string(ambient_dim));
    }
    rows.push_back(g);
  }
  rref(rows);
  return Subspace(ambient_dim, std::move(rows));
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_dim_) {
    throw MalformedFiltrationError(
        "vector has " + std::to_string(v.size()) +
        " coordinates in ambient dimension " + std::to_string(ambient_dim_));
  }
  return is_zero_vec(reduce_against(basis_, v));
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) {
    throw MalformedFiltrationError("ambient dimension mismatch in containment check");
  }
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const Vec& v) { return contains(v); });
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw MalformedFiltrationError("ambient dimension mismatch in intersection");
  }
  const std::size_t d = a.ambient_dim();
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(d);

  // Zassenhaus: echelonize rows [u | u] for u in basis(a) stacked over
  // [w | 0] for w in basis(b). Rows whose left half is zero have right half
  // spanning the intersection.
  std::vector<Vec> block;
  for (const Vec& u : a.basis()) {
    Vec row(2 * d, Rational(0));
    for (std::size_t c = 0; c < d; ++c) {
      row[c] = u[c];
      row[d + c] = u[c];
    }
    block.push_back(std::move(row));
  }
  for (const Vec& w : b.basis()) {
    Vec row(2 * d, Rational(0));
    for (std::size_t c = 0; c < d; ++c) row[c] = w[c];
    block.push_back(std::move(row));
  }
  rref(block);

  std::vector<Vec> inter;
  for (const Vec& row : block) {
    const bool left_zero = std::all_of(row.begin(), row.begin() + d,
                                       [](const Rational& x) { return x == 0; });
    if (left_zero) {
      inter.emplace_back(row.begin() + d, row.end());
    }
  }
  return Subspace::span(d, inter);
}

Filtration Filtration::from_levels(std::size_t ambient_dim,
                                   const std::vector<Subspace>& levels) {
  Filtration out;
  out.ambient_dim_ = ambient_dim;
  out.chain_.push_back(Subspace::full(ambient_dim));
  for (const Subspace& level : levels) {
    if (level.ambient_dim() != ambient_dim) {
      throw MalformedFiltrationError(
          "level has ambient dimension " + std::to_string(level.ambient_dim()) +
          ", chain has " + std::to_string(ambient_dim));
    }
    if (out.chain_.size() == 1 && level == out.chain_.front()) {
      continue;  // caller already supplied the full space; avoid a duplicate head
    }
    if (!out.chain_.back().contains(level)) {
      throw MalformedFiltrationError(
          "level " + std::to_string(out.chain_.size()) +
          " is not contained in its predecessor");
    }
    out.chain_.push_back(level);
  }
  return out;
}

namespace {

// Vectors from `pool` that greedily extend `base` to span base + pool,
// in pool order. Deterministic.
std::vector<Vec> extension_vectors(const Subspace& base, const std::vector<Vec>& pool) {
  std::vector<Vec> ext;
  std::vector<Vec> working = base.basis();
  rref(working);
  for (const Vec& v : pool) {
    if (!is_zero_vec(reduce_against(working, v))) {
      ext.push_back(v);
      working.push_back(v);
      rref(working);
    }
  }
  return ext;
}

// Refine a descending chain into a complete flag (one dimension drop per
// step) that passes through every chain level, from the full space down to 0.
std::vector<Subspace> complete_flag(const Filtration& f) {
  const std::size_t d = f.ambient_dim();
  std::vector<Subspace> flag;
  flag.push_back(Subspace::full(d));
  for (std::size_t t = 1; t < f.chain().size(); ++t) {
    const Subspace& level = f.chain()[t];
    const Subspace& prev = flag.back();
    if (level == prev) continue;
    // Intermediate spaces: level plus the first j extension vectors that
    // climb back up to prev.
    const std::vector<Vec> ext = extension_vectors(level, prev.basis());
    for (std::size_t j = ext.size(); j-- > 1;) {
      std::vector<Vec> gens = level.basis();
      gens.insert(gens.end(), ext.begin(), ext.begin() + j);
      flag.push_back(Subspace::span(d, gens));
    }
    flag.push_back(level);
  }
  // Below the last level: peel its echelon basis one vector at a time.
  const std::vector<Vec> tail_basis = flag.back().basis();
  for (std::size_t j = tail_basis.size(); j-- > 0;) {
    flag.push_back(Subspace::span(
        d, std::vector<Vec>(tail_basis.begin(), tail_basis.begin() + j)));
  }
  return flag;
}

// The induction: `flag` is a complete flag of the current space starting at
// position `start` (strictly dropping by one to dimension 0); `g_levels` are
// the second chain's levels intersected down to the current space. Returns a
// basis of flag[start] adapted to both the flag and g_levels.
std::vector<Vec> adapt_recursive(const std::vector<Subspace>& flag,
                                 std::size_t start,
                                 const std::vector<Subspace>& g_levels) {
  const Subspace& top = flag[start];
  if (top.dim() == 0) return {};
  if (top.dim() == 1) return {top.basis().front()};

  const Subspace& hyper = flag[start + 1];
  std::vector<Subspace> g_cut;
  g_cut.reserve(g_levels.size());
  for (const Subspace& level : g_levels) {
    g_cut.push_back(intersect(level, hyper));
  }
  std::vector<Vec> basis = adapt_recursive(flag, start + 1, g_cut);

  // Adjoin one vector outside the hyperplane. It must come from the deepest
  // (smallest) g-level not contained in the hyperplane: that vector then lies
  // in every enclosing g-level as well and completes each of their counts.
  // When every g-level sits inside the hyperplane, any completion vector of
  // the current space does.
  const auto pick_outside = [&](const std::vector<Vec>& candidates) -> const Vec* {
    for (const Vec& v : candidates) {
      if (!hyper.contains(v)) return &v;
    }
    return nullptr;
  };
  const Vec* chosen = nullptr;
  for (auto it = g_levels.rbegin(); it != g_levels.rend(); ++it) {
    if (!hyper.contains(*it)) {
      chosen = pick_outside(it->basis());
      break;
    }
  }
  if (chosen == nullptr) {
    chosen = pick_outside(top.basis());
  }
  basis.push_back(*chosen);
  return basis;
}

}  // namespace

AdaptedBasis common_adapted_basis(const Filtration& fa, const Filtration& fb) {
  if (fa.ambient_dim() != fb.ambient_dim()) {
    throw PreconditionError("filtrations have different ambient dimensions");
  }
  const std::size_t d = fa.ambient_dim();
  if (d == 0) {
    throw PreconditionError("ambient dimension must be at least 1");
  }

  const std::vector<Subspace> flag = complete_flag(fa);
  std::vector<Subspace> g_levels(fb.chain().begin() + 1, fb.chain().end());
  AdaptedBasis out;
  out.vectors = adapt_recursive(flag, 0, g_levels);

  const auto count_inside = [&](const Filtration& f) {
    std::vector<std::size_t> counts;
    for (const Subspace& level : f.chain()) {
      std::size_t n = 0;
      for (const Vec& v : out.vectors) {
        if (level.contains(v)) ++n;
      }
      counts.push_back(n);
    }
    return counts;
  };
  out.per_level_counts_a = count_inside(fa);
  out.per_level_counts_b = count_inside(fb);
  return out;
}

bool verify_adapted(const std::vector<Vec>& basis, const Filtration& fa,
                    const Filtration& fb) {
  const std::size_t d = fa.ambient_dim();
  if (fb.ambient_dim() != d) return false;
  if (basis.size() != d) return false;
  for (const Vec& v : basis) {
    if (v.size() != d) return false;
  }
  if (Subspace::span(d, basis).dim() != d) return false;

  const auto check_chain = [&](const Filtration& f) {
    for (const Subspace& level : f.chain()) {
      std::vector<Vec> inside;
      for (const Vec& v : basis) {
        if (level.contains(v)) inside.push_back(v);
      }
      if (inside.size() != level.dim()) return false;
      if (Subspace::span(d, inside).dim() != level.dim()) return false;
    }
    return true;
  };
  return check_chain(fa) && check_chain(fb);
}

Integer weighted_sum_lower_bound(const std::vector<Integer>& caps,
                                 const Integer& demand, std::size_t r) {
  if (r > caps.size()) {
    throw PreconditionError("cutoff " + std::to_string(r) + " exceeds " +
                            std::to_string(caps.size()) + " levels");
  }
  Integer prefix = 0;
  Integer bound = 0;
  for (std::size_t j = 1; j <= r; ++j) {
    const Integer& cap = caps[j - 1];
    if (cap < 0) {
      throw PreconditionError("negative cap at level " + std::to_string(j));
    }
    prefix += cap;
    bound += Integer(j) * cap;
  }
  if (prefix > demand) {
    throw PreconditionError("cap prefix sum " + to_string(prefix) +
                            " exceeds the demand " + to_string(demand) +
                            "; the bound's hypothesis fails");
  }
  return bound;
}

Rational min_weighted_sum(const std::vector<Integer>& caps, const Integer& demand) {
  if (demand < 0) {
    throw PreconditionError("demand must be non-negative");
  }
  Integer available = 0;
  for (std::size_t j = 0; j < caps.size(); ++j) {
    if (caps[j] < 0) {
      throw PreconditionError("negative cap at level " + std::to_string(j + 1));
    }
    available += caps[j];
  }
  if (available < demand) {
    throw InfeasibleError("caps absorb only " + to_string(available) +
                          " of demand " + to_string(demand));
  }
  // Cheapest-first fill; the relaxed optimum needs at most one partial level,
  // and with integer inputs even that remainder is integral.
  Integer remaining = demand;
  Rational total = 0;
  for (std::size_t j = 1; j <= caps.size() && remaining > 0; ++j) {
    const Integer take = std::min(caps[j - 1], remaining);
    total += Rational(Integer(j) * take);
    remaining -= take;
  }
  return total;
}

Integer order_sum(const std::vector<Integer>& dims, const Integer& offset) {
  Integer total = 0;
  for (std::size_t j = 1; j <= dims.size(); ++j) {
    if (dims[j - 1] < 0) {
      throw PreconditionError("negative dimension at level " + std::to_string(j));
    }
    total += (Integer(j) - 1 - offset) * dims[j - 1];
  }
  return total;
}

}  // namespace degcrit
