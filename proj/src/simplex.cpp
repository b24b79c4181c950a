#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "gcmonad/convexgeom.hpp"

namespace gcmonad::detail {

namespace {

// Dense phase-one tableau for  A lambda = b, lambda >= 0, b >= 0.
// Columns [0, n) are the structural variables, [n, n+m) the artificials,
// column n+m holds the right-hand side. Row m is the reduced-cost row of the
// auxiliary objective (sum of artificials); its last entry is minus the
// objective value.
class PhaseOneTableau {
 public:
  PhaseOneTableau(std::size_t rows, std::size_t structural)
      : rows_(rows), structural_(structural), width_(structural + rows + 1), cells_((rows + 1) * width_) {
    basis_.resize(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      at(i, structural_ + i) = 1;
      basis_[i] = structural_ + i;
    }
  }

  mpq_class& at(std::size_t i, std::size_t j) { return cells_[i * width_ + j]; }
  const mpq_class& at(std::size_t i, std::size_t j) const { return cells_[i * width_ + j]; }
  mpq_class& rhs(std::size_t i) { return at(i, width_ - 1); }

  /// Call once all constraint rows are filled in.
  void price_out() {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (sgn(rhs(i)) < 0) throw std::logic_error("phase one expects a nonnegative right-hand side");
      for (std::size_t j = 0; j < structural_; ++j) at(rows_, j) -= at(i, j);
      at(rows_, width_ - 1) -= rhs(i);
    }
  }

  /// Runs to optimality; true iff the auxiliary optimum is zero.
  bool feasible() {
    while (sgn(at(rows_, width_ - 1)) != 0) {
      const std::size_t enter = entering();
      if (enter == width_) return false;
      pivot(leaving(enter), enter);
    }
    return true;
  }

 private:
  // Bland: lowest-index column with negative reduced cost.
  std::size_t entering() const {
    for (std::size_t j = 0; j + 1 < width_; ++j) {
      if (sgn(at(rows_, j)) < 0) return j;
    }
    return width_;
  }

  // Minimum ratio; ties go to the lowest-index basic variable. The auxiliary
  // problem is bounded below by zero, so some row always qualifies.
  std::size_t leaving(std::size_t col) {
    std::size_t best = rows_;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (sgn(at(i, col)) <= 0) continue;
      mpq_div(scratch_.get_mpq_t(), at(i, width_ - 1).get_mpq_t(), at(i, col).get_mpq_t());
      const int c = best == rows_ ? -1 : cmp(scratch_, best_ratio_);
      if (c < 0 || (c == 0 && basis_[i] < basis_[best])) {
        best = i;
        mpq_swap(best_ratio_.get_mpq_t(), scratch_.get_mpq_t());
      }
    }
    if (best == rows_) throw std::logic_error("phase one reported unbounded");
    return best;
  }

  void pivot(std::size_t row, std::size_t col) {
    mpq_inv(scratch_.get_mpq_t(), at(row, col).get_mpq_t());
    for (std::size_t j = 0; j < width_; ++j) {
      if (sgn(at(row, j)) != 0) mpq_mul(at(row, j).get_mpq_t(), at(row, j).get_mpq_t(), scratch_.get_mpq_t());
    }
    mpq_class factor;
    for (std::size_t i = 0; i <= rows_; ++i) {
      if (i == row || sgn(at(i, col)) == 0) continue;
      factor = at(i, col);
      for (std::size_t j = 0; j < width_; ++j) {
        if (sgn(at(row, j)) == 0) continue;
        mpq_mul(scratch_.get_mpq_t(), factor.get_mpq_t(), at(row, j).get_mpq_t());
        mpq_sub(at(i, j).get_mpq_t(), at(i, j).get_mpq_t(), scratch_.get_mpq_t());
      }
    }
    basis_[row] = col;
  }

  std::size_t rows_;
  std::size_t structural_;
  std::size_t width_;
  std::vector<mpq_class> cells_;
  std::vector<std::size_t> basis_;
  mpq_class scratch_;
  mpq_class best_ratio_;
};

struct ApproxResult {
  bool feasible;
  std::vector<std::size_t> columns;
  std::vector<double> duals;
};

// Floating-point twin of the tableau above. Used only to guess which
// generators carry a convex combination; every answer is rechecked exactly.
class ApproxTableau {
 public:
  ApproxTableau(std::size_t rows, std::size_t structural)
      : rows_(rows), structural_(structural), width_(structural + rows + 1), cells_((rows + 1) * width_, 0.0) {
    basis_.resize(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      at(i, structural_ + i) = 1.0;
      basis_[i] = structural_ + i;
    }
  }

  double& at(std::size_t i, std::size_t j) { return cells_[i * width_ + j]; }
  double& rhs(std::size_t i) { return at(i, width_ - 1); }

  void price_out() {
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < structural_; ++j) at(rows_, j) -= at(i, j);
      at(rows_, width_ - 1) -= rhs(i);
    }
  }

  /// Feasible: the structural columns left in the basis. Infeasible: the
  /// row duals, whose first rows-1 entries give a direction separating x
  /// from the generators. Nothing if the run stalls.
  std::optional<ApproxResult> run() {
    for (std::size_t iter = 0; iter < 50 * width_; ++iter) {
      if (-at(rows_, width_ - 1) < kEps) {
        ApproxResult r{true, {}, {}};
        for (std::size_t i = 0; i < rows_; ++i) {
          if (basis_[i] < structural_) r.columns.push_back(basis_[i]);
        }
        return r;
      }
      std::size_t enter = width_;
      for (std::size_t j = 0; j + 1 < width_ && enter == width_; ++j) {
        if (at(rows_, j) < -kEps) enter = j;
      }
      if (enter == width_) {
        ApproxResult r{false, {}, {}};
        for (std::size_t i = 0; i < rows_; ++i) r.duals.push_back(1.0 - at(rows_, structural_ + i));
        return r;
      }
      std::size_t row = rows_;
      double best = 0.0;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (at(i, enter) <= kEps) continue;
        const double ratio = rhs(i) / at(i, enter);
        if (row == rows_ || ratio < best - kEps || (ratio <= best + kEps && basis_[i] < basis_[row])) {
          row = i;
          best = ratio;
        }
      }
      if (row == rows_) return std::nullopt;
      const double inv = 1.0 / at(row, enter);
      for (std::size_t j = 0; j < width_; ++j) at(row, j) *= inv;
      for (std::size_t i = 0; i <= rows_; ++i) {
        if (i == row) continue;
        const double f = at(i, enter);
        if (f == 0.0) continue;
        for (std::size_t j = 0; j < width_; ++j) at(i, j) -= f * at(row, j);
      }
      basis_[row] = enter;
    }
    return std::nullopt;
  }

 private:
  static constexpr double kEps = 1e-9;
  std::size_t rows_;
  std::size_t structural_;
  std::size_t width_;
  std::vector<double> cells_;
  std::vector<std::size_t> basis_;
};

bool exact_feasible(const PointVec& x, std::span<const PointVec* const> gens) {
  const std::size_t dim = x.size();
  PhaseOneTableau t(dim + 1, gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (gens[j]->size() != dim) throw HullError("hull membership: dimension mismatch");
    for (std::size_t i = 0; i < dim; ++i) t.at(i, j) = (*gens[j])[i].raw();
    t.at(dim, j) = 1;
  }
  for (std::size_t i = 0; i < dim; ++i) t.rhs(i) = x[i].raw();
  t.rhs(dim) = 1;
  t.price_out();
  return t.feasible();
}

// x = sum lambda_j * gens[j], sum lambda_j = 1, solved exactly on integer
// data by fraction-free elimination. True iff the system has a unique
// solution and it is nonnegative; otherwise nothing is concluded.
bool solves_nonnegatively(const PointVec& x, std::span<const PointVec* const> gens) {
  const std::size_t rows = x.size() + 1;
  const std::size_t cols = gens.size();
  auto common_denominator = [](const PointVec& v) {
    mpz_class d = 1;
    for (const Rat& r : v) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), r.raw().get_den_mpz_t());
    return d;
  };
  // Column j is D_j * (g_j, 1); the right-hand side is D_x * (x, 1). The
  // unknowns become nu_j = lambda_j * D_x / D_j, which share lambda's signs.
  std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols + 1));
  for (std::size_t j = 0; j <= cols; ++j) {
    const PointVec& v = j < cols ? *gens[j] : x;
    const mpz_class d = common_denominator(v);
    for (std::size_t i = 0; i + 1 < rows; ++i) m[i][j] = d / v[i].raw().get_den() * v[i].raw().get_num();
    m[rows - 1][j] = d;
  }
  mpz_class prev = 1;
  mpz_class tmp;
  for (std::size_t k = 0; k < cols; ++k) {
    std::size_t piv = k;
    while (piv < rows && sgn(m[piv][k]) == 0) ++piv;
    if (piv == rows) return false;
    std::swap(m[piv], m[k]);
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j <= cols; ++j) {
        mpz_mul(tmp.get_mpz_t(), m[i][k].get_mpz_t(), m[k][j].get_mpz_t());
        mpz_mul(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), m[k][k].get_mpz_t());
        mpz_sub(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), tmp.get_mpz_t());
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  for (std::size_t i = cols; i < rows; ++i) {
    if (sgn(m[i][cols]) != 0) return false;
  }
  std::vector<mpq_class> nu(cols);
  for (std::size_t k = cols; k-- > 0;) {
    mpq_class acc(m[k][cols]);
    for (std::size_t j = k + 1; j < cols; ++j) acc -= mpq_class(m[k][j]) * nu[j];
    nu[k] = acc / mpq_class(m[k][k]);
    if (sgn(nu[k]) < 0) return false;
  }
  return true;
}

using Approx = std::vector<double>;

Approx approximate(const PointVec& v) {
  Approx out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].raw().get_d();
  return out;
}

// Sound shortcuts driven by a floating-point run. "Inside" is confirmed by
// an exact solve over the few generators the run used; "outside" by a
// separating direction a with a.g < a.x for every generator g. Anything
// else is undecided.
std::optional<bool> decide_by_guess(const PointVec& x, const Approx& xa, std::span<const PointVec* const> gens,
                                    std::span<const Approx* const> approx) {
  const std::size_t dim = x.size();
  ApproxTableau t(dim + 1, gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    for (std::size_t i = 0; i < dim; ++i) t.at(i, j) = (*approx[j])[i];
    t.at(dim, j) = 1.0;
  }
  for (std::size_t i = 0; i < dim; ++i) t.rhs(i) = xa[i];
  t.rhs(dim) = 1.0;
  t.price_out();
  const auto r = t.run();
  if (!r) return std::nullopt;
  if (r->feasible) {
    if (r->columns.empty()) return std::nullopt;
    std::vector<const PointVec*> sub;
    for (std::size_t j : r->columns) sub.push_back(gens[j]);
    if (solves_nonnegatively(x, sub)) return true;
    return std::nullopt;
  }

  // Snap the direction to multiples of 2^-30 so it is exact in both double
  // and rational form.
  std::vector<double> a(dim);
  std::vector<mpq_class> a_exact(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (!(std::abs(r->duals[i]) < 1e6)) return std::nullopt;
    a[i] = std::ldexp(std::round(std::ldexp(r->duals[i], 30)), -30);
    a_exact[i] = mpq_class(a[i]);
  }
  auto dot = [&](const Approx& v, double& bound) {
    double acc = 0.0;
    bound = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      acc += a[i] * v[i];
      bound += std::abs(a[i] * v[i]);
    }
    return acc;
  };
  auto dot_exact = [&](const PointVec& v) {
    mpq_class acc = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      if (a[i] != 0.0) acc += a_exact[i] * v[i].raw();
    }
    return acc;
  };
  double x_bound = 0.0;
  const double level = dot(xa, x_bound);
  std::optional<mpq_class> level_exact;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    double g_bound = 0.0;
    const double value = dot(*approx[j], g_bound);
    // Rounding error of each double dot product is far below 1e-12 of its
    // absolute sum, so a gap beyond that margin is a certain strict gap.
    if (level - value > 1e-12 * (x_bound + g_bound) + 1e-300) continue;
    if (!level_exact) level_exact = dot_exact(x);
    if (dot_exact(*gens[j]) >= *level_exact) return std::nullopt;
  }
  return false;
}

bool feasible_with(const PointVec& x, const Approx& xa, std::span<const PointVec* const> gens,
                   std::span<const Approx* const> approx) {
  if (gens.size() > x.size() + 2) {
    if (const auto guess = decide_by_guess(x, xa, gens, approx)) return *guess;
  }
  return exact_feasible(x, gens);
}

}  // namespace

bool hull_feasible(const PointVec& x, std::span<const PointVec* const> gens) {
  if (gens.empty()) throw HullError("hull membership against an empty generator list");
  for (const PointVec* g : gens) {
    if (g->size() != x.size()) throw HullError("hull membership: dimension mismatch");
  }
  std::vector<Approx> approx;
  std::vector<const Approx*> approx_ptrs;
  if (gens.size() > x.size() + 2) {
    approx.reserve(gens.size());
    for (const PointVec* g : gens) approx.push_back(approximate(*g));
    for (const Approx& v : approx) approx_ptrs.push_back(&v);
  }
  return feasible_with(x, approximate(x), gens, approx_ptrs);
}

bool hull_feasible_exact(const PointVec& x, std::span<const PointVec* const> gens) {
  if (gens.empty()) throw HullError("hull membership against an empty generator list");
  return exact_feasible(x, gens);
}

std::vector<std::size_t> extreme_points(const std::vector<PointVec>& points) {
  const std::size_t n = points.size();
  if (n <= 2) {
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  const std::size_t dim = points.front().size();

  // Visiting order only affects speed: likely vertices first, so that most
  // interior points are rejected by one small LP. Floating point is fine here.
  std::vector<std::vector<double>> approx(n, std::vector<double>(dim));
  std::vector<double> centroid(dim, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < dim; ++k) {
      approx[i][k] = points[i][k].raw().get_d();
      centroid[k] += approx[i][k] / static_cast<double>(n);
    }
  }
  std::vector<double> spread(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < dim; ++k) spread[i] += (approx[i][k] - centroid[k]) * (approx[i][k] - centroid[k]);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return spread[a] > spread[b]; });

  // Pass 1: keep every point outside the hull of the points kept so far.
  // Afterwards `kept` contains every extreme point.
  std::vector<std::size_t> kept;
  std::vector<Rat> lo;
  std::vector<Rat> hi;
  std::vector<const PointVec*> cols;
  std::vector<const Approx*> cols_approx;
  for (std::size_t i : order) {
    const PointVec& x = points[i];
    bool outside = kept.empty();
    for (std::size_t k = 0; k < dim && !outside; ++k) outside = x[k] < lo[k] || hi[k] < x[k];
    if (!outside) {
      cols.clear();
      cols_approx.clear();
      for (std::size_t j : kept) {
        cols.push_back(&points[j]);
        cols_approx.push_back(&approx[j]);
      }
      outside = !feasible_with(x, approx[i], cols, cols_approx);
    }
    if (!outside) continue;
    if (kept.empty()) {
      lo = x;
      hi = x;
    } else {
      for (std::size_t k = 0; k < dim; ++k) {
        if (x[k] < lo[k]) lo[k] = x[k];
        if (hi[k] < x[k]) hi[k] = x[k];
      }
    }
    kept.push_back(i);
  }

  // Pass 2: drop kept points inside the hull of the remaining ones. Removing a
  // non-extreme point leaves the hull unchanged, so one sweep suffices.
  for (std::size_t pos = 0; pos < kept.size() && kept.size() > 1;) {
    cols.clear();
    cols_approx.clear();
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (j == pos) continue;
      cols.push_back(&points[kept[j]]);
      cols_approx.push_back(&approx[kept[j]]);
    }
    if (feasible_with(points[kept[pos]], approx[kept[pos]], cols, cols_approx)) {
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(pos));
    } else {
      ++pos;
    }
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace gcmonad::detail
