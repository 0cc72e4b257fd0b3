#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "monofold/errors.hpp"
#include "monofold/matrix.hpp"
#include "monofold/report.hpp"
#include "monofold/rng.hpp"

namespace monofold {

/// Pairwise commutation tolerance for the float kind; integer-kind
/// commutators are exact so any nonzero entry fails.
inline constexpr double kCommutingTol = 1e-10;

/// Interchange comparisons pass at this tolerance.
inline constexpr double kInterchangeTol = 1e-9;

/// Max-abs entry of R_i R_j - R_j R_i over all pairs.
template <class T>
double max_pairwise_commutator(const std::vector<Matrix<T>>& axes) {
  double worst = 0.0;
  for (std::size_t i = 0; i < axes.size(); ++i) {
    for (std::size_t j = i + 1; j < axes.size(); ++j) {
      if (axes[i].dim() != axes[j].dim())
        throw DimensionMismatch("commutator: axis matrices have different dimensions");
      const double d = max_abs_diff(mat_mul(axes[i], axes[j]), mat_mul(axes[j], axes[i]));
      if (d > worst) worst = d;
    }
  }
  return worst;
}

/// Ordered list of per-axis generator matrices R_1..R_D sharing one
/// dimension. The pairwise commutation verdict is computed once at
/// construction; integer powers of each generator are materialized
/// lazily and memoized (prefix powers), so grid folds cost O(cells)
/// matrix-vector products.
///
/// Families are shared by reference: elements belong to the same
/// family only if they hold the same instance.
template <class T>
class GeneratorFamily {
 public:
  static std::shared_ptr<const GeneratorFamily> create(std::vector<Matrix<T>> axes) {
    return std::shared_ptr<const GeneratorFamily>(new GeneratorFamily(std::move(axes)));
  }

  std::size_t axis_count() const { return axes_.size(); }
  std::size_t dim() const { return dim_; }
  const Matrix<T>& axis(std::size_t i) const {
    if (i >= axes_.size()) throw InvalidArgument("GeneratorFamily: axis index out of range");
    return axes_[i];
  }
  const std::vector<Matrix<T>>& axes() const { return axes_; }

  double max_commutator() const { return max_commutator_; }
  bool commuting() const { return commuting_; }

  /// Memoized generator power. Negative exponents require an
  /// invertible generator and throw SingularMatrix otherwise.
  Matrix<T> power(std::size_t axis, long long exp) const {
    if (axis >= axes_.size()) throw InvalidArgument("GeneratorFamily: axis index out of range");
    std::scoped_lock lock(mutex_);
    auto& cache = cache_[axis];
    auto it = cache.find(exp);
    if (it != cache.end()) return it->second;
    if (exp >= 0) {
      // Extend upward from the highest cached non-negative power.
      auto below = cache.upper_bound(exp);
      long long from = 0;
      Matrix<T> acc = Matrix<T>::identity(dim_);
      if (below != cache.begin()) {
        --below;
        if (below->first >= 0) {
          from = below->first;
          acc = below->second;
        }
      }
      for (long long e = from + 1; e <= exp; ++e) {
        acc = mat_mul(acc, axes_[axis]);
        cache.emplace(e, acc);
      }
      if (exp == 0) cache.emplace(0, acc);
      return acc;
    }
    // Extend downward; the inverse is computed once and cached at -1.
    auto above = cache.lower_bound(exp);
    long long from = 0;
    Matrix<T> acc = Matrix<T>::identity(dim_);
    if (above != cache.end() && above->first < 0) {
      from = above->first;
      acc = above->second;
    }
    const Matrix<T> inv = inverse(axes_[axis]);
    for (long long e = from - 1; e >= exp; --e) {
      acc = mat_mul(acc, inv);
      cache.emplace(e, acc);
    }
    return acc;
  }

  GeneratorFamily(const GeneratorFamily&) = delete;
  GeneratorFamily& operator=(const GeneratorFamily&) = delete;

 private:
  explicit GeneratorFamily(std::vector<Matrix<T>> axes) : axes_(std::move(axes)) {
    if (axes_.empty()) throw InvalidArgument("GeneratorFamily: at least one axis required");
    dim_ = axes_.front().dim();
    if (dim_ == 0) throw InvalidArgument("GeneratorFamily: zero-dimensional generator");
    for (const auto& m : axes_)
      if (m.dim() != dim_)
        throw DimensionMismatch("GeneratorFamily: axis matrices have different dimensions");
    max_commutator_ = max_pairwise_commutator(axes_);
    commuting_ = max_commutator_ <= kCommutingTol;
    cache_.resize(axes_.size());
  }

  std::vector<Matrix<T>> axes_;
  std::size_t dim_ = 0;
  double max_commutator_ = 0.0;
  bool commuting_ = false;
  mutable std::mutex mutex_;
  mutable std::vector<std::map<long long, Matrix<T>>> cache_;
};

template <class T>
using FamilyPtr = std::shared_ptr<const GeneratorFamily<T>>;

/// A vector plus one integer exponent per axis, referencing a shared
/// generator family: (a, R_1^{n_1}, ..., R_D^{n_D}) stored as exponent
/// bookkeeping rather than expanded matrices.
template <class T>
struct AxisElement {
  AxisElement(Vector<T> v, std::vector<long long> exps, FamilyPtr<T> fam)
      : vec(std::move(v)), exponents(std::move(exps)), family(std::move(fam)) {
    if (!family) throw InvalidArgument("AxisElement: null family");
    if (vec.size() != family->dim())
      throw DimensionMismatch("AxisElement: vector dimension differs from family dimension");
    if (exponents.size() != family->axis_count())
      throw DimensionMismatch("AxisElement: exponent count differs from axis count");
  }

  Vector<T> vec;
  std::vector<long long> exponents;
  FamilyPtr<T> family;
};

/// Composition along one axis:
///
///   (a, ..., R_i^n, ...) o_i (b, ..., R_i^k, ...)
///     = (a + R_i^n b, ..., R_i^{n+k}, ...)
///
/// defined only when the two elements share the family and agree on
/// every other axis exponent.
template <class T>
AxisElement<T> compose_axis(const AxisElement<T>& l, const AxisElement<T>& r, std::size_t axis) {
  if (l.family.get() != r.family.get())
    throw FamilyMismatch("compose_axis: elements reference different generator families");
  if (axis >= l.family->axis_count())
    throw InvalidArgument("compose_axis: axis index out of range");
  for (std::size_t j = 0; j < l.exponents.size(); ++j) {
    if (j != axis && l.exponents[j] != r.exponents[j]) {
      std::ostringstream msg;
      msg << "compose_axis: off-axis exponent mismatch on axis " << j << " ("
          << l.exponents[j] << " vs " << r.exponents[j] << ")";
      throw AxisMismatch(msg.str());
    }
  }
  Vector<T> vec = vec_add(l.vec, mat_vec(l.family->power(axis, l.exponents[axis]), r.vec));
  std::vector<long long> exps = l.exponents;
  exps[axis] += r.exponents[axis];
  return AxisElement<T>(std::move(vec), std::move(exps), l.family);
}

/// Neutral partner for composition along `axis`: zero vector, zero
/// exponent on that axis, off-axis exponents copied from the partner
/// (the composition rule forces this shape).
template <class T>
AxisElement<T> identity_for_axis(const AxisElement<T>& partner, std::size_t axis) {
  std::vector<long long> exps = partner.exponents;
  exps[axis] = 0;
  return AxisElement<T>(Vector<T>(partner.vec.size(), T{}), std::move(exps), partner.family);
}

namespace detail {

template <class T>
std::vector<double> widen(const Vector<T>& v) {
  return std::vector<double>(v.begin(), v.end());
}

}  // namespace detail

/// Evaluates both sides of the interchange law
///
///   (a o_x b) o_y (c o_x d)  vs  (a o_y c) o_x (b o_y d)
///
/// and reports the max absolute difference at tolerance 1e-9. The four
/// elements must follow the exponent pattern that makes both sides
/// composable; violations surface as compose_axis errors.
template <class T>
OracleReport check_interchange(const AxisElement<T>& a, const AxisElement<T>& b,
                               const AxisElement<T>& c, const AxisElement<T>& d,
                               std::size_t ax1, std::size_t ax2) {
  const AxisElement<T> lhs = compose_axis(compose_axis(a, b, ax1), compose_axis(c, d, ax1), ax2);
  const AxisElement<T> rhs = compose_axis(compose_axis(a, c, ax2), compose_axis(b, d, ax2), ax1);
  double err = max_abs_diff(lhs.vec, rhs.vec);
  for (std::size_t j = 0; j < lhs.exponents.size(); ++j)
    if (lhs.exponents[j] != rhs.exponents[j])
      err = std::numeric_limits<double>::infinity();  // structurally impossible
  std::optional<Witness> witness;
  if (err > kInterchangeTol) {
    std::ostringstream desc;
    desc << "interchange axes (" << ax1 << "," << ax2 << "), exponents a=(";
    for (std::size_t j = 0; j < a.exponents.size(); ++j)
      desc << (j ? "," : "") << a.exponents[j];
    desc << "), b=(";
    for (std::size_t j = 0; j < b.exponents.size(); ++j)
      desc << (j ? "," : "") << b.exponents[j];
    desc << ")";
    witness = Witness{desc.str(), detail::widen(lhs.vec), detail::widen(rhs.vec)};
  }
  return make_report("interchange", kInterchangeTol, err, 1, std::move(witness));
}

/// Folds an H x W grid of vectors with a two-axis family:
///
///   ( sum_{i,j} R_x^{i-1} R_y^{j-1} v_ij,  R_x^H R_y^W )
///
/// Refused for non-commuting families, where the value would depend on
/// reduction order. Summation runs in canonical order (within each row
/// by column index, rows combined in row index order) so the result is
/// reproducible bit for bit.
template <class T>
AxisElement<T> fold_grid(const std::vector<std::vector<Vector<T>>>& grid,
                         const FamilyPtr<T>& family) {
  if (!family) throw InvalidArgument("fold_grid: null family");
  if (family->axis_count() != 2)
    throw InvalidArgument("fold_grid: family must have exactly two axes");
  if (grid.empty() || grid.front().empty())
    throw InvalidArgument("fold_grid: empty grid");
  if (!family->commuting())
    throw NonCommutingFamily("fold_grid: generators do not commute; fold is order-dependent");
  const std::size_t rows = grid.size();
  const std::size_t cols = grid.front().size();
  const std::size_t d = family->dim();
  Vector<T> total(d, T{});
  for (std::size_t i = 0; i < rows; ++i) {
    if (grid[i].size() != cols) throw DimensionMismatch("fold_grid: ragged grid");
    Vector<T> row_sum(d, T{});
    for (std::size_t j = 0; j < cols; ++j) {
      if (grid[i][j].size() != d)
        throw DimensionMismatch("fold_grid: cell dimension differs from family dimension");
      row_sum = vec_add(row_sum, mat_vec(family->power(1, static_cast<long long>(j)), grid[i][j]));
    }
    total = vec_add(total, mat_vec(family->power(0, static_cast<long long>(i)), row_sum));
  }
  return AxisElement<T>(std::move(total),
                        {static_cast<long long>(rows), static_cast<long long>(cols)}, family);
}

/// One pairwise reduction step: merge the tile whose origin cell is
/// (row_a, col_a) with the adjacent tile at (row_b, col_b) along
/// `axis` (0 = rows, 1 = columns). Tile a must precede tile b.
struct GridMergeStep {
  std::size_t row_a = 0, col_a = 0;
  std::size_t row_b = 0, col_b = 0;
  std::size_t axis = 0;
};

using GridSchedule = std::vector<GridMergeStep>;

/// Row-major reduction: collapse each row left to right, then stack
/// the row strips top to bottom.
inline GridSchedule rows_then_columns_schedule(std::size_t rows, std::size_t cols) {
  GridSchedule s;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 1; j < cols; ++j) s.push_back({i, 0, i, j, 1});
  for (std::size_t i = 1; i < rows; ++i) s.push_back({0, 0, i, 0, 0});
  return s;
}

/// Column-major reduction: collapse each column top to bottom, then
/// join the column strips left to right.
inline GridSchedule columns_then_rows_schedule(std::size_t rows, std::size_t cols) {
  GridSchedule s;
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 1; i < rows; ++i) s.push_back({0, j, i, j, 0});
  for (std::size_t j = 1; j < cols; ++j) s.push_back({0, 0, 0, j, 1});
  return s;
}

namespace detail {

// Recursive random bisection. Guillotine splits always yield a valid
// merge sequence, unlike arbitrary random pairings which can wedge.
inline void random_schedule_rec(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1,
                                Rng& rng, GridSchedule& out) {
  const std::size_t h = r1 - r0;
  const std::size_t w = c1 - c0;
  if (h == 1 && w == 1) return;
  std::size_t axis;
  if (h == 1)
    axis = 1;
  else if (w == 1)
    axis = 0;
  else
    axis = rng.index(2);
  if (axis == 0) {
    const std::size_t cut = r0 + 1 + rng.index(h - 1);
    random_schedule_rec(r0, cut, c0, c1, rng, out);
    random_schedule_rec(cut, r1, c0, c1, rng, out);
    out.push_back({r0, c0, cut, c0, 0});
  } else {
    const std::size_t cut = c0 + 1 + rng.index(w - 1);
    random_schedule_rec(r0, r1, c0, cut, rng, out);
    random_schedule_rec(r0, r1, cut, c1, rng, out);
    out.push_back({r0, c0, r0, cut, 1});
  }
}

}  // namespace detail

/// Random valid reduction order for an H x W grid, deterministic per
/// Rng state.
inline GridSchedule random_schedule(std::size_t rows, std::size_t cols, Rng& rng) {
  GridSchedule out;
  if (rows == 0 || cols == 0) throw InvalidArgument("random_schedule: empty grid");
  detail::random_schedule_rec(0, rows, 0, cols, rng, out);
  return out;
}

/// Executes an explicit reduction schedule over the grid. Unlike
/// fold_grid this does not require a commuting family; with
/// non-commuting generators different schedules may legitimately
/// disagree, which is exactly what the order-independence tests
/// demonstrate.
template <class T>
AxisElement<T> fold_grid_scheduled(const std::vector<std::vector<Vector<T>>>& grid,
                                   const FamilyPtr<T>& family, const GridSchedule& schedule) {
  if (!family) throw InvalidArgument("fold_grid_scheduled: null family");
  if (family->axis_count() != 2)
    throw InvalidArgument("fold_grid_scheduled: family must have exactly two axes");
  if (grid.empty() || grid.front().empty())
    throw InvalidArgument("fold_grid_scheduled: empty grid");
  const std::size_t rows = grid.size();
  const std::size_t cols = grid.front().size();

  struct Tile {
    std::size_t row_extent, col_extent;
    AxisElement<T> elem;
  };
  std::map<std::pair<std::size_t, std::size_t>, Tile> tiles;
  for (std::size_t i = 0; i < rows; ++i) {
    if (grid[i].size() != cols)
      throw DimensionMismatch("fold_grid_scheduled: ragged grid");
    for (std::size_t j = 0; j < cols; ++j)
      tiles.emplace(std::make_pair(i, j),
                    Tile{1, 1, AxisElement<T>(grid[i][j], {1, 1}, family)});
  }

  for (const GridMergeStep& step : schedule) {
    auto ita = tiles.find({step.row_a, step.col_a});
    auto itb = tiles.find({step.row_b, step.col_b});
    if (ita == tiles.end() || itb == tiles.end())
      throw InvalidSchedule("fold_grid_scheduled: step names a tile that does not exist");
    const Tile& a = ita->second;
    const Tile& b = itb->second;
    if (step.axis == 0) {
      if (step.col_a != step.col_b || a.col_extent != b.col_extent ||
          step.row_a + a.row_extent != step.row_b)
        throw InvalidSchedule("fold_grid_scheduled: tiles not mergeable along rows");
    } else if (step.axis == 1) {
      if (step.row_a != step.row_b || a.row_extent != b.row_extent ||
          step.col_a + a.col_extent != step.col_b)
        throw InvalidSchedule("fold_grid_scheduled: tiles not mergeable along columns");
    } else {
      throw InvalidSchedule("fold_grid_scheduled: axis must be 0 or 1");
    }
    Tile merged{a.row_extent + (step.axis == 0 ? b.row_extent : 0),
                a.col_extent + (step.axis == 1 ? b.col_extent : 0),
                compose_axis(a.elem, b.elem, step.axis)};
    tiles.erase(itb);
    ita->second = std::move(merged);
  }

  if (tiles.size() != 1)
    throw InvalidSchedule("fold_grid_scheduled: schedule does not reduce the grid to one tile");
  const Tile& last = tiles.begin()->second;
  if (last.row_extent != rows || last.col_extent != cols)
    throw InvalidSchedule("fold_grid_scheduled: final tile does not cover the grid");
  return last.elem;
}

}  // namespace monofold
