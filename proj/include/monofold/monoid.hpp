#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "monofold/errors.hpp"
#include "monofold/matrix.hpp"

namespace monofold {

/// A (vector, operator) pair. Composition acts as an affine map
/// followed by operator multiplication:
///
///   (a, A) . (b, B) = (a + A b, A B)
///
/// which is associative but in general not commutative. The operator
/// is not required to be invertible; nothing in composition or the
/// folds ever inverts it.
template <class T>
struct MonoidElement {
  MonoidElement(Vector<T> v, Matrix<T> o) : vec(std::move(v)), op(std::move(o)) {
    if (vec.size() != op.dim())
      throw DimensionMismatch("MonoidElement: vector and operator dimensions differ");
  }

  Vector<T> vec;
  Matrix<T> op;
};

template <class T>
MonoidElement<T> compose(const MonoidElement<T>& l, const MonoidElement<T>& r) {
  if (l.op.dim() != r.op.dim())
    throw DimensionMismatch("compose: element dimensions differ");
  return MonoidElement<T>(vec_add(l.vec, mat_vec(l.op, r.vec)), mat_mul(l.op, r.op));
}

/// (0, I), the two-sided neutral element forced by the composition rule.
template <class T>
MonoidElement<T> identity_element(std::size_t dim) {
  if (dim == 0) throw InvalidArgument("identity_element: dimension must be >= 1");
  return MonoidElement<T>(Vector<T>(dim, T{}), Matrix<T>::identity(dim));
}

/// Right-to-left composition e1 . (e2 . (... . eT)). Associativity
/// makes the grouping immaterial; the test suite checks this against
/// the left-to-right grouping rather than assuming it.
template <class T>
MonoidElement<T> fold_sequence(const std::vector<MonoidElement<T>>& elems) {
  if (elems.empty()) throw InvalidArgument("fold_sequence: empty element list");
  MonoidElement<T> acc = elems.back();
  for (std::size_t i = elems.size() - 1; i-- > 0;) acc = compose(elems[i], acc);
  return acc;
}

/// Closed-form expansion of the fold: the vector part accumulates
/// prefix-product weighted contributions
///
///   v1 + R1 v2 + R1 R2 v3 + ... + R1...R_{T-1} vT
///
/// and the operator part is the full product R1...RT.
template <class T>
MonoidElement<T> closed_form(const std::vector<MonoidElement<T>>& elems) {
  if (elems.empty()) throw InvalidArgument("closed_form: empty element list");
  const std::size_t d = elems.front().op.dim();
  Vector<T> vec(d, T{});
  Matrix<T> prefix = Matrix<T>::identity(d);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i].op.dim() != d)
      throw DimensionMismatch("closed_form: element dimensions differ");
    vec = vec_add(vec, mat_vec(prefix, elems[i].vec));
    prefix = mat_mul(prefix, elems[i].op);
  }
  return MonoidElement<T>(std::move(vec), std::move(prefix));
}

/// Vector part of fold_sequence for elements that all share one
/// operator. Each right-to-left step is (v_i, R) . (acc, R^k) =
/// (v_i + R acc, R^{k+1}), so only matrix-vector products are needed;
/// the operator part of the result is op^count and is not materialized.
/// Used by the transform instantiations, where op^n is the identity.
///
/// When `scalar_ops` is non-null it accumulates the number of scalar
/// multiplies and adds performed.
template <class T>
Vector<T> fold_shared_operator(const Matrix<T>& op, const std::vector<Vector<T>>& vecs,
                               std::size_t* scalar_ops = nullptr) {
  if (vecs.empty()) throw InvalidArgument("fold_shared_operator: empty vector list");
  const std::size_t d = op.dim();
  for (const auto& v : vecs)
    if (v.size() != d)
      throw DimensionMismatch("fold_shared_operator: vector and operator dimensions differ");
  Vector<T> acc = vecs.back();
  for (std::size_t i = vecs.size() - 1; i-- > 0;) {
    acc = vec_add(vecs[i], mat_vec(op, acc));
    if (scalar_ops) *scalar_ops += 2 * d * d + d;  // matvec + vector add
  }
  return acc;
}

template <class T>
bool approx_eq(const MonoidElement<T>& a, const MonoidElement<T>& b, double tol) {
  return approx_eq(a.vec, b.vec, tol) && approx_eq(a.op, b.op, tol);
}

template <class T>
double max_abs_diff(const MonoidElement<T>& a, const MonoidElement<T>& b) {
  const double dv = max_abs_diff(a.vec, b.vec);
  const double dm = max_abs_diff(a.op, b.op);
  return dv > dm ? dv : dm;
}

}  // namespace monofold
