#include "crystcoh/smith.hpp"

#include <algorithm>

namespace crystcoh {

namespace {

// Elimination state: U * A0 * V = A throughout, and V_inv * V = I. Without
// tracking, U, V and V_inv stay empty and only A is reduced.
struct Reducer {
  IntMatrix A, U, V, V_inv;
  bool track;

  Reducer(const IntMatrix& a, bool track_transforms) : A(a), track(track_transforms) {
    if (track) {
      U = identity_matrix(a.rows());
      V = identity_matrix(a.cols());
      V_inv = identity_matrix(a.cols());
    }
  }

  // rows (p, q) <- [[a, b], [c, d]] * rows (p, q); determinant must be +-1
  void row_op(std::size_t p, std::size_t q, const Int& a, const Int& b,
              const Int& c, const Int& d) {
    for (IntMatrix* m : {&A, &U})
      for (std::size_t j = 0; j < m->cols(); ++j) {
        Int x = (*m)(p, j), y = (*m)(q, j);
        (*m)(p, j) = a * x + b * y;
        (*m)(q, j) = c * x + d * y;
      }
  }

  // cols (p, q) <- [a*col_p + b*col_q, c*col_p + d*col_q]
  void col_op(std::size_t p, std::size_t q, const Int& a, const Int& b,
              const Int& c, const Int& d) {
    for (IntMatrix* m : {&A, &V})
      for (std::size_t i = 0; i < m->rows(); ++i) {
        Int x = (*m)(i, p), y = (*m)(i, q);
        (*m)(i, p) = a * x + b * y;
        (*m)(i, q) = c * x + d * y;
      }
    if (!track)
      return;
    // the column op is right multiplication by M = [[a, c], [b, d]];
    // V_inv picks up M^-1 on the left
    Int det = a * d - b * c;
    Int ia = d * det, ib = -c * det, ic = -b * det, id = a * det;  // det = +-1
    for (std::size_t j = 0; j < V_inv.cols(); ++j) {
      Int x = V_inv(p, j), y = V_inv(q, j);
      V_inv(p, j) = ia * x + ib * y;
      V_inv(q, j) = ic * x + id * y;
    }
  }

  void negate_row(std::size_t p) {
    for (IntMatrix* m : {&A, &U})
      for (std::size_t j = 0; j < m->cols(); ++j)
        (*m)(p, j) = -(*m)(p, j);
  }

  void swap_rows(std::size_t p, std::size_t q) {
    if (p == q) return;
    A.swap_rows(p, q);
    if (track)
      U.swap_rows(p, q);
  }
  void swap_cols(std::size_t p, std::size_t q) {
    if (p == q) return;
    A.swap_cols(p, q);
    if (track) {
      V.swap_cols(p, q);
      V_inv.swap_rows(p, q);
    }
  }

  // Euclid down column t: move the smallest entry to the pivot and reduce
  // the rest by nearest-integer quotients until only the pivot survives.
  // Plain remainders keep entries small where Bezout combinations blow up.
  void clear_column(std::size_t t) {
    for (;;) {
      std::size_t best = t;
      for (std::size_t i = t; i < A.rows(); ++i)
        if (A(i, t) != 0 && (A(best, t) == 0 || abs(A(i, t)) < abs(A(best, t))))
          best = i;
      swap_rows(t, best);
      bool done = true;
      for (std::size_t i = t + 1; i < A.rows(); ++i) {
        if (A(i, t) == 0)
          continue;
        Int q = nearest_quotient(A(i, t), A(t, t));
        row_op(t, i, 1, 0, -q, 1);
        if (A(i, t) != 0)
          done = false;
      }
      if (done)
        return;
    }
  }

  // the same along row t
  void clear_row(std::size_t t) {
    for (;;) {
      std::size_t best = t;
      for (std::size_t j = t; j < A.cols(); ++j)
        if (A(t, j) != 0 && (A(t, best) == 0 || abs(A(t, j)) < abs(A(t, best))))
          best = j;
      swap_cols(t, best);
      bool done = true;
      for (std::size_t j = t + 1; j < A.cols(); ++j) {
        if (A(t, j) == 0)
          continue;
        Int q = nearest_quotient(A(t, j), A(t, t));
        col_op(t, j, 1, 0, -q, 1);
        if (A(t, j) != 0)
          done = false;
      }
      if (done)
        return;
    }
  }

  static Int nearest_quotient(const Int& b, const Int& a) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t());
    Int r = b - q * a;
    if (2 * abs(r) > abs(a))
      q += 1;  // remainder b - (q + 1) a = r - a, smaller in magnitude
    return q;
  }
};

// Diagonalizes r.A in place; returns the rank.
std::size_t reduce(Reducer& r) {
  const std::size_t m = r.A.rows(), n = r.A.cols();
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    // smallest nonzero entry of the trailing block as pivot
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (r.A(i, j) != 0 &&
            (pi == m || abs(r.A(i, j)) < abs(r.A(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == m)
      break;
    r.swap_rows(t, pi);
    r.swap_cols(t, pj);

    for (;;) {
      r.clear_column(t);
      r.clear_row(t);
      bool column_dirty = false;
      for (std::size_t i = t + 1; i < m; ++i)
        if (r.A(i, t) != 0)
          column_dirty = true;
      if (column_dirty)
        continue;
      // divisor chain: the pivot must divide the whole trailing block
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!divides(r.A(t, t), r.A(i, j))) {
            bad = i;
            break;
          }
      if (bad == m)
        break;
      r.row_op(t, bad, 1, 1, 0, 1);
    }
    if (r.A(t, t) < 0)
      r.negate_row(t);
  }
  return t;
}

} // namespace

std::vector<Int> SnfResult::diagonal() const {
  std::vector<Int> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
    d.push_back(D(i, i));
  return d;
}

SnfResult smith_normal_form(const IntMatrix& a) {
  Reducer r(a, true);
  std::size_t t = reduce(r);
  SnfResult res;
  res.U = std::move(r.U);
  res.D = std::move(r.A);
  res.V = std::move(r.V);
  res.V_inverse = std::move(r.V_inv);
  res.rank = t;
  return res;
}

std::vector<Int> invariant_factors(const IntMatrix& a) {
  Reducer r(a, false);
  std::size_t t = reduce(r);
  std::vector<Int> d;
  for (std::size_t i = 0; i < t; ++i)
    d.push_back(r.A(i, i));
  return d;
}

std::size_t rank(const IntMatrix& a) { return invariant_factors(a).size(); }

IntMatrix kernel_basis(const IntMatrix& a) {
  SnfResult s = smith_normal_form(a);
  return s.V.columns(s.rank, a.cols() - s.rank);
}

AbelianGroup cokernel_invariants(const IntMatrix& a) {
  std::vector<Int> d = invariant_factors(a);
  return AbelianGroup(a.rows() - d.size(), d);
}

AbelianGroup homology_at(const IntMatrix& d_in, const IntMatrix& d_out) {
  if (d_out.cols() != d_in.rows())
    throw std::invalid_argument("homology_at: d_out columns (" +
                                std::to_string(d_out.cols()) +
                                ") != d_in rows (" +
                                std::to_string(d_in.rows()) + ")");
  if (!is_zero(d_out * d_in))
    throw NotAComplex("homology_at: d_out * d_in != 0");
  // Z^b / ker(d_out) embeds in Z^c, so ker(d_out) is a direct summand and
  // the torsion of ker/im is the torsion of coker(d_in); no transforms needed
  std::vector<Int> d = invariant_factors(d_in);
  const std::size_t free = d_in.rows() - rank(d_out) - d.size();
  return AbelianGroup(free, d);
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("unimodular_inverse: matrix must be square");
  SnfResult s = smith_normal_form(a);
  if (s.rank != a.rows() || (a.rows() > 0 && s.D(a.rows() - 1, a.rows() - 1) != 1))
    throw std::invalid_argument("unimodular_inverse: determinant is not +-1");
  // U A V = I  =>  A^-1 = V U
  return s.V * s.U;
}

} // namespace crystcoh
