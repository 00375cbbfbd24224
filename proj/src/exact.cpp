#include "torelli/exact.hpp"

#include <algorithm>
#include <cassert>

namespace torelli {

IntMatrix IntMatrix::identity(long n) {
  IntMatrix m(n, n);
  for (long i = 0; i < n; ++i)
    m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Integer> &d) {
  long n = static_cast<long>(d.size());
  IntMatrix m(n, n);
  for (long i = 0; i < n; ++i)
    m.at(i, i) = d[static_cast<size_t>(i)];
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j)
      t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix &o) const {
  assert(cols_ == o.rows_);
  IntMatrix r(rows_, o.cols_);
  Integer tmp;
  for (long i = 0; i < rows_; ++i)
    for (long k = 0; k < cols_; ++k) {
      const Integer &aik = at(i, k);
      if (aik == 0)
        continue;
      for (long j = 0; j < o.cols_; ++j) {
        tmp = aik * o.at(k, j);
        r.at(i, j) += tmp;
      }
    }
  return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix &o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  IntMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i)
    r.a_[i] = a_[i] + o.a_[i];
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix &o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  IntMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i)
    r.a_[i] = a_[i] - o.a_[i];
  return r;
}

IntMatrix IntMatrix::negate() const {
  IntMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i)
    r.a_[i] = -a_[i];
  return r;
}

bool IntMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(),
                     [](const Integer &x) { return x == 0; });
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_)
    return false;
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0))
        return false;
  return true;
}

IntMatrix IntMatrix::block(int which) const {
  assert(rows_ == cols_ && rows_ % 2 == 0);
  long g = rows_ / 2;
  long ro = (which / 2) * g, co = (which % 2) * g;
  IntMatrix b(g, g);
  for (long i = 0; i < g; ++i)
    for (long j = 0; j < g; ++j)
      b.at(i, j) = at(ro + i, co + j);
  return b;
}

IntMatrix IntMatrix::assemble(const IntMatrix &e, const IntMatrix &f,
                              const IntMatrix &g, const IntMatrix &h) {
  long n = e.rows();
  IntMatrix m(2 * n, 2 * n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      m.at(i, j) = e.at(i, j);
      m.at(i, n + j) = f.at(i, j);
      m.at(n + i, j) = g.at(i, j);
      m.at(n + i, n + j) = h.at(i, j);
    }
  return m;
}

Integer mod_floor(const Integer &x, const Integer &d) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  return r;
}

IntMatrix IntMatrix::reduced_mod(const Integer &d) const {
  IntMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i)
    r.a_[i] = mod_floor(a_[i], d);
  return r;
}

Integer det(const IntMatrix &a) {
  assert(a.rows() == a.cols());
  long n = a.rows();
  if (n == 0)
    return 1;
  IntMatrix m = a;
  int sign = 1;
  Integer prev = 1;
  for (long k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      long piv = -1;
      for (long i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0)
        return 0;
      for (long j = 0; j < n; ++j)
        std::swap(m.at(k, j), m.at(piv, j));
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i)
      for (long j = k + 1; j < n; ++j) {
        Integer t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

IntMatrix adjugate(const IntMatrix &a) {
  assert(a.rows() == a.cols());
  long n = a.rows();
  IntMatrix adj(n, n);
  if (n == 0)
    return adj;
  if (n == 1) {
    adj.at(0, 0) = 1;
    return adj;
  }
  IntMatrix minor(n - 1, n - 1);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      for (long r = 0, ri = 0; r < n; ++r) {
        if (r == i)
          continue;
        for (long c = 0, ci = 0; c < n; ++c) {
          if (c == j)
            continue;
          minor.at(ri, ci) = a.at(r, c);
          ++ci;
        }
        ++ri;
      }
      Integer cof = det(minor);
      adj.at(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
    }
  return adj;
}

namespace {

// Elimination state keeping a = u * s * v invariant.
struct SnfWork {
  IntMatrix u, s, v;

  // row i of s <- row i + q * row j; compensate in u
  void row_add(long i, long j, const Integer &q) {
    for (long c = 0; c < s.cols(); ++c)
      s.at(i, c) += q * s.at(j, c);
    for (long r = 0; r < u.rows(); ++r)
      u.at(r, j) -= q * u.at(r, i);
  }
  void col_add(long i, long j, const Integer &q) { // col i <- col i + q * col j
    for (long r = 0; r < s.rows(); ++r)
      s.at(r, i) += q * s.at(r, j);
    for (long c = 0; c < v.cols(); ++c)
      v.at(j, c) -= q * v.at(i, c);
  }
  void row_swap(long i, long j) {
    if (i == j)
      return;
    for (long c = 0; c < s.cols(); ++c)
      std::swap(s.at(i, c), s.at(j, c));
    for (long r = 0; r < u.rows(); ++r)
      std::swap(u.at(r, i), u.at(r, j));
  }
  void col_swap(long i, long j) {
    if (i == j)
      return;
    for (long r = 0; r < s.rows(); ++r)
      std::swap(s.at(r, i), s.at(r, j));
    for (long c = 0; c < v.cols(); ++c)
      std::swap(v.at(i, c), v.at(j, c));
  }
  void row_negate(long i) {
    for (long c = 0; c < s.cols(); ++c)
      s.at(i, c) = -s.at(i, c);
    for (long r = 0; r < u.rows(); ++r)
      u.at(r, i) = -u.at(r, i);
  }

  // Unimodular 2x2 transform on rows (i, j) making s(i, col) = gcd and
  // s(j, col) = 0.
  void row_gcd(long i, long j, long col) {
    Integer a = s.at(i, col), b = s.at(j, col);
    if (b == 0)
      return;
    if (a == 0) {
      row_swap(i, j);
      return;
    }
    if (b % a == 0) { // plain elimination keeps the pivot row untouched
      row_add(j, i, -(b / a));
      return;
    }
    Integer g, x, y;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(),
               b.get_mpz_t());
    Integer ag = a / g, bg = b / g;
    // rows (i, j) <- (x y; -bg ag) (rows); inverse is (ag -y; bg x)
    for (long c = 0; c < s.cols(); ++c) {
      Integer ri = s.at(i, c), rj = s.at(j, c);
      s.at(i, c) = x * ri + y * rj;
      s.at(j, c) = ag * rj - bg * ri;
    }
    for (long r = 0; r < u.rows(); ++r) {
      Integer ci = u.at(r, i), cj = u.at(r, j);
      u.at(r, i) = ag * ci + bg * cj;
      u.at(r, j) = x * cj - y * ci;
    }
  }
  void col_gcd(long i, long j, long row) {
    Integer a = s.at(row, i), b = s.at(row, j);
    if (b == 0)
      return;
    if (a == 0) {
      col_swap(i, j);
      return;
    }
    if (b % a == 0) {
      col_add(j, i, -(b / a));
      return;
    }
    Integer g, x, y;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(),
               b.get_mpz_t());
    Integer ag = a / g, bg = b / g;
    for (long r = 0; r < s.rows(); ++r) {
      Integer ci = s.at(r, i), cj = s.at(r, j);
      s.at(r, i) = x * ci + y * cj;
      s.at(r, j) = ag * cj - bg * ci;
    }
    for (long c = 0; c < v.cols(); ++c) {
      Integer ri = v.at(i, c), rj = v.at(j, c);
      v.at(i, c) = ag * ri + bg * rj;
      v.at(j, c) = x * rj - y * ri;
    }
  }
};

} // namespace

SnfResult smith_normal_form(const IntMatrix &a) {
  long m = a.rows(), n = a.cols();
  SnfWork w{IntMatrix::identity(m), a, IntMatrix::identity(n)};
  long rank = std::min(m, n);

  for (long t = 0; t < rank; ++t) {
    // deterministic pivot: smallest |entry| != 0, first in row-major order
    long pi = -1, pj = -1;
    Integer best;
    for (long i = t; i < m; ++i)
      for (long j = t; j < n; ++j) {
        const Integer &x = w.s.at(i, j);
        if (x == 0)
          continue;
        Integer ax = abs(x);
        if (pi < 0 || ax < best) {
          best = ax;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0)
      break; // remaining submatrix is zero
    w.row_swap(t, pi);
    w.col_swap(t, pj);

    for (;;) {
      for (long i = t + 1; i < m; ++i)
        w.row_gcd(t, i, t);
      for (long j = t + 1; j < n; ++j)
        w.col_gcd(t, j, t);
      bool clean = true;
      for (long i = t + 1; i < m && clean; ++i)
        clean = w.s.at(i, t) == 0;
      for (long j = t + 1; j < n && clean; ++j)
        clean = w.s.at(t, j) == 0;
      if (clean)
        break;
    }
  }

  // positive diagonal, zeros last
  for (long t = 0; t < rank; ++t)
    if (w.s.at(t, t) < 0)
      w.row_negate(t);
  for (long t = 0, last = rank; t < last; ++t)
    if (w.s.at(t, t) == 0) {
      long nz = -1;
      for (long j = t + 1; j < rank; ++j)
        if (w.s.at(j, j) != 0) {
          nz = j;
          break;
        }
      if (nz < 0)
        break;
      w.row_swap(t, nz);
      w.col_swap(t, nz);
    }

  // enforce d_i | d_{i+1}
  for (bool dirty = true; dirty;) {
    dirty = false;
    for (long t = 0; t + 1 < rank; ++t) {
      const Integer &di = w.s.at(t, t), &dj = w.s.at(t + 1, t + 1);
      if (di == 0 || dj == 0 || dj % di == 0)
        continue;
      dirty = true;
      w.col_add(t, t + 1, 1);  // puts d_{j} below the pivot
      w.row_gcd(t, t + 1, t);  // diag becomes (gcd, *; 0, *)
      Integer q = w.s.at(t, t + 1) / w.s.at(t, t);
      w.col_add(t + 1, t, -q);
      if (w.s.at(t, t) < 0)
        w.row_negate(t);
      if (w.s.at(t + 1, t + 1) < 0)
        w.row_negate(t + 1);
    }
  }

  SnfResult res;
  res.factors.reserve(static_cast<size_t>(rank));
  for (long t = 0; t < rank; ++t)
    if (w.s.at(t, t) != 0)
      res.factors.push_back(w.s.at(t, t));
  res.u = std::move(w.u);
  res.s = std::move(w.s);
  res.v = std::move(w.v);
  return res;
}

AbelianFactors cokernel_factors(const IntMatrix &a) {
  assert(a.rows() == a.cols());
  SnfResult snf = smith_normal_form(a);
  AbelianFactors f;
  for (const Integer &d : snf.factors)
    if (d > 1)
      f.torsion.push_back(d);
  f.free_rank = a.rows() - static_cast<long>(snf.factors.size());
  return f;
}

IntMatrix inverse_mod(const IntMatrix &a, const Integer &d) {
  assert(a.rows() == a.cols());
  Integer dd = det(a);
  Integer dm = mod_floor(dd, d);
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), dm.get_mpz_t(), d.get_mpz_t()) == 0)
    throw not_invertible_mod("matrix determinant is not a unit modulo " +
                             d.get_str());
  IntMatrix adj = adjugate(a);
  IntMatrix r(a.rows(), a.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j)
      r.at(i, j) = mod_floor(adj.at(i, j) * inv, d);
  return r;
}

} // namespace torelli
