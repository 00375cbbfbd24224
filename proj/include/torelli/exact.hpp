#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "torelli/errors.hpp"

namespace torelli {

using Integer = mpz_class;

// Dense matrix over Z with arbitrary-precision entries, row-major.
class IntMatrix {
public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(long rows, long cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows * cols)) {}

  static IntMatrix identity(long n);
  static IntMatrix diagonal(const std::vector<Integer> &d);

  long rows() const { return rows_; }
  long cols() const { return cols_; }

  Integer &at(long i, long j) { return a_[static_cast<size_t>(i * cols_ + j)]; }
  const Integer &at(long i, long j) const {
    return a_[static_cast<size_t>(i * cols_ + j)];
  }

  bool operator==(const IntMatrix &o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix &o) const;
  IntMatrix operator+(const IntMatrix &o) const;
  IntMatrix operator-(const IntMatrix &o) const;
  IntMatrix negate() const;

  bool is_zero() const;
  bool is_identity() const;

  // g x g corner blocks of a 2g x 2g matrix: 0 = top-left, 1 = top-right,
  // 2 = bottom-left, 3 = bottom-right.
  IntMatrix block(int which) const;
  static IntMatrix assemble(const IntMatrix &e, const IntMatrix &f,
                            const IntMatrix &g, const IntMatrix &h);

  IntMatrix reduced_mod(const Integer &d) const; // entries into [0, d)

private:
  long rows_, cols_;
  std::vector<Integer> a_;
};

struct SnfResult {
  IntMatrix u, s, v;           // a = u * s * v, u and v unimodular
  std::vector<Integer> factors; // nonzero diagonal of s, positive, d_i | d_{i+1}
};

struct AbelianFactors {
  std::vector<Integer> torsion; // invariant factors > 1, divisibility chain
  long free_rank = 0;
};

Integer det(const IntMatrix &a);             // exact, Bareiss elimination
IntMatrix adjugate(const IntMatrix &a);      // a * adjugate(a) = det(a) * Id
SnfResult smith_normal_form(const IntMatrix &a);
AbelianFactors cokernel_factors(const IntMatrix &a); // a square

// Entrywise-reduced inverse of a modulo d; requires gcd(det a, d) = 1.
IntMatrix inverse_mod(const IntMatrix &a, const Integer &d);

Integer mod_floor(const Integer &x, const Integer &d); // representative in [0, d)

} // namespace torelli
