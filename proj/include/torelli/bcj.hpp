#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "torelli/symplectic.hpp"

namespace torelli {

// H_1 with Z/2 coefficients, bits ordered A_1..A_g, B_1..B_g.
struct ClassMod2 {
  long g = 0;
  std::vector<int> bits; // length 2g, values 0/1

  ClassMod2() = default;
  ClassMod2(long genus, std::vector<int> b);
  static ClassMod2 basis(long g, long index);
  static ClassMod2 from_class(const HomologyClass &v);
};

int intersection_mod2(const ClassMod2 &x, const ClassMod2 &y);

// F_2-span of square-free monomials in the barred generators; a monomial is
// the bitmask of its generators, the empty mask is the unit.
struct BooleanPoly {
  long g = 0;
  std::set<std::uint64_t> support;

  explicit BooleanPoly(long genus = 0) : g(genus) {}
  static BooleanPoly one(long g);
  static BooleanPoly generator(long g, long index);

  void toggle(std::uint64_t mono);
  bool operator==(const BooleanPoly &o) const {
    return g == o.g && support == o.support;
  }
  BooleanPoly operator+(const BooleanPoly &o) const;
  bool is_zero() const { return support.empty(); }
  long max_degree() const;
  int coefficient_of_one() const { return support.count(0) ? 1 : 0; }
};

// bar of a homology class, expanded along the basis order with
// bar(x + y) = bar(x) + bar(y) + (x . y).
BooleanPoly bar_class(const ClassMod2 &v);

BooleanPoly bool_mul(const BooleanPoly &p, const BooleanPoly &q);

struct BPData {
  long g = 0;
  std::vector<std::pair<ClassMod2, ClassMod2>> pairs;
  ClassMod2 e;
};

struct SepData {
  long g = 0;
  std::vector<std::pair<ClassMod2, ClassMod2>> pairs;
};

// sigma on a BP-map: sum_i bar(C_i) bar(D_i) (bar(E) + 1).
BooleanPoly sigma_bp(const BPData &data);

// sigma on a separating twist: sum_i bar(C_i) bar(D_i).
BooleanPoly sigma_sep(const SepData &data);

// Action of a mod-2 symplectic matrix, monomial-wise through bar_class.
BooleanPoly sp2_act(const SpMatrixMod &m, const BooleanPoly &p);

// Coefficient of the unit times x (the projection to degree 0).
Integer mu_x(const BooleanPoly &p, const Integer &x);

// The genus-2 trefoil twist word (T_{a2} T_{a1} T_c with c = b1 - b2).
TwistWord trefoil_word();

// sigma of the Dehn twist along the trefoil knot in the genus-2 splitting.
BooleanPoly poincare_sigma();

std::string to_string(const BooleanPoly &p); // unit prints as "1"

} // namespace torelli
