#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "torelli/errors.hpp"

namespace torelli {

// Everything in this header works over Z/p for an odd prime p. Basis letters
// are indexed 0..2g-1 with a_1..a_g = 0..g-1 and b_1..b_g = g..2g-1;
// omega(b_i, a_i) = +1.

long normalize_mod(long x, long p);
long inverse_modp(long x, long p); // p prime, x not 0 mod p
bool is_prime_long(long n);

long omega_letters(long i, long j, long g);  // intersection pairing on letters
long varpi_letters(long i, long j, long g);  // form of (0, Id; Id, 0)

// Vector of 2g residues (a homology class mod p).
struct ModVector {
  long g = 0;
  long p = 0;
  std::vector<long> coeffs;

  ModVector() = default;
  ModVector(long genus, long prime);
  bool is_zero() const;
};

long pairing_omega_mod(const ModVector &u, const ModVector &v);

using Mono3 = std::array<long, 3>; // strictly increasing letters
using Mono2 = std::array<long, 2>;

// Element of wedge^3 H_p with canonical sorted monomials.
struct WedgeVector3 {
  long g = 0;
  long p = 0;
  std::map<Mono3, long> coeffs; // values in [1, p), zeros absent

  WedgeVector3() = default;
  WedgeVector3(long genus, long prime);
  void add_term(long i, long j, long k, long c); // sorts, tracks the sign
  WedgeVector3 operator+(const WedgeVector3 &o) const;
  WedgeVector3 scaled(long c) const;
  bool operator==(const WedgeVector3 &o) const {
    return g == o.g && p == o.p && coeffs == o.coeffs;
  }
  bool is_zero() const { return coeffs.empty(); }
};

// Element of S^2(wedge^2 H_p) inside the tensor square: the coefficient at
// key {P, Q} is the tensor coefficient of e_P (x) e_Q (symmetric, P <= Q).
struct Sym2Elem {
  long g = 0;
  long p = 0;
  std::map<std::pair<Mono2, Mono2>, long> coeffs;

  Sym2Elem() = default;
  Sym2Elem(long genus, long prime);
  // adds c * (x0^x1 <-> y0^y1), the symmetrized tensor of two wedge monomials
  void add_lr(long x0, long x1, long y0, long y1, long c);
  Sym2Elem operator+(const Sym2Elem &o) const;
  Sym2Elem scaled(long c) const;
  bool is_zero() const { return coeffs.empty(); }
  bool operator==(const Sym2Elem &o) const {
    return g == o.g && p == o.p && coeffs == o.coeffs;
  }
};

// Element of H_p (x) T^3(H_p), the bracket-expanded home of H (x) L_3.
struct TensorHL3 {
  long g = 0;
  long p = 0;
  std::map<std::array<long, 4>, long> coeffs;

  TensorHL3() = default;
  TensorHL3(long genus, long prime);
  void add_term(const std::array<long, 4> &key, long c);
  bool is_zero() const { return coeffs.empty(); }
  // last three slots lie in the span of expanded brackets [x,[y,z]]
  bool in_bracket_span() const;
};

// C(a^b^c) = 2 [w(b,c) a + w(c,a) b + w(a,b) c], extended linearly.
ModVector contraction_C(const WedgeVector3 &xi);

// u(x) = x ^ (sum_i b_i ^ a_i).
WedgeVector3 map_u(const ModVector &x);

long form_J(const WedgeVector3 &xi, const WedgeVector3 &eta);
long form_Jt(const WedgeVector3 &xi, const WedgeVector3 &eta);
long form_Q(const WedgeVector3 &xi, const WedgeVector3 &eta);
long form_Theta(const WedgeVector3 &xi, const WedgeVector3 &eta);

long form_d(int which, const Sym2Elem &s); // which in {1, 2, 3}

Sym2Elem chi(const WedgeVector3 &xi, const WedgeVector3 &eta);

TensorHL3 pi_map(const Sym2Elem &s);

std::string letter_name(long i, long g); // "a1".."bg"
long letter_index(const std::string &name, long g);

} // namespace torelli
