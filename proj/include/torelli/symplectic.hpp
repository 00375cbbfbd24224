#pragma once

#include <vector>

#include "torelli/exact.hpp"

namespace torelli {

// Basis convention used everywhere: a_1..a_g, b_1..b_g (column coordinates),
// omega(b_i, a_i) = +1 = -omega(a_i, b_i), matrices act on column vectors,
// Omega = (0, Id; -Id, 0).

struct HomologyClass {
  long g = 0;
  std::vector<Integer> coeffs; // length 2g

  HomologyClass() = default;
  HomologyClass(long genus, std::vector<Integer> c);
  static HomologyClass basis(long g, long index); // index in [0, 2g)
};

IntMatrix omega(long g);
Integer pairing_omega(const HomologyClass &u, const HomologyClass &v);

// Integral symplectic matrix; construction checks M Omega M^t = Omega.
class SpMatrixZ {
public:
  SpMatrixZ(long g, IntMatrix m);
  long genus() const { return g_; }
  const IntMatrix &mat() const { return m_; }
  SpMatrixZ inverse() const; // -Omega M^t Omega
  SpMatrixZ operator*(const SpMatrixZ &o) const;
  bool operator==(const SpMatrixZ &o) const { return m_ == o.m_; }

private:
  long g_;
  IntMatrix m_;
};

// Symplectic matrix modulo d, entries in [0, d).
class SpMatrixMod {
public:
  SpMatrixMod(long g, Integer d, IntMatrix m);
  long genus() const { return g_; }
  const Integer &modulus() const { return d_; }
  const IntMatrix &mat() const { return m_; }
  SpMatrixMod inverse() const;
  SpMatrixMod operator*(const SpMatrixMod &o) const;
  bool is_identity() const { return m_.is_identity(); }

private:
  long g_;
  Integer d_;
  IntMatrix m_;
};

struct TwistLetter {
  HomologyClass curve;
  Integer power;
};

struct TwistWord {
  long g = 0;
  std::vector<TwistLetter> letters;
};

// Homology action of T_c^k: v -> v + k omega(v, c) c.
SpMatrixZ transvection(const HomologyClass &c, const Integer &k);

// Ordered product of transvections, leftmost letter = outermost factor,
// i.e. the rightmost twist acts first.  Empty word gives the identity.
SpMatrixZ word_image(const TwistWord &w);

SpMatrixMod reduce_mod(const SpMatrixZ &m, const Integer &d);

HomologyClass apply(const SpMatrixZ &m, const HomologyClass &v);

enum class Lagrangian { A, B, AB };

struct BlockFactor {
  IntMatrix gl;   // the GL_g part
  IntMatrix sym;  // symmetric part (unused for AB)
  bool has_sym = false;
};

// phi^B: (G, 0; M, tG^-1) -> (G, tG M);  phi^A: (H, N; 0, tH^-1) -> (H, H^-1 N);
// phi^AB: (G, 0; 0, tG^-1) -> G.  Throws shape_mismatch / not_symplectic.
BlockFactor block_factor(const SpMatrixZ &m, Lagrangian which);
BlockFactor block_factor_mod(const SpMatrixMod &m, Lagrangian which);

// Element of sp_2g(Z/d): (alpha, beta; gamma, -alpha^t), beta and gamma
// symmetric mod d.
struct SpLieElem {
  long g = 0;
  Integer d;
  IntMatrix alpha, beta, gamma; // g x g, entries in [0, d)

  IntMatrix assemble_mod() const; // full 2g x 2g matrix mod d
  bool is_zero() const;
  SpLieElem operator+(const SpLieElem &o) const;
};

// abel: Id + dA -> A (mod d); requires m = Id (mod d).
SpLieElem abel(const SpMatrixZ &m, const Integer &d);

Integer trace_alpha(const SpLieElem &x); // tr(alpha) mod d

} // namespace torelli
