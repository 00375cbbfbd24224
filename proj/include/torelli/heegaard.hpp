#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "torelli/symplectic.hpp"

namespace torelli {

// A Heegaard gluing is carried around by its symplectic image (E, F; G, H).
struct HeegaardGluing {
  SpMatrixZ sp;
  explicit HeegaardGluing(SpMatrixZ m) : sp(std::move(m)) {}
  long genus() const { return sp.genus(); }
};

struct LensSpec {
  Integer p; // >= 1
  Integer q; // gcd(p, q) = 1
};

// H_1 of the splitting = Coker(H block).
AbelianFactors splitting_homology(const HeegaardGluing &h);

// |det H|, or nullopt when det H = 0 (not a Q-homology sphere).
std::optional<Integer> h1_order(const HeegaardGluing &h);

// d | n-1 or d | n+1.
bool mod_d_splitting_exists(const Integer &n, const Integer &d);

// All moduli d >= 2 dividing n-1 or n+1 (divisors of 0 contribute nothing).
std::vector<Integer> admissible_moduli(const Integer &n);

struct Trivialization {
  SpMatrixMod x; // (Id, A; 0, Id), A symmetric
  SpMatrixMod y; // lower-block-triangular
};

// X Psi_d(f) Y = Id with A = -F H^-1 (mod d); requires det H = +-1 (mod d).
Trivialization trivialize(const HeegaardGluing &h, const Integer &d);

// Genus-1 gluing (a, b; -q, p) with a p + b q = 1, a minimal nonnegative.
HeegaardGluing lens_gluing(const LensSpec &spec);

// Genus-1 gluing for L(p, q) congruent to Id mod d; needs p = +-1 (mod d).
HeegaardGluing lens_gluing_mod_d(const Integer &p, const Integer &q,
                                 const Integer &d);

// tr(alpha(abel(sp, d))) * x; requires reduce_mod(sp, d) = Id.
Integer phi_invariant(const HeegaardGluing &h, const Integer &d,
                      const Integer &x);

} // namespace torelli
