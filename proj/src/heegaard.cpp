#include "torelli/heegaard.hpp"

#include <algorithm>

namespace torelli {

AbelianFactors splitting_homology(const HeegaardGluing &h) {
  return cokernel_factors(h.sp.mat().block(3));
}

std::optional<Integer> h1_order(const HeegaardGluing &h) {
  Integer d = det(h.sp.mat().block(3));
  if (d == 0)
    return std::nullopt;
  return abs(d);
}

bool mod_d_splitting_exists(const Integer &n, const Integer &d) {
  return mod_floor(n - 1, d) == 0 || mod_floor(n + 1, d) == 0;
}

namespace {

void push_divisors(const Integer &m, std::vector<Integer> &out) {
  if (m == 0)
    return;
  Integer n = abs(m);
  for (Integer i = 2; i * i <= n; ++i)
    if (n % i == 0) {
      out.push_back(i);
      if (i * i != n)
        out.push_back(n / i);
    }
  if (n >= 2)
    out.push_back(n);
}

} // namespace

std::vector<Integer> admissible_moduli(const Integer &n) {
  std::vector<Integer> out;
  push_divisors(n - 1, out);
  push_divisors(n + 1, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Trivialization trivialize(const HeegaardGluing &h, const Integer &d) {
  long g = h.genus();
  IntMatrix m = h.sp.mat();
  IntMatrix f = m.block(1), hb = m.block(3);

  Integer dh = mod_floor(det(hb), d);
  if (dh != 1 && dh != mod_floor(Integer(-1), d))
    throw criterion_fails("det H is not congruent to +-1 modulo " +
                          d.get_str());

  IntMatrix a = (f * inverse_mod(hb, d)).negate().reduced_mod(d);
  IntMatrix x = IntMatrix::assemble(IntMatrix::identity(g), a,
                                    IntMatrix(g, g), IntMatrix::identity(g));
  SpMatrixMod xm(g, d, x);
  SpMatrixMod prod = xm * reduce_mod(h.sp, d);
  SpMatrixMod ym = prod.inverse();
  return Trivialization{std::move(xm), std::move(ym)};
}

HeegaardGluing lens_gluing(const LensSpec &spec) {
  const Integer &p = spec.p, &q = spec.q;
  if (p < 1)
    throw not_coprime("lens parameter p must be >= 1");
  if (gcd(p, q) != 1)
    throw not_coprime("lens parameters must be coprime");

  // a p + b q = 1, a the smallest nonnegative solution
  Integer gq, a0, b0;
  mpz_gcdext(gq.get_mpz_t(), a0.get_mpz_t(), b0.get_mpz_t(), p.get_mpz_t(),
             q.get_mpz_t());
  Integer a = a0, b = b0;
  if (q != 0) {
    a = mod_floor(a0, abs(q)); // solutions differ by multiples of q
    b = (1 - a * p) / q;
  }
  IntMatrix m(2, 2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = -q;
  m.at(1, 1) = p;
  return HeegaardGluing(SpMatrixZ(1, std::move(m)));
}

HeegaardGluing lens_gluing_mod_d(const Integer &p, const Integer &q,
                                 const Integer &d) {
  if (p < 1)
    throw not_coprime("lens parameter p must be >= 1");
  if (gcd(p, q) != 1)
    throw not_coprime("lens parameters must be coprime");

  Integer pp;
  if (mod_floor(p - 1, d) == 0)
    pp = p;
  else if (mod_floor(p + 1, d) == 0)
    pp = -p;
  else
    throw criterion_fails("p is not congruent to +-1 modulo " + d.get_str());

  // c = 0 (mod d), c = -q (mod p); gcd(d, p) = 1 since p = +-1 (mod d)
  Integer c;
  if (p == 1) {
    c = 0;
  } else {
    Integer dinv; // d^-1 mod p
    Integer dm = mod_floor(d, p);
    mpz_invert(dinv.get_mpz_t(), dm.get_mpz_t(), p.get_mpz_t());
    c = mod_floor(mod_floor(-q, p) * dinv, p) * d; // smallest nonnegative
  }

  // a0 pp - b0 c = 1; a0 = 1 (mod d) automatically, shift to force b = 0 (mod d)
  Integer g0, a0, nb0;
  mpz_gcdext(g0.get_mpz_t(), a0.get_mpz_t(), nb0.get_mpz_t(), pp.get_mpz_t(),
             c.get_mpz_t());
  Integer b0 = -nb0; // a0 pp - b0 c = 1
  Integer t = mod_floor(b0, d) == 0 ? Integer(0) : d - mod_floor(b0, d);
  Integer a = a0 + t * c;
  Integer b = b0 + t * pp;

  IntMatrix m(2, 2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = pp;
  return HeegaardGluing(SpMatrixZ(1, std::move(m)));
}

Integer phi_invariant(const HeegaardGluing &h, const Integer &d,
                      const Integer &x) {
  if (!reduce_mod(h.sp, d).is_identity())
    throw not_mod_d_torelli("gluing is not trivial modulo " + d.get_str());
  SpLieElem e = abel(h.sp, d);
  return mod_floor(trace_alpha(e) * x, d);
}

} // namespace torelli
