#include "torelli/symplectic.hpp"

#include <cassert>

namespace torelli {

HomologyClass::HomologyClass(long genus, std::vector<Integer> c)
    : g(genus), coeffs(std::move(c)) {
  if (static_cast<long>(coeffs.size()) != 2 * g)
    throw shape_mismatch("homology class needs 2g coefficients");
}

HomologyClass HomologyClass::basis(long g, long index) {
  std::vector<Integer> c(static_cast<size_t>(2 * g));
  c[static_cast<size_t>(index)] = 1;
  return HomologyClass(g, std::move(c));
}

IntMatrix omega(long g) {
  IntMatrix m(2 * g, 2 * g);
  for (long i = 0; i < g; ++i) {
    m.at(i, g + i) = 1;
    m.at(g + i, i) = -1;
  }
  return m;
}

Integer pairing_omega(const HomologyClass &u, const HomologyClass &v) {
  if (u.g != v.g)
    throw shape_mismatch("pairing of classes of different genus");
  Integer s = 0;
  for (long i = 0; i < u.g; ++i) {
    s += u.coeffs[static_cast<size_t>(u.g + i)] * v.coeffs[static_cast<size_t>(i)];
    s -= u.coeffs[static_cast<size_t>(i)] * v.coeffs[static_cast<size_t>(u.g + i)];
  }
  return s;
}

namespace {

bool symplectic_ok(const IntMatrix &m, long g) {
  IntMatrix om = omega(g);
  return m * om * m.transpose() == om;
}

bool symplectic_mod_ok(const IntMatrix &m, long g, const Integer &d) {
  IntMatrix om = omega(g);
  return (m * om * m.transpose() - om).reduced_mod(d).is_zero();
}

} // namespace

SpMatrixZ::SpMatrixZ(long g, IntMatrix m) : g_(g), m_(std::move(m)) {
  if (m_.rows() != 2 * g_ || m_.cols() != 2 * g_)
    throw shape_mismatch("symplectic matrix must be 2g x 2g");
  if (!symplectic_ok(m_, g_))
    throw not_symplectic("matrix does not preserve Omega");
}

SpMatrixZ SpMatrixZ::inverse() const {
  IntMatrix om = omega(g_);
  return SpMatrixZ(g_, (om * m_.transpose() * om).negate());
}

SpMatrixZ SpMatrixZ::operator*(const SpMatrixZ &o) const {
  assert(g_ == o.g_);
  return SpMatrixZ(g_, m_ * o.m_);
}

SpMatrixMod::SpMatrixMod(long g, Integer d, IntMatrix m)
    : g_(g), d_(std::move(d)), m_(m.reduced_mod(d_)) {
  if (d_ < 2)
    throw shape_mismatch("modulus must be >= 2");
  if (m_.rows() != 2 * g_ || m_.cols() != 2 * g_)
    throw shape_mismatch("symplectic matrix must be 2g x 2g");
  if (!symplectic_mod_ok(m_, g_, d_))
    throw not_symplectic("matrix is not symplectic modulo " + d_.get_str());
}

SpMatrixMod SpMatrixMod::inverse() const {
  IntMatrix om = omega(g_);
  return SpMatrixMod(g_, d_, (om * m_.transpose() * om).negate().reduced_mod(d_));
}

SpMatrixMod SpMatrixMod::operator*(const SpMatrixMod &o) const {
  assert(g_ == o.g_ && d_ == o.d_);
  return SpMatrixMod(g_, d_, (m_ * o.m_).reduced_mod(d_));
}

SpMatrixZ transvection(const HomologyClass &c, const Integer &k) {
  long g = c.g;
  IntMatrix m = IntMatrix::identity(2 * g);
  // column j gets k * omega(e_j, c) * c added
  for (long j = 0; j < 2 * g; ++j) {
    Integer w = pairing_omega(HomologyClass::basis(g, j), c);
    if (w == 0)
      continue;
    Integer kw = k * w;
    for (long i = 0; i < 2 * g; ++i)
      m.at(i, j) += kw * c.coeffs[static_cast<size_t>(i)];
  }
  return SpMatrixZ(g, std::move(m));
}

SpMatrixZ word_image(const TwistWord &w) {
  IntMatrix acc = IntMatrix::identity(2 * w.g);
  for (const TwistLetter &l : w.letters) {
    if (l.curve.g != w.g)
      throw shape_mismatch("twist word mixes genera");
    acc = acc * transvection(l.curve, l.power).mat();
  }
  return SpMatrixZ(w.g, std::move(acc));
}

SpMatrixMod reduce_mod(const SpMatrixZ &m, const Integer &d) {
  return SpMatrixMod(m.genus(), d, m.mat().reduced_mod(d));
}

HomologyClass apply(const SpMatrixZ &m, const HomologyClass &v) {
  if (v.g != m.genus())
    throw shape_mismatch("genus mismatch");
  long n = 2 * v.g;
  std::vector<Integer> out(static_cast<size_t>(n));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      out[static_cast<size_t>(i)] += m.mat().at(i, j) * v.coeffs[static_cast<size_t>(j)];
  return HomologyClass(v.g, std::move(out));
}

namespace {

BlockFactor block_factor_impl(const IntMatrix &m, Lagrangian which,
                              const Integer *d) {
  IntMatrix e = m.block(0), f = m.block(1), gg = m.block(2), h = m.block(3);
  auto is_zero_mod = [&](const IntMatrix &x) {
    return d ? x.reduced_mod(*d).is_zero() : x.is_zero();
  };
  auto symmetric_mod = [&](const IntMatrix &x) {
    return is_zero_mod(x - x.transpose());
  };
  BlockFactor out;
  switch (which) {
  case Lagrangian::B: {
    if (!is_zero_mod(f))
      throw shape_mismatch("top-right block must vanish for lagrangian B");
    IntMatrix s = e.transpose() * gg;
    if (d)
      s = s.reduced_mod(*d);
    if (!symmetric_mod(s))
      throw not_symplectic("tG M part is not symmetric");
    out.gl = e;
    out.sym = s;
    out.has_sym = true;
    return out;
  }
  case Lagrangian::A: {
    if (!is_zero_mod(gg))
      throw shape_mismatch("bottom-left block must vanish for lagrangian A");
    IntMatrix hinv = d ? inverse_mod(e, *d) : [&] {
      Integer de = det(e);
      if (de != 1 && de != -1)
        throw not_symplectic("diagonal block is not unimodular");
      IntMatrix adj = adjugate(e);
      return de == 1 ? adj : adj.negate();
    }();
    IntMatrix s = hinv * f;
    if (d)
      s = s.reduced_mod(*d);
    if (!symmetric_mod(s))
      throw not_symplectic("H^-1 N part is not symmetric");
    out.gl = e;
    out.sym = s;
    out.has_sym = true;
    return out;
  }
  case Lagrangian::AB: {
    if (!is_zero_mod(f) || !is_zero_mod(gg))
      throw shape_mismatch("off-diagonal blocks must vanish for lagrangian AB");
    out.gl = e;
    out.has_sym = false;
    return out;
  }
  }
  throw shape_mismatch("unknown lagrangian");
}

} // namespace

BlockFactor block_factor(const SpMatrixZ &m, Lagrangian which) {
  return block_factor_impl(m.mat(), which, nullptr);
}

BlockFactor block_factor_mod(const SpMatrixMod &m, Lagrangian which) {
  Integer d = m.modulus();
  return block_factor_impl(m.mat(), which, &d);
}

IntMatrix SpLieElem::assemble_mod() const {
  IntMatrix m = IntMatrix::assemble(alpha, beta, gamma,
                                    alpha.transpose().negate());
  return m.reduced_mod(d);
}

bool SpLieElem::is_zero() const {
  return alpha.is_zero() && beta.is_zero() && gamma.is_zero();
}

SpLieElem SpLieElem::operator+(const SpLieElem &o) const {
  assert(g == o.g && d == o.d);
  return SpLieElem{g, d, (alpha + o.alpha).reduced_mod(d),
                   (beta + o.beta).reduced_mod(d),
                   (gamma + o.gamma).reduced_mod(d)};
}

SpLieElem abel(const SpMatrixZ &m, const Integer &d) {
  long g = m.genus();
  IntMatrix diff = m.mat() - IntMatrix::identity(2 * g);
  if (!diff.reduced_mod(d).is_zero())
    throw not_congruent_to_identity(
        "matrix is not congruent to the identity modulo " + d.get_str());
  IntMatrix a(2 * g, 2 * g);
  for (long i = 0; i < 2 * g; ++i)
    for (long j = 0; j < 2 * g; ++j) {
      Integer q;
      mpz_divexact(q.get_mpz_t(), diff.at(i, j).get_mpz_t(), d.get_mpz_t());
      a.at(i, j) = mod_floor(q, d);
    }
  SpLieElem x{g, d, a.block(0), a.block(1), a.block(2)};
  // membership: assembled X must satisfy X^t Omega + Omega X = 0 (mod d)
  IntMatrix om = omega(g);
  IntMatrix chk = (a.transpose() * om + om * a).reduced_mod(d);
  if (!chk.is_zero())
    throw not_symplectic("abel image does not lie in sp_2g(Z/d)");
  return x;
}

Integer trace_alpha(const SpLieElem &x) {
  Integer t = 0;
  for (long i = 0; i < x.g; ++i)
    t += x.alpha.at(i, i);
  return mod_floor(t, x.d);
}

} // namespace torelli
