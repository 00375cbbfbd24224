#include "torelli/forms.hpp"

#include <algorithm>
#include <cassert>

namespace torelli {

long normalize_mod(long x, long p) {
  long r = x % p;
  return r < 0 ? r + p : r;
}

long inverse_modp(long x, long p) {
  long a = normalize_mod(x, p), b = p;
  long u = 1, v = 0;
  while (b) {
    long q = a / b;
    a -= q * b;
    std::swap(a, b);
    u -= q * v;
    std::swap(u, v);
  }
  if (a != 1)
    throw domain_error("element is not invertible mod p");
  return normalize_mod(u, p);
}

bool is_prime_long(long n) {
  if (n < 2)
    return false;
  if (n % 2 == 0)
    return n == 2;
  for (long d = 3; d * d <= n; d += 2)
    if (n % d == 0)
      return false;
  return true;
}

long omega_letters(long i, long j, long g) {
  if (i == j + g)
    return 1; // omega(b_k, a_k) = +1
  if (j == i + g)
    return -1;
  return 0;
}

long varpi_letters(long i, long j, long g) {
  return (i == j + g || j == i + g) ? 1 : 0;
}

ModVector::ModVector(long genus, long prime)
    : g(genus), p(prime), coeffs(static_cast<size_t>(2 * genus), 0) {}

bool ModVector::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](long c) { return c == 0; });
}

long pairing_omega_mod(const ModVector &u, const ModVector &v) {
  assert(u.g == v.g && u.p == v.p);
  long s = 0;
  for (long i = 0; i < u.g; ++i) {
    s += u.coeffs[static_cast<size_t>(u.g + i)] * v.coeffs[static_cast<size_t>(i)];
    s -= u.coeffs[static_cast<size_t>(i)] * v.coeffs[static_cast<size_t>(u.g + i)];
    s %= u.p;
  }
  return normalize_mod(s, u.p);
}

namespace {

void check_odd_prime(long p) {
  if (p < 3 || p % 2 == 0 || !is_prime_long(p))
    throw domain_error("forms require an odd prime modulus");
}

// sorts three letters, returns the permutation sign or 0 on a repeat
int sort3(long &i, long &j, long &k) {
  int sign = 1;
  if (i > j) {
    std::swap(i, j);
    sign = -sign;
  }
  if (j > k) {
    std::swap(j, k);
    sign = -sign;
  }
  if (i > j) {
    std::swap(i, j);
    sign = -sign;
  }
  if (i == j || j == k)
    return 0;
  return sign;
}

} // namespace

WedgeVector3::WedgeVector3(long genus, long prime) : g(genus), p(prime) {
  check_odd_prime(prime);
}

void WedgeVector3::add_term(long i, long j, long k, long c) {
  int sign = sort3(i, j, k);
  if (sign == 0)
    return;
  Mono3 key{i, j, k};
  long v = normalize_mod(coeffs.count(key) ? coeffs[key] + sign * c : sign * c, p);
  if (v == 0)
    coeffs.erase(key);
  else
    coeffs[key] = v;
}

WedgeVector3 WedgeVector3::operator+(const WedgeVector3 &o) const {
  assert(g == o.g && p == o.p);
  WedgeVector3 r = *this;
  for (const auto &[key, c] : o.coeffs) {
    long v = normalize_mod((r.coeffs.count(key) ? r.coeffs[key] : 0) + c, p);
    if (v == 0)
      r.coeffs.erase(key);
    else
      r.coeffs[key] = v;
  }
  return r;
}

WedgeVector3 WedgeVector3::scaled(long c) const {
  WedgeVector3 r(g, p);
  for (const auto &[key, v] : coeffs) {
    long w = normalize_mod(v * c, p);
    if (w)
      r.coeffs[key] = w;
  }
  return r;
}

Sym2Elem::Sym2Elem(long genus, long prime) : g(genus), p(prime) {
  check_odd_prime(prime);
}

void Sym2Elem::add_lr(long x0, long x1, long y0, long y1, long c) {
  int s1 = 1, s2 = 1;
  if (x0 == x1 || y0 == y1)
    return;
  if (x0 > x1) {
    std::swap(x0, x1);
    s1 = -1;
  }
  if (y0 > y1) {
    std::swap(y0, y1);
    s2 = -1;
  }
  Mono2 pm{x0, x1}, qm{y0, y1};
  long v = normalize_mod(c * s1 * s2, p);
  if (v == 0)
    return;
  std::pair<Mono2, Mono2> key = pm <= qm ? std::make_pair(pm, qm)
                                         : std::make_pair(qm, pm);
  if (pm == qm)
    v = normalize_mod(2 * v, p); // P <-> P = 2 (e_P (x) e_P)
  long w = normalize_mod((coeffs.count(key) ? coeffs[key] : 0) + v, p);
  if (w == 0)
    coeffs.erase(key);
  else
    coeffs[key] = w;
}

Sym2Elem Sym2Elem::operator+(const Sym2Elem &o) const {
  assert(g == o.g && p == o.p);
  Sym2Elem r = *this;
  for (const auto &[key, c] : o.coeffs) {
    long v = normalize_mod((r.coeffs.count(key) ? r.coeffs[key] : 0) + c, p);
    if (v == 0)
      r.coeffs.erase(key);
    else
      r.coeffs[key] = v;
  }
  return r;
}

Sym2Elem Sym2Elem::scaled(long c) const {
  Sym2Elem r(g, p);
  for (const auto &[key, v] : coeffs) {
    long w = normalize_mod(v * c, p);
    if (w)
      r.coeffs[key] = w;
  }
  return r;
}

TensorHL3::TensorHL3(long genus, long prime) : g(genus), p(prime) {}

void TensorHL3::add_term(const std::array<long, 4> &key, long c) {
  long v = normalize_mod((coeffs.count(key) ? coeffs[key] : 0) + c, p);
  if (v == 0)
    coeffs.erase(key);
  else
    coeffs[key] = v;
}

ModVector contraction_C(const WedgeVector3 &xi) {
  ModVector out(xi.g, xi.p);
  for (const auto &[key, c] : xi.coeffs) {
    long a = key[0], b = key[1], cc = key[2];
    long terms[3][2] = {{a, omega_letters(b, cc, xi.g)},
                        {b, omega_letters(cc, a, xi.g)},
                        {cc, omega_letters(a, b, xi.g)}};
    for (auto &[letter, w] : terms)
      if (w != 0) {
        long &slot = out.coeffs[static_cast<size_t>(letter)];
        slot = normalize_mod(slot + 2 * w * c, xi.p);
      }
  }
  return out;
}

WedgeVector3 map_u(const ModVector &x) {
  WedgeVector3 out(x.g, x.p);
  for (long l = 0; l < 2 * x.g; ++l) {
    long c = x.coeffs[static_cast<size_t>(l)];
    if (c == 0)
      continue;
    for (long i = 0; i < x.g; ++i)
      out.add_term(l, x.g + i, i, c); // x ^ b_i ^ a_i
  }
  return out;
}

namespace {

// W_A / W_AB / W_B block of a monomial by its number of a-letters
int a_count(const Mono3 &m, long g) {
  int n = 0;
  for (long l : m)
    if (l < g)
      ++n;
  return n;
}

// matching-pattern pairing of an a-triple against a b-triple
long j_pair(const WedgeVector3 &xi, const WedgeVector3 &eta) {
  long s = 0;
  for (const auto &[key, c] : xi.coeffs) {
    if (a_count(key, xi.g) != 3)
      continue;
    Mono3 partner{key[0] + xi.g, key[1] + xi.g, key[2] + xi.g};
    auto it = eta.coeffs.find(partner);
    if (it != eta.coeffs.end())
      s = normalize_mod(s + c * it->second, xi.p);
  }
  return s;
}

} // namespace

long form_J(const WedgeVector3 &xi, const WedgeVector3 &eta) {
  assert(xi.g == eta.g && xi.p == eta.p);
  return j_pair(xi, eta);
}

long form_Jt(const WedgeVector3 &xi, const WedgeVector3 &eta) {
  assert(xi.g == eta.g && xi.p == eta.p);
  return j_pair(eta, xi);
}

long form_Q(const WedgeVector3 &xi, const WedgeVector3 &eta) {
  return pairing_omega_mod(contraction_C(xi), contraction_C(eta));
}

long form_Theta(const WedgeVector3 &xi, const WedgeVector3 &eta) {
  assert(xi.g == eta.g && xi.p == eta.p);
  long p = xi.p, g = xi.g;
  long total = 0;
  for (const auto &[m, c] : xi.coeffs)
    for (const auto &[n, d] : eta.coeffs) {
      // det of the 3x3 omega-pairing matrix
      long w[3][3];
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          w[i][j] = omega_letters(m[static_cast<size_t>(i)],
                                  n[static_cast<size_t>(j)], g);
      long det3 = w[0][0] * (w[1][1] * w[2][2] - w[1][2] * w[2][1]) -
                  w[0][1] * (w[1][0] * w[2][2] - w[1][2] * w[2][0]) +
                  w[0][2] * (w[1][0] * w[2][1] - w[1][1] * w[2][0]);
      total = normalize_mod(total + c * d % p * det3, p);
    }
  return total;
}

long form_d(int which, const Sym2Elem &s) {
  long p = s.p, g = s.g;
  auto value = [&](const Mono2 &pm, const Mono2 &qm) -> long {
    long a = pm[0], b = pm[1], c = qm[0], d = qm[1];
    switch (which) {
    case 1:
      return omega_letters(a, b, g) * omega_letters(c, d, g);
    case 2:
      return omega_letters(a, c, g) * omega_letters(b, d, g) -
             omega_letters(a, d, g) * omega_letters(b, c, g);
    case 3:
      return varpi_letters(a, c, g) * varpi_letters(b, d, g) -
             varpi_letters(a, d, g) * varpi_letters(b, c, g);
    default:
      throw domain_error("d-form index must be 1, 2 or 3");
    }
  };
  long inv2 = inverse_modp(2, p);
  long total = 0;
  for (const auto &[key, c] : s.coeffs) {
    long v = value(key.first, key.second);
    if (key.first == key.second)
      v = normalize_mod(v * inv2, p); // e_P (x) e_P = (P <-> P) / 2
    total = normalize_mod(total + c * v, p);
  }
  return total;
}

Sym2Elem chi(const WedgeVector3 &xi, const WedgeVector3 &eta) {
  assert(xi.g == eta.g && xi.p == eta.p);
  Sym2Elem out(xi.g, xi.p);
  long g = xi.g, p = xi.p;
  for (const auto &[m, cm] : xi.coeffs)
    for (const auto &[n, cn] : eta.coeffs) {
      long coeff = normalize_mod(cm * cn, p);
      // (a, b, c) and (d, e, f) with cyclic complements
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          long w = omega_letters(m[static_cast<size_t>(i)],
                                 n[static_cast<size_t>(j)], g);
          if (w == 0)
            continue;
          long x0 = m[static_cast<size_t>((i + 1) % 3)];
          long x1 = m[static_cast<size_t>((i + 2) % 3)];
          long y0 = n[static_cast<size_t>((j + 1) % 3)];
          long y1 = n[static_cast<size_t>((j + 2) % 3)];
          out.add_lr(x0, x1, y0, y1, normalize_mod(-w * coeff, p));
        }
    }
  return out;
}

namespace {

// expands h (x) [b, [c, d]] into the tensor cube
void add_bracket(TensorHL3 &out, long h, long b, long c, long d, long coeff) {
  out.add_term({h, b, c, d}, coeff);
  out.add_term({h, b, d, c}, -coeff);
  out.add_term({h, c, d, b}, -coeff);
  out.add_term({h, d, c, b}, coeff);
}

void add_pi_of_lr(TensorHL3 &out, const Mono2 &pm, const Mono2 &qm,
                  long coeff) {
  long a = pm[0], b = pm[1], c = qm[0], d = qm[1];
  add_bracket(out, a, b, c, d, coeff);
  add_bracket(out, b, a, c, d, -coeff);
  add_bracket(out, c, d, a, b, coeff);
  add_bracket(out, d, c, a, b, -coeff);
}

} // namespace

TensorHL3 pi_map(const Sym2Elem &s) {
  TensorHL3 out(s.g, s.p);
  long inv2 = inverse_modp(2, s.p);
  for (const auto &[key, c] : s.coeffs) {
    long v = c;
    if (key.first == key.second)
      v = normalize_mod(v * inv2, s.p);
    add_pi_of_lr(out, key.first, key.second, v);
  }
  return out;
}

bool TensorHL3::in_bracket_span() const {
  if (coeffs.empty())
    return true;
  long n = 2 * g;
  // column space of all expanded h (x) [x, [y, z]] per fixed h-slot; a vector
  // is in the span iff each h-slice of the last three slots is.
  // Build the bracket expansions once (they do not depend on h).
  std::map<std::array<long, 3>, long> target_slices_keys;
  // Collect, per h, the T^3 slice.
  std::map<long, std::map<std::array<long, 3>, long>> slices;
  for (const auto &[key, c] : coeffs)
    slices[key[0]][{key[1], key[2], key[3]}] = c;

  // basis of expanded [x,[y,z]] vectors in T^3 coordinates
  std::vector<std::map<std::array<long, 3>, long>> gens;
  for (long x = 0; x < n; ++x)
    for (long y = 0; y < n; ++y)
      for (long z = 0; z < n; ++z) {
        std::map<std::array<long, 3>, long> v;
        auto add = [&](std::array<long, 3> k, long c) {
          long w = normalize_mod((v.count(k) ? v[k] : 0) + c, p);
          if (w == 0)
            v.erase(k);
          else
            v[k] = w;
        };
        add({x, y, z}, 1);
        add({x, z, y}, -1);
        add({y, z, x}, -1);
        add({z, y, x}, 1);
        if (!v.empty())
          gens.push_back(std::move(v));
      }

  // index the T^3 monomials that appear anywhere
  std::map<std::array<long, 3>, long> index;
  auto touch = [&](const std::array<long, 3> &k) {
    if (!index.count(k)) {
      long id = static_cast<long>(index.size());
      index[k] = id;
    }
  };
  for (const auto &gvec : gens)
    for (const auto &[k, c] : gvec)
      touch(k);
  for (const auto &[h, slice] : slices)
    for (const auto &[k, c] : slice)
      touch(k);

  long dim = static_cast<long>(index.size());
  std::vector<std::vector<long>> rows;
  auto densify = [&](const std::map<std::array<long, 3>, long> &v) {
    std::vector<long> r(static_cast<size_t>(dim), 0);
    for (const auto &[k, c] : v)
      r[static_cast<size_t>(index.at(k))] = normalize_mod(c, p);
    return r;
  };
  for (const auto &gvec : gens)
    rows.push_back(densify(gvec));

  // row-reduce the generator set once
  std::vector<std::vector<long>> basis;
  std::vector<long> pivots;
  auto reduce_against = [&](std::vector<long> &r) {
    for (size_t b = 0; b < basis.size(); ++b) {
      long c = r[static_cast<size_t>(pivots[b])];
      if (c == 0)
        continue;
      for (long j = 0; j < dim; ++j)
        r[static_cast<size_t>(j)] = normalize_mod(
            r[static_cast<size_t>(j)] - c * basis[b][static_cast<size_t>(j)], p);
    }
  };
  for (auto &r : rows) {
    reduce_against(r);
    long piv = -1;
    for (long j = 0; j < dim; ++j)
      if (r[static_cast<size_t>(j)] != 0) {
        piv = j;
        break;
      }
    if (piv < 0)
      continue;
    long inv = inverse_modp(r[static_cast<size_t>(piv)], p);
    for (long j = 0; j < dim; ++j)
      r[static_cast<size_t>(j)] = normalize_mod(r[static_cast<size_t>(j)] * inv, p);
    basis.push_back(r);
    pivots.push_back(piv);
  }

  for (const auto &[h, slice] : slices) {
    std::vector<long> r = densify(slice);
    reduce_against(r);
    if (!std::all_of(r.begin(), r.end(), [](long c) { return c == 0; }))
      return false;
  }
  return true;
}

std::string letter_name(long i, long g) {
  return (i < g ? "a" : "b") + std::to_string(i % g + 1);
}

long letter_index(const std::string &name, long g) {
  if (name.size() < 2 || (name[0] != 'a' && name[0] != 'b'))
    throw parse_error("bad basis letter '" + name + "'");
  long idx;
  try {
    idx = std::stol(name.substr(1));
  } catch (...) {
    throw parse_error("bad basis letter '" + name + "'");
  }
  if (idx < 1 || idx > g)
    throw parse_error("basis letter '" + name + "' out of range for genus " +
                      std::to_string(g));
  return (name[0] == 'a' ? 0 : g) + idx - 1;
}

} // namespace torelli
