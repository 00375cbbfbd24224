#include "torelli/magnus.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "torelli/forms.hpp"

namespace torelli {

FreeWord FreeWord::parse(const std::string &text, long rank) {
  FreeWord w;
  w.rank = rank;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok[0] != 'x')
      throw parse_error("bad generator token '" + tok + "'");
    size_t caret = tok.find('^');
    long idx;
    long exp = 1;
    try {
      idx = std::stol(tok.substr(1, caret == std::string::npos
                                        ? std::string::npos
                                        : caret - 1));
      if (caret != std::string::npos)
        exp = std::stol(tok.substr(caret + 1));
    } catch (...) {
      throw parse_error("bad generator token '" + tok + "'");
    }
    if (idx < 1 || idx > rank)
      throw parse_error("generator index out of range in '" + tok + "'");
    int sign = exp < 0 ? -1 : 1;
    for (long i = 0; i < (exp < 0 ? -exp : exp); ++i)
      w.letters.emplace_back(idx - 1, sign);
  }
  w.reduce();
  return w;
}

std::string FreeWord::str() const {
  if (letters.empty())
    return "1";
  std::string out;
  for (size_t i = 0; i < letters.size();) {
    size_t j = i;
    while (j < letters.size() && letters[j] == letters[i])
      ++j;
    long run = static_cast<long>(j - i) * letters[i].second;
    if (!out.empty())
      out += ' ';
    out += 'x' + std::to_string(letters[i].first + 1);
    if (run != 1)
      out += '^' + std::to_string(run);
    i = j;
  }
  return out;
}

void FreeWord::reduce() {
  std::vector<std::pair<long, int>> stack;
  for (const auto &l : letters) {
    if (!stack.empty() && stack.back().first == l.first &&
        stack.back().second == -l.second)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  letters = std::move(stack);
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  w.rank = rank;
  w.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    w.letters.emplace_back(it->first, -it->second);
  return w;
}

FreeWord FreeWord::concat(const FreeWord &o) const {
  assert(rank == o.rank);
  FreeWord w = *this;
  w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
  w.reduce();
  return w;
}

FreeWord FreeWord::commutator(const FreeWord &u, const FreeWord &v) {
  return u.concat(v).concat(u.inverse()).concat(v.inverse());
}

FreeWord FreeWord::power(long e) const {
  FreeWord base = e < 0 ? inverse() : *this;
  long n = e < 0 ? -e : e;
  FreeWord w;
  w.rank = rank;
  for (long i = 0; i < n; ++i)
    w = w.concat(base);
  return w;
}

std::uint64_t MagnusSeries::append_letter(std::uint64_t key, long letter,
                                          long rank) {
  // digits are letters+1, first letter most significant; appending shifts
  return key * static_cast<std::uint64_t>(rank + 1) +
         static_cast<std::uint64_t>(letter + 1);
}

long MagnusSeries::key_length(std::uint64_t key, long rank) {
  std::uint64_t base = static_cast<std::uint64_t>(rank + 1);
  long len = 0;
  while (key) {
    key /= base;
    ++len;
  }
  return len;
}

MagnusSeries MagnusSeries::one(long rank, long p, long trunc) {
  MagnusSeries s;
  s.rank = rank;
  s.p = p;
  s.trunc = trunc;
  s.coeffs[0] = 1;
  return s;
}

MagnusSeries MagnusSeries::mul(const MagnusSeries &o) const {
  assert(rank == o.rank && p == o.p && trunc == o.trunc);
  MagnusSeries out;
  out.rank = rank;
  out.p = p;
  out.trunc = trunc;
  std::uint64_t base = static_cast<std::uint64_t>(rank + 1);
  // precompute base^len for concatenation
  std::vector<std::uint64_t> pow(static_cast<size_t>(trunc + 1), 1);
  for (long i = 1; i <= trunc; ++i)
    pow[static_cast<size_t>(i)] = pow[static_cast<size_t>(i - 1)] * base;

  for (const auto &[ka, va] : coeffs) {
    long la = key_length(ka, rank);
    for (const auto &[kb, vb] : o.coeffs) {
      long lb = key_length(kb, rank);
      if (la + lb > trunc)
        continue;
      std::uint64_t key = ka * pow[static_cast<size_t>(lb)] + kb;
      long &slot = out.coeffs[key];
      slot = normalize_mod(slot + va * vb, p);
      if (slot == 0)
        out.coeffs.erase(key);
    }
  }
  return out;
}

MagnusSeries MagnusSeries::add(const MagnusSeries &o) const {
  assert(rank == o.rank && p == o.p && trunc == o.trunc);
  MagnusSeries out = *this;
  for (const auto &[k, v] : o.coeffs) {
    long &slot = out.coeffs[k];
    slot = normalize_mod(slot + v, p);
    if (slot == 0)
      out.coeffs.erase(k);
  }
  return out;
}

long MagnusSeries::coefficient(std::uint64_t key) const {
  auto it = coeffs.find(key);
  return it == coeffs.end() ? 0 : it->second;
}

long MagnusSeries::min_positive_degree() const {
  long best = 0;
  for (const auto &[k, v] : coeffs) {
    if (k == 0 || v == 0)
      continue;
    long len = key_length(k, rank);
    if (best == 0 || len < best)
      best = len;
  }
  return best;
}

MagnusSeries MagnusSeries::homogeneous(long k) const {
  MagnusSeries out;
  out.rank = rank;
  out.p = p;
  out.trunc = trunc;
  for (const auto &[key, v] : coeffs)
    if (key_length(key, rank) == k)
      out.coeffs[key] = v;
  return out;
}

MagnusSeries magnus_expand(const FreeWord &w, long p, long trunc) {
  if (trunc < 1)
    throw domain_error("truncation degree must be >= 1");
  if (!is_prime_long(p))
    throw domain_error("the expansion coefficient field needs a prime p");
  MagnusSeries acc = MagnusSeries::one(w.rank, p, trunc);
  for (const auto &[gen, sign] : w.letters) {
    MagnusSeries factor;
    factor.rank = w.rank;
    factor.p = p;
    factor.trunc = trunc;
    factor.coeffs[0] = 1;
    if (sign > 0) { // x -> 1 + X
      factor.coeffs[MagnusSeries::append_letter(0, gen, w.rank)] = 1;
    } else { // x^-1 -> 1 - X + X^2 - ... truncated
      std::uint64_t key = 0;
      long coeff = 1;
      for (long d = 1; d <= trunc; ++d) {
        key = MagnusSeries::append_letter(key, gen, w.rank);
        coeff = normalize_mod(-coeff, p);
        if (coeff)
          factor.coeffs[key] = coeff;
      }
    }
    acc = acc.mul(factor);
  }
  return acc;
}

FiltrationDegree z_degree(const FreeWord &w, long p, long trunc) {
  MagnusSeries s = magnus_expand(w, p, trunc);
  s.coeffs.erase(0); // subtract 1
  long d = s.min_positive_degree();
  if (d == 0)
    return {trunc + 1, false};
  return {d, true};
}

FreeEndo FreeEndo::identity(long rank) {
  FreeEndo f;
  f.rank = rank;
  for (long i = 0; i < rank; ++i) {
    FreeWord w;
    w.rank = rank;
    w.letters.emplace_back(i, 1);
    f.images.push_back(std::move(w));
  }
  return f;
}

FreeEndo FreeEndo::k12(long rank) {
  if (rank < 2)
    throw domain_error("K12 needs rank >= 2");
  FreeEndo f = identity(rank);
  FreeWord w;
  w.rank = rank;
  w.letters = {{1, 1}, {0, 1}, {1, -1}};
  f.images[0] = std::move(w);
  return f;
}

FreeWord apply_endo(const FreeEndo &f, const FreeWord &w) {
  if (f.rank != w.rank)
    throw shape_mismatch("endomorphism and word rank differ");
  FreeWord out;
  out.rank = w.rank;
  for (const auto &[gen, sign] : w.letters) {
    const FreeWord &img = f.images[static_cast<size_t>(gen)];
    if (sign > 0)
      out.letters.insert(out.letters.end(), img.letters.begin(),
                         img.letters.end());
    else {
      FreeWord inv = img.inverse();
      out.letters.insert(out.letters.end(), inv.letters.begin(),
                         inv.letters.end());
    }
  }
  out.reduce();
  return out;
}

bool h1_invertible(const FreeEndo &f, long p) {
  long r = f.rank;
  std::vector<std::vector<long>> m(static_cast<size_t>(r),
                                   std::vector<long>(static_cast<size_t>(r), 0));
  for (long j = 0; j < r; ++j)
    for (const auto &[gen, sign] : f.images[static_cast<size_t>(j)].letters)
      m[static_cast<size_t>(gen)][static_cast<size_t>(j)] = normalize_mod(
          m[static_cast<size_t>(gen)][static_cast<size_t>(j)] + sign, p);
  // determinant mod p by elimination
  long det = 1;
  for (long c = 0; c < r; ++c) {
    long piv = -1;
    for (long i = c; i < r; ++i)
      if (m[static_cast<size_t>(i)][static_cast<size_t>(c)]) {
        piv = i;
        break;
      }
    if (piv < 0)
      return false;
    if (piv != c) {
      std::swap(m[static_cast<size_t>(piv)], m[static_cast<size_t>(c)]);
      det = normalize_mod(-det, p);
    }
    long pv = m[static_cast<size_t>(c)][static_cast<size_t>(c)];
    det = normalize_mod(det * pv, p);
    long inv = inverse_modp(pv, p);
    for (long i = c + 1; i < r; ++i) {
      long fct = normalize_mod(m[static_cast<size_t>(i)][static_cast<size_t>(c)] * inv, p);
      if (!fct)
        continue;
      for (long j = c; j < r; ++j)
        m[static_cast<size_t>(i)][static_cast<size_t>(j)] = normalize_mod(
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                fct * m[static_cast<size_t>(c)][static_cast<size_t>(j)],
            p);
    }
  }
  return det != 0;
}

FiltrationDegree ia_degree(const FreeEndo &f, long p, long trunc) {
  if (!h1_invertible(f, p))
    throw not_automorphism_candidate(
        "endomorphism is singular on H_1 with Z/p coefficients");
  long min_deg = trunc + 1;
  bool all_deep = true;
  FreeEndo id = FreeEndo::identity(f.rank);
  for (long i = 0; i < f.rank; ++i) {
    FreeWord gen = id.images[static_cast<size_t>(i)];
    FreeWord delta = apply_endo(f, gen).concat(gen.inverse());
    FiltrationDegree d = z_degree(delta, p, trunc);
    if (d.exact) {
      all_deep = false;
      min_deg = std::min(min_deg, d.value);
    }
  }
  if (all_deep)
    return {trunc, false}; // trivial to the full truncation depth
  return {min_deg - 1, true};
}

std::vector<MagnusSeries> tau_k(const FreeEndo &f, long k, long p, long trunc) {
  if (trunc < k + 2)
    throw domain_error("truncation too small for tau_k");
  FiltrationDegree d = ia_degree(f, p, trunc);
  if (d.exact && d.value < k)
    throw depth_too_shallow("endomorphism is only IA_" + std::to_string(d.value));
  std::vector<MagnusSeries> out;
  FreeEndo id = FreeEndo::identity(f.rank);
  for (long i = 0; i < f.rank; ++i) {
    FreeWord gen = id.images[static_cast<size_t>(i)];
    FreeWord delta = apply_endo(f, gen).concat(gen.inverse());
    out.push_back(magnus_expand(delta, p, trunc).homogeneous(k + 1));
  }
  return out;
}

} // namespace torelli
