#include "torelli/invariant.hpp"

#include <algorithm>
#include <cassert>

#include "torelli/bcj.hpp"

namespace torelli {

void SparseMatrix::add(long row, long col, long value, long p) {
  long v = normalize_mod(value, p);
  if (v == 0)
    return;
  auto &c = cols[static_cast<size_t>(col)];
  for (auto &[r, existing] : c)
    if (r == row) {
      existing = normalize_mod(existing + v, p);
      return;
    }
  c.emplace_back(row, v);
}

namespace {

using Rows = std::vector<std::vector<long>>; // row-major

// kernel of an (rows x n) matrix, solutions as vectors of length n
Rows kernel(Rows m, long n, long p) {
  long nrows = static_cast<long>(m.size());
  std::vector<long> pivot_row_of_col(static_cast<size_t>(n), -1);
  long r = 0;
  for (long c = 0; c < n && r < nrows; ++c) {
    long pr = -1;
    for (long i = r; i < nrows; ++i)
      if (m[static_cast<size_t>(i)][static_cast<size_t>(c)] != 0) {
        pr = i;
        break;
      }
    if (pr < 0)
      continue;
    std::swap(m[static_cast<size_t>(pr)], m[static_cast<size_t>(r)]);
    auto &row = m[static_cast<size_t>(r)];
    long inv = inverse_modp(row[static_cast<size_t>(c)], p);
    for (long j = c; j < n; ++j)
      row[static_cast<size_t>(j)] = normalize_mod(row[static_cast<size_t>(j)] * inv, p);
    for (long i = 0; i < nrows; ++i) {
      if (i == r)
        continue;
      auto &ri = m[static_cast<size_t>(i)];
      long f = ri[static_cast<size_t>(c)];
      if (f == 0)
        continue;
      for (long j = c; j < n; ++j)
        ri[static_cast<size_t>(j)] =
            normalize_mod(ri[static_cast<size_t>(j)] - f * row[static_cast<size_t>(j)], p);
    }
    pivot_row_of_col[static_cast<size_t>(c)] = r;
    ++r;
  }

  Rows ker;
  for (long c = 0; c < n; ++c) {
    if (pivot_row_of_col[static_cast<size_t>(c)] >= 0)
      continue;
    std::vector<long> v(static_cast<size_t>(n), 0);
    v[static_cast<size_t>(c)] = 1;
    for (long cc = 0; cc < c; ++cc) {
      long pr = pivot_row_of_col[static_cast<size_t>(cc)];
      if (pr >= 0)
        v[static_cast<size_t>(cc)] = normalize_mod(
            -m[static_cast<size_t>(pr)][static_cast<size_t>(c)], p);
    }
    ker.push_back(std::move(v));
  }
  return ker;
}

Rows rref(Rows rows, long p) {
  if (rows.empty())
    return rows;
  size_t width = rows[0].size();
  size_t rank = 0;
  for (size_t c = 0; c < width && rank < rows.size(); ++c) {
    size_t pr = rank;
    while (pr < rows.size() && rows[pr][c] == 0)
      ++pr;
    if (pr == rows.size())
      continue;
    std::swap(rows[rank], rows[pr]);
    long inv = inverse_modp(rows[rank][c], p);
    for (size_t j = c; j < width; ++j)
      rows[rank][j] = normalize_mod(rows[rank][j] * inv, p);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0)
        continue;
      long f = rows[i][c];
      for (size_t j = c; j < width; ++j)
        rows[i][j] = normalize_mod(rows[i][j] - f * rows[rank][j], p);
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

} // namespace

std::vector<std::vector<long>> invariant_space(const InvariantProblem &prob) {
  long dim = prob.dim, p = prob.p;
  // basis of the candidate dual space as rows of B^t: basis[k] in (Z/p)^dim
  Rows basis(static_cast<size_t>(dim));
  for (long i = 0; i < dim; ++i) {
    basis[static_cast<size_t>(i)].assign(static_cast<size_t>(dim), 0);
    basis[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  }

  for (const SparseMatrix &m : prob.gens) {
    long n = static_cast<long>(basis.size());
    if (n == 0)
      break;
    // constraint rows: row i = ((M^t - Id) B)[i][.], with B columns = basis
    Rows constraint(static_cast<size_t>(dim));
    for (long i = 0; i < dim; ++i)
      constraint[static_cast<size_t>(i)].assign(static_cast<size_t>(n), 0);
    for (long i = 0; i < dim; ++i) {
      auto &ci = constraint[static_cast<size_t>(i)];
      for (const auto &[r, v] : m.cols[static_cast<size_t>(i)]) {
        // (M^t B)[i][k] += v * basis[k][r]; basis stored as rows of B^t
        for (long k = 0; k < n; ++k) {
          long b = basis[static_cast<size_t>(k)][static_cast<size_t>(r)];
          if (b)
            ci[static_cast<size_t>(k)] = normalize_mod(ci[static_cast<size_t>(k)] + v * b, p);
        }
      }
      for (long k = 0; k < n; ++k)
        ci[static_cast<size_t>(k)] = normalize_mod(
            ci[static_cast<size_t>(k)] - basis[static_cast<size_t>(k)][static_cast<size_t>(i)], p);
    }
    Rows ker = kernel(std::move(constraint), n, p);
    Rows next;
    next.reserve(ker.size());
    for (const auto &x : ker) {
      std::vector<long> comb(static_cast<size_t>(dim), 0);
      for (long k = 0; k < n; ++k) {
        long c = x[static_cast<size_t>(k)];
        if (c == 0)
          continue;
        const auto &bk = basis[static_cast<size_t>(k)];
        for (long i = 0; i < dim; ++i)
          if (bk[static_cast<size_t>(i)])
            comb[static_cast<size_t>(i)] = normalize_mod(
                comb[static_cast<size_t>(i)] + c * bk[static_cast<size_t>(i)], p);
      }
      next.push_back(std::move(comb));
    }
    basis = std::move(next);
  }

  return rref(std::move(basis), p);
}

std::vector<Mono3> wedge3_basis(long g) {
  std::vector<Mono3> out;
  for (long i = 0; i < 2 * g; ++i)
    for (long j = i + 1; j < 2 * g; ++j)
      for (long k = j + 1; k < 2 * g; ++k)
        out.push_back({i, j, k});
  return out;
}

std::vector<Mono2> wedge2_basis(long g) {
  std::vector<Mono2> out;
  for (long i = 0; i < 2 * g; ++i)
    for (long j = i + 1; j < 2 * g; ++j)
      out.push_back({i, j});
  return out;
}

std::vector<std::pair<Mono2, Mono2>> sym2_basis(long g) {
  std::vector<Mono2> w2 = wedge2_basis(g);
  std::vector<std::pair<Mono2, Mono2>> out;
  for (size_t i = 0; i < w2.size(); ++i)
    for (size_t j = i; j < w2.size(); ++j)
      out.emplace_back(w2[i], w2[j]);
  return out;
}

std::vector<std::pair<Mono3, Mono3>> wedge2of3_basis(long g) {
  std::vector<Mono3> w3 = wedge3_basis(g);
  std::vector<std::pair<Mono3, Mono3>> out;
  for (size_t i = 0; i < w3.size(); ++i)
    for (size_t j = i + 1; j < w3.size(); ++j)
      out.emplace_back(w3[i], w3[j]);
  return out;
}

std::vector<std::uint64_t> boolean_basis(long g, int max_degree) {
  std::vector<std::uint64_t> out;
  std::uint64_t top = std::uint64_t(1) << (2 * g);
  for (std::uint64_t mask = 0; mask < top; ++mask)
    if (__builtin_popcountll(mask) <= max_degree)
      out.push_back(mask);
  std::stable_sort(out.begin(), out.end(),
                   [](std::uint64_t a, std::uint64_t b) {
                     int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
                     return pa != pb ? pa < pb : a < b;
                   });
  return out;
}

std::vector<SpLieCoord> splie_basis(long g) {
  std::vector<SpLieCoord> out;
  for (long i = 0; i < g; ++i)
    for (long j = 0; j < g; ++j)
      out.push_back({0, i, j});
  for (long i = 0; i < g; ++i)
    for (long j = i; j < g; ++j)
      out.push_back({1, i, j});
  for (long i = 0; i < g; ++i)
    for (long j = i; j < g; ++j)
      out.push_back({2, i, j});
  return out;
}

namespace {

using Mat = std::vector<std::vector<long>>;

Mat zero_mat(long n) { return Mat(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(n), 0)); }

Mat identity_mat(long n) {
  Mat m = zero_mat(n);
  for (long i = 0; i < n; ++i)
    m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  return m;
}

// embed (G, 0; 0, tG^-1) given G and its inverse
Mat embed_gl(const Mat &g_mat, const Mat &g_inv, long g, long p) {
  Mat m = zero_mat(2 * g);
  for (long i = 0; i < g; ++i)
    for (long j = 0; j < g; ++j) {
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          normalize_mod(g_mat[static_cast<size_t>(i)][static_cast<size_t>(j)], p);
      m[static_cast<size_t>(g + i)][static_cast<size_t>(g + j)] =
          normalize_mod(g_inv[static_cast<size_t>(j)][static_cast<size_t>(i)], p);
    }
  return m;
}

Mat transvection_block(bool upper, const Mat &s, long g, long p) {
  Mat m = identity_mat(2 * g);
  for (long i = 0; i < g; ++i)
    for (long j = 0; j < g; ++j) {
      long v = normalize_mod(s[static_cast<size_t>(i)][static_cast<size_t>(j)], p);
      if (upper)
        m[static_cast<size_t>(i)][static_cast<size_t>(g + j)] = v;
      else
        m[static_cast<size_t>(g + i)][static_cast<size_t>(j)] = v;
    }
  return m;
}

} // namespace

std::vector<Mat> symplectic_generators(Group group, long g, long p) {
  std::vector<Mat> out;
  // adjacent transpositions
  for (long t = 0; t + 1 < g; ++t) {
    Mat perm = identity_mat(g);
    perm[static_cast<size_t>(t)][static_cast<size_t>(t)] = 0;
    perm[static_cast<size_t>(t + 1)][static_cast<size_t>(t + 1)] = 0;
    perm[static_cast<size_t>(t)][static_cast<size_t>(t + 1)] = 1;
    perm[static_cast<size_t>(t + 1)][static_cast<size_t>(t)] = 1;
    out.push_back(embed_gl(perm, perm, g, p));
  }
  // elementary e_21(1)
  {
    Mat e = identity_mat(g), einv = identity_mat(g);
    e[1][0] = 1;
    einv[1][0] = normalize_mod(-1, p);
    out.push_back(embed_gl(e, einv, g, p));
  }
  // diag(-1, 1, ..., 1)
  {
    Mat d = identity_mat(g);
    d[0][0] = normalize_mod(-1, p);
    out.push_back(embed_gl(d, d, g, p));
  }
  if (group == Group::Sp) {
    Mat e11 = zero_mat(g), e12s = zero_mat(g);
    e11[0][0] = 1;
    e12s[0][1] = 1;
    e12s[1][0] = 1;
    out.push_back(transvection_block(true, e11, g, p));
    out.push_back(transvection_block(true, e12s, g, p));
    out.push_back(transvection_block(false, e11, g, p));
    out.push_back(transvection_block(false, e12s, g, p));
  }
  return out;
}

namespace {

// column c of M as (row, value) pairs
std::vector<std::pair<long, long>> column_of(const Mat &m, long c) {
  std::vector<std::pair<long, long>> out;
  for (long i = 0; i < static_cast<long>(m.size()); ++i) {
    long v = m[static_cast<size_t>(i)][static_cast<size_t>(c)];
    if (v)
      out.emplace_back(i, v);
  }
  return out;
}

SparseMatrix wedge3_action(const Mat &m, long g, long p,
                           const std::vector<Mono3> &basis) {
  std::map<Mono3, long> index;
  for (size_t i = 0; i < basis.size(); ++i)
    index[basis[i]] = static_cast<long>(i);
  SparseMatrix act(static_cast<long>(basis.size()));
  for (size_t bi = 0; bi < basis.size(); ++bi) {
    const Mono3 &s = basis[bi];
    auto c0 = column_of(m, s[0]), c1 = column_of(m, s[1]), c2 = column_of(m, s[2]);
    WedgeVector3 img(g, p);
    for (const auto &[r0, v0] : c0)
      for (const auto &[r1, v1] : c1)
        for (const auto &[r2, v2] : c2)
          img.add_term(r0, r1, r2, normalize_mod(v0 * v1 % p * v2, p));
    for (const auto &[key, c] : img.coeffs)
      act.add(index.at(key), static_cast<long>(bi), c, p);
  }
  return act;
}

SparseMatrix wedge2of3_action(const Mat &m, long g, long p) {
  std::vector<Mono3> w3 = wedge3_basis(g);
  SparseMatrix inner = wedge3_action(m, g, p, w3);
  auto pairs = wedge2of3_basis(g);
  long n3 = static_cast<long>(w3.size());
  std::map<std::pair<long, long>, long> index;
  for (size_t i = 0; i < pairs.size(); ++i) {
    long a = 0, b = 0;
    // recover indices of the two wedge-3 monomials
    a = static_cast<long>(std::lower_bound(w3.begin(), w3.end(), pairs[i].first) - w3.begin());
    b = static_cast<long>(std::lower_bound(w3.begin(), w3.end(), pairs[i].second) - w3.begin());
    index[{a, b}] = static_cast<long>(i);
  }
  SparseMatrix act(static_cast<long>(pairs.size()));
  for (const auto &[key, col] : index) {
    auto [sa, sb] = key;
    for (const auto &[ra, va] : inner.cols[static_cast<size_t>(sa)])
      for (const auto &[rb, vb] : inner.cols[static_cast<size_t>(sb)]) {
        if (ra == rb)
          continue;
        long coeff = normalize_mod(va * vb, p);
        if (ra < rb)
          act.add(index.at({ra, rb}), col, coeff, p);
        else
          act.add(index.at({rb, ra}), col, normalize_mod(-coeff, p), p);
      }
  }
  (void)n3;
  return act;
}

SparseMatrix sym2_action(const Mat &m, long g, long p) {
  std::vector<Mono2> w2 = wedge2_basis(g);
  std::map<Mono2, long> w2index;
  for (size_t i = 0; i < w2.size(); ++i)
    w2index[w2[i]] = static_cast<long>(i);
  // wedge-2 functorial action, sparse columns
  std::vector<std::vector<std::pair<long, long>>> inner(w2.size());
  for (size_t bi = 0; bi < w2.size(); ++bi) {
    auto c0 = column_of(m, w2[bi][0]), c1 = column_of(m, w2[bi][1]);
    std::map<Mono2, long> img;
    for (const auto &[r0, v0] : c0)
      for (const auto &[r1, v1] : c1) {
        if (r0 == r1)
          continue;
        long v = normalize_mod(v0 * v1, p);
        if (r0 < r1) {
          long &slot = img[{r0, r1}];
          slot = normalize_mod(slot + v, p);
        } else {
          long &slot = img[{r1, r0}];
          slot = normalize_mod(slot - v, p);
        }
      }
    for (const auto &[key, v] : img)
      if (v)
        inner[bi].emplace_back(w2index.at(key), v);
  }

  auto keys = sym2_basis(g);
  std::map<std::pair<long, long>, long> index;
  for (size_t i = 0; i < keys.size(); ++i)
    index[{w2index.at(keys[i].first), w2index.at(keys[i].second)}] =
        static_cast<long>(i);
  SparseMatrix act(static_cast<long>(keys.size()));
  for (const auto &[key, col] : index) {
    auto [pa, qa] = key;
    bool diagonal = pa == qa;
    for (const auto &[pp, vp] : inner[static_cast<size_t>(pa)])
      for (const auto &[qq, vq] : inner[static_cast<size_t>(qa)]) {
        long v = normalize_mod(vp * vq, p);
        if (diagonal) {
          // image of e_P (x) e_P: count each ordered tensor slot once
          if (pp < qq)
            act.add(index.at({pp, qq}), col, v, p);
          else if (pp == qq)
            act.add(index.at({pp, qq}), col, v, p);
        } else {
          // image of the symmetrized pair
          if (pp == qq)
            act.add(index.at({pp, qq}), col, normalize_mod(2 * v, p), p);
          else if (pp < qq)
            act.add(index.at({pp, qq}), col, v, p);
          else
            act.add(index.at({qq, pp}), col, v, p);
        }
      }
  }
  return act;
}

SparseMatrix splie_action(const Mat &m, long g, long p) {
  auto coords = splie_basis(g);
  long n = 2 * g;
  // inverse through Omega: f^-1 = -Omega f^t Omega
  Mat minv = zero_mat(n);
  auto om = [&](long i, long j) -> long {
    if (j == i + g)
      return 1;
    if (i == j + g)
      return -1;
    return 0;
  };
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      long s = 0;
      for (long k = 0; k < n; ++k) {
        long o1 = om(i, k);
        if (!o1)
          continue;
        for (long l = 0; l < n; ++l) {
          long o2 = om(l, j);
          if (o2)
            s += o1 * m[static_cast<size_t>(l)][static_cast<size_t>(k)] * o2;
        }
      }
      minv[static_cast<size_t>(i)][static_cast<size_t>(j)] = normalize_mod(-s, p);
    }

  auto coord_index = [&](int block, long i, long j) -> long {
    if (block == 0)
      return i * g + j;
    long base = g * g;
    if (block == 2)
      base += g * (g + 1) / 2;
    // offset of (i, j) with i <= j in the upper-triangle enumeration
    long off = i * g - i * (i - 1) / 2 + (j - i);
    return base + off;
  };

  SparseMatrix act(static_cast<long>(coords.size()));
  Mat x = zero_mat(n), tmp = zero_mat(n), y = zero_mat(n);
  for (size_t ci = 0; ci < coords.size(); ++ci) {
    const SpLieCoord &co = coords[ci];
    for (auto &row : x)
      std::fill(row.begin(), row.end(), 0);
    if (co.block == 0) {
      x[static_cast<size_t>(co.i)][static_cast<size_t>(co.j)] = 1;
      x[static_cast<size_t>(g + co.j)][static_cast<size_t>(g + co.i)] =
          normalize_mod(-1, p);
    } else if (co.block == 1) {
      x[static_cast<size_t>(co.i)][static_cast<size_t>(g + co.j)] = 1;
      x[static_cast<size_t>(co.j)][static_cast<size_t>(g + co.i)] = 1;
    } else {
      x[static_cast<size_t>(g + co.i)][static_cast<size_t>(co.j)] = 1;
      x[static_cast<size_t>(g + co.j)][static_cast<size_t>(co.i)] = 1;
    }
    // y = m x m^-1
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) {
        long s = 0;
        for (long k = 0; k < n; ++k)
          s += m[static_cast<size_t>(i)][static_cast<size_t>(k)] *
               x[static_cast<size_t>(k)][static_cast<size_t>(j)];
        tmp[static_cast<size_t>(i)][static_cast<size_t>(j)] = normalize_mod(s, p);
      }
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) {
        long s = 0;
        for (long k = 0; k < n; ++k)
          s += tmp[static_cast<size_t>(i)][static_cast<size_t>(k)] *
               minv[static_cast<size_t>(k)][static_cast<size_t>(j)];
        y[static_cast<size_t>(i)][static_cast<size_t>(j)] = normalize_mod(s, p);
      }
    // read off coordinates
    for (long i = 0; i < g; ++i)
      for (long j = 0; j < g; ++j) {
        long v = y[static_cast<size_t>(i)][static_cast<size_t>(j)];
        if (v)
          act.add(coord_index(0, i, j), static_cast<long>(ci), v, p);
      }
    for (long i = 0; i < g; ++i)
      for (long j = i; j < g; ++j) {
        long v = y[static_cast<size_t>(i)][static_cast<size_t>(g + j)];
        if (v)
          act.add(coord_index(1, i, j), static_cast<long>(ci), v, p);
        long w = y[static_cast<size_t>(g + i)][static_cast<size_t>(j)];
        if (w)
          act.add(coord_index(2, i, j), static_cast<long>(ci), w, p);
      }
  }
  return act;
}

SparseMatrix boolean_action(const Mat &m, long g, int max_degree) {
  auto basis = boolean_basis(g, max_degree);
  std::map<std::uint64_t, long> index;
  for (size_t i = 0; i < basis.size(); ++i)
    index[basis[i]] = static_cast<long>(i);

  IntMatrix mm(2 * g, 2 * g);
  for (long i = 0; i < 2 * g; ++i)
    for (long j = 0; j < 2 * g; ++j)
      mm.at(i, j) = m[static_cast<size_t>(i)][static_cast<size_t>(j)];
  SpMatrixMod sp(g, 2, mm);

  SparseMatrix act(static_cast<long>(basis.size()));
  for (size_t bi = 0; bi < basis.size(); ++bi) {
    BooleanPoly mono(g);
    mono.support.insert(basis[bi]);
    BooleanPoly img = sp2_act(sp, mono);
    for (std::uint64_t out : img.support) {
      auto it = index.find(out);
      if (it == index.end())
        throw domain_error("boolean action left the degree window");
      act.add(it->second, static_cast<long>(bi), 1, 2);
    }
  }
  return act;
}

} // namespace

InvariantProblem builtin_action(Module module, Group group, long g, long p) {
  if (g < 3)
    throw unsupported_combination("classification actions need g >= 3");
  bool boolean = module == Module::B2 || module == Module::B3;
  if (boolean && p != 2)
    throw unsupported_combination("boolean modules live over Z/2");
  if (!boolean && (p < 3 || !(p % 2) || !is_prime_long(p)))
    throw unsupported_combination("this module needs an odd prime");

  std::vector<Mat> gens = symplectic_generators(group, g, p);
  InvariantProblem prob;
  prob.p = p;

  switch (module) {
  case Module::B2:
  case Module::B3: {
    int deg = module == Module::B2 ? 2 : 3;
    auto basis = boolean_basis(g, deg);
    prob.dim = static_cast<long>(basis.size());
    for (std::uint64_t mask : basis) {
      BooleanPoly mono(g);
      mono.support.insert(mask);
      prob.labels.push_back(to_string(mono));
    }
    for (const Mat &m : gens)
      prob.gens.push_back(boolean_action(m, g, deg));
    break;
  }
  case Module::Wedge3: {
    auto basis = wedge3_basis(g);
    prob.dim = static_cast<long>(basis.size());
    for (const Mono3 &s : basis)
      prob.labels.push_back(letter_name(s[0], g) + "^" + letter_name(s[1], g) +
                            "^" + letter_name(s[2], g));
    for (const Mat &m : gens)
      prob.gens.push_back(wedge3_action(m, g, p, basis));
    break;
  }
  case Module::SpLie: {
    auto coords = splie_basis(g);
    prob.dim = static_cast<long>(coords.size());
    for (const SpLieCoord &c : coords) {
      const char *names[] = {"alpha", "beta", "gamma"};
      prob.labels.push_back(std::string(names[c.block]) + "[" +
                            std::to_string(c.i + 1) + "," +
                            std::to_string(c.j + 1) + "]");
    }
    for (const Mat &m : gens)
      prob.gens.push_back(splie_action(m, g, p));
    break;
  }
  case Module::Sym2Wedge2: {
    auto keys = sym2_basis(g);
    prob.dim = static_cast<long>(keys.size());
    for (const auto &[a, b] : keys)
      prob.labels.push_back(letter_name(a[0], g) + "^" + letter_name(a[1], g) +
                            "<->" + letter_name(b[0], g) + "^" +
                            letter_name(b[1], g));
    for (const Mat &m : gens)
      prob.gens.push_back(sym2_action(m, g, p));
    break;
  }
  case Module::Wedge2OfWedge3: {
    auto keys = wedge2of3_basis(g);
    prob.dim = static_cast<long>(keys.size());
    for (const auto &[a, b] : keys)
      prob.labels.push_back(
          letter_name(a[0], g) + "^" + letter_name(a[1], g) + "^" +
          letter_name(a[2], g) + " | " + letter_name(b[0], g) + "^" +
          letter_name(b[1], g) + "^" + letter_name(b[2], g));
    for (const Mat &m : gens)
      prob.gens.push_back(wedge2of3_action(m, g, p));
    break;
  }
  }
  return prob;
}

Module module_from_name(const std::string &name) {
  if (name == "B2")
    return Module::B2;
  if (name == "B3")
    return Module::B3;
  if (name == "Wedge3")
    return Module::Wedge3;
  if (name == "SpLie")
    return Module::SpLie;
  if (name == "Sym2Wedge2")
    return Module::Sym2Wedge2;
  if (name == "Wedge2OfWedge3")
    return Module::Wedge2OfWedge3;
  throw parse_error("unknown module '" + name + "'");
}

} // namespace torelli
