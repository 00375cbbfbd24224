#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "torelli/invariant.hpp"

using namespace torelli;

namespace {

// rank of a set of vectors mod p (independent little elimination)
long rank_of(std::vector<std::vector<long>> rows, long p) {
  long rank = 0;
  size_t width = rows.empty() ? 0 : rows[0].size();
  for (size_t c = 0; c < width && rank < static_cast<long>(rows.size()); ++c) {
    size_t pr = static_cast<size_t>(rank);
    while (pr < rows.size() && rows[pr][c] % p == 0)
      ++pr;
    if (pr == rows.size())
      continue;
    std::swap(rows[static_cast<size_t>(rank)], rows[pr]);
    long inv = inverse_modp(rows[static_cast<size_t>(rank)][c], p);
    for (size_t j = 0; j < width; ++j)
      rows[static_cast<size_t>(rank)][j] =
          normalize_mod(rows[static_cast<size_t>(rank)][j] * inv, p);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == static_cast<size_t>(rank))
        continue;
      long f = normalize_mod(rows[i][c], p);
      if (!f)
        continue;
      for (size_t j = 0; j < width; ++j)
        rows[i][j] = normalize_mod(
            rows[i][j] - f * rows[static_cast<size_t>(rank)][j], p);
    }
    ++rank;
  }
  return rank;
}

bool in_span(const std::vector<std::vector<long>> &basis,
             const std::vector<long> &v, long p) {
  std::vector<std::vector<long>> all = basis;
  long r0 = rank_of(all, p);
  all.push_back(v);
  return rank_of(all, p) == r0;
}

// functional value of an invariant row on each generator image: r . (M e_j)
bool functional_invariant(const std::vector<long> &r, const SparseMatrix &m,
                          long p) {
  for (long j = 0; j < m.n; ++j) {
    long lhs = 0;
    for (const auto &[row, v] : m.cols[static_cast<size_t>(j)])
      lhs = normalize_mod(lhs + v * r[static_cast<size_t>(row)], p);
    if (lhs != r[static_cast<size_t>(j)])
      return false;
  }
  return true;
}

} // namespace

TEST_CASE("trivial group gives the whole dual space") {
  InvariantProblem prob;
  prob.dim = 5;
  prob.p = 3;
  auto basis = invariant_space(prob);
  CHECK(basis.size() == 5);
}

TEST_CASE("tiny swap action") {
  InvariantProblem prob;
  prob.dim = 2;
  prob.p = 5;
  SparseMatrix swap(2);
  swap.add(0, 1, 1, 5);
  swap.add(1, 0, 1, 5);
  prob.gens.push_back(swap);
  auto basis = invariant_space(prob);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == std::vector<long>{1, 1});
}

TEST_CASE("boolean module classifications") {
  // Hom(B3, Z/2)^GL has dimension 1 at g = 4, spanned by the unit coefficient
  InvariantProblem b3 = builtin_action(Module::B3, Group::GL, 4, 2);
  CHECK(b3.dim == 93);
  auto basis3 = invariant_space(b3);
  REQUIRE(basis3.size() == 1);
  // the unit monomial is the first basis vector in degree order
  std::vector<long> eps(static_cast<size_t>(b3.dim), 0);
  eps[0] = 1;
  CHECK(basis3[0] == eps);

  // Hom(B2, Z/2)^GL has dimension 2 at g = 4
  InvariantProblem b2 = builtin_action(Module::B2, Group::GL, 4, 2);
  CHECK(b2.dim == 37);
  auto basis2 = invariant_space(b2);
  REQUIRE(basis2.size() == 2);
  // contains the unit functional and the omega-pairing functional
  std::vector<long> unit(static_cast<size_t>(b2.dim), 0);
  unit[0] = 1;
  CHECK(in_span(basis2, unit, 2));
  auto monos = boolean_basis(4, 2);
  std::vector<long> pairing(static_cast<size_t>(b2.dim), 0);
  for (size_t i = 0; i < monos.size(); ++i) {
    std::uint64_t m = monos[i];
    // A_k B_k monomials pair the two bits k and g + k
    for (long k = 0; k < 4; ++k)
      if (m == ((std::uint64_t(1) << k) | (std::uint64_t(1) << (4 + k))))
        pairing[i] = 1;
  }
  CHECK(in_span(basis2, pairing, 2));

  for (const auto &r : basis2)
    for (const SparseMatrix &m : b2.gens)
      CHECK(functional_invariant(r, m, 2));
}

TEST_CASE("wedge cube has no GL invariants") {
  InvariantProblem prob = builtin_action(Module::Wedge3, Group::GL, 4, 3);
  CHECK(prob.dim == 56);
  CHECK(invariant_space(prob).empty());
}

TEST_CASE("sp lie algebra invariants are spanned by the alpha trace") {
  for (long p : {3L, 5L}) {
    InvariantProblem prob = builtin_action(Module::SpLie, Group::GL, 3, p);
    CHECK(prob.dim == 21);
    auto basis = invariant_space(prob);
    REQUIRE(basis.size() == 1);
    std::vector<long> trace(static_cast<size_t>(prob.dim), 0);
    auto coords = splie_basis(3);
    for (size_t i = 0; i < coords.size(); ++i)
      if (coords[i].block == 0 && coords[i].i == coords[i].j)
        trace[i] = 1;
    CHECK(in_span(basis, trace, p));
    for (const SparseMatrix &m : prob.gens)
      CHECK(functional_invariant(basis[0], m, p));
  }
}

TEST_CASE("symmetric square invariants are spanned by the d forms") {
  long g = 3, p = 3;
  InvariantProblem prob = builtin_action(Module::Sym2Wedge2, Group::GL, g, p);
  CHECK(prob.dim == 120);
  auto basis = invariant_space(prob);
  REQUIRE(basis.size() == 3);

  auto keys = sym2_basis(g);
  for (int which = 1; which <= 3; ++which) {
    std::vector<long> vec;
    vec.reserve(keys.size());
    for (const auto &[pm, qm] : keys) {
      Sym2Elem e(g, p);
      e.add_lr(pm[0], pm[1], qm[0], qm[1], 1);
      if (pm == qm) // basis vector is the plain tensor square, half of <->
        e = e.scaled(inverse_modp(2, p));
      vec.push_back(form_d(which, e));
    }
    CHECK(in_span(basis, vec, p));
  }
}

TEST_CASE("antisymmetric pair invariants at small genus") {
  long g = 3, p = 3;
  InvariantProblem prob = builtin_action(Module::Wedge2OfWedge3, Group::GL, g, p);
  CHECK(prob.dim == 190);
  auto basis = invariant_space(prob);
  REQUIRE(basis.size() == 3);

  auto pairs = wedge2of3_basis(g);
  auto form_vec = [&](auto &&form) {
    std::vector<long> vec;
    for (const auto &[s, t] : pairs) {
      WedgeVector3 xi(g, p), eta(g, p);
      xi.add_term(s[0], s[1], s[2], 1);
      eta.add_term(t[0], t[1], t[2], 1);
      vec.push_back(normalize_mod(form(xi, eta), p));
    }
    return vec;
  };
  auto theta = form_vec([](const WedgeVector3 &a, const WedgeVector3 &b) {
    return form_Theta(a, b);
  });
  auto q = form_vec([](const WedgeVector3 &a, const WedgeVector3 &b) {
    return form_Q(a, b);
  });
  auto jtj = form_vec([](const WedgeVector3 &a, const WedgeVector3 &b) {
    return normalize_mod(form_Jt(a, b) - form_J(a, b), 3);
  });
  CHECK(in_span(basis, theta, p));
  CHECK(in_span(basis, q, p));
  CHECK(in_span(basis, jtj, p));

  // Theta and Q survive the Sp generators, Jt - J does not; the exact
  // dimension 2 statement needs g = 4 and lives in the acceptance suite
  InvariantProblem sp = builtin_action(Module::Wedge2OfWedge3, Group::Sp, g, p);
  auto sp_basis = invariant_space(sp);
  CHECK(sp_basis.size() >= 2);
  CHECK(in_span(sp_basis, theta, p));
  CHECK(in_span(sp_basis, q, p));
  CHECK_FALSE(in_span(sp_basis, jtj, p));
}

TEST_CASE("solver agrees with a stacked-nullspace oracle") {
  // independent route: stack (M^t - Id) for every generator and row-reduce
  // the whole block matrix once
  for (auto [module, g, p] : {std::tuple<Module, long, long>{Module::SpLie, 3, 3},
                              {Module::B2, 3, 2},
                              {Module::Wedge3, 3, 3}}) {
    InvariantProblem prob = builtin_action(module, Group::GL, g, p);
    long dim = prob.dim;
    std::vector<std::vector<long>> stacked;
    for (const SparseMatrix &m : prob.gens)
      for (long i = 0; i < dim; ++i) {
        std::vector<long> row(static_cast<size_t>(dim), 0);
        for (const auto &[r, v] : m.cols[static_cast<size_t>(i)])
          row[static_cast<size_t>(r)] = normalize_mod(row[static_cast<size_t>(r)] + v, p);
        row[static_cast<size_t>(i)] = normalize_mod(row[static_cast<size_t>(i)] - 1, p);
        stacked.push_back(std::move(row));
      }
    long nullity = dim - rank_of(stacked, p);
    auto basis = invariant_space(prob);
    CHECK(static_cast<long>(basis.size()) == nullity);
    for (const auto &r : basis)
      for (const SparseMatrix &m : prob.gens)
        CHECK(functional_invariant(r, m, p));
  }
}

TEST_CASE("unsupported combinations are rejected") {
  CHECK_THROWS_AS(builtin_action(Module::B3, Group::GL, 4, 3),
                  unsupported_combination);
  CHECK_THROWS_AS(builtin_action(Module::Wedge3, Group::GL, 4, 2),
                  unsupported_combination);
  CHECK_THROWS_AS(builtin_action(Module::Wedge3, Group::GL, 2, 3),
                  unsupported_combination);
  CHECK_THROWS_AS(builtin_action(Module::Wedge3, Group::GL, 4, 9),
                  unsupported_combination);
  CHECK_THROWS_AS(module_from_name("nope"), parse_error);
}
