#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "torelli/bcj.hpp"
#include "torelli/heegaard.hpp"

using namespace torelli;

namespace {

HomologyClass random_class(std::mt19937_64 &rng, long g, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  std::vector<Integer> c(static_cast<size_t>(2 * g));
  for (auto &x : c)
    x = dist(rng);
  return HomologyClass(g, std::move(c));
}

HeegaardGluing random_gluing(std::mt19937_64 &rng, long g, int len) {
  TwistWord w;
  w.g = g;
  std::uniform_int_distribution<long> pow_dist(-2, 2);
  for (int i = 0; i < len; ++i) {
    Integer k = pow_dist(rng);
    if (k == 0)
      k = 1;
    w.letters.push_back({random_class(rng, g, 2), k});
  }
  return HeegaardGluing(word_image(w));
}

} // namespace

TEST_CASE("splitting homology golden values") {
  HeegaardGluing std_s3(SpMatrixZ(2, IntMatrix::identity(4)));
  AbelianFactors f = splitting_homology(std_s3);
  CHECK(f.torsion.empty());
  CHECK(f.free_rank == 0);
  CHECK(h1_order(std_s3).value() == 1);

  HeegaardGluing poincare(word_image(trefoil_word()));
  AbelianFactors pf = splitting_homology(poincare);
  CHECK(pf.torsion.empty());
  CHECK(pf.free_rank == 0);
  CHECK(h1_order(poincare).value() == 1);

  AbelianFactors lf = splitting_homology(lens_gluing({5, 2}));
  REQUIRE(lf.torsion.size() == 1);
  CHECK(lf.torsion[0] == 5);
  CHECK(h1_order(lens_gluing({7, 3})).value() == 7);
}

TEST_CASE("infinite first homology is a value, not an error") {
  // rotate handle 1 (a_1 -> b_1, b_1 -> -a_1), identity on handle 2:
  // H block becomes diag(0, 1)
  IntMatrix m(4, 4);
  m.at(2, 0) = 1;
  m.at(0, 2) = -1;
  m.at(1, 1) = 1;
  m.at(3, 3) = 1;
  HeegaardGluing h(SpMatrixZ(2, m));
  CHECK_FALSE(h1_order(h).has_value());
  AbelianFactors f = splitting_homology(h);
  CHECK(f.free_rank == 1);
  CHECK(f.torsion.empty());
}

TEST_CASE("criterion and admissible moduli") {
  CHECK(mod_d_splitting_exists(5, 2));
  CHECK_FALSE(mod_d_splitting_exists(7, 5));
  for (Integer d : {2, 3, 4, 6})
    if (gcd(Integer(2), d) == 1)
      CHECK(mod_d_splitting_exists(2, d));

  CHECK(admissible_moduli(1) == std::vector<Integer>{2});
  CHECK(admissible_moduli(5) == std::vector<Integer>{2, 3, 4, 6});
  CHECK(admissible_moduli(7) == std::vector<Integer>{2, 3, 4, 6, 8});
}

TEST_CASE("criterion agrees with direct divisibility, d in 2..50") {
  for (long n = 1; n <= 200; ++n)
    for (long d = 2; d <= 50; ++d) {
      bool direct = ((n - 1) % d == 0) || ((n + 1) % d == 0);
      CHECK(mod_d_splitting_exists(n, d) == direct);
    }
  // units of Z/d lie in {+-1} exactly for d = 2, 3, 4, 6
  for (long d : {2, 3, 4, 6})
    for (long n = 1; n <= 200; ++n)
      if (gcd(Integer(n), Integer(d)) == 1)
        CHECK(mod_d_splitting_exists(n, d));
}

TEST_CASE("trivialization identity case") {
  HeegaardGluing id(SpMatrixZ(2, IntMatrix::identity(4)));
  Trivialization t = trivialize(id, 7);
  CHECK(t.x.is_identity());
  CHECK(t.y.is_identity());
}

TEST_CASE("trivialization on random twist gluings") {
  std::mt19937_64 rng(987);
  for (Integer d : {3, 5, 7}) {
    int done = 0;
    while (done < 40) {
      HeegaardGluing h = random_gluing(rng, 2, 5);
      Integer dh = mod_floor(det(h.sp.mat().block(3)), d);
      if (dh != 1 && dh != d - 1) {
        CHECK_THROWS_AS(trivialize(h, d), criterion_fails);
        continue;
      }
      Trivialization t = trivialize(h, d);
      // X has upper shape, Y lower shape
      CHECK(t.x.mat().block(2).is_zero());
      CHECK(t.x.mat().block(0).is_identity());
      CHECK(t.x.mat().block(3).is_identity());
      IntMatrix a = t.x.mat().block(1);
      CHECK((a - a.transpose()).reduced_mod(d).is_zero());
      CHECK(t.y.mat().block(1).is_zero());
      SpMatrixMod prod = t.x * reduce_mod(h.sp, d) * t.y;
      CHECK(prod.is_identity());
      ++done;
    }
  }
}

TEST_CASE("explicit criterion failure") {
  // handle 1 carries the SL_2 matrix (1 1; 1 2), so H = diag(2, 1) and
  // det H = 2 mod 5, a unit different from +-1
  IntMatrix w(4, 4);
  w.at(0, 0) = 1;
  w.at(0, 2) = 1;
  w.at(2, 0) = 1;
  w.at(2, 2) = 2;
  w.at(1, 1) = 1;
  w.at(3, 3) = 1;
  HeegaardGluing h(SpMatrixZ(2, w));
  CHECK(mod_floor(det(h.sp.mat().block(3)), 5) == 2);
  CHECK_THROWS_AS(trivialize(h, 5), criterion_fails);
}

TEST_CASE("lens gluings") {
  HeegaardGluing s3 = lens_gluing({1, 0});
  CHECK(s3.sp.mat().is_identity());

  HeegaardGluing l52 = lens_gluing({5, 2});
  CHECK(l52.sp.mat().at(1, 0) == -2);
  CHECK(l52.sp.mat().at(1, 1) == 5);
  CHECK(det(l52.sp.mat()) == 1);
  CHECK(l52.sp.mat().at(0, 0) == 1); // Bezout 1*5 + (-2)*2 = 1
  CHECK(l52.sp.mat().at(0, 1) == -2);

  CHECK_THROWS_AS(lens_gluing({4, 2}), not_coprime);
}

TEST_CASE("mod-d lens gluings") {
  HeegaardGluing triv = lens_gluing_mod_d(1, 0, 5);
  CHECK(reduce_mod(triv.sp, 5).is_identity());

  HeegaardGluing l91 = lens_gluing_mod_d(9, 1, 5);
  CHECK(reduce_mod(l91.sp, 5).is_identity());
  CHECK(abs(l91.sp.mat().at(1, 1)) == 9);
  CHECK(det(l91.sp.mat()) == 1);
  CHECK(mod_floor(l91.sp.mat().at(1, 0), 9) == mod_floor(Integer(-1), 9));
  CHECK(h1_order(l91).value() == 9);

  CHECK_THROWS_AS(lens_gluing_mod_d(7, 1, 5), criterion_fails);
}

TEST_CASE("phi invariant on lens spaces") {
  HeegaardGluing id(SpMatrixZ(1, IntMatrix::identity(2)));
  CHECK(phi_invariant(id, 5, 1) == 0);

  // L(dk - 1, q): value k x; L(dk + 1, q): value -k x
  Integer d = 5, k = 2;
  HeegaardGluing minus = lens_gluing_mod_d(d * k - 1, 1, d);
  CHECK(phi_invariant(minus, d, 1) == 2);
  HeegaardGluing plus = lens_gluing_mod_d(d * k + 1, 1, d);
  CHECK(phi_invariant(plus, d, 1) == 3); // -2 mod 5

  CHECK_THROWS_AS(phi_invariant(lens_gluing({5, 2}), 5, 1), not_mod_d_torelli);
}

TEST_CASE("order equals torsion product when finite") {
  std::mt19937_64 rng(1812);
  for (int iter = 0; iter < 60; ++iter) {
    HeegaardGluing h = random_gluing(rng, 2, 4);
    auto order = h1_order(h);
    AbelianFactors f = splitting_homology(h);
    if (!order) {
      CHECK(f.free_rank > 0);
      continue;
    }
    Integer prod = 1;
    for (const Integer &t : f.torsion)
      prod *= t;
    CHECK(prod == order.value());
  }
}

TEST_CASE("phi invariant additivity and conjugation invariance") {
  std::mt19937_64 rng(8128);
  long g = 2;
  Integer d = 5;
  auto random_trivial = [&] {
    TwistWord w;
    w.g = g;
    for (int i = 0; i < 3; ++i)
      w.letters.push_back({random_class(rng, g, 2), d});
    return HeegaardGluing(word_image(w));
  };
  IntMatrix conj = IntMatrix::identity(2 * g);
  conj.at(0, 1) = 1;
  conj.at(g + 1, g + 0) = -1;
  SpMatrixZ f(g, conj);
  for (int iter = 0; iter < 20; ++iter) {
    HeegaardGluing h1 = random_trivial(), h2 = random_trivial();
    Integer x = 3;
    Integer sum = mod_floor(phi_invariant(h1, d, x) + phi_invariant(h2, d, x), d);
    HeegaardGluing prod(h1.sp * h2.sp);
    CHECK(phi_invariant(prod, d, x) == sum);

    HeegaardGluing conjugated(f * h1.sp * f.inverse());
    CHECK(phi_invariant(conjugated, d, x) == phi_invariant(h1, d, x));
  }
}
