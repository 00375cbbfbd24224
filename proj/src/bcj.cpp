#include "torelli/bcj.hpp"

#include <algorithm>
#include <cassert>

namespace torelli {

ClassMod2::ClassMod2(long genus, std::vector<int> b)
    : g(genus), bits(std::move(b)) {
  if (static_cast<long>(bits.size()) != 2 * g)
    throw shape_mismatch("class mod 2 needs 2g bits");
  for (int &x : bits)
    x &= 1;
}

ClassMod2 ClassMod2::basis(long g, long index) {
  std::vector<int> b(static_cast<size_t>(2 * g));
  b[static_cast<size_t>(index)] = 1;
  return ClassMod2(g, std::move(b));
}

ClassMod2 ClassMod2::from_class(const HomologyClass &v) {
  std::vector<int> b(static_cast<size_t>(2 * v.g));
  for (size_t i = 0; i < b.size(); ++i)
    b[i] = static_cast<int>(mod_floor(v.coeffs[i], 2).get_si());
  return ClassMod2(v.g, std::move(b));
}

int intersection_mod2(const ClassMod2 &x, const ClassMod2 &y) {
  assert(x.g == y.g);
  int s = 0;
  for (long i = 0; i < x.g; ++i)
    s ^= (x.bits[static_cast<size_t>(i)] & y.bits[static_cast<size_t>(x.g + i)]) ^
         (x.bits[static_cast<size_t>(x.g + i)] & y.bits[static_cast<size_t>(i)]);
  return s;
}

BooleanPoly BooleanPoly::one(long g) {
  BooleanPoly p(g);
  p.support.insert(0);
  return p;
}

BooleanPoly BooleanPoly::generator(long g, long index) {
  BooleanPoly p(g);
  p.support.insert(std::uint64_t(1) << index);
  return p;
}

void BooleanPoly::toggle(std::uint64_t mono) {
  auto it = support.find(mono);
  if (it == support.end())
    support.insert(mono);
  else
    support.erase(it);
}

BooleanPoly BooleanPoly::operator+(const BooleanPoly &o) const {
  assert(g == o.g);
  BooleanPoly r(g);
  std::set_symmetric_difference(support.begin(), support.end(),
                                o.support.begin(), o.support.end(),
                                std::inserter(r.support, r.support.begin()));
  return r;
}

long BooleanPoly::max_degree() const {
  long d = 0;
  for (std::uint64_t m : support)
    d = std::max<long>(d, __builtin_popcountll(m));
  return d;
}

BooleanPoly bar_class(const ClassMod2 &v) {
  BooleanPoly p(v.g);
  std::vector<int> partial(static_cast<size_t>(2 * v.g), 0);
  for (long i = 0; i < 2 * v.g; ++i) {
    if (!v.bits[static_cast<size_t>(i)])
      continue;
    // bar(s + e_i) = bar(s) + bar(e_i) + s . e_i
    p.toggle(std::uint64_t(1) << i);
    if (intersection_mod2(ClassMod2(v.g, partial), ClassMod2::basis(v.g, i)))
      p.toggle(0);
    partial[static_cast<size_t>(i)] = 1;
  }
  return p;
}

BooleanPoly bool_mul(const BooleanPoly &p, const BooleanPoly &q) {
  assert(p.g == q.g);
  BooleanPoly r(p.g);
  for (std::uint64_t a : p.support)
    for (std::uint64_t b : q.support)
      r.toggle(a | b); // x^2 = x
  return r;
}

BooleanPoly sigma_bp(const BPData &data) {
  if (data.pairs.empty())
    throw domain_error("BP data needs at least one symplectic pair");
  BooleanPoly factor = bar_class(data.e) + BooleanPoly::one(data.g);
  BooleanPoly acc(data.g);
  for (const auto &[c, d] : data.pairs)
    acc = acc + bool_mul(bool_mul(bar_class(c), bar_class(d)), factor);
  return acc;
}

BooleanPoly sigma_sep(const SepData &data) {
  if (data.pairs.empty())
    throw domain_error("separating-twist data needs at least one pair");
  BooleanPoly acc(data.g);
  for (const auto &[c, d] : data.pairs)
    acc = acc + bool_mul(bar_class(c), bar_class(d));
  return acc;
}

BooleanPoly sp2_act(const SpMatrixMod &m, const BooleanPoly &p) {
  if (m.modulus() != 2)
    throw shape_mismatch("boolean algebra action needs a mod-2 matrix");
  long g = p.g;
  if (m.genus() != g)
    throw shape_mismatch("genus mismatch");
  // images of the barred generators
  std::vector<BooleanPoly> image;
  image.reserve(static_cast<size_t>(2 * g));
  for (long j = 0; j < 2 * g; ++j) {
    std::vector<int> col(static_cast<size_t>(2 * g));
    for (long i = 0; i < 2 * g; ++i)
      col[static_cast<size_t>(i)] = static_cast<int>(m.mat().at(i, j).get_si());
    image.push_back(bar_class(ClassMod2(g, std::move(col))));
  }
  BooleanPoly acc(g);
  for (std::uint64_t mono : p.support) {
    BooleanPoly term = BooleanPoly::one(g);
    for (long j = 0; j < 2 * g; ++j)
      if (mono >> j & 1)
        term = bool_mul(term, image[static_cast<size_t>(j)]);
    acc = acc + term;
  }
  return acc;
}

Integer mu_x(const BooleanPoly &p, const Integer &x) {
  return p.coefficient_of_one() ? x : Integer(0);
}

TwistWord trefoil_word() {
  long g = 2;
  auto cls = [g](long a1, long a2, long b1, long b2) {
    return HomologyClass(g, {Integer(a1), Integer(a2), Integer(b1), Integer(b2)});
  };
  TwistWord w;
  w.g = g;
  w.letters.push_back({cls(0, 1, 0, 0), 1});  // a_2
  w.letters.push_back({cls(1, 0, 0, 0), 1});  // a_1
  w.letters.push_back({cls(0, 0, 1, -1), 1}); // c = b_1 - b_2
  return w;
}

BooleanPoly poincare_sigma() {
  SpMatrixMod m = reduce_mod(word_image(trefoil_word()), 2);
  SepData sep;
  sep.g = 2;
  sep.pairs.emplace_back(ClassMod2::basis(2, 0), ClassMod2::basis(2, 2));
  return sp2_act(m, sigma_sep(sep));
}

std::string to_string(const BooleanPoly &p) {
  if (p.support.empty())
    return "0";
  std::string out;
  for (std::uint64_t mono : p.support) {
    if (!out.empty())
      out += " + ";
    if (mono == 0) {
      out += "1";
      continue;
    }
    for (long j = 0; j < 2 * p.g; ++j)
      if (mono >> j & 1)
        out += (j < p.g ? "A" : "B") + std::to_string(j % p.g + 1);
  }
  return out;
}

} // namespace torelli
