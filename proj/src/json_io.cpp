#include "torelli/json_io.hpp"

namespace torelli {

namespace {

Integer integer_from_json(const json &j) {
  if (j.is_number_integer())
    return Integer(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (...) {
      throw parse_error("bad integer literal '" + j.get<std::string>() + "'");
    }
  }
  throw parse_error("expected an integer or a decimal string");
}

long small_from_json(const json &j, const char *what) {
  if (!j.is_number_integer())
    throw parse_error(std::string("expected a small integer for ") + what);
  return j.get<long>();
}

} // namespace

json parse_json_text(const std::string &text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw parse_error("malformed JSON input");
  return j;
}

json matrix_to_json(const IntMatrix &m) {
  json rows = json::array();
  for (long i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (long j = 0; j < m.cols(); ++j)
      row.push_back(m.at(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

IntMatrix matrix_from_json(const json &j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("entries"))
    throw parse_error("matrix JSON needs rows, cols and entries");
  long rows = small_from_json(j["rows"], "rows");
  long cols = small_from_json(j["cols"], "cols");
  if (rows < 0 || cols < 0)
    throw parse_error("matrix dimensions must be nonnegative");
  const json &e = j["entries"];
  if (!e.is_array() || static_cast<long>(e.size()) != rows)
    throw parse_error("entries must hold one array per row");
  IntMatrix m(rows, cols);
  for (long i = 0; i < rows; ++i) {
    const json &row = e[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<long>(row.size()) != cols)
      throw parse_error("row " + std::to_string(i) + " has the wrong length");
    for (long c = 0; c < cols; ++c)
      m.at(i, c) = integer_from_json(row[static_cast<size_t>(c)]);
  }
  return m;
}

json sp_to_json(const SpMatrixZ &m) {
  json j = matrix_to_json(m.mat());
  j["genus"] = m.genus();
  return j;
}

json spmod_to_json(const SpMatrixMod &m) {
  json j = matrix_to_json(m.mat());
  j["genus"] = m.genus();
  j["modulus"] = m.modulus().get_str();
  return j;
}

TwistWord twistword_from_json(const json &j) {
  if (!j.is_object() || !j.contains("genus") || !j.contains("letters"))
    throw parse_error("twist word JSON needs genus and letters");
  TwistWord w;
  w.g = small_from_json(j["genus"], "genus");
  if (w.g < 1)
    throw parse_error("genus must be >= 1");
  if (!j["letters"].is_array())
    throw parse_error("letters must be an array");
  for (const json &l : j["letters"]) {
    if (!l.is_object() || !l.contains("curve") || !l.contains("power"))
      throw parse_error("each letter needs curve and power");
    const json &cv = l["curve"];
    if (!cv.is_array() || static_cast<long>(cv.size()) != 2 * w.g)
      throw parse_error("curve must list 2g coefficients");
    std::vector<Integer> coeffs;
    for (const json &c : cv)
      coeffs.push_back(integer_from_json(c));
    w.letters.push_back(
        {HomologyClass(w.g, std::move(coeffs)), integer_from_json(l["power"])});
  }
  return w;
}

json twistword_to_json(const TwistWord &w) {
  json letters = json::array();
  for (const TwistLetter &l : w.letters) {
    json curve = json::array();
    for (const Integer &c : l.curve.coeffs)
      curve.push_back(c.get_str());
    letters.push_back(json{{"curve", curve}, {"power", l.power.get_str()}});
  }
  return json{{"genus", w.g}, {"letters", letters}};
}

HeegaardGluing gluing_from_json(const json &j) {
  if (!j.is_object())
    throw parse_error("gluing JSON must be an object");
  if (j.contains("letters"))
    return HeegaardGluing(word_image(twistword_from_json(j)));
  if (j.contains("entries")) {
    if (!j.contains("genus"))
      throw parse_error("matrix gluing needs a genus field");
    long g = small_from_json(j["genus"], "genus");
    return HeegaardGluing(SpMatrixZ(g, matrix_from_json(j)));
  }
  throw parse_error("gluing JSON needs either letters or entries");
}

json boolpoly_to_json(const BooleanPoly &p) {
  json monos = json::array();
  for (std::uint64_t mask : p.support) {
    json mono = json::array();
    for (long i = 0; i < 2 * p.g; ++i)
      if (mask >> i & 1)
        mono.push_back((i < p.g ? "A" : "B") + std::to_string(i % p.g + 1));
    monos.push_back(std::move(mono));
  }
  return json{{"genus", p.g}, {"monomials", monos}};
}

BooleanPoly boolpoly_from_json(const json &j) {
  if (!j.is_object() || !j.contains("genus") || !j.contains("monomials"))
    throw parse_error("boolean polynomial JSON needs genus and monomials");
  long g = small_from_json(j["genus"], "genus");
  BooleanPoly p(g);
  for (const json &mono : j["monomials"]) {
    if (!mono.is_array())
      throw parse_error("each monomial must be an array of generators");
    std::uint64_t mask = 0;
    for (const json &gen : mono) {
      if (!gen.is_string())
        throw parse_error("generators are strings like A1 or B2");
      std::string s = gen.get<std::string>();
      if (s.size() < 2 || (s[0] != 'A' && s[0] != 'B'))
        throw parse_error("bad generator '" + s + "'");
      long idx;
      try {
        idx = std::stol(s.substr(1));
      } catch (...) {
        throw parse_error("bad generator '" + s + "'");
      }
      if (idx < 1 || idx > g)
        throw parse_error("generator '" + s + "' out of range");
      mask |= std::uint64_t(1) << ((s[0] == 'A' ? 0 : g) + idx - 1);
    }
    p.toggle(mask);
  }
  return p;
}

json wedge_to_json(const WedgeVector3 &v) {
  json terms = json::array();
  for (const auto &[key, c] : v.coeffs) {
    json mono = json::array();
    for (long l : key)
      mono.push_back(letter_name(l, v.g));
    terms.push_back(json{{"mono", mono}, {"coeff", c}});
  }
  return json{{"genus", v.g}, {"p", v.p}, {"terms", terms}};
}

WedgeVector3 wedge_from_json(const json &j) {
  if (!j.is_object() || !j.contains("genus") || !j.contains("p") ||
      !j.contains("terms"))
    throw parse_error("wedge JSON needs genus, p and terms");
  long g = small_from_json(j["genus"], "genus");
  long p = small_from_json(j["p"], "p");
  WedgeVector3 v(g, p);
  for (const json &t : j["terms"]) {
    if (!t.is_object() || !t.contains("mono") || !t.contains("coeff"))
      throw parse_error("each term needs mono and coeff");
    const json &mono = t["mono"];
    if (!mono.is_array() || mono.size() != 3)
      throw parse_error("wedge monomials have three letters");
    long idx[3];
    for (int i = 0; i < 3; ++i)
      idx[i] = letter_index(mono[static_cast<size_t>(i)].get<std::string>(), g);
    v.add_term(idx[0], idx[1], idx[2], small_from_json(t["coeff"], "coeff"));
  }
  return v;
}

json sym2_to_json(const Sym2Elem &s) {
  json terms = json::array();
  for (const auto &[key, c] : s.coeffs) {
    json pair = json::array();
    json m1 = json::array(), m2 = json::array();
    for (long l : key.first)
      m1.push_back(letter_name(l, s.g));
    for (long l : key.second)
      m2.push_back(letter_name(l, s.g));
    pair.push_back(std::move(m1));
    pair.push_back(std::move(m2));
    terms.push_back(json{{"pair", pair}, {"coeff", c}});
  }
  return json{{"genus", s.g}, {"p", s.p}, {"terms", terms}};
}

Sym2Elem sym2_from_json(const json &j) {
  if (!j.is_object() || !j.contains("genus") || !j.contains("p") ||
      !j.contains("terms"))
    throw parse_error("symmetric-square JSON needs genus, p and terms");
  long g = small_from_json(j["genus"], "genus");
  long p = small_from_json(j["p"], "p");
  Sym2Elem s(g, p);
  for (const json &t : j["terms"]) {
    if (!t.is_object() || !t.contains("pair") || !t.contains("coeff"))
      throw parse_error("each term needs pair and coeff");
    const json &pr = t["pair"];
    if (!pr.is_array() || pr.size() != 2 || !pr[0].is_array() ||
        pr[0].size() != 2 || !pr[1].is_array() || pr[1].size() != 2)
      throw parse_error("pair must hold two wedge-2 monomials");
    long x0 = letter_index(pr[0][0].get<std::string>(), g);
    long x1 = letter_index(pr[0][1].get<std::string>(), g);
    long y0 = letter_index(pr[1][0].get<std::string>(), g);
    long y1 = letter_index(pr[1][1].get<std::string>(), g);
    s.add_lr(x0, x1, y0, y1, small_from_json(t["coeff"], "coeff"));
  }
  return s;
}

FreeEndo endo_from_json(const json &j) {
  if (!j.is_object() || !j.contains("rank") || !j.contains("images"))
    throw parse_error("endomorphism JSON needs rank and images");
  FreeEndo f;
  f.rank = small_from_json(j["rank"], "rank");
  if (f.rank < 1)
    throw parse_error("rank must be >= 1");
  const json &imgs = j["images"];
  if (!imgs.is_array() || static_cast<long>(imgs.size()) != f.rank)
    throw parse_error("images must list one word per generator");
  for (const json &w : imgs) {
    if (!w.is_string())
      throw parse_error("images are word strings like 'x2 x1 x2^-1'");
    f.images.push_back(FreeWord::parse(w.get<std::string>(), f.rank));
  }
  return f;
}

json snf_to_json(const SnfResult &r) {
  json factors = json::array();
  for (const Integer &d : r.factors)
    factors.push_back(d.get_str());
  return json{{"U", matrix_to_json(r.u)},
              {"S", matrix_to_json(r.s)},
              {"V", matrix_to_json(r.v)},
              {"factors", factors}};
}

json factors_to_json(const AbelianFactors &f) {
  json torsion = json::array();
  for (const Integer &t : f.torsion)
    torsion.push_back(t.get_str());
  return json{{"torsion", torsion}, {"free_rank", f.free_rank}};
}

} // namespace torelli
