#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "torelli/invariant.hpp"
#include "torelli/json_io.hpp"

namespace py = pybind11;
using namespace torelli;

namespace {

Integer to_mpz(py::handle obj) {
  return Integer(py::str(obj).cast<std::string>());
}

py::object to_pyint(const Integer &x) {
  PyObject *v = PyLong_FromString(x.get_str().c_str(), nullptr, 10);
  if (!v)
    throw py::error_already_set();
  return py::reinterpret_steal<py::object>(v);
}

IntMatrix matrix_in(const py::sequence &rows) {
  long m = static_cast<long>(py::len(rows));
  long n = m ? static_cast<long>(py::len(rows[0])) : 0;
  IntMatrix a(m, n);
  for (long i = 0; i < m; ++i) {
    py::sequence row = rows[static_cast<size_t>(i)].cast<py::sequence>();
    if (static_cast<long>(py::len(row)) != n)
      throw parse_error("rows have inconsistent lengths");
    for (long j = 0; j < n; ++j)
      a.at(i, j) = to_mpz(row[static_cast<size_t>(j)]);
  }
  return a;
}

py::list matrix_out(const IntMatrix &a) {
  py::list rows;
  for (long i = 0; i < a.rows(); ++i) {
    py::list row;
    for (long j = 0; j < a.cols(); ++j)
      row.append(to_pyint(a.at(i, j)));
    rows.append(row);
  }
  return rows;
}

py::list integers_out(const std::vector<Integer> &xs) {
  py::list out;
  for (const Integer &x : xs)
    out.append(to_pyint(x));
  return out;
}

SpMatrixZ sp_in(long genus, const py::sequence &rows) {
  return SpMatrixZ(genus, matrix_in(rows));
}

TwistWord word_in(long genus, const py::sequence &letters) {
  TwistWord w;
  w.g = genus;
  for (py::handle item : letters) {
    py::sequence pair = item.cast<py::sequence>();
    py::sequence curve = pair[0].cast<py::sequence>();
    std::vector<Integer> coeffs;
    for (py::handle c : curve)
      coeffs.push_back(to_mpz(c));
    w.letters.push_back(
        {HomologyClass(genus, std::move(coeffs)), to_mpz(pair[1])});
  }
  return w;
}

ClassMod2 class2_in(long genus, const py::sequence &bits) {
  std::vector<int> b;
  for (py::handle x : bits)
    b.push_back(x.cast<int>());
  return ClassMod2(genus, std::move(b));
}

py::list boolpoly_out(const BooleanPoly &p) {
  py::list monos;
  for (std::uint64_t mask : p.support) {
    py::list mono;
    for (long i = 0; i < 2 * p.g; ++i)
      if (mask >> i & 1)
        mono.append((i < p.g ? "A" : "B") + std::to_string(i % p.g + 1));
    monos.append(mono);
  }
  return monos;
}

BooleanPoly boolpoly_in(long genus, const py::sequence &monos) {
  json j{{"genus", genus}, {"monomials", json::array()}};
  for (py::handle mono : monos) {
    json m = json::array();
    for (py::handle gen : mono.cast<py::sequence>())
      m.push_back(gen.cast<std::string>());
    j["monomials"].push_back(m);
  }
  return boolpoly_from_json(j);
}

WedgeVector3 wedge_in(long genus, long p, const py::sequence &terms) {
  WedgeVector3 v(genus, p);
  for (py::handle t : terms) {
    py::sequence pair = t.cast<py::sequence>();
    py::sequence mono = pair[0].cast<py::sequence>();
    v.add_term(letter_index(mono[0].cast<std::string>(), genus),
               letter_index(mono[1].cast<std::string>(), genus),
               letter_index(mono[2].cast<std::string>(), genus),
               pair[1].cast<long>());
  }
  return v;
}

Sym2Elem sym2_in(long genus, long p, const py::sequence &terms) {
  Sym2Elem s(genus, p);
  for (py::handle t : terms) {
    py::sequence item = t.cast<py::sequence>();
    py::sequence left = item[0].cast<py::sequence>();
    py::sequence right = item[1].cast<py::sequence>();
    s.add_lr(letter_index(left[0].cast<std::string>(), genus),
             letter_index(left[1].cast<std::string>(), genus),
             letter_index(right[0].cast<std::string>(), genus),
             letter_index(right[1].cast<std::string>(), genus),
             item[2].cast<long>());
  }
  return s;
}

py::dict degree_out(const FiltrationDegree &d) {
  py::dict out;
  out["value"] = d.value;
  out["exact"] = d.exact;
  return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact arithmetic for Heegaard gluings, symplectic shadows and "
            "mod-p filtrations";

  py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
  py::register_exception<domain_error>(m, "DomainError", PyExc_ArithmeticError);

  // exact matrices
  m.def("smith_normal_form", [](const py::sequence &rows) {
    SnfResult r = smith_normal_form(matrix_in(rows));
    py::dict out;
    out["U"] = matrix_out(r.u);
    out["S"] = matrix_out(r.s);
    out["V"] = matrix_out(r.v);
    out["factors"] = integers_out(r.factors);
    return out;
  });
  m.def("cokernel_factors", [](const py::sequence &rows) {
    AbelianFactors f = cokernel_factors(matrix_in(rows));
    return py::make_tuple(integers_out(f.torsion), f.free_rank);
  });
  m.def("det",
        [](const py::sequence &rows) { return to_pyint(det(matrix_in(rows))); });
  m.def("inverse_mod", [](const py::sequence &rows, py::handle d) {
    return matrix_out(inverse_mod(matrix_in(rows), to_mpz(d)));
  });

  // symplectic layer
  m.def("omega", [](long g) { return matrix_out(omega(g)); });
  m.def("pairing_omega", [](const py::sequence &u, const py::sequence &v) {
    long g = static_cast<long>(py::len(u)) / 2;
    std::vector<Integer> cu, cv;
    for (py::handle x : u)
      cu.push_back(to_mpz(x));
    for (py::handle x : v)
      cv.push_back(to_mpz(x));
    return to_pyint(pairing_omega(HomologyClass(g, std::move(cu)),
                                  HomologyClass(g, std::move(cv))));
  });
  m.def("transvection", [](const py::sequence &curve, py::handle power) {
    long g = static_cast<long>(py::len(curve)) / 2;
    std::vector<Integer> c;
    for (py::handle x : curve)
      c.push_back(to_mpz(x));
    return matrix_out(
        transvection(HomologyClass(g, std::move(c)), to_mpz(power)).mat());
  });
  m.def("word_image", [](long genus, const py::sequence &letters) {
    return matrix_out(word_image(word_in(genus, letters)).mat());
  });
  m.def("reduce_mod", [](long genus, const py::sequence &rows, py::handle d) {
    return matrix_out(reduce_mod(sp_in(genus, rows), to_mpz(d)).mat());
  });
  m.def("abel", [](long genus, const py::sequence &rows, py::handle d) {
    SpLieElem e = abel(sp_in(genus, rows), to_mpz(d));
    py::dict out;
    out["alpha"] = matrix_out(e.alpha);
    out["beta"] = matrix_out(e.beta);
    out["gamma"] = matrix_out(e.gamma);
    return out;
  });
  m.def("trace_abel", [](long genus, const py::sequence &rows, py::handle d) {
    return to_pyint(trace_alpha(abel(sp_in(genus, rows), to_mpz(d))));
  });
  m.def("block_factor",
        [](long genus, const py::sequence &rows, const std::string &which) {
          Lagrangian lag = which == "A"   ? Lagrangian::A
                           : which == "B" ? Lagrangian::B
                                          : Lagrangian::AB;
          if (which != "A" && which != "B" && which != "AB")
            throw parse_error("lagrangian must be A, B or AB");
          BlockFactor f = block_factor(sp_in(genus, rows), lag);
          return f.has_sym ? py::make_tuple(matrix_out(f.gl), matrix_out(f.sym))
                           : py::make_tuple(matrix_out(f.gl), py::none());
        });

  // heegaard layer
  m.def("splitting_homology", [](long genus, const py::sequence &rows) {
    AbelianFactors f = splitting_homology(HeegaardGluing(sp_in(genus, rows)));
    return py::make_tuple(integers_out(f.torsion), f.free_rank);
  });
  m.def("h1_order", [](long genus, const py::sequence &rows) -> py::object {
    auto n = h1_order(HeegaardGluing(sp_in(genus, rows)));
    return n ? to_pyint(*n) : py::none();
  });
  m.def("mod_d_splitting_exists", [](py::handle n, py::handle d) {
    return mod_d_splitting_exists(to_mpz(n), to_mpz(d));
  });
  m.def("admissible_moduli", [](py::handle n) {
    return integers_out(admissible_moduli(to_mpz(n)));
  });
  m.def("trivialize", [](long genus, const py::sequence &rows, py::handle d) {
    Trivialization t = trivialize(HeegaardGluing(sp_in(genus, rows)), to_mpz(d));
    return py::make_tuple(matrix_out(t.x.mat()), matrix_out(t.y.mat()));
  });
  m.def("lens_gluing", [](py::handle p, py::handle q) {
    return matrix_out(lens_gluing({to_mpz(p), to_mpz(q)}).sp.mat());
  });
  m.def("lens_gluing_mod_d", [](py::handle p, py::handle q, py::handle d) {
    return matrix_out(lens_gluing_mod_d(to_mpz(p), to_mpz(q), to_mpz(d)).sp.mat());
  });
  m.def("phi_invariant",
        [](long genus, const py::sequence &rows, py::handle d, py::handle x) {
          return to_pyint(phi_invariant(HeegaardGluing(sp_in(genus, rows)),
                                        to_mpz(d), to_mpz(x)));
        },
        py::arg("genus"), py::arg("matrix"), py::arg("d"), py::arg("x") = 1);

  // boolean algebra
  m.def("bar_class", [](const py::sequence &bits) {
    long g = static_cast<long>(py::len(bits)) / 2;
    return boolpoly_out(bar_class(class2_in(g, bits)));
  });
  m.def("bool_mul",
        [](long genus, const py::sequence &p, const py::sequence &q) {
          return boolpoly_out(
              bool_mul(boolpoly_in(genus, p), boolpoly_in(genus, q)));
        });
  m.def("sigma_bp", [](long genus, const py::sequence &pairs,
                       const py::sequence &e) {
    BPData data;
    data.g = genus;
    for (py::handle pr : pairs) {
      py::sequence s = pr.cast<py::sequence>();
      data.pairs.emplace_back(class2_in(genus, s[0].cast<py::sequence>()),
                              class2_in(genus, s[1].cast<py::sequence>()));
    }
    data.e = class2_in(genus, e);
    return boolpoly_out(sigma_bp(data));
  });
  m.def("sigma_sep", [](long genus, const py::sequence &pairs) {
    SepData data;
    data.g = genus;
    for (py::handle pr : pairs) {
      py::sequence s = pr.cast<py::sequence>();
      data.pairs.emplace_back(class2_in(genus, s[0].cast<py::sequence>()),
                              class2_in(genus, s[1].cast<py::sequence>()));
    }
    return boolpoly_out(sigma_sep(data));
  });
  m.def("sp2_act", [](long genus, const py::sequence &rows,
                      const py::sequence &poly) {
    SpMatrixMod m2(genus, 2, matrix_in(rows));
    return boolpoly_out(sp2_act(m2, boolpoly_in(genus, poly)));
  });
  m.def("mu", [](long genus, const py::sequence &poly, py::handle x) {
    return to_pyint(mu_x(boolpoly_in(genus, poly), to_mpz(x)));
  });
  m.def("poincare_sigma", [] {
    BooleanPoly s = poincare_sigma();
    return py::make_tuple(boolpoly_out(s), to_pyint(mu_x(s, 1)));
  });
  m.def("trefoil_word", [] {
    TwistWord w = trefoil_word();
    py::list letters;
    for (const TwistLetter &l : w.letters) {
      py::list curve;
      for (const Integer &c : l.curve.coeffs)
        curve.append(to_pyint(c));
      letters.append(py::make_tuple(curve, to_pyint(l.power)));
    }
    return letters;
  });

  // forms on wedge modules
  m.def("contraction_C", [](long genus, long p, const py::sequence &terms) {
    ModVector v = contraction_C(wedge_in(genus, p, terms));
    return v.coeffs;
  });
  m.def("map_u", [](long genus, long p, const std::vector<long> &coeffs) {
    ModVector x(genus, p);
    if (coeffs.size() != x.coeffs.size())
      throw parse_error("class needs 2g coefficients");
    for (size_t i = 0; i < coeffs.size(); ++i)
      x.coeffs[i] = normalize_mod(coeffs[i], p);
    WedgeVector3 v = map_u(x);
    py::list terms;
    for (const auto &[key, c] : v.coeffs)
      terms.append(py::make_tuple(
          py::make_tuple(letter_name(key[0], genus), letter_name(key[1], genus),
                         letter_name(key[2], genus)),
          c));
    return terms;
  });
  m.def("chi", [](long genus, long p, const py::sequence &xi,
                  const py::sequence &eta) {
    Sym2Elem s = chi(wedge_in(genus, p, xi), wedge_in(genus, p, eta));
    py::list terms;
    for (const auto &[key, c] : s.coeffs) {
      auto name2 = [&](const Mono2 &m2) {
        return py::make_tuple(letter_name(m2[0], genus),
                              letter_name(m2[1], genus));
      };
      terms.append(
          py::make_tuple(name2(key.first), name2(key.second), c));
    }
    return terms;
  });
  m.def("form_value", [](const std::string &name, long genus, long p,
                         const py::sequence &xi, const py::sequence &eta) {
    WedgeVector3 a = wedge_in(genus, p, xi), b = wedge_in(genus, p, eta);
    if (name == "J")
      return form_J(a, b);
    if (name == "Jt")
      return form_Jt(a, b);
    if (name == "Q")
      return form_Q(a, b);
    if (name == "Theta")
      return form_Theta(a, b);
    throw parse_error("unknown form '" + name + "'");
  });
  m.def("form_d", [](int which, long genus, long p, const py::sequence &terms) {
    return form_d(which, sym2_in(genus, p, terms));
  });
  m.def("pi_in_bracket_span", [](long genus, long p, const py::sequence &terms) {
    return pi_map(sym2_in(genus, p, terms)).in_bracket_span();
  });
  m.def("pi_is_zero", [](long genus, long p, const py::sequence &terms) {
    return pi_map(sym2_in(genus, p, terms)).is_zero();
  });

  // invariant functionals
  m.def("classify", [](const std::string &module, const std::string &group,
                       long genus, long p) {
    InvariantProblem prob =
        builtin_action(module_from_name(module),
                       group == "Sp" ? Group::Sp : Group::GL, genus, p);
    auto basis = invariant_space(prob);
    py::dict out;
    out["dimension"] = basis.size();
    out["labels"] = prob.labels;
    out["basis"] = basis;
    return out;
  });

  // magnus expansions
  m.def("magnus_expand",
        [](const std::string &word, long rank, long p, long trunc) {
          MagnusSeries s = magnus_expand(FreeWord::parse(word, rank), p, trunc);
          py::list terms;
          for (const auto &[key, c] : s.coeffs) {
            std::vector<long> w;
            std::uint64_t k = key;
            std::uint64_t base = static_cast<std::uint64_t>(rank + 1);
            while (k) {
              w.insert(w.begin(), static_cast<long>(k % base));
              k /= base;
            }
            terms.append(py::make_tuple(w, c));
          }
          return terms;
        });
  m.def("z_degree", [](const std::string &word, long rank, long p, long trunc) {
    return degree_out(z_degree(FreeWord::parse(word, rank), p, trunc));
  });
  m.def("ia_degree",
        [](long rank, const std::vector<std::string> &images, long p,
           long trunc) {
          FreeEndo f;
          f.rank = rank;
          for (const std::string &w : images)
            f.images.push_back(FreeWord::parse(w, rank));
          return degree_out(ia_degree(f, p, trunc));
        });
  m.def("tau_k", [](long rank, const std::vector<std::string> &images, long k,
                    long p, long trunc) {
    FreeEndo f;
    f.rank = rank;
    for (const std::string &w : images)
      f.images.push_back(FreeWord::parse(w, rank));
    auto taus = tau_k(f, k, p, trunc);
    py::list out;
    for (const MagnusSeries &s : taus) {
      py::list terms;
      for (const auto &[key, c] : s.coeffs) {
        std::vector<long> word;
        std::uint64_t kk = key;
        std::uint64_t base = static_cast<std::uint64_t>(s.rank + 1);
        while (kk) {
          word.insert(word.begin(), static_cast<long>(kk % base));
          kk /= base;
        }
        terms.append(py::make_tuple(word, c));
      }
      out.append(terms);
    }
    return out;
  });
  m.def("apply_endo", [](long rank, const std::vector<std::string> &images,
                         const std::string &word) {
    FreeEndo f;
    f.rank = rank;
    for (const std::string &w : images)
      f.images.push_back(FreeWord::parse(w, rank));
    return apply_endo(f, FreeWord::parse(word, rank)).str();
  });
}
