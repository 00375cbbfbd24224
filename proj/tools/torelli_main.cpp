// Command line front end: exact computations on Heegaard gluings, the
// Boolean-algebra sigma calculus, bilinear forms on wedge modules, the
// invariant-space solver and truncated Magnus expansions.
//
// Exit codes: 0 success, 1 violated mathematical precondition, 2 malformed
// input or flags.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "torelli/invariant.hpp"
#include "torelli/json_io.hpp"

using namespace torelli;

namespace {

struct Io {
  std::string in = "-";
  std::string out = "-";
  std::string format = "json";

  std::string read() const {
    if (in == "-") {
      std::stringstream ss;
      ss << std::cin.rdbuf();
      return ss.str();
    }
    std::ifstream f(in);
    if (!f)
      throw parse_error("cannot open input file '" + in + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }

  void write(const std::string &text) const {
    if (out == "-") {
      std::cout << text << "\n";
      return;
    }
    std::ofstream f(out);
    if (!f)
      throw parse_error("cannot open output file '" + out + "'");
    f << text << "\n";
  }

  void emit(const json &j, const std::string &pretty_text) const {
    write(format == "pretty" ? pretty_text : j.dump(2));
  }
};

void add_io(CLI::App *cmd, Io &io, bool with_in = true) {
  if (with_in)
    cmd->add_option("--in", io.in, "input file, - for stdin");
  cmd->add_option("--out", io.out, "output file, - for stdout");
  cmd->add_option("--format", io.format, "json or pretty")
      ->check(CLI::IsMember({"json", "pretty"}));
}

std::string pretty_bool(const BooleanPoly &p) {
  if (p.support.empty())
    return "0";
  std::string out;
  for (std::uint64_t mono : p.support) {
    if (!out.empty())
      out += " + ";
    if (mono == 0) {
      out += "1̅";
      continue;
    }
    for (long j = 0; j < 2 * p.g; ++j)
      if (mono >> j & 1) {
        out += (j < p.g ? "A" : "B");
        out += "̄";
        out += std::to_string(j % p.g + 1);
      }
  }
  return out;
}

HeegaardGluing gluing_from(const Io &io, const std::vector<long> &lens,
                           long modulus) {
  if (!lens.empty()) {
    if (lens.size() != 2)
      throw parse_error("--lens takes p and q");
    if (modulus > 0)
      return lens_gluing_mod_d(lens[0], lens[1], modulus);
    return lens_gluing({lens[0], lens[1]});
  }
  return gluing_from_json(parse_json_text(io.read()));
}

ClassMod2 class_from(const json &j, long g) {
  if (!j.is_array() || static_cast<long>(j.size()) != 2 * g)
    throw parse_error("a mod-2 class must list 2g bits");
  std::vector<int> bits;
  for (const json &b : j)
    bits.push_back(b.get<int>());
  return ClassMod2(g, std::move(bits));
}

int run(int argc, char **argv) {
  CLI::App app{"exact computations for mod-d Torelli gluings and their invariants"};
  app.require_subcommand(1);
  long seed = 0;
  app.add_option("--seed", seed,
                 "seed for commands that sample random instances");

  // snf
  Io snf_io;
  auto *snf_cmd = app.add_subcommand("snf", "Smith normal form of a matrix");
  add_io(snf_cmd, snf_io);

  // homology
  Io hom_io;
  std::vector<long> hom_lens;
  auto *hom_cmd =
      app.add_subcommand("homology", "H_1 of a Heegaard splitting");
  add_io(hom_cmd, hom_io);
  hom_cmd->add_option("--lens", hom_lens, "lens space parameters p q")
      ->expected(2);

  // trivialize
  Io tri_io;
  std::vector<long> tri_lens;
  long tri_mod = 0;
  auto *tri_cmd = app.add_subcommand(
      "trivialize", "X Psi_d(f) Y = Id factorization over Z/d");
  add_io(tri_cmd, tri_io);
  tri_cmd->add_option("--lens", tri_lens, "lens space parameters p q")
      ->expected(2);
  tri_cmd->add_option("--modulus", tri_mod, "modulus d >= 2")->required();

  // invariant
  Io inv_io;
  std::vector<long> inv_lens;
  long inv_mod = 0, inv_x = 1;
  auto *inv_cmd =
      app.add_subcommand("invariant", "trace invariant of a mod-d gluing");
  add_io(inv_cmd, inv_io);
  inv_cmd->add_option("--lens", inv_lens, "lens space parameters p q")
      ->expected(2);
  inv_cmd->add_option("--modulus", inv_mod, "modulus d >= 2")->required();
  inv_cmd->add_option("--x", inv_x, "coefficient x (default 1)");

  // bcj
  auto *bcj_cmd = app.add_subcommand("bcj", "Boolean-algebra sigma calculus");
  bcj_cmd->require_subcommand(1);
  Io bcj_poin_io;
  auto *bcj_poin = bcj_cmd->add_subcommand(
      "poincare", "sigma of the trefoil gluing and its mu value");
  add_io(bcj_poin, bcj_poin_io, false);
  Io bcj_eval_io;
  auto *bcj_eval =
      bcj_cmd->add_subcommand("eval", "sigma of BP or separating data");
  add_io(bcj_eval, bcj_eval_io);

  // forms
  auto *forms_cmd = app.add_subcommand("forms", "bilinear forms on wedge modules");
  forms_cmd->require_subcommand(1);
  Io feval_io;
  std::string form_name;
  auto *feval = forms_cmd->add_subcommand("eval", "evaluate a form");
  add_io(feval, feval_io);
  feval->add_option("--form", form_name, "J, Jt, Q, Theta, d1, d2 or d3")
      ->required();
  Io fclass_io;
  std::string module_name, group_name = "GL";
  long fc_genus = 0, fc_prime = 0;
  auto *fclass =
      forms_cmd->add_subcommand("classify", "invariant functionals of a module");
  add_io(fclass, fclass_io, false);
  fclass->add_option("--module", module_name,
                     "B2, B3, Wedge3, SpLie, Sym2Wedge2 or Wedge2OfWedge3")
      ->required();
  fclass->add_option("--group", group_name, "GL or Sp")
      ->check(CLI::IsMember({"GL", "Sp"}));
  fclass->add_option("--genus", fc_genus, "genus >= 3")->required();
  fclass->add_option("--prime", fc_prime, "modulus (2 for B modules)")
      ->required();

  // magnus
  auto *mag_cmd = app.add_subcommand("magnus", "truncated Magnus expansions");
  mag_cmd->require_subcommand(1);
  Io deg_io;
  std::string deg_word;
  long deg_prime = 0, deg_trunc = 7, deg_rank = 0;
  auto *deg = mag_cmd->add_subcommand("degree", "Zassenhaus filtration degree");
  add_io(deg, deg_io, false);
  deg->add_option("word", deg_word, "word like 'x1 x2^-1'")->required();
  deg->add_option("--prime", deg_prime, "prime p")->required();
  deg->add_option("--truncation", deg_trunc, "truncation degree (default 7)");
  deg->add_option("--rank", deg_rank, "rank (default: inferred)");
  Io ia_io;
  long ia_prime = 0, ia_trunc = 7;
  auto *ia = mag_cmd->add_subcommand("ia", "IA depth of an endomorphism");
  add_io(ia, ia_io);
  ia->add_option("--prime", ia_prime, "prime p")->required();
  ia->add_option("--truncation", ia_trunc, "truncation degree (default 7)");
  Io tau_io;
  long tau_prime = 0, tau_trunc = 7, tau_kk = 1;
  auto *tau = mag_cmd->add_subcommand("tau", "mod-p Johnson homomorphism");
  add_io(tau, tau_io);
  tau->add_option("--prime", tau_prime, "prime p")->required();
  tau->add_option("--truncation", tau_trunc, "truncation degree (default 7)");
  tau->add_option("--k", tau_kk, "depth k (default 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    app.exit(e);
    return 2;
  }

  if (snf_cmd->parsed()) {
    SnfResult r = smith_normal_form(matrix_from_json(parse_json_text(snf_io.read())));
    std::string pretty = "factors:";
    for (const Integer &d : r.factors)
      pretty += " " + d.get_str();
    snf_io.emit(snf_to_json(r), pretty);
    return 0;
  }

  if (hom_cmd->parsed()) {
    HeegaardGluing h = gluing_from(hom_io, hom_lens, 0);
    AbelianFactors f = splitting_homology(h);
    auto order = h1_order(h);
    json j = factors_to_json(f);
    std::string pretty;
    if (order) {
      j["order"] = order->get_str();
      json adm = json::array();
      pretty = "order " + order->get_str() + ", admissible moduli:";
      for (const Integer &d : admissible_moduli(*order)) {
        adm.push_back(d.get_str());
        pretty += " " + d.get_str();
      }
      j["admissible_moduli"] = adm;
    } else {
      j["order"] = "infinite";
      pretty = "order infinite";
    }
    hom_io.emit(j, pretty);
    return 0;
  }

  if (tri_cmd->parsed()) {
    HeegaardGluing h = gluing_from(tri_io, tri_lens, 0);
    Trivialization t = trivialize(h, tri_mod);
    bool ok = (t.x * reduce_mod(h.sp, tri_mod) * t.y).is_identity();
    json j{{"X", spmod_to_json(t.x)},
           {"Y", spmod_to_json(t.y)},
           {"verified", ok}};
    tri_io.emit(j, ok ? "verified" : "NOT verified");
    return 0;
  }

  if (inv_cmd->parsed()) {
    HeegaardGluing h = gluing_from(inv_io, inv_lens, inv_mod);
    Integer value = phi_invariant(h, inv_mod, inv_x);
    inv_io.emit(json{{"value", value.get_str()}, {"modulus", inv_mod}},
                value.get_str() + " (mod " + std::to_string(inv_mod) + ")");
    return 0;
  }

  if (bcj_poin->parsed()) {
    BooleanPoly s = poincare_sigma();
    json j = boolpoly_to_json(s);
    j["mu"] = mu_x(s, 1).get_str();
    bcj_poin_io.emit(j, pretty_bool(s) + "\nmu = " + mu_x(s, 1).get_str());
    return 0;
  }

  if (bcj_eval->parsed()) {
    json in = parse_json_text(bcj_eval_io.read());
    if (!in.is_object() || !in.contains("genus") || !in.contains("kind") ||
        !in.contains("pairs"))
      throw parse_error("bcj eval input needs genus, kind and pairs");
    long g = in["genus"].get<long>();
    std::vector<std::pair<ClassMod2, ClassMod2>> pairs;
    for (const json &pr : in["pairs"]) {
      if (!pr.is_array() || pr.size() != 2)
        throw parse_error("each pair lists two classes");
      pairs.emplace_back(class_from(pr[0], g), class_from(pr[1], g));
    }
    BooleanPoly s(g);
    std::string kind = in["kind"].get<std::string>();
    if (kind == "bp") {
      if (!in.contains("e"))
        throw parse_error("bp data needs the class e");
      s = sigma_bp({g, pairs, class_from(in["e"], g)});
    } else if (kind == "sep") {
      s = sigma_sep({g, pairs});
    } else {
      throw parse_error("kind must be bp or sep");
    }
    json j = boolpoly_to_json(s);
    j["mu"] = mu_x(s, 1).get_str();
    bcj_eval_io.emit(j, pretty_bool(s));
    return 0;
  }

  if (feval->parsed()) {
    json in = parse_json_text(feval_io.read());
    long value;
    if (form_name == "d1" || form_name == "d2" || form_name == "d3") {
      Sym2Elem s = sym2_from_json(in);
      value = form_d(form_name[1] - '0', s);
    } else {
      if (!in.is_object() || !in.contains("xi") || !in.contains("eta"))
        throw parse_error("form input needs xi and eta");
      WedgeVector3 xi = wedge_from_json(in["xi"]);
      WedgeVector3 eta = wedge_from_json(in["eta"]);
      if (form_name == "J")
        value = form_J(xi, eta);
      else if (form_name == "Jt")
        value = form_Jt(xi, eta);
      else if (form_name == "Q")
        value = form_Q(xi, eta);
      else if (form_name == "Theta")
        value = form_Theta(xi, eta);
      else
        throw parse_error("unknown form '" + form_name + "'");
    }
    feval_io.emit(json{{"form", form_name}, {"value", value}},
                  std::to_string(value));
    return 0;
  }

  if (fclass->parsed()) {
    InvariantProblem prob =
        builtin_action(module_from_name(module_name),
                       group_name == "GL" ? Group::GL : Group::Sp, fc_genus,
                       fc_prime);
    auto basis = invariant_space(prob);
    json jbasis = json::array();
    for (const auto &row : basis)
      jbasis.push_back(row);
    json j{{"module", module_name}, {"group", group_name},
           {"genus", fc_genus},    {"p", fc_prime},
           {"dimension", basis.size()}, {"labels", prob.labels},
           {"basis", jbasis}};
    std::string pretty = "dimension " + std::to_string(basis.size());
    fclass_io.emit(j, pretty);
    return 0;
  }

  if (deg->parsed()) {
    long rank = deg_rank;
    if (rank == 0) {
      std::istringstream probe(deg_word);
      std::string tok;
      while (probe >> tok) {
        size_t caret = tok.find('^');
        if (tok.size() > 1 && tok[0] == 'x') {
          try {
            rank = std::max(rank, std::stol(tok.substr(
                                      1, caret == std::string::npos
                                             ? std::string::npos
                                             : caret - 1)));
          } catch (...) {
          }
        }
      }
      if (rank == 0)
        rank = 1;
    }
    FreeWord w = FreeWord::parse(deg_word, rank);
    FiltrationDegree d = z_degree(w, deg_prime, deg_trunc);
    json j{{"degree", d.value}, {"exact", d.exact}};
    deg_io.emit(j, d.exact ? std::to_string(d.value)
                           : "at least " + std::to_string(d.value));
    return 0;
  }

  if (ia->parsed()) {
    FreeEndo f = endo_from_json(parse_json_text(ia_io.read()));
    FiltrationDegree d = ia_degree(f, ia_prime, ia_trunc);
    json j{{"ia_degree", d.value}, {"exact", d.exact}};
    ia_io.emit(j, d.exact ? std::to_string(d.value)
                          : "at least " + std::to_string(d.value));
    return 0;
  }

  if (tau->parsed()) {
    FreeEndo f = endo_from_json(parse_json_text(tau_io.read()));
    auto taus = tau_k(f, tau_kk, tau_prime, tau_trunc);
    json out = json::array();
    std::string pretty;
    for (long i = 0; i < f.rank; ++i) {
      const MagnusSeries &s = taus[static_cast<size_t>(i)];
      json terms = json::array();
      std::string line = "x" + std::to_string(i + 1) + " -> ";
      bool first = true;
      for (const auto &[key, c] : s.coeffs) {
        std::vector<long> word;
        std::uint64_t k = key;
        std::uint64_t base = static_cast<std::uint64_t>(s.rank + 1);
        while (k) {
          word.insert(word.begin(), static_cast<long>(k % base));
          k /= base;
        }
        terms.push_back(json{{"word", word}, {"coeff", c}});
        if (!first)
          line += " + ";
        first = false;
        line += std::to_string(c) + "*";
        for (long l : word)
          line += "X" + std::to_string(l);
      }
      if (first)
        line += "0";
      out.push_back(json{{"generator", "x" + std::to_string(i + 1)},
                         {"terms", terms}});
      pretty += line + "\n";
    }
    tau_io.emit(json{{"k", tau_kk}, {"tau", out}}, pretty);
    return 0;
  }

  return 2;
}

} // namespace

int main(int argc, char **argv) {
  try {
    return run(argc, argv);
  } catch (const parse_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const domain_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
