#pragma once

#include <json.hpp>

#include "torelli/bcj.hpp"
#include "torelli/forms.hpp"
#include "torelli/heegaard.hpp"
#include "torelli/magnus.hpp"

namespace torelli {

using nlohmann::json;

// Matrix encoding: {"rows": r, "cols": c, "entries": [[...], ...]} with
// decimal-string integers; numbers are accepted on input.
json matrix_to_json(const IntMatrix &m);
IntMatrix matrix_from_json(const json &j);

json sp_to_json(const SpMatrixZ &m);       // matrix encoding plus "genus"
json spmod_to_json(const SpMatrixMod &m);  // plus "modulus"

TwistWord twistword_from_json(const json &j);
json twistword_to_json(const TwistWord &w);

// A gluing is either a twist word ("letters") or a direct matrix ("entries").
HeegaardGluing gluing_from_json(const json &j);

json boolpoly_to_json(const BooleanPoly &p);
BooleanPoly boolpoly_from_json(const json &j);

json wedge_to_json(const WedgeVector3 &v);
WedgeVector3 wedge_from_json(const json &j);

json sym2_to_json(const Sym2Elem &s);
Sym2Elem sym2_from_json(const json &j);

FreeEndo endo_from_json(const json &j);

json snf_to_json(const SnfResult &r);
json factors_to_json(const AbelianFactors &f);

json parse_json_text(const std::string &text); // wraps parse failures

} // namespace torelli
