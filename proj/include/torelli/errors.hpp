#pragma once

#include <stdexcept>
#include <string>

namespace torelli {

// Violated mathematical precondition.  CLI maps these to exit code 1.
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct not_invertible_mod : domain_error {
  using domain_error::domain_error;
};
struct not_symplectic : domain_error {
  using domain_error::domain_error;
};
struct shape_mismatch : domain_error {
  using domain_error::domain_error;
};
struct not_congruent_to_identity : domain_error {
  using domain_error::domain_error;
};
struct criterion_fails : domain_error {
  using domain_error::domain_error;
};
struct not_coprime : domain_error {
  using domain_error::domain_error;
};
struct not_mod_d_torelli : domain_error {
  using domain_error::domain_error;
};
struct depth_too_shallow : domain_error {
  using domain_error::domain_error;
};
struct not_automorphism_candidate : domain_error {
  using domain_error::domain_error;
};
struct unsupported_combination : domain_error {
  using domain_error::domain_error;
};

// Malformed input (JSON, word syntax, flags).  CLI maps these to exit code 2.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace torelli
