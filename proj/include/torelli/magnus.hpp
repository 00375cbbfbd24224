#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "torelli/errors.hpp"

namespace torelli {

// Words in a free group of rank r; letters are (generator index 0..r-1,
// exponent +-1).  Parsing accepts "x1 x2^-1 x1^3".
struct FreeWord {
  long rank = 0;
  std::vector<std::pair<long, int>> letters;

  static FreeWord parse(const std::string &text, long rank);
  std::string str() const;

  FreeWord inverse() const;
  FreeWord concat(const FreeWord &o) const; // freely reduced
  static FreeWord commutator(const FreeWord &u, const FreeWord &v);
  FreeWord power(long e) const;
  void reduce(); // cancel adjacent inverse pairs
};

// Truncated series over F_p in noncommuting X_1..X_r; keys are words of
// length <= trunc packed in base (rank+1), least-significant letter first.
struct MagnusSeries {
  long rank = 0;
  long p = 0;
  long trunc = 0;
  std::map<std::uint64_t, long> coeffs;

  static std::uint64_t append_letter(std::uint64_t key, long letter, long rank);
  static long key_length(std::uint64_t key, long rank);

  static MagnusSeries one(long rank, long p, long trunc);
  MagnusSeries mul(const MagnusSeries &o) const;
  MagnusSeries add(const MagnusSeries &o) const;
  long coefficient(std::uint64_t key) const;
  // smallest degree >= 1 carrying a nonzero coefficient; 0 if none
  long min_positive_degree() const;
  // the homogeneous degree-k part
  MagnusSeries homogeneous(long k) const;
  bool operator==(const MagnusSeries &o) const {
    return rank == o.rank && p == o.p && trunc == o.trunc && coeffs == o.coeffs;
  }
};

MagnusSeries magnus_expand(const FreeWord &w, long p, long trunc);

// Zassenhaus filtration degree detected through the expansion.
struct FiltrationDegree {
  long value = 0;      // the degree, or the truncation bound
  bool exact = true;   // false means "at least value"
};

FiltrationDegree z_degree(const FreeWord &w, long p, long trunc);

struct FreeEndo {
  long rank = 0;
  std::vector<FreeWord> images;

  static FreeEndo identity(long rank);
  static FreeEndo k12(long rank); // x1 -> x2 x1 x2^-1, rest fixed
};

FreeWord apply_endo(const FreeEndo &f, const FreeWord &w);

// True when the induced map on H_1(F; Z/p) is invertible.
bool h1_invertible(const FreeEndo &f, long p);

// Largest k <= trunc-1 with f(x) x^-1 in the (k+1)-st Zassenhaus term for
// all generators x; exact = false means "at least trunc".
FiltrationDegree ia_degree(const FreeEndo &f, long p, long trunc);

// Mod-p Johnson homomorphism: per generator, the degree-(k+1) part of the
// expansion of f(x) x^-1.  Requires ia_degree(f) >= k and trunc >= k + 2.
std::vector<MagnusSeries> tau_k(const FreeEndo &f, long k, long p, long trunc);

} // namespace torelli
