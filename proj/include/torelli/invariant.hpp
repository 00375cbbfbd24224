#pragma once

#include <string>
#include <utility>
#include <vector>

#include "torelli/forms.hpp"

namespace torelli {

// Sparse column-major matrix over Z/p.
struct SparseMatrix {
  long n = 0;
  std::vector<std::vector<std::pair<long, long>>> cols; // (row, value)

  explicit SparseMatrix(long dim = 0) : n(dim), cols(static_cast<size_t>(dim)) {}
  void add(long row, long col, long value, long p);
};

// A linear action of finitely many invertible generators on (Z/p)^dim.
struct InvariantProblem {
  long dim = 0;
  long p = 0;
  std::vector<std::string> labels;
  std::vector<SparseMatrix> gens;
};

// Basis, in reduced row echelon form, of the functionals fixed by every
// generator: all r with r . (M v) = r . v, i.e. ker(M^t - Id) on the dual.
std::vector<std::vector<long>> invariant_space(const InvariantProblem &prob);

enum class Module { B2, B3, Wedge3, SpLie, Sym2Wedge2, Wedge2OfWedge3 };
enum class Group { GL, Sp };

// Generator actions on the chosen module.  GL means the block-diagonal
// image of GL_g(Z); Sp adds the symmetric transvection blocks.
InvariantProblem builtin_action(Module module, Group group, long g, long p);

Module module_from_name(const std::string &name);

// Basis enumerations matching the coordinate order used by builtin_action.
std::vector<Mono3> wedge3_basis(long g);
std::vector<Mono2> wedge2_basis(long g);
std::vector<std::pair<Mono2, Mono2>> sym2_basis(long g);
std::vector<std::pair<Mono3, Mono3>> wedge2of3_basis(long g);
std::vector<std::uint64_t> boolean_basis(long g, int max_degree);

// sp_2g(Z/d) coordinates: alpha (i, j) for all i, j; then beta (i <= j);
// then gamma (i <= j).
struct SpLieCoord {
  int block; // 0 = alpha, 1 = beta, 2 = gamma
  long i, j;
};
std::vector<SpLieCoord> splie_basis(long g);

// The 2g x 2g generator matrices themselves (mod p), for reuse in tests.
std::vector<std::vector<std::vector<long>>> symplectic_generators(Group group,
                                                                  long g,
                                                                  long p);

} // namespace torelli
