#pragma once

#include "csbv/lie.hpp"
#include <optional>

namespace csbv {

// Matrix representation rho of a LieAlgebra with exact Gaussian-rational
// entries. The quantized generators are X̂_a = hbar * rho_a.
struct Representation {
  LieAlgebra algebra;
  Rat hbar = Rat(1);
  std::vector<MatQ> rho;
  std::string label;

  int dimV() const { return rho.empty() ? 0 : int(rho[0].rows()); }
  MatQ X(int a) const { return GRat(hbar) * MatQ(rho[a]); }
  // Sum_a X̂_a X̂_a
  MatQ casimir() const;
};

struct RepReport { bool ok; Rat maxViolation; };

// Spin-j irreducible of su2, realized on the monomial basis of the 2j-th
// symmetric power of the fundamental: all entries are Gaussian rationals for
// every half-integer j (the usual orthonormal ladder basis needs square
// roots from j = 3/2 on). rho_a = -i J_a, so [rho_a, rho_b] = eps_abc rho_c
// and the Casimir is -j(j+1) Id.
Representation repSu2(int twoJ, const Rat& hbar);

// Abelian algebra represented by commuting diagonal matrices; entries[a] is
// the diagonal of rho_a. All diagonals must have equal length.
Representation repAbelianDiagonal(const LieAlgebra& L, const std::vector<std::vector<Rat>>& entries,
                                  const Rat& hbar);

// Zero representation on C^1 (valid for any algebra).
Representation repTrivial(const LieAlgebra& L, const Rat& hbar);

// Checks [X̂_a, X̂_b] = hbar * sum_c f_abc X̂_c exactly.
RepReport checkRep(const LieAlgebra& L, const Representation& R);

// Extracts structure constants from commutators of rho by an exact linear
// solve; nullopt when the rho_a are linearly dependent (e.g. the zero rep).
std::optional<LieAlgebra> extractStructureConstants(const Representation& R);

} // namespace csbv
