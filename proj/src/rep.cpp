#include "csbv/rep.hpp"
#include "csbv/linalg.hpp"

namespace csbv {

MatQ Representation::casimir() const {
  MatQ c = matqZero(dimV(), dimV());
  for (const auto& r : rho) {
    MatQ x = GRat(hbar) * MatQ(r);
    c += x * x;
  }
  return c;
}

Representation repSu2(int twoJ, const Rat& hbar) {
  if (twoJ < 0) throw ConfigError("repSu2: 2j must be a nonnegative integer");
  const int n = twoJ + 1;
  // Basis v_k = x^{2j-k} y^k, k = 0..2j.
  // Jz v_k = (j-k) v_k (in units of 1/2: (twoJ-2k)/2), J+ v_k = k v_{k-1},
  // J- v_k = (twoJ-k) v_{k+1}.
  MatQ Jp = matqZero(n, n), Jm = matqZero(n, n), Jz = matqZero(n, n);
  for (int k = 0; k < n; ++k) {
    Jz(k, k) = GRat(Rat(twoJ - 2 * k, 2));
    if (k > 0) Jp(k - 1, k) = GRat(Rat(k));
    if (k < n - 1) Jm(k + 1, k) = GRat(Rat(twoJ - k));
  }
  GRat mi = -GRat::I();
  GRat half(Rat(1, 2));
  Representation R;
  R.algebra = makeSu2();
  R.hbar = hbar;
  R.label = "su2:j=" + std::to_string(twoJ) + "/2";
  R.rho = {
      MatQ(mi * half * (Jp + Jm)),          // rho_1 = -i/2 (J+ + J-)
      MatQ(GRat(Rat(-1, 2)) * (Jp - Jm)),   // rho_2 = -1/2 (J+ - J-)
      MatQ(mi * Jz),                        // rho_3 = -i Jz
  };
  return R;
}

Representation repAbelianDiagonal(const LieAlgebra& L, const std::vector<std::vector<Rat>>& entries,
                                  const Rat& hbar) {
  if (int(entries.size()) != L.dim()) throw ConfigError("repAbelianDiagonal: need one diagonal per generator");
  size_t d = entries.empty() ? 0 : entries[0].size();
  Representation R;
  R.algebra = L;
  R.hbar = hbar;
  R.label = L.name() + ":diag";
  for (const auto& diag : entries) {
    if (diag.size() != d) throw ConfigError("repAbelianDiagonal: ragged diagonals");
    MatQ m = matqZero(int(d), int(d));
    for (size_t i = 0; i < d; ++i) m(int(i), int(i)) = GRat(diag[i]);
    R.rho.push_back(m);
  }
  return R;
}

Representation repTrivial(const LieAlgebra& L, const Rat& hbar) {
  Representation R;
  R.algebra = L;
  R.hbar = hbar;
  R.label = L.name() + ":trivial";
  for (int a = 0; a < L.dim(); ++a) R.rho.push_back(matqZero(1, 1));
  return R;
}

RepReport checkRep(const LieAlgebra& L, const Representation& R) {
  if (int(R.rho.size()) != L.dim())
    throw ConfigError("checkRep: representation size does not match algebra dimension");
  const int d = R.dimV();
  for (const auto& m : R.rho)
    if (m.rows() != d || m.cols() != d) throw ConfigError("checkRep: ragged matrices");
  Rat worst(0);
  for (int a = 0; a < L.dim(); ++a)
    for (int b = 0; b < L.dim(); ++b) {
      MatQ lhs = comm(R.X(a), R.X(b));
      MatQ rhs = matqZero(d, d);
      for (int c = 0; c < L.dim(); ++c)
        if (L.f(a, b, c) != 0) rhs += GRat(R.hbar * L.f(a, b, c)) * R.X(c);
      Rat v = maxAbs(MatQ(lhs - rhs));
      if (v > worst) worst = v;
    }
  return {worst == 0, worst};
}

std::optional<LieAlgebra> extractStructureConstants(const Representation& R) {
  const int n = int(R.rho.size());
  const int d = R.dimV();
  // Solve [rho_a, rho_b] = sum_c x_c rho_c by reducing against the rho-span.
  MatQ basis = matqZero(d * d, n);
  for (int c = 0; c < n; ++c)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        basis(i * d + j, c) = R.rho[c](i, j);
  if (rankOf<GRat>(basis) != n) return std::nullopt;

  LieAlgebra L("extracted", n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      MatQ cab = comm(MatQ(R.rho[a]), MatQ(R.rho[b]));
      MatQ aug = matqZero(d * d, n + 1);
      aug.block(0, 0, d * d, n) = basis;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          aug(i * d + j, n) = cab(i, j);
      Echelon<GRat> e = rref<GRat>(aug);
      // consistent iff no pivot in the last column
      for (int p : e.pivotCol)
        if (p == n) return std::nullopt;
      // back-read solution from rref
      for (int r = 0; r < e.rank; ++r)
        if (e.pivotCol[r] < n) {
          GRat v = e.mat(r, n);
          if (!(v.im == 0)) return std::nullopt; // structure constants must be real here
          L.setF(a, b, e.pivotCol[r], v.re);
        }
    }
  return L;
}

} // namespace csbv
