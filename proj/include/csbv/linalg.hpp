#pragma once

#include "csbv/rational.hpp"
#include <map>
#include <optional>
#include <vector>

namespace csbv {

// Exact Gaussian elimination over a field scalar (Rat or GRat).
// Pivot choice is positional (first nonzero), so results are deterministic.

template <class S> inline bool scalarIsZero(const S& s) { return s == S(0); }
template <> inline bool scalarIsZero<GRat>(const GRat& s) { return s.isZero(); }

template <class S>
struct Echelon {
  Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> mat; // reduced row echelon form
  std::vector<int> pivotCol;                            // per pivot row
  int rank = 0;
};

template <class S>
Echelon<S> rref(Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> a) {
  const int rows = int(a.rows()), cols = int(a.cols());
  Echelon<S> e;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!scalarIsZero<S>(a(i, c))) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r) a.row(piv).swap(a.row(r));
    S inv = S(1) / a(r, c);
    for (int j = c; j < cols; ++j) a(r, j) = a(r, j) * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || scalarIsZero<S>(a(i, c))) continue;
      S f = a(i, c);
      for (int j = c; j < cols; ++j) a(i, j) = a(i, j) - f * a(r, j);
    }
    e.pivotCol.push_back(c);
    ++r;
  }
  e.mat = std::move(a);
  e.rank = r;
  return e;
}

template <class S>
int rankOf(const Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>& a) {
  return rref<S>(a).rank;
}

// Basis of the right kernel, one column per vector.
template <class S>
Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>
kernelBasis(const Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>& a) {
  using M = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
  Echelon<S> e = rref<S>(a);
  const int cols = int(a.cols());
  std::vector<int> isPivot(cols, -1);
  for (int i = 0; i < e.rank; ++i) isPivot[e.pivotCol[i]] = i;
  M k = M::Constant(cols, cols - e.rank, S(0));
  int kc = 0;
  for (int c = 0; c < cols; ++c) {
    if (isPivot[c] >= 0) continue;
    k(c, kc) = S(1);
    for (int i = 0; i < e.rank; ++i) k(e.pivotCol[i], kc) = -e.mat(i, c);
    ++kc;
  }
  return k;
}

// Sparse exact row space with incremental reduction; columns are abstract
// integer indices (monomial ids). Used for "zero modulo exact terms" and
// membership questions in the variational layer.
struct SparseRowSpan {
  using Row = std::map<int, Rat>;
  std::vector<Row> rows;          // reduced: each row has unique leading col
  std::map<int, int> leadOf;      // leading col -> row index

  static int leadCol(const Row& r) { return r.empty() ? -1 : r.begin()->first; }

  // Reduce r against the span; returns the residual. Every column of r that
  // is the lead of a span row gets eliminated (terminates: an elimination
  // only introduces leads of later-inserted rows).
  Row reduce(Row r) const {
    bool again = true;
    while (again && !r.empty()) {
      again = false;
      for (auto it = r.begin(); it != r.end(); ++it) {
        auto lt = leadOf.find(it->first);
        if (lt == leadOf.end()) continue;
        const Row& base = rows[lt->second];
        Rat f = it->second / base.begin()->second;
        for (const auto& [c, v] : base) {
          auto jt = r.find(c);
          Rat nv = (jt == r.end() ? Rat(0) : jt->second) - f * v;
          if (nv == 0) { if (jt != r.end()) r.erase(jt); }
          else r[c] = nv;
        }
        again = true;
        break;
      }
    }
    return r;
  }

  // Insert row (after reduction). Returns false if it was dependent.
  bool add(Row r) {
    r = reduce(std::move(r));
    if (r.empty()) return false;
    leadOf[r.begin()->first] = int(rows.size());
    rows.push_back(std::move(r));
    return true;
  }

  bool contains(Row r) const { return reduce(std::move(r)).empty(); }
};

} // namespace csbv
