#pragma once

#include "csbv/rational.hpp"
#include <string>
#include <vector>

namespace csbv {

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& m) : std::runtime_error(m) {}
};

// Finite-dimensional quadratic Lie algebra in an orthonormal basis: the
// invariant form is the identity, so all index positions are equivalent and
// the structure constants of a consistent algebra are totally antisymmetric.
class LieAlgebra {
public:
  LieAlgebra() = default;
  LieAlgebra(std::string name, int dim);

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }

  const Rat& f(int a, int b, int c) const { return f_[(a * dim_ + b) * dim_ + c]; }
  void setF(int a, int b, int c, const Rat& v);          // sets only this slot
  void setFAntisym(int a, int b, int c, const Rat& v);   // total antisymmetrization of one entry

  struct Entry { int a, b, c; Rat v; };
  const std::vector<Entry>& nonzero() const;             // cached sparse view

  std::string str() const;

private:
  std::string name_;
  int dim_ = 0;
  std::vector<Rat> f_;
  mutable std::vector<Entry> nz_;
  mutable bool nzDirty_ = true;
};

struct JacobiReport { bool ok; Rat maxViolation; };
struct InvarianceReport { bool ok; };

LieAlgebra makeSu2();
LieAlgebra makeSo3();
LieAlgebra makeAbelian(int n);
LieAlgebra directSum(const std::vector<LieAlgebra>& parts);

// Parses "su2", "so3", "abelian:N", and "+"-joined direct sums.
LieAlgebra makeBuiltin(const std::string& name);

JacobiReport checkJacobi(const LieAlgebra& L);
InvarianceReport checkInvariance(const LieAlgebra& L);

// JSON schema: {"name": str, "dim": int, "f": [[a,b,c,value], ...]} with
// 0-based indices; omitted entries are zero; each entry is completed with
// f[b][a][c] = -value and conflicting duplicates are rejected.
LieAlgebra lieFromJson(const std::string& text);
LieAlgebra lieFromJsonFile(const std::string& path);
std::string lieToJson(const LieAlgebra& L);

} // namespace csbv
