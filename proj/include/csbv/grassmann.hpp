#pragma once

#include "csbv/rational.hpp"
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace csbv {

// Free graded-commutative polynomial algebra over a finite generator table.
//
// Every generator carries (form, ghost, vdeg): de Rham degree on the source,
// ghost number, and field-space form degree. Commutation signs are governed
// by the single total parity (form + ghost + vdeg) mod 2. Products whose
// total form degree exceeds the dimension of the generator's stratum vanish.

struct StratumDef {
  std::string label;
  int dim = 0;
  int sign = +1;          // orientation sign for 0-dimensional boundary strata
};

struct GenDef {
  std::string name;       // globally unique, used by printer/parser
  int form = 0;
  int ghost = 0;
  int vdeg = 0;
  int lie = -1;           // component index, -1 for scalars
  int stratum = 0;
};

class Arena {
public:
  int addStratum(const std::string& label, int dim, int sign = +1);
  int addGen(GenDef g);

  const GenDef& gen(int id) const { return gens_[id]; }
  const StratumDef& stratum(int id) const { return strata_[id]; }
  int numGens() const { return int(gens_.size()); }
  int numStrata() const { return int(strata_.size()); }
  int parity(int id) const {
    const GenDef& g = gens_[id];
    return ((g.form + g.ghost + g.vdeg) % 2 + 2) % 2;
  }
  int findGen(const std::string& name) const;       // -1 if absent
  int findStratum(const std::string& label) const;  // -1 if absent

private:
  std::vector<StratumDef> strata_;
  std::vector<GenDef> gens_;
  std::map<std::string, int> byName_;
};

using Mono = std::vector<int>; // sorted generator ids; odd ids appear at most once

class Poly {
public:
  std::map<Mono, Rat> terms;

  bool isZero() const { return terms.empty(); }
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
  friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
  Poly operator-() const;
  friend Poly operator*(const Rat& c, Poly p);
  bool operator==(const Poly& o) const { return terms == o.terms; }

  void addTerm(const Mono& m, const Rat& c); // m must already be canonical
  int numTerms() const { return int(terms.size()); }
};

// Degree triple of a homogeneous polynomial.
struct Degrees { int form, ghost, vdeg; };

Poly polyConst(const Rat& c);
Poly polyGen(int id);
// Normalizes an arbitrary product of generators (sorting with Koszul signs,
// dropping odd squares and over-dimension form degrees).
Poly monomial(const Arena& ar, const std::vector<int>& factors, const Rat& coeff);
Poly mul(const Arena& ar, const Poly& a, const Poly& b);
int polyParity(const Arena& ar, const Poly& p);                 // asserts homogeneity
std::optional<Degrees> polyDegrees(const Arena& ar, const Poly& p); // nullopt if mixed

enum class Side { Left, Right };
Poly derive(const Arena& ar, const Poly& p, int genId, Side side);

// Graded derivation given per-generator images (empty poly = killed).
// dParity is the parity of the derivation itself (1 for d, delta, iota_Q).
class DerivTable {
public:
  explicit DerivTable(int numGens = 0) : img_(numGens) {}
  void resize(int n) { img_.resize(n); }
  void set(int id, Poly p) { img_[id] = std::move(p); }
  const Poly& get(int id) const { return img_[id]; }
  int size() const { return int(img_.size()); }
private:
  std::vector<Poly> img_;
};

Poly applyDeriv(const Arena& ar, const Poly& p, const DerivTable& t, int dParity);

// Linear generator substitution (restriction maps): image -1 sends the
// generator (and the whole monomial) to zero.
Poly substitute(const Arena& ar, const Poly& p, const std::vector<int>& genMap);

// Odd Poisson bracket over a pairing table:
//   {p,q} = sum_i w_i [ (d^R_{x_i} p)(d^L_{y_i} q) + sigma_i (d^R_{y_i} p)(d^L_{x_i} q) ].
struct PairEntry { int x, y; Rat w; int sigma = -1; };
Poly poissonBracket(const Arena& ar, const Poly& p, const Poly& q,
                    const std::vector<PairEntry>& pairs);

// Deterministic text form: terms in canonical monomial order,
// "c*gen1*gen2" joined with " + "/" - ". parsePoly accepts the same grammar.
std::string toString(const Arena& ar, const Poly& p);
Poly parsePoly(const Arena& ar, const std::string& text);

} // namespace csbv
