#include "csbv/grassmann.hpp"
#include "csbv/lie.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace csbv {

int Arena::addStratum(const std::string& label, int dim, int sign) {
  strata_.push_back({label, dim, sign});
  return int(strata_.size()) - 1;
}

int Arena::addGen(GenDef g) {
  if (byName_.count(g.name)) throw ConfigError("duplicate generator name: " + g.name);
  gens_.push_back(g);
  byName_[g.name] = int(gens_.size()) - 1;
  return int(gens_.size()) - 1;
}

int Arena::findGen(const std::string& name) const {
  auto it = byName_.find(name);
  return it == byName_.end() ? -1 : it->second;
}

int Arena::findStratum(const std::string& label) const {
  for (int i = 0; i < int(strata_.size()); ++i)
    if (strata_[i].label == label) return i;
  return -1;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms) addTerm(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms) addTerm(m, -c);
  return *this;
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [m, c] : terms) r.terms[m] = -c;
  return r;
}

Poly operator*(const Rat& c, Poly p) {
  if (c == 0) return Poly{};
  for (auto& [m, v] : p.terms) v *= c;
  return p;
}

void Poly::addTerm(const Mono& m, const Rat& c) {
  if (c == 0) return;
  auto it = terms.find(m);
  if (it == terms.end()) terms.emplace(m, c);
  else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

Poly polyConst(const Rat& c) {
  Poly p;
  p.addTerm({}, c);
  return p;
}

Poly polyGen(int id) {
  Poly p;
  p.addTerm({id}, Rat(1));
  return p;
}

Poly monomial(const Arena& ar, const std::vector<int>& factors, const Rat& coeff) {
  if (coeff == 0) return Poly{};
  Mono m = factors;
  // insertion sort with Koszul sign
  int sign = 1;
  for (size_t i = 1; i < m.size(); ++i) {
    int x = m[i];
    size_t j = i;
    while (j > 0 && m[j - 1] > x) {
      if (ar.parity(m[j - 1]) && ar.parity(x)) sign = -sign;
      m[j] = m[j - 1];
      --j;
    }
    m[j] = x;
  }
  int form = 0, stratum = -1;
  for (size_t i = 0; i < m.size(); ++i) {
    if (i > 0 && m[i] == m[i - 1] && ar.parity(m[i])) return Poly{}; // odd square
    const GenDef& g = ar.gen(m[i]);
    form += g.form;
    if (stratum < 0) stratum = g.stratum;
    else if (stratum != g.stratum)
      throw ConfigError("monomial mixes strata: " + ar.gen(m[0]).name + " vs " + g.name);
  }
  if (stratum >= 0 && form > ar.stratum(stratum).dim) return Poly{};
  Poly p;
  p.addTerm(m, sign > 0 ? coeff : -coeff);
  return p;
}

Poly mul(const Arena& ar, const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      std::vector<int> fac;
      fac.reserve(ma.size() + mb.size());
      fac.insert(fac.end(), ma.begin(), ma.end());
      fac.insert(fac.end(), mb.begin(), mb.end());
      r += monomial(ar, fac, ca * cb);
    }
  return r;
}

int polyParity(const Arena& ar, const Poly& p) {
  int par = -1;
  for (const auto& [m, c] : p.terms) {
    int q = 0;
    for (int id : m) q ^= ar.parity(id);
    if (par < 0) par = q;
    else if (par != q) throw ConfigError("polyParity: inhomogeneous polynomial");
  }
  return par < 0 ? 0 : par;
}

std::optional<Degrees> polyDegrees(const Arena& ar, const Poly& p) {
  std::optional<Degrees> d;
  for (const auto& [m, c] : p.terms) {
    Degrees cur{0, 0, 0};
    for (int id : m) {
      const GenDef& g = ar.gen(id);
      cur.form += g.form; cur.ghost += g.ghost; cur.vdeg += g.vdeg;
    }
    if (!d) d = cur;
    else if (d->form != cur.form || d->ghost != cur.ghost || d->vdeg != cur.vdeg)
      return std::nullopt;
  }
  return d ? d : std::optional<Degrees>(Degrees{0, 0, 0});
}

Poly derive(const Arena& ar, const Poly& p, int genId, Side side) {
  Poly r;
  const int gp = ar.parity(genId);
  for (const auto& [m, c] : p.terms) {
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] != genId) continue;
      int sign = 1;
      if (gp) {
        if (side == Side::Left) {
          for (size_t j = 0; j < i; ++j)
            if (ar.parity(m[j])) sign = -sign;
        } else {
          for (size_t j = i + 1; j < m.size(); ++j)
            if (ar.parity(m[j])) sign = -sign;
        }
      }
      Mono rest;
      rest.reserve(m.size() - 1);
      for (size_t j = 0; j < m.size(); ++j)
        if (j != i) rest.push_back(m[j]);
      r.addTerm(rest, sign > 0 ? c : -c); // rest stays sorted
    }
  }
  return r;
}

Poly applyDeriv(const Arena& ar, const Poly& p, const DerivTable& t, int dParity) {
  Poly r;
  for (const auto& [m, c] : p.terms) {
    int sign = 1;
    for (size_t i = 0; i < m.size(); ++i) {
      const Poly& img = t.get(m[i]);
      if (!img.isZero()) {
        Mono pre(m.begin(), m.begin() + i);
        Mono post(m.begin() + i + 1, m.end());
        for (const auto& [mi, ci] : img.terms) {
          std::vector<int> fac;
          fac.reserve(pre.size() + mi.size() + post.size());
          fac.insert(fac.end(), pre.begin(), pre.end());
          fac.insert(fac.end(), mi.begin(), mi.end());
          fac.insert(fac.end(), post.begin(), post.end());
          r += monomial(ar, fac, Rat(sign) * c * ci);
        }
      }
      if (dParity && ar.parity(m[i])) sign = -sign;
    }
  }
  return r;
}

Poly substitute(const Arena& ar, const Poly& p, const std::vector<int>& genMap) {
  Poly r;
  for (const auto& [m, c] : p.terms) {
    bool dead = false;
    std::vector<int> fac;
    fac.reserve(m.size());
    for (int id : m) {
      int to = genMap[id];
      if (to < 0) { dead = true; break; }
      fac.push_back(to);
    }
    if (!dead) r += monomial(ar, fac, c);
  }
  return r;
}

Poly poissonBracket(const Arena& ar, const Poly& p, const Poly& q,
                    const std::vector<PairEntry>& pairs) {
  Poly r;
  for (const auto& e : pairs) {
    r += e.w * mul(ar, derive(ar, p, e.x, Side::Right), derive(ar, q, e.y, Side::Left));
    Rat w2 = e.w * Rat(e.sigma);
    r += w2 * mul(ar, derive(ar, p, e.y, Side::Right), derive(ar, q, e.x, Side::Left));
  }
  return r;
}

std::string toString(const Arena& ar, const Poly& p) {
  if (p.isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms) {
    Rat a = ratAbs(c);
    if (first) { if (c < 0) os << "-"; first = false; }
    else os << (c < 0 ? " - " : " + ");
    bool needCoeff = (a != 1) || m.empty();
    if (needCoeff) os << ratStr(a);
    for (size_t i = 0; i < m.size(); ++i) {
      if (i > 0 || needCoeff) os << "*";
      os << ar.gen(m[i]).name;
    }
  }
  return os.str();
}

Poly parsePoly(const Arena& ar, const std::string& text) {
  Poly r;
  size_t i = 0;
  auto skipws = [&] { while (i < text.size() && isspace(text[i])) ++i; };
  skipws();
  if (text.compare(i, 1, "0") == 0 && i + 1 >= text.size()) return r;
  int sign = 1;
  while (i < text.size()) {
    skipws();
    if (text[i] == '+') { sign = 1; ++i; skipws(); }
    else if (text[i] == '-') { sign = -1; ++i; skipws(); }
    // term: factors separated by '*'
    Rat coeff(1);
    std::vector<int> fac;
    bool done = false;
    while (!done) {
      skipws();
      size_t start = i;
      while (i < text.size() && !isspace(text[i]) && text[i] != '*' && text[i] != '+' && text[i] != '-') ++i;
      std::string tok = text.substr(start, i - start);
      if (tok.empty()) throw ConfigError("parsePoly: empty token");
      if (isdigit(tok[0])) coeff *= ratParse(tok);
      else {
        int id = ar.findGen(tok);
        if (id < 0) throw ConfigError("parsePoly: unknown generator " + tok);
        fac.push_back(id);
      }
      skipws();
      if (i < text.size() && text[i] == '*') { ++i; continue; }
      done = true;
    }
    r += monomial(ar, fac, Rat(sign) * coeff);
    skipws();
    if (i >= text.size()) break;
  }
  return r;
}

} // namespace csbv
