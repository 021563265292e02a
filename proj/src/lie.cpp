#include "csbv/lie.hpp"

#include <json.hpp>
#include <fstream>
#include <sstream>

namespace csbv {

using nlohmann::json;

LieAlgebra::LieAlgebra(std::string name, int dim)
    : name_(std::move(name)), dim_(dim), f_(size_t(dim) * dim * dim, Rat(0)) {
  if (dim < 1) throw ConfigError("algebra dimension must be >= 1");
}

void LieAlgebra::setF(int a, int b, int c, const Rat& v) {
  f_[(a * dim_ + b) * dim_ + c] = v;
  nzDirty_ = true;
}

void LieAlgebra::setFAntisym(int a, int b, int c, const Rat& v) {
  if (a == b || b == c || a == c) throw ConfigError("antisymmetric entry needs distinct indices");
  int idx[3] = {a, b, c};
  int perm[6][3] = {{0,1,2},{1,2,0},{2,0,1},{1,0,2},{0,2,1},{2,1,0}};
  Rat sign[6] = {Rat(1),Rat(1),Rat(1),Rat(-1),Rat(-1),Rat(-1)};
  for (int p = 0; p < 6; ++p)
    setF(idx[perm[p][0]], idx[perm[p][1]], idx[perm[p][2]], sign[p] * v);
}

const std::vector<LieAlgebra::Entry>& LieAlgebra::nonzero() const {
  if (nzDirty_) {
    nz_.clear();
    for (int a = 0; a < dim_; ++a)
      for (int b = 0; b < dim_; ++b)
        for (int c = 0; c < dim_; ++c)
          if (f(a, b, c) != 0) nz_.push_back({a, b, c, f(a, b, c)});
    nzDirty_ = false;
  }
  return nz_;
}

std::string LieAlgebra::str() const {
  std::ostringstream os;
  os << name_ << "(dim " << dim_ << ")";
  return os.str();
}

LieAlgebra makeSu2() {
  LieAlgebra L("su2", 3);
  L.setFAntisym(0, 1, 2, Rat(1));
  return L;
}

LieAlgebra makeSo3() {
  LieAlgebra L("so3", 3);
  L.setFAntisym(0, 1, 2, Rat(1));
  return L;
}

LieAlgebra makeAbelian(int n) {
  if (n < 1) throw ConfigError("abelian(n) requires n >= 1");
  return LieAlgebra("abelian(" + std::to_string(n) + ")", n);
}

LieAlgebra directSum(const std::vector<LieAlgebra>& parts) {
  if (parts.empty()) throw ConfigError("direct sum of nothing");
  int dim = 0;
  std::string name;
  for (const auto& p : parts) {
    dim += p.dim();
    name += (name.empty() ? "" : "+") + p.name();
  }
  LieAlgebra L(name, dim);
  int off = 0;
  for (const auto& p : parts) {
    for (const auto& e : p.nonzero())
      L.setF(e.a + off, e.b + off, e.c + off, e.v);
    off += p.dim();
  }
  return L;
}

LieAlgebra makeBuiltin(const std::string& name) {
  std::vector<LieAlgebra> parts;
  std::istringstream ss(name);
  std::string tok;
  while (std::getline(ss, tok, '+')) {
    if (tok == "su2") parts.push_back(makeSu2());
    else if (tok == "so3") parts.push_back(makeSo3());
    else if (tok.rfind("abelian:", 0) == 0)
      parts.push_back(makeAbelian(std::stoi(tok.substr(8))));
    else if (tok.rfind("abelian(", 0) == 0 && tok.back() == ')')
      parts.push_back(makeAbelian(std::stoi(tok.substr(8, tok.size() - 9))));
    else throw ConfigError("unknown builtin algebra: " + tok);
  }
  if (parts.size() == 1) return parts[0];
  return directSum(parts);
}

JacobiReport checkJacobi(const LieAlgebra& L) {
  const int n = L.dim();
  Rat worst(0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          Rat s(0);
          for (int e = 0; e < n; ++e)
            s += L.f(a, b, e) * L.f(e, c, d)
               + L.f(b, c, e) * L.f(e, a, d)
               + L.f(c, a, e) * L.f(e, b, d);
          Rat v = ratAbs(s);
          if (v > worst) worst = v;
        }
  return {worst == 0, worst};
}

InvarianceReport checkInvariance(const LieAlgebra& L) {
  const int n = L.dim();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (L.f(a, b, c) != -L.f(b, a, c)) return {false};
        if (L.f(a, b, c) != -L.f(a, c, b)) return {false};
      }
  return {true};
}

static Rat jsonValueToRat(const json& v) {
  if (v.is_string()) return ratParse(v.get<std::string>());
  if (v.is_number_integer()) return Rat(v.get<long>());
  if (v.is_number_float()) {
    double d = v.get<double>();
    long den = 1'000'000'000L;
    Rat r(llround(d * double(den)), den);
    r.canonicalize();
    return r;
  }
  throw ConfigError("bad coefficient in algebra file");
}

LieAlgebra lieFromJson(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("algebra file parse error: ") + e.what());
  }
  if (!j.contains("dim")) throw ConfigError("algebra file: missing dim");
  int dim = j["dim"].get<int>();
  LieAlgebra L(j.value("name", std::string("custom")), dim);
  std::vector<char> given(size_t(dim) * dim * dim, 0);
  auto idxOf = [dim](int a, int b, int c) { return (a * dim + b) * dim + c; };
  if (j.contains("f")) {
    for (const auto& q : j["f"]) {
      if (!q.is_array() || q.size() != 4) throw ConfigError("algebra file: f entries are [a,b,c,value]");
      int a = q[0].get<int>(), b = q[1].get<int>(), c = q[2].get<int>();
      if (a < 0 || b < 0 || c < 0 || a >= dim || b >= dim || c >= dim)
        throw ConfigError("algebra file: index out of range");
      Rat v = jsonValueToRat(q[3]);
      // complete in the first two slots; reject inconsistencies
      struct P { int a, b; Rat s; } ps[2] = {{a, b, Rat(1)}, {b, a, Rat(-1)}};
      for (const auto& p : ps) {
        int ix = idxOf(p.a, p.b, c);
        Rat want = p.s * v;
        if (given[ix] && L.f(p.a, p.b, c) != want)
          throw ConfigError("algebra file: inconsistent antisymmetry at ("
                            + std::to_string(p.a) + "," + std::to_string(p.b) + "," + std::to_string(c) + ")");
        given[ix] = 1;
        L.setF(p.a, p.b, c, want);
      }
    }
  }
  return L;
}

LieAlgebra lieFromJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open algebra file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return lieFromJson(ss.str());
}

std::string lieToJson(const LieAlgebra& L) {
  json j;
  j["name"] = L.name();
  j["dim"] = L.dim();
  json fs = json::array();
  for (const auto& e : L.nonzero())
    if (e.a < e.b) fs.push_back({e.a, e.b, e.c, ratStr(e.v)});
  j["f"] = fs;
  return j.dump(2);
}

} // namespace csbv
