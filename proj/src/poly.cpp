#include "horn/poly.hpp"

#include <sstream>

#include "horn/errors.hpp"

namespace horn {

MultiPoly MultiPoly::constant(Index nvars, const Rat& c) {
  MultiPoly p(nvars);
  p.addTerm(Exponents(static_cast<size_t>(nvars), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(Index nvars, Index i) {
  if (i < 0 || i >= nvars) throw InputError("variable index out of range");
  MultiPoly p(nvars);
  Exponents e(static_cast<size_t>(nvars), 0);
  e[static_cast<size_t>(i)] = 1;
  p.addTerm(e, Rat(1));
  return p;
}

bool MultiPoly::isConstant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (long e : terms_.begin()->first)
    if (e != 0) return false;
  return true;
}

Rat MultiPoly::constantValue() const {
  const Exponents zero(static_cast<size_t>(nvars_), 0);
  const auto it = terms_.find(zero);
  return it == terms_.end() ? Rat(0) : it->second;
}

void MultiPoly::addTerm(const Exponents& exps, const Rat& coeff) {
  if (static_cast<Index>(exps.size()) != nvars_) throw ShapeError("exponent vector length mismatch");
  for (long e : exps)
    if (e < 0) throw InputError("negative exponent in polynomial term");
  if (coeff.isZero()) return;
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.isZero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw ShapeError("adding polynomials in different rings");
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.addTerm(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw ShapeError("multiplying polynomials in different rings");
  MultiPoly r(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(ea);
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r.addTerm(e, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::operator*(const Rat& c) const {
  MultiPoly r(nvars_);
  if (c.isZero()) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

Rat MultiPoly::eval(const RatVector& point) const {
  if (point.size() != nvars_) throw ShapeError("evaluation point length mismatch");
  Rat acc(0);
  for (const auto& [e, c] : terms_) {
    Rat term = c;
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) term *= horn::pow(point(static_cast<Index>(i)), e[i]);
    acc += term;
  }
  return acc;
}

MultiPoly MultiPoly::partial(Index var) const {
  if (var < 0 || var >= nvars_) throw InputError("variable index out of range");
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    const long k = e[static_cast<size_t>(var)];
    if (k == 0) continue;
    Exponents d(e);
    d[static_cast<size_t>(var)] = k - 1;
    r.addTerm(d, c * Rat(k));
  }
  return r;
}

MultiPoly MultiPoly::pow(long e) const {
  if (e < 0) throw InputError("negative polynomial power");
  MultiPoly acc = constant(nvars_, Rat(1));
  MultiPoly sq = *this;
  while (e != 0) {
    if (e & 1) acc = acc * sq;
    sq = (e >>= 1) != 0 ? sq * sq : sq;
  }
  return acc;
}

long MultiPoly::degreeIn(Index var) const {
  if (var < 0 || var >= nvars_) throw InputError("variable index out of range");
  long d = -1;
  for (const auto& [e, c] : terms_)
    if (e[static_cast<size_t>(var)] > d) d = e[static_cast<size_t>(var)];
  return terms_.empty() ? -1 : d;
}

long MultiPoly::totalDegree() const {
  if (terms_.empty()) return -1;
  // Grlex order: the last term has maximal total degree.
  long d = 0;
  for (long e : terms_.rbegin()->first) d += e;
  return d;
}

Index MultiPoly::soleVariable() const {
  Index found = -1;
  for (const auto& [e, c] : terms_)
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (found >= 0 && found != static_cast<Index>(i))
        throw InputError("polynomial is not univariate");
      found = static_cast<Index>(i);
    }
  return found;
}

std::vector<MultiPoly> MultiPoly::coefficientsIn(Index var) const {
  const long d = degreeIn(var);
  std::vector<MultiPoly> out(static_cast<size_t>(d < 0 ? 0 : d) + 1, MultiPoly(nvars_));
  for (const auto& [e, c] : terms_) {
    Exponents rest(e);
    const long k = rest[static_cast<size_t>(var)];
    rest[static_cast<size_t>(var)] = 0;
    out[static_cast<size_t>(k)].addTerm(rest, c);
  }
  return out;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images, Index newVars) const {
  if (static_cast<Index>(images.size()) != nvars_) throw ShapeError("substitute: one image per variable required");
  for (const auto& im : images)
    if (im.vars() != newVars) throw ShapeError("substitute: image in wrong ring");
  MultiPoly acc(newVars);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = MultiPoly::constant(newVars, c);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) term = term * images[i].pow(e[i]);
    acc = acc + term;
  }
  return acc;
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Print leading (highest) term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rat& c = it->second;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const Rat a = abs(c);
    bool hasVar = false;
    for (long e : it->first)
      if (e != 0) hasVar = true;
    if (!hasVar || a != Rat(1)) os << a.str();
    bool star = !hasVar || a != Rat(1);
    for (size_t i = 0; i < it->first.size(); ++i) {
      const long e = it->first[i];
      if (e == 0) continue;
      if (star) os << "*";
      star = true;
      if (i < names.size())
        os << names[i];
      else
        os << "x" << i;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

Exponents monomialContent(const MultiPoly& p) {
  Exponents mins(static_cast<size_t>(p.vars()), 0);
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (first) {
      mins = e;
      first = false;
      continue;
    }
    for (size_t i = 0; i < mins.size(); ++i)
      if (e[i] < mins[i]) mins[i] = e[i];
  }
  return mins;
}

MultiPoly removeMonomialContent(const MultiPoly& p) {
  if (p.isZero()) return p;
  const Exponents mins = monomialContent(p);
  MultiPoly r(p.vars());
  for (const auto& [e, c] : p.terms()) {
    Exponents d(e);
    for (size_t i = 0; i < d.size(); ++i) d[i] -= mins[i];
    r.addTerm(d, c);
  }
  return r;
}

MultiPoly integerPrimitivePart(const MultiPoly& p) {
  if (p.isZero()) return p;
  // Multiply by the lcm of denominators, divide by the gcd of numerators.
  Int den(1), num(0);
  for (const auto& [e, c] : p.terms()) den = divExact(den * c.den(), gcd(den, c.den()));
  for (const auto& [e, c] : p.terms()) num = gcd(num, c.num() * divExact(den, c.den()));
  return p * Rat(den, abs(num));
}

namespace {

// Dense univariate view over Rat coefficients, index = power.
std::vector<Rat> denseCoeffs(const MultiPoly& p, Index var) {
  const auto polys = p.coefficientsIn(var);
  std::vector<Rat> out;
  out.reserve(polys.size());
  for (const auto& q : polys) {
    if (!q.isConstant()) throw InputError("polynomial is not univariate");
    out.push_back(q.constantValue());
  }
  while (out.size() > 1 && out.back().isZero()) out.pop_back();
  return out;
}

MultiPoly fromDense(const std::vector<Rat>& cs, Index nvars, Index var) {
  MultiPoly p(nvars);
  Exponents e(static_cast<size_t>(nvars), 0);
  for (size_t k = 0; k < cs.size(); ++k) {
    e[static_cast<size_t>(var)] = static_cast<long>(k);
    p.addTerm(e, cs[k]);
  }
  return p;
}

bool denseIsZero(const std::vector<Rat>& a) { return a.size() == 1 && a[0].isZero(); }

// Remainder of dense univariate division.
std::vector<Rat> denseMod(std::vector<Rat> a, const std::vector<Rat>& b) {
  const size_t db = b.size() - 1;
  const Rat lcInv = inverse(b.back());
  while (!denseIsZero(a) && a.size() - 1 >= db && a.size() > 1) {
    const size_t shift = a.size() - 1 - db;
    const Rat f = a.back() * lcInv;
    for (size_t i = 0; i <= db; ++i) a[shift + i] -= f * b[i];
    while (a.size() > 1 && a.back().isZero()) a.pop_back();
    if (db == 0) break;
  }
  if (db == 0) return {Rat(0)};  // nonzero constant divides everything
  return a;
}

}  // namespace

MultiPoly gcdUnivariate(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars() != b.vars()) throw ShapeError("gcd of polynomials in different rings");
  const Index va = a.soleVariable(), vb = b.soleVariable();
  if (va >= 0 && vb >= 0 && va != vb) throw InputError("polynomials in different variables");
  const Index var = va >= 0 ? va : (vb >= 0 ? vb : 0);
  std::vector<Rat> x = denseCoeffs(a, var), y = denseCoeffs(b, var);
  while (!denseIsZero(y)) {
    std::vector<Rat> r = denseMod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  if (denseIsZero(x)) return MultiPoly(a.vars());  // gcd(0, 0) = 0
  const Rat lcInv = inverse(x.back());
  for (Rat& c : x) c *= lcInv;
  return fromDense(x, a.vars(), var);
}

MultiPoly squarefreePart(const MultiPoly& a) {
  const Index var = a.soleVariable();
  if (a.isZero()) return a;
  if (var < 0) return MultiPoly::constant(a.vars(), Rat(1));
  const MultiPoly g = gcdUnivariate(a, a.partial(var));
  MultiPoly sf = polyDivExact(a, g);
  // Monic normalization.
  const auto cs = denseCoeffs(sf, var);
  return sf * inverse(cs.back());
}

MultiPoly polyDivExact(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars() != b.vars()) throw ShapeError("dividing polynomials in different rings");
  if (b.isZero()) throw Error("polynomial division by zero");
  MultiPoly q(a.vars()), r = a;
  const auto& ltB = *b.terms().rbegin();
  while (!r.isZero()) {
    const auto& ltR = *r.terms().rbegin();
    Exponents e(ltR.first);
    for (size_t i = 0; i < e.size(); ++i) {
      e[i] -= ltB.first[i];
      if (e[i] < 0) throw Error("polynomial division is not exact");
    }
    MultiPoly t(a.vars());
    t.addTerm(e, ltR.second / ltB.second);
    q = q + t;
    r = r - t * b;
  }
  return q;
}

MultiPoly sylvesterResultant(const MultiPoly& a, const MultiPoly& b, Index elim) {
  const long da = a.degreeIn(elim), db = b.degreeIn(elim);
  if (da < 1 || db < 1) throw InputError("resultant requires positive degree in the eliminated variable");
  const auto ca = a.coefficientsIn(elim), cb = b.coefficientsIn(elim);
  const Index nvars = a.vars();
  const size_t n = static_cast<size_t>(da + db);
  const MultiPoly zero(nvars);
  std::vector<std::vector<MultiPoly>> S(n, std::vector<MultiPoly>(n, zero));
  // db rows of a's coefficients (descending), then da rows of b's.
  for (long r = 0; r < db; ++r)
    for (long j = 0; j <= da; ++j) S[static_cast<size_t>(r)][static_cast<size_t>(r + j)] = ca[static_cast<size_t>(da - j)];
  for (long r = 0; r < da; ++r)
    for (long j = 0; j <= db; ++j) S[static_cast<size_t>(db + r)][static_cast<size_t>(r + j)] = cb[static_cast<size_t>(db - j)];

  // Bareiss elimination lifted to polynomial entries; divisions are exact.
  MultiPoly denom = MultiPoly::constant(nvars, Rat(1));
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (S[k][k].isZero()) {
      size_t p = n;
      for (size_t i = k + 1; i < n; ++i)
        if (!S[i][k].isZero()) {
          p = i;
          break;
        }
      if (p == n) return zero;
      std::swap(S[k], S[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j)
        S[i][j] = polyDivExact(S[i][j] * S[k][k] - S[i][k] * S[k][j], denom);
      S[i][k] = zero;
    }
    denom = S[k][k];
  }
  return sign > 0 ? S[n - 1][n - 1] : -S[n - 1][n - 1];
}

}  // namespace horn
