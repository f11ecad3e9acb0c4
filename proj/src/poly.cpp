#include "uqgl/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "uqgl/errors.hpp"

namespace uqgl {

const char* var_name(int v) {
  static const char* names[kNumVars] = {"q", "g", "z", "w", "g1", "g2", "g3"};
  if (v < 0 || v >= kNumVars) throw InvalidArgument("var_name: bad index");
  return names[v];
}

int Monomial::degree() const {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

bool Monomial::is_unit() const {
  for (auto x : e)
    if (x) return false;
  return true;
}

bool Monomial::divides(const Monomial& o) const {
  for (int i = 0; i < kNumVars; ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kNumVars; ++i) r.e[i] = static_cast<int16_t>(e[i] + o.e[i]);
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kNumVars; ++i) r.e[i] = static_cast<int16_t>(e[i] - o.e[i]);
  return r;
}

bool mono_less(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  for (int i = kNumVars - 1; i >= 0; --i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
  return false;
}

Poly::Poly(const mpq_class& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

Poly Poly::constant(long num, long den) { return Poly(mpq_class(num, den)); }

Poly Poly::variable(int v, int exp) {
  if (v < 0 || v >= kNumVars) throw InvalidArgument("Poly::variable: bad index");
  if (exp < 0) throw InvalidArgument("Poly::variable: negative exponent");
  Poly p;
  if (exp == 0) return Poly(mpq_class(1));
  Monomial m;
  m.e[v] = static_cast<int16_t>(exp);
  p.terms_.push_back({m, mpq_class(1)});
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_unit());
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_[0].first.is_unit() && terms_[0].second == 1;
}

const Poly::Term& Poly::leading() const {
  if (terms_.empty()) throw InvalidArgument("Poly::leading on zero");
  return terms_.front();
}

int Poly::degree_in(int v) const {
  int d = 0;
  for (auto& [m, c] : terms_) d = std::max<int>(d, m.e[v]);
  return d;
}

int Poly::total_degree() const {
  int d = 0;
  for (auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Poly::uses(int v) const {
  for (auto& [m, c] : terms_)
    if (m.e[v]) return true;
  return false;
}

int Poly::max_var() const {
  int mv = -1;
  for (auto& [m, c] : terms_)
    for (int i = kNumVars - 1; i > mv; --i)
      if (m.e[i]) mv = i;
  return mv;
}

void Poly::add_term(const Monomial& m, const mpq_class& c) { terms_.push_back({m, c}); }

void Poly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return mono_less(b.first, a.first); });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(t);
    if (!out.empty() && out.back().second == 0) out.pop_back();
  }
  terms_ = std::move(out);
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (a == terms_.end())
      r.terms_.push_back(*b++);
    else if (b == o.terms_.end())
      r.terms_.push_back(*a++);
    else if (a->first == b->first) {
      mpq_class c = a->second + b->second;
      if (c != 0) r.terms_.push_back({a->first, c});
      ++a, ++b;
    } else if (mono_less(b->first, a->first))
      r.terms_.push_back(*a++);
    else
      r.terms_.push_back(*b++);
  }
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::map<Monomial, mpq_class, decltype(&mono_less)> acc(&mono_less);
  for (auto& [ma, ca] : terms_)
    for (auto& [mb, cb] : o.terms_) acc[ma * mb] += ca * cb;
  Poly r;
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (it->second != 0) r.terms_.push_back({it->first, it->second});
  return r;
}

Poly& Poly::operator+=(const Poly& o) { return *this = *this + o; }
Poly& Poly::operator-=(const Poly& o) { return *this = *this - o; }
Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::scaled(const mpq_class& c) const {
  if (c == 0) return {};
  Poly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

Poly Poly::mul_term(const Monomial& m, const mpq_class& c) const {
  if (c == 0) return {};
  Poly r;
  r.terms_.reserve(terms_.size());
  for (auto& [mm, cc] : terms_) r.terms_.push_back({mm * m, cc * c});
  return r;
}

Poly Poly::pow(int n) const {
  if (n < 0) throw InvalidArgument("Poly::pow: negative exponent");
  Poly r = Poly(mpq_class(1));
  Poly base = *this;
  while (n) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

std::optional<Poly> Poly::try_divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) return std::nullopt;
  Poly rem = a, quot;
  const auto& [lbm, lbc] = b.leading();
  while (!rem.is_zero()) {
    const auto& [lm, lc] = rem.leading();
    if (!lbm.divides(lm)) return std::nullopt;
    Monomial qm = lm / lbm;
    mpq_class qc = lc / lbc;
    quot.terms_.push_back({qm, qc});
    rem -= b.mul_term(qm, qc);
  }
  // quotient terms were appended in strictly decreasing order already
  return quot;
}

std::pair<mpq_class, Poly> Poly::content_and_primitive() const {
  if (is_zero()) return {mpq_class(0), Poly{}};
  mpz_class num_gcd = 0, den_lcm = 1;
  for (auto& [m, c] : terms_) {
    mpz_class n = c.get_num(), d = c.get_den();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  mpq_class content(num_gcd, den_lcm);
  content.canonicalize();
  if (leading().second < 0) content = -content;
  Poly prim = scaled(mpq_class(1) / content);
  return {content, prim};
}

mpq_class Poly::eval(const std::array<mpq_class, kNumVars>& point) const {
  mpq_class acc = 0;
  for (auto& [m, c] : terms_) {
    mpq_class t = c;
    for (int i = 0; i < kNumVars; ++i)
      for (int k = 0; k < m.e[i]; ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : terms_) {
    mpq_class a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool unit_mono = m.is_unit();
    if (a != 1 || unit_mono) {
      os << a.get_str();
      if (!unit_mono) os << "*";
    }
    bool firstv = true;
    for (int i = 0; i < kNumVars; ++i) {
      if (!m.e[i]) continue;
      if (!firstv) os << "*";
      firstv = false;
      os << var_name(i);
      if (m.e[i] != 1) os << "^" << m.e[i];
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// gcd over Z[vars] via primitive pseudo-remainder sequences
namespace {

using ZTerm = std::pair<Monomial, mpz_class>;
using ZP = std::vector<ZTerm>;  // sorted descending, no zeros

ZP znorm(ZP t) {
  std::sort(t.begin(), t.end(),
            [](const ZTerm& a, const ZTerm& b) { return mono_less(b.first, a.first); });
  ZP out;
  out.reserve(t.size());
  for (auto& x : t) {
    if (!out.empty() && out.back().first == x.first)
      out.back().second += x.second;
    else
      out.push_back(x);
    if (!out.empty() && out.back().second == 0) out.pop_back();
  }
  return out;
}

ZP zneg(ZP a) {
  for (auto& t : a) t.second = -t.second;
  return a;
}

ZP zadd(const ZP& a, const ZP& b) {
  ZP r;
  r.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (i == a.end())
      r.push_back(*j++);
    else if (j == b.end())
      r.push_back(*i++);
    else if (i->first == j->first) {
      mpz_class c = i->second + j->second;
      if (c != 0) r.push_back({i->first, c});
      ++i, ++j;
    } else if (mono_less(j->first, i->first))
      r.push_back(*i++);
    else
      r.push_back(*j++);
  }
  return r;
}

ZP zsub(const ZP& a, const ZP& b) { return zadd(a, zneg(b)); }

ZP zmul(const ZP& a, const ZP& b) {
  ZP r;
  r.reserve(a.size() * b.size());
  for (auto& [ma, ca] : a)
    for (auto& [mb, cb] : b) r.push_back({ma * mb, ca * cb});
  return znorm(std::move(r));
}

int zmax_var(const ZP& a) {
  int mv = -1;
  for (auto& [m, c] : a)
    for (int i = kNumVars - 1; i > mv; --i)
      if (m.e[i]) mv = i;
  return mv;
}

int zdeg_in(const ZP& a, int v) {
  int d = 0;
  for (auto& [m, c] : a) d = std::max<int>(d, m.e[v]);
  return d;
}

// coefficients of a as a univariate polynomial in v; index = exponent
std::vector<ZP> zcoeffs_in(const ZP& a, int v) {
  std::vector<ZP> out(static_cast<size_t>(zdeg_in(a, v)) + 1);
  for (auto& [m, c] : a) {
    Monomial rest = m;
    int k = m.e[v];
    rest.e[v] = 0;
    out[static_cast<size_t>(k)].push_back({rest, c});
  }
  for (auto& p : out) p = znorm(std::move(p));
  return out;
}


// exact division; aborts the program if not exact (internal invariant)
ZP zdivide_exact(const ZP& a, const ZP& b) {
  if (a.empty()) return {};
  ZP rem = a, quot;
  const Monomial& lbm = b.front().first;
  const mpz_class& lbc = b.front().second;
  while (!rem.empty()) {
    const Monomial& lm = rem.front().first;
    const mpz_class& lc = rem.front().second;
    if (!lbm.divides(lm)) throw InvalidArgument("zdivide_exact: not divisible");
    mpz_class qc;
    mpz_class r;
    mpz_fdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), lc.get_mpz_t(), lbc.get_mpz_t());
    if (r != 0) throw InvalidArgument("zdivide_exact: coefficient not divisible");
    Monomial qm = lm / lbm;
    quot.push_back({qm, qc});
    ZP prod;
    prod.reserve(b.size());
    for (auto& [mm, cc] : b) prod.push_back({mm * qm, cc * qc});
    rem = zsub(rem, znorm(std::move(prod)));
  }
  return znorm(std::move(quot));
}

mpz_class zint_content(const ZP& a) {
  mpz_class g = 0;
  for (auto& [m, c] : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}


ZP make_positive(ZP a) {
  if (!a.empty() && a.front().second < 0) return zneg(std::move(a));
  return a;
}

ZP zgcd(const ZP& A, const ZP& B);

// gcd of the univariate-in-v coefficient list
ZP zcontent_in(const ZP& a, int v) {
  ZP g;
  for (auto& c : zcoeffs_in(a, v))
    if (!c.empty()) g = zgcd(g, c);
  return g;
}

// pseudo-remainder of A by B w.r.t. variable v (deg_v A >= deg_v B)
ZP zprem(ZP A, const ZP& B, int v) {
  int db = zdeg_in(B, v);
  auto bcoeffs = zcoeffs_in(B, v);
  const ZP& lcB = bcoeffs.back();
  while (!A.empty()) {
    int da = zdeg_in(A, v);
    if (da < db) break;
    auto acoeffs = zcoeffs_in(A, v);
    const ZP& lcA = acoeffs.back();
    // A <- lcB * A - lcA * v^(da-db) * B
    ZP shifted;
    shifted.reserve(B.size());
    for (auto [m, c] : B) {
      m.e[v] = static_cast<int16_t>(m.e[v] + da - db);
      shifted.push_back({m, c});
    }
    A = zsub(zmul(lcB, A), zmul(lcA, znorm(std::move(shifted))));
  }
  return A;
}

ZP zgcd(const ZP& A, const ZP& B) {
  if (A.empty()) return make_positive(B);
  if (B.empty()) return make_positive(A);
  int v = std::max(zmax_var(A), zmax_var(B));
  if (v < 0) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), A.front().second.get_mpz_t(), B.front().second.get_mpz_t());
    return {{Monomial{}, g}};
  }
  if (!std::any_of(A.begin(), A.end(), [&](const ZTerm& t) { return t.first.e[v] != 0; }))
    return zgcd(A, zcontent_in(B, v));
  if (!std::any_of(B.begin(), B.end(), [&](const ZTerm& t) { return t.first.e[v] != 0; }))
    return zgcd(zcontent_in(A, v), B);

  ZP contA = zcontent_in(A, v), contB = zcontent_in(B, v);
  ZP d = zgcd(contA, contB);
  ZP U = zdivide_exact(A, contA), V = zdivide_exact(B, contB);
  if (zdeg_in(U, v) < zdeg_in(V, v)) std::swap(U, V);
  while (true) {
    ZP R = zprem(U, V, v);
    if (R.empty()) break;
    // nonzero remainder free of v: the v-primitive U,V share no v-part, so
    // the whole gcd is d
    if (zdeg_in(R, v) == 0) return d;
    U = std::move(V);
    V = zdivide_exact(R, zcontent_in(R, v));
  }
  return make_positive(zmul(d, zdivide_exact(V, zcontent_in(V, v))));
}

ZP to_zp(const Poly& p) {
  // clear denominators and strip integer content: primitive integer image
  if (p.is_zero()) return {};
  mpz_class den_lcm = 1;
  for (auto& [m, c] : p.terms())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  ZP r;
  r.reserve(p.terms().size());
  for (auto& [m, c] : p.terms()) {
    mpz_class v = c.get_num() * (den_lcm / c.get_den());
    r.push_back({m, v});
  }
  std::sort(r.begin(), r.end(),
            [](const ZTerm& a, const ZTerm& b) { return mono_less(b.first, a.first); });
  mpz_class cont = zint_content(r);
  if (r.front().second < 0) cont = -cont;
  for (auto& t : r) t.second /= cont;
  return r;
}

Poly from_zp(const ZP& a) {
  Poly p;
  for (auto& [m, c] : a) p.add_term(m, mpq_class(c));
  p.normalize();
  return p;
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return from_zp(to_zp(b));
  if (b.is_zero()) return from_zp(to_zp(a));
  if (a.is_constant() || b.is_constant()) return Poly(mpq_class(1));
  return from_zp(zgcd(to_zp(a), to_zp(b)));
}

Poly Poly::lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Poly g = gcd(a, b);
  auto q = try_divide(a, g);
  if (!q) throw InvalidArgument("Poly::lcm: gcd does not divide");
  return *q * b;
}

}  // namespace uqgl
