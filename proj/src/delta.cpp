#include "uqgl/delta.hpp"

#include <optional>

#include "uqgl/errors.hpp"

namespace uqgl {

namespace {

int checked_int(long v) {
  if (v < -(1L << 30) || v > (1L << 30)) throw InvalidArgument("exponent overflow");
  return static_cast<int>(v);
}

Monomial strip_zw(const Monomial& m) {
  Monomial r = m;
  r.e[VarZ] = 0;
  r.e[VarW] = 0;
  return r;
}

// square root of a rational-times-monomial function, when it is one
std::optional<RF> monomial_sqrt(const RF& r) {
  if (r.num().terms().size() != 1 || r.den().terms().size() != 1) return std::nullopt;
  const auto& [nm, nc] = r.num().terms()[0];
  const auto& [dm, dc] = r.den().terms()[0];
  Monomial half;
  for (int v = 0; v < kNumVars; ++v) {
    int e = nm.e[v] - dm.e[v];
    if (e % 2 != 0) return std::nullopt;
    half.e[v] = static_cast<int16_t>(e / 2);
  }
  mpq_class c = nc / dc;
  if (sgn(c) < 0) return std::nullopt;
  mpz_class cn = c.get_num(), cd = c.get_den(), rn, rd;
  if (!mpz_root(rn.get_mpz_t(), cn.get_mpz_t(), 2)) return std::nullopt;
  if (!mpz_root(rd.get_mpz_t(), cd.get_mpz_t(), 2)) return std::nullopt;
  if (rn * rn != cn || rd * rd != cd) return std::nullopt;
  Poly p;
  p.add_term(half, mpq_class(rn) / mpq_class(rd));
  p.normalize();
  return RF(p);
}

// roots of c0 + c1 t + ... + cd t^d over the scalar field, provided they are
// recoverable by inspecting the terms of the root sum (degree <= 2)
std::vector<RF> monomial_roots(const std::vector<RF>& c) {
  int d = static_cast<int>(c.size()) - 1;
  if (d == 0) return {};
  if (d == 1) return {-(c[0] / c[1])};
  if (d != 2) throw DomainError("pole of z,w-degree " + std::to_string(d) + " is not supported");
  RF S = -(c[1] / c[2]), P = c[0] / c[2];
  std::vector<RF> candidates;
  for (const auto& [m, q] : S.num().terms()) {
    Poly t;
    t.add_term(m, q);
    t.normalize();
    candidates.push_back(RF(t) / RF(S.den()));
  }
  if (S.is_zero()) {
    if (auto s = monomial_sqrt(-P)) candidates.push_back(*s);
  }
  candidates.push_back(S * RF::constant(1, 2));  // catches repeated roots
  for (const RF& m1 : candidates) {
    RF m2 = S - m1;
    if (m1 * m2 == P) {
      if (m1 == m2) throw DomainError("repeated pole z = " + m1.str() + " * w");
      return {m1, m2};
    }
  }
  throw DomainError("cannot split the quadratic pole " + c[2].str() + "*t^2 + " + c[1].str() +
                    "*t + " + c[0].str());
}

}  // namespace

std::map<long, RF> laurent_z(const RF& p) {
  if (p.is_zero()) return {};
  int k = -1;
  for (const auto& [m, q] : p.den().terms()) {
    if (m.e[VarW] != 0) throw DomainError("not Laurent in z: denominator " + p.den().str());
    if (k == -1)
      k = m.e[VarZ];
    else if (m.e[VarZ] != k)
      throw DomainError("not Laurent in z: denominator " + p.den().str());
  }
  Poly v;
  for (const auto& [m, q] : p.den().terms()) v.add_term(strip_zw(m), q);
  v.normalize();
  std::map<long, RF> out;
  for (const auto& [m, q] : p.num().terms()) {
    if (m.e[VarW] != 0) throw DomainError("not Laurent in z: numerator " + p.num().str());
    Poly t;
    t.add_term(strip_zw(m), q);
    t.normalize();
    RF c = RF(t, v);
    auto [it, fresh] = out.try_emplace(m.e[VarZ] - k, c);
    if (!fresh) it->second += c;
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

RF DeltaTerm::coeff(long a, long b) const {
  auto it = zpayload.find(a + b);
  if (it == zpayload.end()) return RF();
  return it->second * mu.pow(checked_int(b));
}

std::vector<DeltaTerm> delta_expand(const RF& r) {
  if (r.is_zero()) return {};
  const Poly& den = r.den();
  // profile the denominator as sum_k c_k z^k w^{h-k}
  int h = -1, kmin = 0, kmax = 0;
  std::map<int, Poly> by_z;
  for (const auto& [m, q] : den.terms()) {
    int deg = m.e[VarZ] + m.e[VarW];
    if (h == -1) {
      h = deg;
      kmin = kmax = m.e[VarZ];
    } else if (deg != h) {
      throw DomainError("denominator is not z,w-homogeneous: " + den.str());
    }
    kmin = std::min<int>(kmin, m.e[VarZ]);
    kmax = std::max<int>(kmax, m.e[VarZ]);
    by_z[m.e[VarZ]].add_term(strip_zw(m), q);
  }
  int s = kmin, d = kmax - kmin, t = h - kmax;
  if (d == 0) return {};  // Laurent: both expansions coincide
  std::vector<RF> c(d + 1);
  for (auto& [k, p] : by_z) {
    p.normalize();
    c[k - s] = RF(p);
  }
  std::vector<RF> mu = monomial_roots(c);
  RF lead = c[d];
  std::vector<DeltaTerm> out;
  for (size_t i = 0; i < mu.size(); ++i) {
    RF prod = RF::constant(1);
    for (size_t j = 0; j < mu.size(); ++j)
      if (j != i) prod *= mu[i] - mu[j];
    RF a_w = RF(r.num()).substitute(VarZ, mu[i] * rf_w()) / (lead * prod) *
             rf_w(-(t + d - 1));
    RF payload = a_w.substitute(VarW, rf_z() * mu[i].inverse()) * rf_z(-(s + 1));
    DeltaTerm term{mu[i], laurent_z(payload)};
    if (!term.is_zero()) out.push_back(std::move(term));
  }
  return out;
}

bool DeltaSeries::known(long a, long b) const {
  for (const auto& [p, cp] : zpayload) {
    long m = a + b - p;
    bool ok = opvar == VarZ ? op.known(m, 0) : op.known(0, m);
    if (!ok) return false;
  }
  return true;
}

SuperElement DeltaSeries::at(long a, long b) const {
  SuperElement out;
  for (const auto& [p, cp] : zpayload) {
    long m = a + b - p;
    // z^p delta(mu w/z) S: matching exponents forces the delta index k = p-a
    // when S rides on w, but k = b when S rides on z
    long k = opvar == VarZ ? b : p - a;
    SuperElement sm = opvar == VarZ ? op.at(m, 0) : op.at(0, m);
    out += sm.scaled(cp * mu.pow(checked_int(k)));
  }
  return out;
}

}  // namespace uqgl
