#include "uqgl/series.hpp"

#include <sstream>

#include "uqgl/errors.hpp"

namespace uqgl {

long Iv::addl(long a, long b) {
  if (a == kNegInf || b == kNegInf) return kNegInf;
  if (a == kPosInf || b == kPosInf) return kPosInf;
  return a + b;
}

KnownSet KnownSet::inter(const KnownSet& a, const KnownSet& b) {
  if (a.co && a.iv.empty()) return b;
  if (b.co && b.iv.empty()) return a;
  if (a.co && b.co) {
    Iv L = a.iv, R = b.iv;
    if (L.lo > R.lo) std::swap(L, R);
    if (Iv::addl(L.hi, 1) >= R.lo)  // overlapping or adjacent holes
      return out(Iv::hull(L, R));
    // disjoint holes: exact middle interval when both tails are infinite
    if (L.lo == kNegInf && R.hi == kPosInf) return in({L.hi + 1, R.lo - 1});
    return out(Iv::hull(L, R));  // conservative
  }
  if (!a.co && !b.co) return in(Iv::inter(a.iv, b.iv));
  const KnownSet& ink = a.co ? b : a;
  const KnownSet& cok = a.co ? a : b;
  Iv cut = Iv::inter(ink.iv, cok.iv);
  if (cut.empty()) return ink;
  Iv p1 = cut.lo > kNegInf ? Iv{ink.iv.lo, cut.lo - 1} : Iv{};
  Iv p2 = cut.hi < kPosInf ? Iv{cut.hi + 1, ink.iv.hi} : Iv{};
  if (p1.empty()) return in(p2);
  if (p2.empty()) return in(p1);
  // both survive: keep the one with more room (infinite side wins)
  auto len = [](Iv x) {
    if (x.lo == kNegInf || x.hi == kPosInf) return kPosInf;
    return x.hi - x.lo;
  };
  return in(len(p1) >= len(p2) ? p1 : p2);
}

// --------------------------------------------------------------------------

namespace {
void require_scalar_param(const RF& c) {
  if (c.num().uses(VarZ) || c.num().uses(VarW) || c.den().uses(VarZ) || c.den().uses(VarW))
    throw InvalidArgument("series scalar must not involve z or w: " + c.str());
}

int axis_of(int var) {
  if (var == VarZ) return 0;
  if (var == VarW) return 1;
  throw InvalidArgument("series axis must be z or w");
}
}  // namespace

CSeries CSeries::half_line(int var, int dir, int n,
                           const std::function<SuperElement(long)>& coeff) {
  if (dir != 1 && dir != -1) throw InvalidArgument("half_line: dir must be +-1");
  if (n < 0) throw InvalidArgument("half_line: negative window");
  CSeries s;
  Iv supp = dir > 0 ? Iv{0, kPosInf} : Iv{kNegInf, 0};
  KnownSet known = KnownSet::out(dir > 0 ? Iv{n + 1, kPosInf} : Iv{kNegInf, -(n + 1)});
  if (axis_of(var) == 0) {
    s.zs_ = supp;
    s.ws_ = Iv::point(0);
    s.zk_ = known;
  } else {
    s.ws_ = supp;
    s.zs_ = Iv::point(0);
    s.wk_ = known;
  }
  for (long j = 0; j <= n; ++j) {
    SuperElement e = coeff(j);
    if (e.is_zero()) continue;
    long m = dir * j;
    s.c_[axis_of(var) == 0 ? Key{m, 0} : Key{0, m}] = std::move(e);
  }
  return s;
}

CSeries CSeries::finite(const Coeffs& data) {
  CSeries s;
  for (auto& [k, e] : data) {
    if (e.is_zero()) continue;
    s.c_[k] = e;
    s.zs_ = Iv::hull(s.zs_, Iv::point(k.first));
    s.ws_ = Iv::hull(s.ws_, Iv::point(k.second));
  }
  return s;
}

CSeries CSeries::scalar_monomial(const RF& c, long zexp, long wexp) {
  require_scalar_param(c);
  Coeffs d;
  d[{zexp, wexp}] = SuperElement::scalar(c);
  return finite(d);
}

CSeries CSeries::from_scalar(const RF& r) {
  if (r.den().uses(VarZ) || r.den().uses(VarW))
    throw InvalidArgument("from_scalar: denominator involves z or w: " + r.str());
  Coeffs d;
  for (auto [m, c] : r.num().terms()) {
    long ze = m.e[VarZ], we = m.e[VarW];
    m.e[VarZ] = 0;
    m.e[VarW] = 0;
    Poly rest;
    rest.add_term(m, c);
    rest.normalize();
    RF coeff = RF(rest) / RF(r.den());
    auto key = Key{ze, we};
    auto it = d.find(key);
    if (it == d.end())
      d[key] = SuperElement::scalar(coeff);
    else
      it->second += SuperElement::scalar(coeff);
  }
  return finite(d);
}

bool CSeries::known(long a, long b) const {
  bool kz = zk_.contains(a) || !zs_.contains(a);
  bool kw = wk_.contains(b) || !ws_.contains(b);
  return kz && kw;
}

SuperElement CSeries::at(long a, long b) const {
  if (!known(a, b)) {
    std::ostringstream os;
    os << "series coefficient (" << a << "," << b << ") outside the known window";
    throw WindowError(os.str());
  }
  auto it = c_.find({a, b});
  return it == c_.end() ? SuperElement() : it->second;
}

void CSeries::prune() {
  for (auto it = c_.begin(); it != c_.end();) {
    if (it->second.is_zero() || !known(it->first.first, it->first.second))
      it = c_.erase(it);
    else
      ++it;
  }
  if (zs_.empty() || ws_.empty()) {
    // zero series canonical form
    if (!c_.empty()) throw InvalidArgument("series: data outside empty support");
    zs_ = ws_ = Iv{};
    zk_ = wk_ = KnownSet::all();
  }
}

CSeries CSeries::operator-() const {
  CSeries r = *this;
  for (auto& [k, e] : r.c_) e = -e;
  return r;
}

CSeries CSeries::operator+(const CSeries& o) const {
  CSeries r;
  r.zs_ = Iv::hull(zs_, o.zs_);
  r.ws_ = Iv::hull(ws_, o.ws_);
  // a summand with empty support imposes no constraint
  auto eff = [](const KnownSet& k, Iv supp) { return supp.empty() ? KnownSet::all() : k; };
  r.zk_ = KnownSet::inter(eff(zk_, zs_), eff(o.zk_, o.zs_));
  r.wk_ = KnownSet::inter(eff(wk_, ws_), eff(o.wk_, o.ws_));
  r.c_ = c_;
  for (auto& [k, e] : o.c_) {
    auto it = r.c_.find(k);
    if (it == r.c_.end())
      r.c_[k] = e;
    else {
      it->second += e;
      if (it->second.is_zero()) r.c_.erase(it);
    }
  }
  r.prune();
  return r;
}

CSeries CSeries::operator-(const CSeries& o) const { return *this + (-o); }

namespace {
// knowledge constraint imposed on a convolution by one factor: result modes m
// whose contributing range hits an undetermined coefficient of f are unknown
KnownSet factor_constraint(Iv fsupp, const KnownSet& fknown, Iv gsupp) {
  if (fsupp.empty() || gsupp.empty()) return KnownSet::all();
  std::vector<Iv> pieces;  // unknown pieces of f inside its support
  if (fknown.co) {
    Iv u = Iv::inter(fknown.iv, fsupp);
    if (!u.empty()) pieces.push_back(u);
  } else if (fknown.iv.empty()) {
    pieces.push_back(fsupp);
  } else {
    if (fknown.iv.lo > kNegInf) {
      Iv p1{fsupp.lo, fknown.iv.lo - 1};
      if (!p1.empty()) pieces.push_back(p1);
    }
    if (fknown.iv.hi < kPosInf) {
      Iv p2{fknown.iv.hi + 1, fsupp.hi};
      if (!p2.empty()) pieces.push_back(p2);
    }
  }
  KnownSet k = KnownSet::all();
  for (auto& p : pieces) k = KnownSet::inter(k, KnownSet::out(Iv::minkowski(p, gsupp)));
  return k;
}

KnownSet axis_mul_known(Iv fs, const KnownSet& fk, Iv gs, const KnownSet& gk, Iv hs) {
  KnownSet k = KnownSet::inter(factor_constraint(fs, fk, gs), factor_constraint(gs, gk, fs));
  // infinite contributing ranges: nothing inside the support is computable
  bool inf_lo = fs.lo == kNegInf && gs.hi == kPosInf;
  bool inf_hi = fs.hi == kPosInf && gs.lo == kNegInf;
  if ((inf_lo || inf_hi) && !fs.empty() && !gs.empty())
    k = KnownSet::inter(k, KnownSet::out(hs));
  return k;
}
}  // namespace

CSeries CSeries::operator*(const CSeries& o) const {
  if (zs_.empty() || ws_.empty() || o.zs_.empty() || o.ws_.empty()) return {};
  CSeries r;
  r.zs_ = Iv::minkowski(zs_, o.zs_);
  r.ws_ = Iv::minkowski(ws_, o.ws_);
  r.zk_ = axis_mul_known(zs_, zk_, o.zs_, o.zk_, r.zs_);
  r.wk_ = axis_mul_known(ws_, wk_, o.ws_, o.wk_, r.ws_);
  for (auto& [k1, e1] : c_)
    for (auto& [k2, e2] : o.c_) {
      Key k{k1.first + k2.first, k1.second + k2.second};
      if (!r.known(k.first, k.second)) continue;
      SuperElement prod = e1 * e2;
      if (prod.is_zero()) continue;
      auto it = r.c_.find(k);
      if (it == r.c_.end())
        r.c_[k] = std::move(prod);
      else {
        it->second += prod;
        if (it->second.is_zero()) r.c_.erase(it);
      }
    }
  r.prune();
  return r;
}

CSeries CSeries::scaled(const RF& c) const {
  require_scalar_param(c);
  if (c.is_zero()) return {};
  CSeries r = *this;
  for (auto& [k, e] : r.c_) e = e.scaled(c);
  return r;
}

CSeries CSeries::scale_arg(int var, const RF& m) const {
  require_scalar_param(m);
  if (m.is_zero()) throw InvalidArgument("scale_arg: zero scale");
  int ax = axis_of(var);
  CSeries r = *this;
  for (auto& [k, e] : r.c_) {
    long expo = ax == 0 ? k.first : k.second;
    e = e.scaled(m.pow(static_cast<int>(expo)));
  }
  return r;
}

CSeries CSeries::shifted(long dz, long dw) const {
  CSeries r;
  r.zs_ = zs_.shifted(dz);
  r.ws_ = ws_.shifted(dw);
  r.zk_ = zk_;
  r.wk_ = wk_;
  if (!r.zk_.iv.empty()) r.zk_.iv = r.zk_.iv.shifted(dz);
  if (!r.wk_.iv.empty()) r.wk_.iv = r.wk_.iv.shifted(dw);
  for (auto& [k, e] : c_) r.c_[{k.first + dz, k.second + dw}] = e;
  return r;
}

CSeries CSeries::rewritten(const CancelTable& t) const {
  CSeries r = *this;
  r.c_.clear();
  for (auto& [k, e] : c_) {
    SuperElement re = rew(e, t);
    if (!re.is_zero()) r.c_[k] = std::move(re);
  }
  return r;
}

Iv CSeries::known_modes(int var) const {
  int ax = axis_of(var);
  Iv supp = ax == 0 ? zs_ : ws_;
  KnownSet k = ax == 0 ? zk_ : wk_;
  if (supp.empty()) return {};
  std::vector<Iv> pieces;
  if (k.co) {
    Iv cut = Iv::inter(k.iv, supp);
    if (cut.empty())
      pieces.push_back(supp);
    else {
      if (cut.lo > kNegInf) pieces.push_back({supp.lo, cut.lo - 1});
      if (cut.hi < kPosInf) pieces.push_back({cut.hi + 1, supp.hi});
    }
  } else {
    pieces.push_back(Iv::inter(k.iv, supp));
  }
  Iv out;
  for (auto& p : pieces) {
    if (p.empty()) continue;
    if (!p.finite())
      throw InvalidArgument("known_modes: infinitely many determined coefficients");
    out = Iv::hull(out, p);
  }
  return out;
}

CSeries CSeries::inverted(int var, const SuperElement& a0inv) const {
  int ax = axis_of(var);
  Iv supp = ax == 0 ? zs_ : ws_;
  Iv other = ax == 0 ? ws_ : zs_;
  if (!(other == Iv::point(0)))
    throw InvalidArgument("inverted: series must be univariate on the chosen axis");
  int dir;
  if (supp.lo == 0 && supp.hi == kPosInf)
    dir = 1;
  else if (supp.hi == 0 && supp.lo == kNegInf)
    dir = -1;
  else
    throw InvalidArgument("inverted: support must be a half line from 0");
  Iv win = known_modes(var);
  if (win.empty() || !win.contains(0))
    throw WindowError("inverted: leading coefficient not determined");
  long n = dir > 0 ? win.hi : -win.lo;
  auto get = [&](long j) {  // coefficient of x^{dir*j}
    auto it = c_.find(ax == 0 ? Key{dir * j, 0} : Key{0, dir * j});
    return it == c_.end() ? SuperElement() : it->second;
  };
  std::vector<SuperElement> b(static_cast<size_t>(n) + 1);
  b[0] = a0inv;
  for (long j = 1; j <= n; ++j) {
    SuperElement acc;
    for (long k = 1; k <= j; ++k) acc += get(k) * b[static_cast<size_t>(j - k)];
    b[static_cast<size_t>(j)] = -(a0inv * acc);
  }
  return half_line(var, dir, static_cast<int>(n),
                   [&](long j) { return b[static_cast<size_t>(j)]; });
}

MatrixCurrent MatrixCurrent::mul(const MatrixCurrent& o) const {
  MatrixCurrent r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      CSeries acc;
      for (int k = 0; k < 2; ++k) acc = acc + e[i][k] * o.e[k][j];
      r.e[i][j] = acc;
    }
  return r;
}

}  // namespace uqgl
