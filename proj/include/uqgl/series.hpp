#pragma once
#include <functional>
#include <map>

#include "uqgl/superfree.hpp"

namespace uqgl {

// integer intervals with infinities; empty when lo > hi
inline constexpr long kNegInf = -(1L << 40);
inline constexpr long kPosInf = (1L << 40);

struct Iv {
  long lo = 1, hi = 0;
  static Iv all() { return {kNegInf, kPosInf}; }
  static Iv of(long l, long h) { return {l, h}; }
  static Iv point(long p) { return {p, p}; }
  bool empty() const { return lo > hi; }
  bool contains(long m) const { return lo <= m && m <= hi; }
  bool finite() const { return empty() || (lo > kNegInf && hi < kPosInf); }
  static Iv inter(Iv a, Iv b) { return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)}; }
  static Iv hull(Iv a, Iv b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
  }
  // inf-saturating a + b
  static long addl(long a, long b);
  static Iv minkowski(Iv a, Iv b) {
    if (a.empty() || b.empty()) return {};
    return {addl(a.lo, b.lo), addl(a.hi, b.hi)};
  }
  Iv shifted(long d) const { return empty() ? *this : Iv{addl(lo, d), addl(hi, d)}; }
  bool operator==(const Iv&) const = default;
};

// subset of Z tracking which series coefficients are determined: either an
// interval or the complement of one. Intersection is exact where possible and
// otherwise a conservative subset — we may under-claim knowledge, never over-
struct KnownSet {
  bool co = true;  // true: complement of iv; false: iv itself
  Iv iv{};         // default co+empty = everything known

  static KnownSet all() { return {true, {}}; }
  static KnownSet none() { return {false, {}}; }
  static KnownSet in(Iv i) { return {false, i}; }
  static KnownSet out(Iv i) { return {true, i}; }
  bool contains(long m) const { return co ? !iv.contains(m) : iv.contains(m); }
  bool is_all() const { return co && iv.empty(); }
  static KnownSet inter(const KnownSet& a, const KnownSet& b);
  bool operator==(const KnownSet&) const = default;
};

// doubly-graded operator-valued series in (z, w). Coefficients live in the
// free superalgebra; the scalar field of each coefficient must not involve
// z or w. Per axis it tracks a support interval (coefficients certainly zero
// outside) and a KnownSet (coefficients determined inside). Products compute
// the result's KnownSet from both factors so that no coefficient is ever
// claimed beyond what the data determines.
class CSeries {
 public:
  using Key = std::pair<long, long>;
  using Coeffs = std::map<Key, SuperElement>;

  CSeries() = default;  // zero: empty support, everything known

  // one-sided series on `var` (VarZ or VarW): coefficient of x^{dir*j} is
  // coeff(j) for j = 0..n, support the whole half line, the rest unknown
  static CSeries half_line(int var, int dir, int n,
                           const std::function<SuperElement(long)>& coeff);
  // finite fully-known series from explicit (z-exp, w-exp) -> element data
  static CSeries finite(const Coeffs& data);
  static CSeries scalar_monomial(const RF& c, long zexp, long wexp);
  // scalar Laurent polynomial in z,w: denominator may involve q,g only
  static CSeries from_scalar(const RF& r);
  static CSeries one() { return scalar_monomial(RF::constant(1), 0, 0); }

  bool is_zero_data() const { return c_.empty(); }
  bool known(long a, long b) const;
  SuperElement at(long a, long b) const;  // WindowError when not known
  const Coeffs& coeffs() const { return c_; }
  Iv zsupp() const { return zs_; }
  Iv wsupp() const { return ws_; }
  KnownSet zknown() const { return zk_; }
  KnownSet wknown() const { return wk_; }

  CSeries operator-() const;
  CSeries operator+(const CSeries& o) const;
  CSeries operator-(const CSeries& o) const;
  CSeries operator*(const CSeries& o) const;
  CSeries scaled(const RF& c) const;  // c free of z,w
  // multiply the coefficient of x^m on `var` by r^m (r a unit in q,g)
  CSeries scale_arg(int var, const RF& r) const;
  CSeries shifted(long dz, long dw) const;
  CSeries rewritten(const CancelTable& t) const;

  // inverse of a one-sided series along `var` whose other axis is {0} and
  // whose coefficient at 0 has the given two-sided inverse
  CSeries inverted(int var, const SuperElement& a0inv) const;

  // finite interval of modes on `var` that are known inside the support
  // (requires the known-within-support region to be finite)
  Iv known_modes(int var) const;

 private:
  void prune();  // drop stored coefficients that are not known, and zeros
  Iv zs_{}, ws_{};           // empty: zero series
  KnownSet zk_ = KnownSet::all(), wk_ = KnownSet::all();
  Coeffs c_;
};

// 2x2 matrix of series with noncommutative entry products
struct MatrixCurrent {
  CSeries e[2][2];
  MatrixCurrent mul(const MatrixCurrent& o) const;
};

}  // namespace uqgl
