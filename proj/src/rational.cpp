#include "uqgl/rational.hpp"

#include <cctype>
#include <sstream>

#include "uqgl/errors.hpp"

namespace uqgl {

RationalFunction::RationalFunction(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw DomainError("division by zero polynomial");
  reduce();
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = Poly(mpq_class(1));
    return;
  }
  if (!den_.is_one() && !den_.is_constant()) {
    Poly g = Poly::gcd(num_, den_);
    if (!g.is_constant()) {
      auto qn = Poly::try_divide(num_, g);
      auto qd = Poly::try_divide(den_, g);
      if (!qn || !qd) throw InvalidArgument("reduce: gcd division failed");
      num_ = std::move(*qn);
      den_ = std::move(*qd);
    }
  }
  // make the denominator monic; a constant denominator becomes exactly 1
  const mpq_class& lc = den_.leading().second;
  if (lc != 1) {
    mpq_class inv = mpq_class(1) / lc;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RationalFunction RationalFunction::constant(long num, long den) {
  return from_mpq(mpq_class(num, den));
}

RationalFunction RationalFunction::from_mpq(const mpq_class& c) {
  RationalFunction r;
  r.num_ = Poly(c);
  return r;
}

RationalFunction RationalFunction::variable(int v, int exp) {
  if (exp >= 0) return RationalFunction(Poly::variable(v, exp));
  return RationalFunction(Poly(mpq_class(1)), Poly::variable(v, -exp));
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw DomainError("division by zero rational function");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  return *this = *this + o;
}
RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  return *this = *this - o;
}
RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  return *this = *this * o;
}
RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  return *this = *this / o;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  RationalFunction r = constant(1), base = *this;
  while (n) {
    if (n & 1) r *= base;
    if (n >>= 1) base *= base;
  }
  return r;
}

namespace {
RationalFunction subst_poly(const Poly& p, int var, const RationalFunction& value) {
  // group by exponent of var, Horner over the substituted value
  int d = p.degree_in(var);
  std::vector<Poly> coeff(static_cast<size_t>(d) + 1);
  for (auto [m, c] : p.terms()) {
    int k = m.e[var];
    m.e[var] = 0;
    coeff[static_cast<size_t>(k)].add_term(m, c);
  }
  for (auto& cp : coeff) cp.normalize();
  RationalFunction acc;
  for (int k = d; k >= 0; --k) {
    acc = acc * value + RationalFunction(coeff[static_cast<size_t>(k)]);
  }
  return acc;
}
}  // namespace

RationalFunction RationalFunction::substitute(int var, const RationalFunction& value) const {
  if (var < 0 || var >= kNumVars) throw InvalidArgument("substitute: bad variable");
  RationalFunction n = subst_poly(num_, var, value);
  RationalFunction d = subst_poly(den_, var, value);
  if (d.is_zero())
    throw DomainError("substitution pole: denominator factor (" + den_.str() +
                      ") vanishes at " + std::string(var_name(var)) + " = " + value.str());
  return n / d;
}

mpq_class RationalFunction::eval(const std::array<mpq_class, kNumVars>& point) const {
  mpq_class d = den_.eval(point);
  if (d == 0)
    throw DomainError("evaluation pole: denominator (" + den_.str() + ") vanishes");
  return num_.eval(point) / d;
}

std::string RationalFunction::str() const {
  if (den_.is_one()) return num_.str();
  std::ostringstream os;
  os << "(" << num_.str() << ")/(" << den_.str() << ")";
  return os.str();
}

namespace {
json poly_to_json(const Poly& p) {
  json terms = json::array();
  for (auto& [m, c] : p.terms()) {
    json exps = json::array();
    for (int i = 0; i < kNumVars; ++i) exps.push_back(m.e[i]);
    terms.push_back(json::array({c.get_str(), exps}));
  }
  return terms;
}

Poly poly_from_json(const json& j) {
  Poly p;
  for (auto& t : j) {
    mpq_class c(t.at(0).get<std::string>());
    c.canonicalize();
    Monomial m;
    const json& exps = t.at(1);
    for (int i = 0; i < kNumVars; ++i) m.e[i] = static_cast<int16_t>(exps.at(i).get<int>());
    p.add_term(m, c);
  }
  p.normalize();
  return p;
}
}  // namespace

json RationalFunction::to_json() const {
  return json{{"n", poly_to_json(num_)}, {"d", poly_to_json(den_)}};
}

RationalFunction RationalFunction::from_json(const json& j) {
  return RationalFunction(poly_from_json(j.at("n")), poly_from_json(j.at("d")));
}

Cleared clear_denominators(const std::vector<RationalFunction>& fs) {
  Poly den = Poly(mpq_class(1));
  for (auto& f : fs) den = Poly::lcm(den, f.den());
  Cleared out;
  out.common_den = den;
  out.numerators.reserve(fs.size());
  for (auto& f : fs) {
    auto q = Poly::try_divide(den, f.den());
    if (!q) throw InvalidArgument("clear_denominators: lcm not divisible");
    out.numerators.push_back(f.num() * *q);
  }
  return out;
}

// ---------------------------------------------------------------------------
// tiny recursive-descent parser for override expressions
namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw InvalidArgument("parse error at offset " + std::to_string(i) + ": " + what);
  }

  RationalFunction expr() {
    RationalFunction r = term();
    while (true) {
      skip();
      if (eat('+'))
        r += term();
      else if (eat('-'))
        r -= term();
      else
        return r;
    }
  }

  RationalFunction term() {
    RationalFunction r = factor();
    while (true) {
      skip();
      if (eat('*'))
        r *= factor();
      else if (eat('/'))
        r /= factor();
      else
        return r;
    }
  }

  RationalFunction factor() {
    skip();
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    RationalFunction base = atom();
    skip();
    if (eat('^')) return base.pow(integer());
    return base;
  }

  int integer() {
    skip();
    bool neg = false;
    if (eat('-')) neg = true;
    skip();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected integer");
    long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      if (v > 1000000) fail("exponent too large");
      ++i;
    }
    return static_cast<int>(neg ? -v : v);
  }

  RationalFunction atom() {
    skip();
    if (eat('(')) {
      RationalFunction r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::string digits;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
      mpq_class c(digits);
      return RationalFunction::from_mpq(c);
    }
    if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
      std::string name;
      while (i < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
        name += s[i++];
      if (name == "gamma") name = "g";
      for (int v = 0; v < kNumVars; ++v)
        if (name == var_name(v)) return RationalFunction::variable(v);
      fail("unknown name '" + name + "'");
    }
    fail("expected atom");
  }
};

}  // namespace

RationalFunction parse_ratexpr(const std::string& text) {
  Parser p(text);
  RationalFunction r = p.expr();
  p.skip();
  if (p.i != text.size()) p.fail("trailing input");
  return r;
}

RationalFunction rf_q(int exp) { return RationalFunction::variable(VarQ, exp); }
RationalFunction rf_g(int exp) { return RationalFunction::variable(VarG, exp); }
RationalFunction rf_z(int exp) { return RationalFunction::variable(VarZ, exp); }
RationalFunction rf_w(int exp) { return RationalFunction::variable(VarW, exp); }
RationalFunction rf_qdiff() { return rf_q() - rf_q(-1); }

}  // namespace uqgl
