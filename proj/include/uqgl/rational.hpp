#pragma once
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "uqgl/poly.hpp"

namespace uqgl {

using json = nlohmann::ordered_json;

// element of Q(q,g,z,w,g1,g2,g3) in canonical form: numerator and denominator
// coprime, denominator monic in the graded-lex order (so equality is
// structural); inverses of variables are honest rational functions
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Poly(mpq_class(1))) {}
  RationalFunction(Poly n, Poly d);  // reduces; DomainError if d == 0
  explicit RationalFunction(const Poly& n) : RationalFunction(n, Poly(mpq_class(1))) {}

  static RationalFunction constant(long num, long den = 1);
  static RationalFunction from_mpq(const mpq_class& c);
  static RationalFunction variable(int v, int exp = 1);  // exp may be negative

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;  // DomainError on 0
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  bool operator==(const RationalFunction& o) const = default;

  RationalFunction inverse() const;   // DomainError on 0
  RationalFunction pow(int n) const;  // any integer

  // substitute one variable by a rational function; DomainError naming the
  // denominator factor that vanishes under the substitution
  RationalFunction substitute(int var, const RationalFunction& value) const;
  mpq_class eval(const std::array<mpq_class, kNumVars>& point) const;

  std::string str() const;
  json to_json() const;
  static RationalFunction from_json(const json& j);

 private:
  void reduce();
  Poly num_, den_;
};

using RF = RationalFunction;

// common denominator D (lcm of the inputs' denominators) and the cleared
// numerators n_i with f_i = n_i / D
struct Cleared {
  std::vector<Poly> numerators;
  Poly common_den;
};
Cleared clear_denominators(const std::vector<RationalFunction>& fs);

// parse an expression over integers and the ring variables with + - * / ^ ( );
// `gamma` is accepted as an alias for g. InvalidArgument on bad syntax.
RationalFunction parse_ratexpr(const std::string& text);

// convenience builders used all over the algebra layers
RationalFunction rf_q(int exp = 1);
RationalFunction rf_g(int exp = 1);
RationalFunction rf_z(int exp = 1);
RationalFunction rf_w(int exp = 1);
inline RationalFunction rf_int(long n) { return RationalFunction::constant(n); }
// q - q^-1, ubiquitous structure constant
RationalFunction rf_qdiff();

}  // namespace uqgl
