#pragma once
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace uqgl {

// Variables of the coefficient ring, in increasing order of significance for
// the graded-lex monomial order: q < g < z < w < g1 < g2 < g3.
// g is the central grading scalar; g1,g2,g3 are its images on tensor legs.
inline constexpr int kNumVars = 7;
enum Var : int { VarQ = 0, VarG = 1, VarZ = 2, VarW = 3, VarG1 = 4, VarG2 = 5, VarG3 = 6 };
const char* var_name(int v);

struct Monomial {
  std::array<int16_t, kNumVars> e{};
  int degree() const;
  bool is_unit() const;  // all exponents zero
  bool divides(const Monomial& o) const;
  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;  // requires o.divides(*this)
  bool operator==(const Monomial& o) const = default;
};
// graded order: total degree first, ties broken lexicographically from the
// most significant variable (g3) down to q
bool mono_less(const Monomial& a, const Monomial& b);

// sparse multivariate polynomial over Q; terms kept sorted descending,
// no zero coefficients
class Poly {
 public:
  using Term = std::pair<Monomial, mpq_class>;

  Poly() = default;
  explicit Poly(const mpq_class& c);
  static Poly constant(long num, long den = 1);
  static Poly variable(int v, int exp = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const;  // greatest monomial; requires nonzero
  int degree_in(int v) const;
  int total_degree() const;
  bool uses(int v) const;
  int max_var() const;  // highest variable index present, -1 if constant

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  bool operator==(const Poly& o) const = default;

  Poly scaled(const mpq_class& c) const;
  Poly mul_term(const Monomial& m, const mpq_class& c) const;
  Poly pow(int n) const;  // n >= 0

  // exact division; nullopt when b does not divide a
  static std::optional<Poly> try_divide(const Poly& a, const Poly& b);
  // gcd up to sign, normalized integer-primitive with positive leading
  // coefficient; gcd(0, b) = normalized b
  static Poly gcd(const Poly& a, const Poly& b);
  static Poly lcm(const Poly& a, const Poly& b);

  // integer-primitive part and rational content: *this == content * primitive
  std::pair<mpq_class, Poly> content_and_primitive() const;

  mpq_class eval(const std::array<mpq_class, kNumVars>& point) const;
  std::string str() const;

  // builder interface: accumulate then normalize once
  void add_term(const Monomial& m, const mpq_class& c);
  void normalize();

 private:
  std::vector<Term> terms_;
};

}  // namespace uqgl
