#pragma once
#include <map>
#include <vector>

#include "uqgl/series.hpp"

namespace uqgl {

// view a rational function as a Laurent polynomial in z: requires the
// denominator to be a z-monomial times a z,w-free polynomial and the
// numerator to be w-free; returns z-exponent -> coefficient in q,g,...
std::map<long, RF> laurent_z(const RF& p);

// payload(z) * delta(mu*w/z) where delta(x) = sum over all integers of x^n
// and payload is a Laurent polynomial in z with z,w-free coefficients
struct DeltaTerm {
  RF mu;                        // pole position z = mu*w; nonzero, z,w-free
  std::map<long, RF> zpayload;  // z-exponent -> coefficient

  bool is_zero() const { return zpayload.empty(); }
  RF coeff(long a, long b) const;  // coefficient of z^a w^b
};

// the formal difference expand_{|z|>|w|}(r) - expand_{|w|>|z|}(r). It is
// supported on the poles of r along z = mu*w and the Laurent part cancels
// exactly. The z,w-part of the denominator must be homogeneous and split
// into distinct linear factors findable by monomial splitting (degree <= 2
// beyond pure z^s w^t factors); otherwise DomainError.
std::vector<DeltaTerm> delta_expand(const RF& r);

// delta(mu*w/z) * payload(z) * S where S is an operator series in a single
// variable; coefficient of z^a w^b is sum_p c_p mu^{p-a} S_{a+b-p}
struct DeltaSeries {
  RF mu;
  std::map<long, RF> zpayload{{0, RF::constant(1)}};
  CSeries op;         // univariate operator series
  int opvar = VarW;   // axis the series lives on

  bool known(long a, long b) const;
  SuperElement at(long a, long b) const;  // WindowError when not known
};

}  // namespace uqgl
