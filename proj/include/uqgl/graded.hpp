#pragma once
#include <functional>
#include <vector>

#include "uqgl/rational.hpp"

namespace uqgl {

// dense matrix over the coefficient field
struct Mat {
  int rows = 0, cols = 0;
  std::vector<RF> a;  // row-major

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  static Mat identity(int n);

  RF& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const RF& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  bool operator==(const Mat& o) const = default;
  bool is_zero() const;

  Mat substitute(int var, const RF& value) const;
  Mat scaled(const RF& c) const;
};

// parity of the 0-based basis index of the 2-dimensional superspace:
// index 0 even, index 1 odd
inline int parity2(int i) { return i; }
// basis of V (x) V ordered 00, 01, 10, 11 (i.e. 11,12,21,22 in 1-based labels)
inline int pair_index(int i, int k) { return 2 * i + k; }

// structure functions of the R-matrix
RF rm_b(const RF& x);
RF rm_c(const RF& x);       // upper exchange entry, carries the factor x
RF rm_ctilde(const RF& x);  // lower exchange entry
RF rm_d(const RF& x);

// 4x4 R-matrix acting on V (x) V
Mat rmatrix(const RF& x);
// Koszul-sign metric eta = diag((-1)^{P(i)P(k)})
Mat eta4();
// ordinary and graded flip operators on V (x) V
Mat perm4_plain();
Mat perm4_graded();

// embed a 4x4 two-site operator into an n-fold tensor power at sites a < b
// (0-based); when graded, the middle legs pick up the Koszul sign
// (-1)^{P(mid)(P(in_a)+P(out_a))} for an even operator
Mat embed_pair(const Mat& m, int a, int b, int n, bool graded);

// both sides of the braid equation M12(x) M13(x y) M23(y) = M23 M13 M12
std::pair<Mat, Mat> ybe_sides(const std::function<Mat(const RF&)>& m, const RF& x,
                              const RF& y, bool graded);

bool ybe_ordinary_holds(const std::function<Mat(const RF&)>& m, const RF& x, const RF& y);
bool ybe_graded_holds(const std::function<Mat(const RF&)>& m, const RF& x, const RF& y);
// R(x) conjugated by the ordinary flip, evaluated at 1/x, inverts R(x)
bool rmatrix_unitary(const RF& x);
// entries vanish unless the in and out index pairs agree as multisets
bool weight_conserving(const Mat& m);

}  // namespace uqgl
