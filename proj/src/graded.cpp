#include "uqgl/graded.hpp"

#include "uqgl/errors.hpp"

namespace uqgl {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = RF::constant(1);
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols != o.rows) throw InvalidArgument("Mat::mul shape mismatch");
  Mat r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const RF& v = at(i, k);
      if (v.is_zero()) continue;
      for (int j = 0; j < o.cols; ++j) {
        const RF& w = o.at(k, j);
        if (!w.is_zero()) r.at(i, j) += v * w;
      }
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows != o.rows || cols != o.cols) throw InvalidArgument("Mat::add shape mismatch");
  Mat r = *this;
  for (size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows != o.rows || cols != o.cols) throw InvalidArgument("Mat::sub shape mismatch");
  Mat r = *this;
  for (size_t i = 0; i < a.size(); ++i) r.a[i] -= o.a[i];
  return r;
}

bool Mat::is_zero() const {
  for (auto& v : a)
    if (!v.is_zero()) return false;
  return true;
}

Mat Mat::substitute(int var, const RF& value) const {
  Mat r = *this;
  for (auto& v : r.a) v = v.substitute(var, value);
  return r;
}

Mat Mat::scaled(const RF& c) const {
  Mat r = *this;
  for (auto& v : r.a) v *= c;
  return r;
}

// denominator x q - q^-1 shared by all four structure functions
static RF rm_den(const RF& x) { return x * rf_q() - rf_q(-1); }

RF rm_b(const RF& x) { return (x - rf_int(1)) / rm_den(x); }
RF rm_c(const RF& x) { return x * rf_qdiff() / rm_den(x); }
RF rm_ctilde(const RF& x) { return rf_qdiff() / rm_den(x); }
RF rm_d(const RF& x) { return -(rf_q() - x * rf_q(-1)) / rm_den(x); }

Mat rmatrix(const RF& x) {
  Mat r(4, 4);
  r.at(0, 0) = RF::constant(1);
  r.at(1, 1) = rm_b(x);
  r.at(1, 2) = rm_c(x);
  r.at(2, 1) = rm_ctilde(x);
  r.at(2, 2) = rm_b(x);
  r.at(3, 3) = rm_d(x);
  return r;
}

Mat eta4() {
  Mat m(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) {
      int s = (parity2(i) * parity2(k)) % 2 ? -1 : 1;
      m.at(pair_index(i, k), pair_index(i, k)) = RF::constant(s);
    }
  return m;
}

Mat perm4_plain() {
  Mat m(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k)
      m.at(pair_index(i, k), pair_index(k, i)) = RF::constant(1);
  return m;
}

Mat perm4_graded() {
  Mat m(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) {
      int s = (parity2(i) * parity2(k)) % 2 ? -1 : 1;
      m.at(pair_index(i, k), pair_index(k, i)) = RF::constant(s);
    }
  return m;
}

Mat embed_pair(const Mat& m, int a, int b, int n, bool graded) {
  if (m.rows != 4 || m.cols != 4 || a >= b || b >= n)
    throw InvalidArgument("embed_pair: bad arguments");
  int dim = 1 << n;
  Mat r(dim, dim);
  for (int in = 0; in < dim; ++in) {
    // tensor index digits, leg 0 is the most significant bit
    auto digit = [n](int idx, int leg) { return (idx >> (n - 1 - leg)) & 1; };
    int ia = digit(in, a), ib = digit(in, b);
    for (int oa = 0; oa < 2; ++oa)
      for (int ob = 0; ob < 2; ++ob) {
        const RF& v = m.at(pair_index(oa, ob), pair_index(ia, ib));
        if (v.is_zero()) continue;
        int out = in;
        out &= ~(1 << (n - 1 - a));
        out |= oa << (n - 1 - a);
        out &= ~(1 << (n - 1 - b));
        out |= ob << (n - 1 - b);
        int sign = 1;
        if (graded) {
          for (int mid = a + 1; mid < b; ++mid)
            if (parity2(digit(in, mid)) && ((parity2(ia) + parity2(oa)) % 2)) sign = -sign;
        }
        r.at(out, in) += sign > 0 ? v : -v;
      }
  }
  return r;
}

std::pair<Mat, Mat> ybe_sides(const std::function<Mat(const RF&)>& m, const RF& x,
                              const RF& y, bool graded) {
  Mat m12 = embed_pair(m(x), 0, 1, 3, graded);
  Mat m13 = embed_pair(m(x * y), 0, 2, 3, graded);
  Mat m23 = embed_pair(m(y), 1, 2, 3, graded);
  return {m12 * m13 * m23, m23 * m13 * m12};
}

bool ybe_ordinary_holds(const std::function<Mat(const RF&)>& m, const RF& x, const RF& y) {
  auto [l, r] = ybe_sides(m, x, y, false);
  return l == r;
}

bool ybe_graded_holds(const std::function<Mat(const RF&)>& m, const RF& x, const RF& y) {
  auto [l, r] = ybe_sides(m, x, y, true);
  return l == r;
}

bool rmatrix_unitary(const RF& x) {
  Mat p = perm4_plain();
  Mat r21 = p * rmatrix(x.inverse()) * p;
  return rmatrix(x) * r21 == Mat::identity(4);
}

bool weight_conserving(const Mat& m) {
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k)
      for (int j = 0; j < 2; ++j)
        for (int l = 0; l < 2; ++l)
          if (i + k != j + l && !m.at(pair_index(i, k), pair_index(j, l)).is_zero())
            return false;
  return true;
}

}  // namespace uqgl
