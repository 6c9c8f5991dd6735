#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cvkit/errors.hpp"

namespace cvkit::quadric {

using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

template <class R>
struct Gaussian {
  R re{0}, im{0};
  Gaussian() = default;
  Gaussian(int x) : re(x) {}
  Gaussian(R r, R i = R(0)) : re(std::move(r)), im(std::move(i)) {}

  friend Gaussian operator+(const Gaussian& a, const Gaussian& b) { return {R(a.re + b.re), R(a.im + b.im)}; }
  friend Gaussian operator-(const Gaussian& a, const Gaussian& b) { return {R(a.re - b.re), R(a.im - b.im)}; }
  friend Gaussian operator-(const Gaussian& a) { return {R(-a.re), R(-a.im)}; }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return {R(a.re * b.re - a.im * b.im), R(a.re * b.im + a.im * b.re)};
  }
  friend Gaussian operator/(const Gaussian& a, const Gaussian& b) {
    R n = b.re * b.re + b.im * b.im;
    return {R((a.re * b.re + a.im * b.im) / n), R((a.im * b.re - a.re * b.im) / n)};
  }
  Gaussian& operator+=(const Gaussian& b) { return *this = *this + b; }
  Gaussian& operator-=(const Gaussian& b) { return *this = *this - b; }
  Gaussian& operator*=(const Gaussian& b) { return *this = *this * b; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }
};

using GaussianQ = Gaussian<Rational>;

// Scalar helpers shared by the three backends.
inline double magnitude(const Rational& x) { return std::abs(static_cast<double>(x)); }
inline double magnitude(const Complex& x) { return std::abs(x); }
inline double magnitude(const GaussianQ& x) {
  return std::hypot(static_cast<double>(x.re), static_cast<double>(x.im));
}
inline bool is_exact(const Rational&) { return true; }
inline bool is_exact(const GaussianQ&) { return true; }
inline bool is_exact(const Complex&) { return false; }
inline Complex conj(const Complex& x) { return std::conj(x); }
inline GaussianQ conj(const GaussianQ& x) { return {x.re, Rational(-x.im)}; }
inline Complex real_part(const Complex& x) { return {x.real(), 0.0}; }
inline Complex imag_part(const Complex& x) { return {x.imag(), 0.0}; }
inline GaussianQ real_part(const GaussianQ& x) { return {x.re, Rational(0)}; }
inline GaussianQ imag_part(const GaussianQ& x) { return {x.im, Rational(0)}; }
inline Complex imag_unit(const Complex&) { return {0.0, 1.0}; }
inline GaussianQ imag_unit(const GaussianQ&) { return {Rational(0), Rational(1)}; }
inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const GaussianQ& x) { return x.re == 0 && x.im == 0; }
inline bool is_zero(const Complex& x) { return x == Complex(0.0); }

template <class K>
struct Mat2 {
  K a{0}, b{0}, c{0}, d{0};

  static Mat2 identity() { return {K(1), K(0), K(0), K(1)}; }
  K det() const { return a * d - b * c; }
  K trace() const { return a + d; }
  // Inverse for determinant one.
  Mat2 adjugate() const { return {d, K(0) - b, K(0) - c, a}; }
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  Mat2 scaled(const K& k) const { return {a * k, b * k, c * k, d * k}; }
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

template <class K>
struct PPoint {
  K x1{1}, x2{0};
};

// Projective equality of two points: x1 y2 - x2 y1 = 0.
template <class K>
K cross(const PPoint<K>& p, const PPoint<K>& q) {
  return p.x1 * q.x2 - p.x2 * q.x1;
}

template <class K>
PPoint<K> mobius_apply(const Mat2<K>& m, const PPoint<K>& p) {
  return {m.a * p.x1 + m.b * p.x2, m.c * p.x1 + m.d * p.x2};
}

template <class K>
struct ConicPoint {
  K t{2}, s{0};
  K beta1() const { return (t + s) / K(2); }
  K beta2() const { return (t - s) / K(2); }
  bool degenerate() const { return is_zero(s); }
};

template <class K>
ConicPoint<K> conic_from_beta(const K& beta) {
  if (is_zero(beta)) fail(ErrorCode::ZeroBeta, "beta must be nonzero");
  K inv = K(1) / beta;
  return {beta + inv, beta - inv};
}

template <class K>
struct QuadricPoint {
  Mat2<K> A;
  K e{0};
  bool degenerate = false;  // s = 0: the identification is not a bijection
};

// The matrix attached to (p, q) on the quadric det A = e^2, tr A = t e.
template <class K>
QuadricPoint<K> quadric_point(const PPoint<K>& p, const PPoint<K>& q, const ConicPoint<K>& cp) {
  const K b1 = cp.beta1(), b2 = cp.beta2();
  QuadricPoint<K> out;
  out.A.a = b2 * p.x2 * q.x1 - b1 * p.x1 * q.x2;
  out.A.b = cp.s * p.x1 * q.x1;
  out.A.c = K(0) - cp.s * p.x2 * q.x2;
  out.A.d = b1 * p.x2 * q.x1 - b2 * p.x1 * q.x2;
  out.e = p.x2 * q.x1 - p.x1 * q.x2;
  out.degenerate = cp.degenerate();
  return out;
}

template <class K>
double matrix_scale(const Mat2<K>& m) {
  return std::max({1.0, magnitude(m.a), magnitude(m.b), magnitude(m.c), magnitude(m.d)});
}

template <class K>
double matrix_diff(const Mat2<K>& x, const Mat2<K>& y) {
  return std::max({magnitude(x.a - y.a), magnitude(x.b - y.b), magnitude(x.c - y.c), magnitude(x.d - y.d)});
}

struct Residual {
  bool ok = false;
  double value = 0.0;  // relative residual (exact backends report 0 or the float image)
};

// det A - e^2 and tr A - t e.
template <class K>
Residual quadric_identities(const QuadricPoint<K>& qp, const ConicPoint<K>& cp, double tol = 1e-12) {
  K r1 = qp.A.det() - qp.e * qp.e;
  K r2 = qp.A.trace() - cp.t * qp.e;
  if (is_exact(r1)) return {is_zero(r1) && is_zero(r2), std::max(magnitude(r1), magnitude(r2))};
  double scale = std::max(1.0, magnitude(qp.e) * magnitude(qp.e)) * matrix_scale(qp.A);
  double v = std::max(magnitude(r1), magnitude(r2)) / scale;
  return {v < tol, v};
}

// The fixed point of A with eigenvalue lambda e, as the kernel of A - lambda e I.
template <class K>
PPoint<K> eigenline(const Mat2<K>& A, const K& shift) {
  K m11 = A.a - shift, m12 = A.b, m21 = A.c, m22 = A.d - shift;
  if (magnitude(m11) + magnitude(m12) >= magnitude(m21) + magnitude(m22)) return {m12, K(0) - m11};
  return {m22, K(0) - m21};
}

struct EquivarianceReport {
  bool ok = false;
  double matrix_residual = 0.0;
  double e_residual = 0.0;
  bool fixed_points_ok = false;
};

// A(rho p, rho q) against rho A(p, q) rho^{-1}, e(rho p, rho q) against e(p, q), and the
// fixed points of the conjugated matrix against (rho p, rho q).
template <class K>
EquivarianceReport equivariance_check(const Mat2<K>& rho, const PPoint<K>& p, const PPoint<K>& q,
                                      const ConicPoint<K>& cp, double tol = 1e-12) {
  const auto base = quadric_point(p, q, cp);
  const PPoint<K> rp = mobius_apply(rho, p), rq = mobius_apply(rho, q);
  const auto moved = quadric_point(rp, rq, cp);
  const Mat2<K> conj = rho * base.A * rho.adjugate();
  EquivarianceReport r;
  const bool exact = is_exact(base.e);
  double scale = exact ? 1.0 : matrix_scale(rho) * matrix_scale(rho) * matrix_scale(base.A);
  r.matrix_residual = matrix_diff(moved.A, conj) / scale;
  r.e_residual = magnitude(moved.e - base.e) / (exact ? 1.0 : std::max(1.0, magnitude(base.e)));
  bool mat_ok = exact ? (moved.A == conj && moved.e == base.e) : (r.matrix_residual < tol && r.e_residual < tol);

  // Eigenvalue beta1 e belongs to the first point, beta2 e to the second.
  r.fixed_points_ok = true;
  if (!is_zero(base.e) && !cp.degenerate()) {
    PPoint<K> fp = eigenline(conj, cp.beta1() * base.e);
    PPoint<K> fq = eigenline(conj, cp.beta2() * base.e);
    K c1 = cross(fp, rp), c2 = cross(fq, rq);
    if (exact) {
      r.fixed_points_ok = is_zero(c1) && is_zero(c2);
    } else {
      auto norm = [](const PPoint<K>& x) { return std::max(1e-300, std::hypot(magnitude(x.x1), magnitude(x.x2))); };
      double v = std::max(magnitude(c1) / (norm(fp) * norm(rp)), magnitude(c2) / (norm(fq) * norm(rq)));
      r.fixed_points_ok = v < 1e-9;
    }
  }
  r.ok = mat_ok && r.fixed_points_ok;
  return r;
}

// tr(A_1 ... A_{n-1}) - t_n e_1 ... e_{n-1}, with A_i built from (p_{2i-1}, p_{2i}).
template <class K>
K evaluate_F(const std::vector<PPoint<K>>& points, const std::vector<ConicPoint<K>>& cps, const K& tn) {
  if (cps.empty() || points.size() != 2 * cps.size())
    fail(ErrorCode::LengthMismatch, "need 2(n-1) points for n-1 conic points");
  Mat2<K> prod = Mat2<K>::identity();
  K eprod(1);
  for (std::size_t i = 0; i < cps.size(); ++i) {
    auto qp = quadric_point(points[2 * i], points[2 * i + 1], cps[i]);
    prod = prod * qp.A;
    eprod = eprod * qp.e;
  }
  return prod.trace() - tn * eprod;
}

// sigma_i: swap p_{2i-1} and p_{2i}, negate s_i. It sends (A_i, e_i) to (-A_i, -e_i),
// the same projective point, so F changes by the factor -1.
template <class K>
std::pair<std::vector<PPoint<K>>, std::vector<ConicPoint<K>>> gamma_involution(
    int i, std::vector<PPoint<K>> points, std::vector<ConicPoint<K>> cps) {
  if (i < 1 || i > static_cast<int>(cps.size()) || points.size() != 2 * cps.size())
    fail(ErrorCode::IndexOutOfRange, "sigma index " + std::to_string(i));
  std::swap(points[2 * i - 2], points[2 * i - 1]);
  cps[i - 1].s = K(0) - cps[i - 1].s;
  return {std::move(points), std::move(cps)};
}

// Real form for |t| < 2 with s = i y: the point pair (p, tau(p)).
template <class K>
QuadricPoint<K> tau_matrix(const PPoint<K>& p, const K& t, const K& y) {
  const K w = p.x2 * conj(p.x1);
  const K re = real_part(w), im = imag_part(w);
  if (is_exact(re) ? is_zero(im) : magnitude(im) <= 1e-14 * std::max(1.0, magnitude(w)))
    fail(ErrorCode::TauDegenerate, "point lies on the real circle");
  QuadricPoint<K> out;
  out.A.a = t * im - y * re;
  out.A.b = y * p.x1 * conj(p.x1);
  out.A.c = K(0) - y * p.x2 * conj(p.x2);
  out.A.d = y * re + t * im;
  out.e = K(2) * im;
  return out;
}

inline QuadricPoint<Complex> tau_matrix(const PPoint<Complex>& p, double t) {
  return tau_matrix(p, Complex(t), Complex(std::sqrt(4.0 - t * t)));
}

template <class K>
Mat2<K> tau_normalized(const QuadricPoint<K>& q) {
  return q.A.scaled(K(1) / q.e);
}

// Unitary form for |t| < 2 with s = i y: the point pair (p, eta(p)), normalized by e.
template <class K>
Mat2<K> eta_matrix(const PPoint<K>& p, const K& t, const K& y) {
  const K s = imag_unit(t) * y;
  const K n1 = p.x1 * conj(p.x1), n2 = p.x2 * conj(p.x2);
  const K N = n1 + n2;
  const K half = K(1) / K(2);
  Mat2<K> A;
  A.a = half * (t + s * (n1 - n2) / N);
  A.b = s * p.x1 * conj(p.x2) / N;
  A.c = s * conj(p.x1) * p.x2 / N;
  A.d = half * (t + s * (n2 - n1) / N);
  return A;
}

inline Mat2<Complex> eta_matrix(const PPoint<Complex>& p, double t) {
  return eta_matrix(p, Complex(t), Complex(std::sqrt(4.0 - t * t)));
}

template <class K>
PPoint<K> tau_point(const PPoint<K>& p) {
  return {conj(p.x1), conj(p.x2)};
}

template <class K>
PPoint<K> eta_point(const PPoint<K>& p) {
  return {conj(p.x2), K(0) - conj(p.x1)};
}

template <class K>
Mat2<K> conjugate_transpose(const Mat2<K>& m) {
  return {conj(m.a), conj(m.c), conj(m.b), conj(m.d)};
}

// Trace coordinates with the negative-trace convention.
template <class K>
struct TraceCoordinates {
  K a1, a2, a3, a4, c12, c13, c23;
};

template <class K>
void require_unit_det(const Mat2<K>& m) {
  K d = m.det() - K(1);
  bool ok = is_exact(d) ? is_zero(d) : magnitude(d) <= 1e-9 * matrix_scale(m) * matrix_scale(m);
  if (!ok) fail(ErrorCode::NotUnitDeterminant, "matrix determinant is not 1");
}

template <class K>
TraceCoordinates<K> trace_coordinates(const Mat2<K>& B1, const Mat2<K>& B2, const Mat2<K>& B3) {
  require_unit_det(B1);
  require_unit_det(B2);
  require_unit_det(B3);
  auto neg = [](const Mat2<K>& m) { return K(0) - m.trace(); };
  return {neg(B1), neg(B2), neg(B3), neg(B1 * B2 * B3), neg(B1 * B2), neg(B1 * B3), neg(B2 * B3)};
}

template <class K>
struct FrickeReport {
  K lhs, rhs;
  double residual = 0.0;  // |lhs - rhs|, relative for the float backend
  bool exact_zero = false;
};

template <class K>
FrickeReport<K> fricke_verify(const Mat2<K>& B1, const Mat2<K>& B2, const Mat2<K>& B3) {
  const auto v = trace_coordinates(B1, B2, B3);
  const K f1234 = v.a1 * v.a2 + v.a3 * v.a4;
  const K f1324 = v.a1 * v.a3 + v.a2 * v.a4;
  const K f2314 = v.a2 * v.a3 + v.a1 * v.a4;
  const K f = v.a1 * v.a2 * v.a3 * v.a4 + v.a1 * v.a1 + v.a2 * v.a2 + v.a3 * v.a3 + v.a4 * v.a4 - K(4);
  FrickeReport<K> r;
  r.lhs = v.c12 * v.c23 * v.c13;
  r.rhs = v.c12 * v.c12 + v.c23 * v.c23 + v.c13 * v.c13 + f1234 * v.c12 + f2314 * v.c23 + f1324 * v.c13 + f;
  const K diff = r.lhs - r.rhs;
  r.exact_zero = is_zero(diff);
  double scale = is_exact(diff) ? 1.0 : std::max(1.0, magnitude(r.lhs));
  r.residual = magnitude(diff) / scale;
  return r;
}

template <class K>
struct ZReport {
  K z;
  K word_value;  // tr(B1 B2 B1 B3) - a1 a4, an independent evaluation of z
  double residual = 0.0;
};

// z = c12 c13 - c23 - (a1 a4 + a2 a3), cross-checked against the trace of a word.
template <class K>
ZReport<K> z_relation_verify(const Mat2<K>& B1, const Mat2<K>& B2, const Mat2<K>& B3) {
  const auto v = trace_coordinates(B1, B2, B3);
  ZReport<K> r;
  r.z = v.c12 * v.c13 - v.c23 - (v.a1 * v.a4 + v.a2 * v.a3);
  r.word_value = (B1 * B2 * B1 * B3).trace() - v.a1 * v.a4;
  const K diff = r.z - r.word_value;
  double scale = is_exact(diff) ? 1.0 : std::max(1.0, magnitude(r.z));
  r.residual = magnitude(diff) / scale;
  return r;
}

}  // namespace cvkit::quadric
