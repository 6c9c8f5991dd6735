#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "cvkit/errors.hpp"
#include "cvkit/parallel.hpp"
#include "cvkit/quadric.hpp"

namespace cvkit::quadric {

enum class Backend { Exact, Float };

inline const char* backend_name(Backend b) { return b == Backend::Exact ? "exact" : "float"; }

inline Backend parse_backend(const std::string& s) {
  if (s == "exact") return Backend::Exact;
  if (s == "float") return Backend::Float;
  fail(ErrorCode::ParseError, "backend must be exact or float");
}

struct CheckTally {
  std::size_t count = 0;
  std::size_t failures = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;  // 0 means exact equality
};

struct SweepReport {
  std::string kind;
  Backend backend = Backend::Exact;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::map<std::string, CheckTally> checks;

  std::size_t failures() const {
    std::size_t f = 0;
    for (const auto& [name, t] : checks) f += t.failures;
    return f;
  }
};

namespace detail {

inline std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Portable draws: the standard distributions are not reproducible across libraries.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  double unit() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
  double sym() { return 2.0 * unit() - 1.0; }
};

inline Rational rat(Rng& g) { return Rational(g.range(-9, 9), g.range(1, 9)); }
inline Rational rat_nonzero(Rng& g) {
  std::int64_t n = g.range(1, 9) * (g.range(0, 1) ? 1 : -1);
  return Rational(n, g.range(1, 9));
}
inline Complex cpx(Rng& g) { return {g.sym(), g.sym()}; }
inline GaussianQ gauss(Rng& g) { return {rat(g), rat(g)}; }

inline Mat2<Rational> sl2_exact(Rng& g) {
  Mat2<Rational> m = Mat2<Rational>::identity();
  for (int k = 0; k < 3; ++k) {
    Rational u = rat(g), l = rat(g), h = rat_nonzero(g);
    m = m * Mat2<Rational>{1, u, 0, 1} * Mat2<Rational>{1, 0, l, 1} * Mat2<Rational>{h, 0, 0, 1 / h};
  }
  return m;
}

inline Mat2<Complex> sl2_float(Rng& g) {
  Complex a;
  do a = cpx(g); while (std::abs(a) < 0.5);
  Complex b = cpx(g), c = cpx(g);
  return {a, b, c, (1.0 + b * c) / a};
}

template <class K>
PPoint<K> point(Rng& g);
template <>
inline PPoint<Rational> point(Rng& g) {
  PPoint<Rational> p;
  do p = {rat(g), rat(g)}; while (p.x1 == 0 && p.x2 == 0);
  return p;
}
template <>
inline PPoint<Complex> point(Rng& g) {
  return {cpx(g), cpx(g)};
}

template <class K>
ConicPoint<K> conic(Rng& g);
template <>
inline ConicPoint<Rational> conic(Rng& g) {
  return conic_from_beta(rat_nonzero(g));
}
template <>
inline ConicPoint<Complex> conic(Rng& g) {
  Complex b;
  do b = cpx(g); while (std::abs(b) < 0.25);
  return conic_from_beta(b);
}

struct Outcome {
  bool ok = true;
  double residual = 0.0;
};

using SampleResult = std::map<std::string, Outcome>;

inline Outcome compare(const Complex& x, const Complex& y, double scale, double tol) {
  double r = std::abs(x - y) / std::max(1.0, scale);
  return {r < tol, r};
}
inline Outcome compare(const Rational& x, const Rational& y, double, double) { return {x == y, 0.0}; }

inline constexpr double kQuadricTol = 1e-12;
inline constexpr double kSectionTol = 1e-9;

// Quadric identities, equivariance, sigma symmetry of F and vanishing of F on a representation.
template <class K>
SampleResult section_sample(Rng& g) {
  const bool exact = std::is_same_v<K, Rational>;
  SampleResult r;
  const auto p = point<K>(g), q = point<K>(g);
  const auto cp = conic<K>(g);
  const auto qp = quadric_point(p, q, cp);
  auto qi = quadric_identities(qp, cp, kQuadricTol);
  r["quadric_identities"] = {qi.ok, exact ? 0.0 : qi.value};

  Mat2<K> rho;
  if constexpr (std::is_same_v<K, Rational>) rho = sl2_exact(g);
  else rho = sl2_float(g);
  auto eq = equivariance_check(rho, p, q, cp, kQuadricTol);
  r["equivariance"] = {eq.ok, std::max(eq.matrix_residual, eq.e_residual)};

  // F with three conic points.
  const int k = 3;
  std::vector<PPoint<K>> pts;
  std::vector<ConicPoint<K>> cps;
  for (int i = 0; i < 2 * k; ++i) pts.push_back(point<K>(g));
  for (int i = 0; i < k; ++i) cps.push_back(conic<K>(g));
  const K tn = conic<K>(g).t;
  const K F = evaluate_F(pts, cps, tn);
  double fscale = magnitude(F);
  {
    Mat2<K> prod = Mat2<K>::identity();
    K eprod(1);
    for (int i = 0; i < k; ++i) {
      auto a = quadric_point(pts[2 * i], pts[2 * i + 1], cps[i]);
      prod = prod * a.A;
      eprod = eprod * a.e;
    }
    fscale = std::max({fscale, magnitude(prod.trace()), magnitude(tn * eprod)});
  }
  Outcome sigma{true, 0.0};
  for (int i = 1; i <= k; ++i) {
    auto [p2, c2] = gamma_involution(i, pts, cps);
    auto o = compare(evaluate_F(p2, c2, tn), K(0) - F, fscale, kSectionTol);
    auto [p3, c3] = gamma_involution(i, p2, c2);
    bool back = true;
    for (std::size_t j = 0; j < pts.size(); ++j)
      back = back && p3[j].x1 == pts[j].x1 && p3[j].x2 == pts[j].x2;
    for (std::size_t j = 0; j < cps.size(); ++j) back = back && c3[j].s == cps[j].s && c3[j].t == cps[j].t;
    sigma.ok = sigma.ok && o.ok && back;
    sigma.residual = std::max(sigma.residual, o.residual);
  }
  r["sigma_symmetry"] = sigma;

  // Points taken as fixed points of B_i = A_i / e_i and t_n = tr(B_1 B_2 B_3).
  Mat2<K> bprod = Mat2<K>::identity();
  for (int i = 0; i < k; ++i) {
    auto a = quadric_point(pts[2 * i], pts[2 * i + 1], cps[i]);
    if (is_zero(a.e)) return r;
    bprod = bprod * a.A.scaled(K(1) / a.e);
  }
  const K Frep = evaluate_F(pts, cps, bprod.trace());
  double escale = 1.0;
  for (int i = 0; i < k; ++i) escale *= magnitude(quadric_point(pts[2 * i], pts[2 * i + 1], cps[i]).e);
  r["representation_zero"] = compare(Frep, K(0), escale * std::max(1.0, matrix_scale(bprod)), kSectionTol);
  return r;
}

// The tau and eta fixed-locus matrices for |t| < 2.
template <class K>
SampleResult fixed_locus_sample(Rng& g) {
  SampleResult r;
  const bool exact = std::is_same_v<K, GaussianQ>;
  PPoint<K> p;
  K t, y;
  if constexpr (std::is_same_v<K, GaussianQ>) {
    Rational m(g.range(1, 20), g.range(1, 20));
    t = GaussianQ(Rational(2 * (1 - m * m) / (1 + m * m)));
    y = GaussianQ(Rational(4 * m / (1 + m * m)));
    do p = {gauss(g), gauss(g)}; while (imag_part(p.x2 * conj(p.x1)) == GaussianQ(0));
  } else {
    double tv = 4.0 * g.unit() - 2.0;
    t = tv;
    y = std::sqrt(4.0 - tv * tv);
    do p = {cpx(g), cpx(g)}; while (std::abs((p.x2 * std::conj(p.x1)).imag()) < 1e-3);
  }
  const K i = imag_unit(t);
  const ConicPoint<K> cp{t, i * y};
  const double tol = exact ? 0.0 : kQuadricTol;
  auto close = [&](const K& a, const K& b, double scale) -> Outcome {
    if (exact) return {a == b, 0.0};
    double res = magnitude(a - b) / std::max(1.0, scale);
    return {res < tol, res};
  };
  auto merge = [](Outcome& acc, const Outcome& o) {
    acc.ok = acc.ok && o.ok;
    acc.residual = std::max(acc.residual, o.residual);
  };

  const auto T = tau_matrix(p, t, y);
  const auto Q = quadric_point(p, tau_point(p), cp);
  const K mi = K(0) - i;
  const Mat2<K> QT = Q.A.scaled(mi);
  const double ts = matrix_scale(QT);
  Outcome tau;
  for (const K& x : {QT.a, QT.b, QT.c, QT.d, Q.e * mi}) merge(tau, close(imag_part(x), K(0), ts));
  merge(tau, close(QT.a, T.A.a, ts));
  merge(tau, close(QT.b, T.A.b, ts));
  merge(tau, close(QT.c, T.A.c, ts));
  merge(tau, close(QT.d, T.A.d, ts));
  merge(tau, close(Q.e * mi, T.e, ts));
  const Mat2<K> N = tau_normalized(T);
  const double ns = matrix_scale(N) * matrix_scale(N);
  merge(tau, close(N.det(), K(1), ns));
  merge(tau, close(N.trace(), t, ns));
  r["tau_real"] = tau;

  const Mat2<K> E = eta_matrix(p, t, y);
  Outcome eta;
  const Mat2<K> U = E * conjugate_transpose(E);
  merge(eta, close(U.a, K(1), 1.0));
  merge(eta, close(U.b, K(0), 1.0));
  merge(eta, close(U.c, K(0), 1.0));
  merge(eta, close(U.d, K(1), 1.0));
  merge(eta, close(E.det(), K(1), 1.0));
  merge(eta, close(E.trace(), t, 1.0));
  const auto Qe = quadric_point(p, eta_point(p), cp);
  const Mat2<K> En = Qe.A.scaled(K(1) / Qe.e);
  merge(eta, close(En.a, E.a, 1.0));
  merge(eta, close(En.b, E.b, 1.0));
  merge(eta, close(En.c, E.c, 1.0));
  merge(eta, close(En.d, E.d, 1.0));
  // E fixes p and eta(p) as a Mobius map.
  for (const auto& x : {p, eta_point(p)}) {
    const auto fx = mobius_apply(E, x);
    double sc = std::max(1.0, magnitude(x.x1) * magnitude(x.x1) + magnitude(x.x2) * magnitude(x.x2));
    merge(eta, close(cross(fx, x), K(0), sc));
  }
  r["eta_unitary"] = eta;
  return r;
}

template <class K>
SampleResult fricke_sample(Rng& g) {
  SampleResult r;
  Mat2<K> B[3];
  for (auto& b : B) {
    if constexpr (std::is_same_v<K, Rational>) b = sl2_exact(g);
    else b = sl2_float(g);
  }
  const auto f = fricke_verify(B[0], B[1], B[2]);
  if constexpr (std::is_same_v<K, Rational>) r["fricke"] = {f.exact_zero, 0.0};
  else r["fricke"] = {f.residual < kSectionTol, f.residual};
  const auto z = z_relation_verify(B[0], B[1], B[2]);
  if constexpr (std::is_same_v<K, Rational>) r["z_relation"] = {z.z == z.word_value, 0.0};
  else r["z_relation"] = {z.residual < kSectionTol, z.residual};
  return r;
}

inline SweepReport run_sweep(const std::string& kind, std::size_t samples, std::uint64_t seed, Backend backend,
                             SampleResult (*sample)(Rng&, Backend), const std::map<std::string, double>& tol,
                             int threads) {
  std::vector<SampleResult> results(samples);
  parallel_for(samples, threads, [&](std::size_t i) {
    Rng g(splitmix(seed * 0x100000001b3ull + i));
    try {
      results[i] = sample(g, backend);
    } catch (const std::exception&) {
      results[i]["sample_error"] = {false, 0.0};
    }
  });
  SweepReport rep;
  rep.kind = kind;
  rep.backend = backend;
  rep.seed = seed;
  rep.samples = samples;
  for (const auto& [name, t] : tol) rep.checks[name].tolerance = backend == Backend::Exact ? 0.0 : t;
  for (const auto& res : results)
    for (const auto& [name, o] : res) {
      auto& t = rep.checks[name];
      ++t.count;
      if (!o.ok) ++t.failures;
      t.max_residual = std::max(t.max_residual, o.residual);
    }
  return rep;
}

inline SampleResult param_sample(Rng& g, Backend b) {
  SampleResult r = b == Backend::Exact ? section_sample<Rational>(g) : section_sample<Complex>(g);
  SampleResult f = b == Backend::Exact ? fixed_locus_sample<GaussianQ>(g) : fixed_locus_sample<Complex>(g);
  r.insert(f.begin(), f.end());
  return r;
}

inline SampleResult fricke_dispatch(Rng& g, Backend b) {
  return b == Backend::Exact ? fricke_sample<Rational>(g) : fricke_sample<Complex>(g);
}

}  // namespace detail

// Property sweep over the matrix family: quadric identities, equivariance, sigma symmetry,
// vanishing on representations, and the tau and eta fixed-locus matrices.
inline SweepReport param_check(std::size_t samples, std::uint64_t seed, Backend backend,
                               int threads = thread_count()) {
  const std::map<std::string, double> tol{{"quadric_identities", detail::kQuadricTol},
                                          {"equivariance", detail::kQuadricTol},
                                          {"sigma_symmetry", detail::kSectionTol},
                                          {"representation_zero", detail::kSectionTol},
                                          {"tau_real", detail::kQuadricTol},
                                          {"eta_unitary", detail::kQuadricTol}};
  return detail::run_sweep("check", samples, seed, backend, &detail::param_sample, tol, threads);
}

// Fricke cubic and z relation on random SL(2) triples.
inline SweepReport fricke_check(std::size_t samples, std::uint64_t seed, Backend backend,
                                int threads = thread_count()) {
  const std::map<std::string, double> tol{{"fricke", detail::kSectionTol}, {"z_relation", detail::kSectionTol}};
  return detail::run_sweep("fricke", samples, seed, backend, &detail::fricke_dispatch, tol, threads);
}

}  // namespace cvkit::quadric
