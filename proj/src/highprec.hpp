// Internal extended-precision kernel (not installed). The Fox pipeline's 3x3
// Laurent determinant cancels catastrophically in double once representation
// entries reach ~1e5, and companion-matrix roots of high-degree Riley
// polynomials arrive with ~1e-6 error in tight clusters; both are cured by
// evaluating through 113-bit complex arithmetic and rounding at the end.
#pragma once

#include <boost/multiprecision/cpp_complex.hpp>
#include <complex>
#include <map>
#include <vector>

#include "atap/freegroup_fox.hpp"

namespace atap::detail {

using qcplx = boost::multiprecision::cpp_complex_quad;

inline std::complex<double> to_double(const qcplx& v) {
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}
inline qcplx to_quad(std::complex<double> v) { return qcplx(v.real(), v.imag()); }

// ---------------------------------------------------------------------------
// Scalar formula cores, templated over the complex type.
// ---------------------------------------------------------------------------

template <class C>
C cheb_eval_t(long k, const C& v) {
  if (k >= 0) {
    C prev(0.0);  // S_{-1}
    C cur(1.0);   // S_0
    for (long i = 0; i < k; ++i) {
      const C next = v * cur - prev;
      prev = cur;
      cur = next;
    }
    return cur;
  }
  C above(1.0);  // S_0
  C cur(0.0);    // S_{-1}
  for (long i = -1; i > k; --i) {
    const C below = v * cur - above;
    above = cur;
    cur = below;
  }
  return cur;
}

template <class C>
C trace_z_t(int m, const C& y, const C& x) {
  const C sm = cheb_eval_t<C>(m, y);
  const C sm1 = cheb_eval_t<C>(m - 1, y);
  return C(2.0) * sm * sm - C(2.0) * y * sm * sm1 +
         (y * y - x * x * y + C(2.0) * x * x - C(2.0)) * sm1 * sm1;
}

template <class C>
C riley_eval_t(const KnotParams& params, const C& s, const C& y) {
  const C x = s + C(1.0) / s;
  const C z = trace_z_t<C>(params.m, y, x);
  const C sm1 = cheb_eval_t<C>(params.m - 1, y);
  const C sm2 = cheb_eval_t<C>(params.m - 2, y);
  const C pref = C(1.0) - (y + C(2.0) - x * x) * sm1 * (sm1 - sm2);
  return cheb_eval_t<C>(params.n - 2, z) - pref * cheb_eval_t<C>(params.n - 1, z);
}

// ---------------------------------------------------------------------------
// Fixed-size matrices over C.
// ---------------------------------------------------------------------------

template <class C>
struct M2t {
  C a11, a12, a21, a22;
};

// rho(w) = [[w11, w12], [(2-y) w12, w22]] in closed Chebyshev form.
template <class C>
M2t<C> rho_w_closed_t(int m, const C& s, const C& y) {
  const C sm = cheb_eval_t<C>(m, y);
  const C sm1 = cheb_eval_t<C>(m - 1, y);
  const C si = C(1.0) / s;
  const C w11 = sm * sm + (C(2.0) - C(2.0) * y) * sm * sm1 +
                (C(1.0) + C(2.0) * s * s - C(2.0) * y - s * s * y + y * y) * sm1 * sm1;
  const C w12 = (si - s) * sm * sm1 + (si + s - si * y) * sm1 * sm1;
  const C w22 =
      sm * sm - C(2.0) * sm * sm1 + (C(1.0) + C(2.0) * si * si - si * si * y) * sm1 * sm1;
  return {w11, w12, (C(2.0) - y) * w12, w22};
}

template <class C>
M2t<C> mul2(const M2t<C>& A, const M2t<C>& B) {
  return {A.a11 * B.a11 + A.a12 * B.a21, A.a11 * B.a12 + A.a12 * B.a22,
          A.a21 * B.a11 + A.a22 * B.a21, A.a21 * B.a12 + A.a22 * B.a22};
}

template <class C>
M2t<C> inv2_unimodular(const M2t<C>& A) {
  return {A.a22, -A.a12, -A.a21, A.a11};
}

template <class C>
M2t<C> eval_word_t(const Word& u, const M2t<C>& rho_a, const M2t<C>& rho_b) {
  M2t<C> acc{C(1.0), C(0.0), C(0.0), C(1.0)};
  for (const Syllable& s : u.syllables()) {
    const M2t<C>& g = (s.g == Gen::a) ? rho_a : rho_b;
    const M2t<C> base = s.e >= 0 ? g : inv2_unimodular(g);
    const long count = s.e >= 0 ? s.e : -s.e;
    for (long i = 0; i < count; ++i) acc = mul2(acc, base);
  }
  return acc;
}

template <class C>
struct M3t {
  C e[3][3]{};
};

// The geometric-sum entry table over (mu^2 - 4): the closed form of
// sum_{i=0}^{n-1} (Ad_M)^i for M = [[e,f],[g,h]], mu = tr M, with X, Y
// standing for S_{n-1}^2(mu), S_{n-1}(mu) S_{n-2}(mu) or their on-variety
// substitutes.
template <class C>
M3t<C> geom_sum_table_t(const C& e, const C& f, const C& g, const C& h, const C& mu,
                        double n, const C& X, const C& Y) {
  const C twoXY = C(2.0) * X - mu * Y;
  const C nn(n);
  M3t<C> Cm;
  Cm.e[0][0] = C(2.0) * nn * f * g + h * h * twoXY - C(2.0) * h * (mu * X - C(2.0) * Y) +
               (mu * mu - C(2.0)) * X - mu * Y;
  Cm.e[0][1] = C(2.0) * f * (nn * (e - h) + h * twoXY - mu * X + C(2.0) * Y);
  Cm.e[0][2] = f * f * (C(2.0) * nn - C(2.0) * X + mu * Y);
  Cm.e[1][0] = -g * (nn * (h - e) - h * twoXY + mu * X - C(2.0) * Y);
  Cm.e[1][1] = nn * (e - h) * (e - h) + C(2.0) * f * g * twoXY;
  Cm.e[1][2] = f * (nn * (e - h) + h * twoXY - mu * X + (mu * mu - C(2.0)) * Y);
  Cm.e[2][0] = g * g * (C(2.0) * nn - C(2.0) * X + mu * Y);
  Cm.e[2][1] = -C(2.0) * g * (nn * (h - e) - h * twoXY + mu * X - (mu * mu - C(2.0)) * Y);
  Cm.e[2][2] = C(2.0) * nn * f * g + h * h * twoXY -
               C(2.0) * h * (mu * X - (mu * mu - C(2.0)) * Y) + (mu * mu - C(2.0)) * X -
               (mu * mu * mu - C(3.0) * mu) * Y;
  const C pref = C(1.0) / (mu * mu - C(4.0));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) Cm.e[i][j] *= pref;
  return Cm;
}

// Adjoint action table in the basis {E, H, F}; no unimodularity check (the
// caller feeds exact products of SL_2 generator images).
template <class C>
M3t<C> ad_t(const M2t<C>& M) {
  const C &e = M.a11, &f = M.a12, &g = M.a21, &h = M.a22;
  M3t<C> A;
  A.e[0][0] = e * e;
  A.e[0][1] = C(-2.0) * e * f;
  A.e[0][2] = -f * f;
  A.e[1][0] = -e * g;
  A.e[1][1] = e * h + f * g;
  A.e[1][2] = f * h;
  A.e[2][0] = -g * g;
  A.e[2][1] = C(2.0) * g * h;
  A.e[2][2] = h * h;
  return A;
}

// ---------------------------------------------------------------------------
// Laurent arithmetic over C (minimal: only what the determinant and the
// Wada quotient need).
// ---------------------------------------------------------------------------

template <class C>
struct LaurentT {
  long min_exp = 0;
  std::vector<C> coeffs;
  bool is_zero() const { return coeffs.empty(); }
};

template <class C>
LaurentT<C> lt_add(const LaurentT<C>& a, const LaurentT<C>& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const long lo = std::min(a.min_exp, b.min_exp);
  const long hi = std::max(a.min_exp + static_cast<long>(a.coeffs.size()),
                           b.min_exp + static_cast<long>(b.coeffs.size()));
  LaurentT<C> r;
  r.min_exp = lo;
  r.coeffs.assign(hi - lo, C(0.0));
  for (size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[a.min_exp + i - lo] += a.coeffs[i];
  for (size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[b.min_exp + i - lo] += b.coeffs[i];
  return r;
}

template <class C>
LaurentT<C> lt_sub(const LaurentT<C>& a, const LaurentT<C>& b) {
  LaurentT<C> nb = b;
  for (C& c : nb.coeffs) c = -c;
  return lt_add(a, nb);
}

template <class C>
LaurentT<C> lt_mul(const LaurentT<C>& a, const LaurentT<C>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  LaurentT<C> r;
  r.min_exp = a.min_exp + b.min_exp;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, C(0.0));
  for (size_t i = 0; i < a.coeffs.size(); ++i)
    for (size_t j = 0; j < b.coeffs.size(); ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  return r;
}

template <class C>
double lt_sup_norm(const LaurentT<C>& a) {
  double s = 0.0;
  for (const C& c : a.coeffs) s = std::max(s, static_cast<double>(abs(c)));
  return s;
}

// Trim ends relative to the sup norm (mirrors LaurentPoly::canonicalize).
template <class C>
void lt_trim(LaurentT<C>& a, double rel_tol) {
  const double thresh = rel_tol * lt_sup_norm(a);
  size_t lo = 0, hi = a.coeffs.size();
  while (lo < hi && static_cast<double>(abs(a.coeffs[lo])) <= thresh) ++lo;
  while (hi > lo && static_cast<double>(abs(a.coeffs[hi - 1])) <= thresh) --hi;
  if (lo == hi) {
    a.min_exp = 0;
    a.coeffs.clear();
    return;
  }
  a.coeffs = std::vector<C>(a.coeffs.begin() + lo, a.coeffs.begin() + hi);
  a.min_exp += static_cast<long>(lo);
}

template <class C>
struct Mat3LaurentT {
  LaurentT<C> e[3][3];
};

template <class C>
LaurentT<C> lt_det3(const Mat3LaurentT<C>& M) {
  auto minor2 = [&](int r0, int r1, int c0, int c1) {
    return lt_sub(lt_mul(M.e[r0][c0], M.e[r1][c1]), lt_mul(M.e[r0][c1], M.e[r1][c0]));
  };
  return lt_add(lt_sub(lt_mul(M.e[0][0], minor2(1, 2, 1, 2)),
                       lt_mul(M.e[0][1], minor2(1, 2, 0, 2))),
                lt_mul(M.e[0][2], minor2(1, 2, 0, 1)));
}

// Phi over C: each word contributes coeff * t^(exponent sum) * Ad(rho(word)).
template <class C>
Mat3LaurentT<C> phi_map_t(const GroupRingElt& elt, const M2t<C>& rho_a,
                          const M2t<C>& rho_b) {
  std::map<long, M3t<C>> slices;
  for (const auto& [word, coeff] : elt.terms()) {
    const long k = word.exponent_sum();
    const M3t<C> A = ad_t(eval_word_t(word, rho_a, rho_b));
    auto [it, inserted] = slices.try_emplace(k);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) it->second.e[i][j] += C(double(coeff)) * A.e[i][j];
  }
  Mat3LaurentT<C> M;
  for (const auto& [k, slice] : slices)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        LaurentT<C> mono;
        mono.min_exp = k;
        mono.coeffs = {slice.e[i][j]};
        M.e[i][j] = lt_add(M.e[i][j], mono);
      }
  return M;
}

// Long division; returns false when the remainder exceeds rel_tol * ||num||.
template <class C>
bool lt_div(const LaurentT<C>& num, const LaurentT<C>& den, double rel_tol,
            LaurentT<C>& quotient, double& rel_remainder) {
  std::vector<C> rem = num.coeffs;
  const std::vector<C>& d = den.coeffs;
  const long qdeg = static_cast<long>(rem.size()) - static_cast<long>(d.size());
  if (qdeg < 0) return false;
  std::vector<C> q(qdeg + 1, C(0.0));
  const C dlead = d.back();
  for (long k = qdeg; k >= 0; --k) {
    const C f = rem[k + d.size() - 1] / dlead;
    q[k] = f;
    for (size_t j = 0; j < d.size(); ++j) rem[k + j] -= f * d[j];
  }
  double rem_norm = 0.0;
  for (const C& c : rem) rem_norm = std::max(rem_norm, static_cast<double>(abs(c)));
  const double num_norm = lt_sup_norm(num);
  rel_remainder = num_norm > 0.0 ? rem_norm / num_norm : rem_norm;
  quotient.min_exp = num.min_exp - den.min_exp;
  quotient.coeffs = std::move(q);
  return rel_remainder <= rel_tol;
}

}  // namespace atap::detail
