#pragma once
// Per-cell primitives for integrals of t^m * exp(-affine) over one grid cell.
// These are the exact building blocks behind every exponential path functional;
// m is the integer order of the logarithmic singularity carried by an extended
// path (m = 0 for ordinary paths).

#include <array>
#include <cmath>
#include <limits>

namespace glc::cellint {

// G_k(d) = int_0^1 s^k exp(-d s) ds, k >= 0.
inline double G(int k, double d) {
  if (std::abs(d) <= 1.0) {
    // series sum_n (-d)^n / (n! (k+n+1))
    double term = 1.0, sum = 1.0 / (k + 1);
    for (int n = 1; n < 30; ++n) {
      term *= -d / n;
      double add = term / (k + n + 1);
      sum += add;
      if (std::abs(add) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
  }
  double g = -std::expm1(-d) / d;
  for (int i = 1; i <= k; ++i) g = (i * g - std::exp(-d)) / d;
  return g;
}

// log of int_0^h (a + tau)^m exp(-(u0 + (u1-u0) tau/h)) dtau for integer m >= 0,
// a >= 0 (a is the distance of the cell start from the singular endpoint).
inline double log_cell_pos(int m, double a, double h, double u0, double u1) {
  double d = u1 - u0;
  if (m == 0) return std::log(h) - u0 + std::log(G(0, d));
  // binomial expansion in tau; all terms positive
  double lmax = -std::numeric_limits<double>::infinity();
  std::array<double, 8> logs{};
  double logC = 0;  // log C(m, k)
  for (int k = 0; k <= m; ++k) {
    if (k > 0) logC += std::log(static_cast<double>(m - k + 1) / k);
    double l = logC + (k + 1) * std::log(h) - u0 + std::log(G(k, d));
    if (a > 0)
      l += (m - k) * std::log(a);
    else if (k != m)
      l = -std::numeric_limits<double>::infinity();
    logs[static_cast<size_t>(k)] = l;
    lmax = std::max(lmax, l);
  }
  double s = 0;
  for (int k = 0; k <= m; ++k) s += std::exp(logs[static_cast<size_t>(k)] - lmax);
  return lmax + std::log(s);
}

// log of int over one cell of t^m exp(-u(t)) for negative m (cell must not touch
// t = 0). Gauss-Legendre of order 16 on the analytic integrand exp(m log t - u).
inline double log_cell_neg(int m, double a, double h, double u0, double u1) {
  static const double xs[8] = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
                               0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
                               0.9445750230732326, 0.9894009349916499};
  static const double ws[8] = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
                               0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
                               0.0622535239386479, 0.0271524594117541};
  double c = a + 0.5 * h, r = 0.5 * h;
  double lmax = -std::numeric_limits<double>::infinity();
  double g[16];
  for (int i = 0; i < 8; ++i)
    for (int sgn = 0; sgn < 2; ++sgn) {
      double t = c + (sgn ? r * xs[i] : -r * xs[i]);
      double frac = (t - a) / h;
      double val = m * std::log(t) - (u0 + (u1 - u0) * frac) + std::log(ws[i] * r);
      g[2 * i + sgn] = val;
      lmax = std::max(lmax, val);
    }
  double s = 0;
  for (double v : g) s += std::exp(v - lmax);
  return lmax + std::log(s);
}

inline double log_cell(int m, double a, double h, double u0, double u1) {
  return m >= 0 ? log_cell_pos(m, a, h, u0, u1) : log_cell_neg(m, a, h, u0, u1);
}

// Ordered double integral over one cell of exp(-b(r)) exp(-a(s)), r <= s,
// a, b affine with endpoint values (a0,a1), (b0,b1). Exact for m = 0 cells.
inline double cell_double(double h, double a0, double a1, double b0, double b1) {
  double da = a1 - a0, db = b1 - b0;
  double diff;  // (G0(da) - G0(da+db)) / db
  if (std::abs(db) < 1e-5) {
    diff = G(1, da) - 0.5 * db * G(2, da) + db * db / 6.0 * G(3, da);
  } else {
    diff = (G(0, da) - G(0, da + db)) / db;
  }
  return h * h * std::exp(-a0 - b0) * diff;
}

}  // namespace glc::cellint
