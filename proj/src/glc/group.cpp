#include "glc/group.hpp"

#include <cmath>

namespace glc {

GroupPicture::GroupPicture(const RootSystem* rs) : rs_(rs) {
  if (rs->type().family != 'A')
    throw GlcError("UnsupportedType", "matrix realization exists for type A only");
  n_ = rs->rank() + 1;
  wbar0_ = wbar(rs->canonical_word(rs->longest()));
  epsilon_ = MatrixXd::Identity(n_, n_);
  for (int i = 1; i < n_; i += 2) epsilon_(i, i) = -1;
}

MatrixXd GroupPicture::x(int i, double t) const {
  MatrixXd m = MatrixXd::Identity(n_, n_);
  m(i, i + 1) = t;
  return m;
}
MatrixXd GroupPicture::y(int i, double t) const {
  MatrixXd m = MatrixXd::Identity(n_, n_);
  m(i + 1, i) = t;
  return m;
}

VectorXd GroupPicture::to_diag(const VectorXd& ambient) const {
  if (rs_->rank() == 1) {
    VectorXd d(2);
    d << ambient[0], -ambient[0];
    return d;
  }
  return ambient;
}
VectorXd GroupPicture::from_diag(const VectorXd& diag) const {
  if (rs_->rank() == 1) {
    VectorXd a(1);
    a << 0.5 * (diag[0] - diag[1]);
    return a;
  }
  return diag;
}

MatrixXd GroupPicture::torus(const VectorXd& ambient) const {
  VectorXd d = to_diag(ambient);
  MatrixXd m = MatrixXd::Zero(n_, n_);
  for (int i = 0; i < n_; ++i) m(i, i) = std::exp(d[i]);
  return m;
}

MatrixXd GroupPicture::sbar(int i) const { return x(i, -1) * y(i, 1) * x(i, -1); }

MatrixXd GroupPicture::wbar(const Word& word) const {
  MatrixXd m = MatrixXd::Identity(n_, n_);
  for (int i : word) m = m * sbar(i);
  return m;
}

GroupPicture::Gauss GroupPicture::gauss(const MatrixXd& g) const {
  double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
  MatrixXd u = g;
  MatrixXd l = MatrixXd::Identity(n_, n_);
  for (int k = 0; k < n_; ++k) {
    double piv = u(k, k);
    if (std::abs(piv) < 1e-13 * scale)
      throw GlcError("SingularPrincipalMinor", "no Gauss decomposition");
    for (int r = k + 1; r < n_; ++r) {
      double f = u(r, k) / piv;
      l(r, k) = f;
      u.row(r) -= f * u.row(k);
    }
  }
  Gauss out;
  out.lower = l;
  out.a_log = VectorXd(n_);
  for (int i = 0; i < n_; ++i) {
    if (u(i, i) <= 0) throw GlcError("SingularPrincipalMinor", "torus part not positive");
    out.a_log[i] = std::log(u(i, i));
    u.row(i) /= u(i, i);
  }
  out.upper = u;
  return out;
}

MatrixXd GroupPicture::gauss_minus0(const MatrixXd& g) const {
  Gauss d = gauss(g);
  MatrixXd m = d.lower;
  for (int j = 0; j < n_; ++j) m.col(j) *= std::exp(d.a_log[j]);
  return m;
}

double GroupPicture::minor(const MatrixXd& g, const Word& u, const Word& v, int i) const {
  MatrixXd m = wbar(u).inverse() * g * wbar(v);
  return m.topLeftCorner(i, i).determinant();
}

bool GroupPicture::totally_positive_N(const MatrixXd& xel, double tol) const {
  const Word& word = rs_->canonical_word(rs_->longest());
  int m = static_cast<int>(word.size());
  for (int k = 0; k < m; ++k) {
    Word wk(word.begin() + k, word.end());
    MatrixXd g = wbar(wk).inverse() * xel;
    if (g.topLeftCorner(word[static_cast<size_t>(k)] + 1, word[static_cast<size_t>(k)] + 1)
            .determinant() <= tol)
      return false;
  }
  return true;
}

GroupPicture::Flow GroupPicture::flow(const PathX& pi, bool theta_shift) const {
  if (!pi.plain()) throw GlcError("InvalidState", "flow needs a plain path");
  int N = pi.segments();
  double h = pi.dt();
  std::vector<double> kappa(static_cast<size_t>(rs_->rank()), 1.0);
  if (theta_shift)
    for (int i = 0; i < rs_->rank(); ++i) kappa[static_cast<size_t>(i)] = rs_->root_norm2(i) / 2;

  auto driver = [&](const VectorXd& u) {  // u = values alpha_i(pi(t))
    MatrixXd L = MatrixXd::Zero(n_, n_);
    for (int i = 0; i < rs_->rank(); ++i)
      L(i + 1, i) = kappa[static_cast<size_t>(i)] * std::exp(-u[i]);
    return L;
  };
  MatrixXd ua(N + 1, rs_->rank());
  for (int i = 0; i < rs_->rank(); ++i) ua.col(i) = pi.reg() * rs_->simple_root(i);

  auto integrate = [&](int sub) {
    MatrixXd Nt = MatrixXd::Identity(n_, n_);
    for (int j = 0; j < N; ++j) {
      double hs = h / sub;
      for (int s = 0; s < sub; ++s) {
        auto uat = [&](double frac) {
          double f = (s + frac) / sub;
          return VectorXd(ua.row(j) * (1 - f) + ua.row(j + 1) * f);
        };
        MatrixXd k1 = Nt * driver(uat(0.0));
        MatrixXd k2 = (Nt + 0.5 * hs * k1) * driver(uat(0.5));
        MatrixXd k3 = (Nt + 0.5 * hs * k2) * driver(uat(0.5));
        MatrixXd k4 = (Nt + hs * k3) * driver(uat(1.0));
        Nt += (hs / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4);
      }
    }
    return Nt;
  };
  int sub = 1;
  MatrixXd Nt = integrate(sub);
  for (; sub <= 32; sub *= 2) {
    MatrixXd N2 = integrate(2 * sub);
    double rel = (N2 - Nt).cwiseAbs().maxCoeff() / std::max(1.0, N2.cwiseAbs().maxCoeff());
    Nt = N2;
    if (rel < 1e-10) break;
    if (sub == 32) throw GlcError("StepSizeUnderflow", "flow integrator did not settle");
  }
  Flow out;
  out.N = Nt;
  out.a_log = to_diag(pi.endpoint());
  out.B = Nt;
  for (int j = 0; j < n_; ++j) out.B.col(j) *= std::exp(out.a_log[j]);
  return out;
}

VectorXd GroupPicture::hw(const MatrixXd& g) const {
  return from_diag(gauss(wbar0_.inverse() * g).a_log);
}
VectorXd GroupPicture::gamma(const MatrixXd& g) const { return from_diag(gauss(g).a_log); }

double GroupPicture::eps_group(const MatrixXd& g, int i) const {
  return gauss(g).lower(i + 1, i);
}
double GroupPicture::phi_group(const MatrixXd& g, int i) const {
  return eps_group(g, i) * std::exp(rs_->root_pair(i, gamma(g)));
}
double GroupPicture::chi_lower(const MatrixXd& g) const {
  MatrixXd l = gauss(g).lower;
  double s = 0;
  for (int i = 0; i + 1 < n_; ++i) s += l(i + 1, i);
  return s;
}
double GroupPicture::chi_upper(const MatrixXd& u) const {
  double s = 0;
  for (int i = 0; i + 1 < n_; ++i) s += u(i, i + 1);
  return s;
}

MatrixXd GroupPicture::crystal_action(const MatrixXd& g, int i, double c) const {
  double eps = eps_group(g, i);
  return gauss_minus0(x(i, std::expm1(c) / eps) * g);
}

MatrixXd GroupPicture::iota_g(const MatrixXd& g) const {
  return epsilon_ * g.inverse() * epsilon_;
}
MatrixXd GroupPicture::schutzenberger_g(const MatrixXd& g) const {
  return wbar0_ * epsilon_ * g.transpose() * epsilon_ * wbar0_.inverse();
}

MatrixXd GroupPicture::rho_L(const MatrixXd& xel) const {
  return iota_g(gauss(wbar0_.inverse() * iota_g(xel)).upper);
}
MatrixXd GroupPicture::rho_T(const MatrixXd& xel) const {
  return gauss(wbar0_.inverse() * xel).upper;
}
MatrixXd GroupPicture::rho_K(const MatrixXd& xel) const {
  Gauss inner = gauss(xel);
  MatrixXd g = wbar0_.inverse() * inner.lower;
  Gauss d = gauss(g);
  MatrixXd au = d.upper;
  for (int i = 0; i < n_; ++i) au.row(i) *= std::exp(d.a_log[i]);
  return au.transpose();
}

MatrixXd GroupPicture::b_L(const VectorXd& lam, const MatrixXd& z) const {
  return gauss_minus0(z * wbar0_) * torus(lam);
}
MatrixXd GroupPicture::b_K(const VectorXd& lam, const MatrixXd& v) const {
  return gauss_minus0(eta_w0_e(v) * wbar0_) * torus(lam);
}
MatrixXd GroupPicture::b_T(const VectorXd& lam, const MatrixXd& u) const {
  MatrixXd tl = torus(lam);
  MatrixXd yv = tl.inverse() * eta_w0(u) * tl;
  return schutzenberger_g(iota_g(yv)) * wbar0_ * tl * u;
}

MatrixXd GroupPicture::xu(const Word& word, const std::vector<double>& t) const {
  if (word.size() != t.size()) throw GlcError("InvalidState", "length mismatch");
  MatrixXd m = MatrixXd::Identity(n_, n_);
  for (size_t k = 0; k < word.size(); ++k) m = m * x(word[k], t[k]);
  return m;
}

MatrixXd GroupPicture::x_minus(const Word& word, const std::vector<double>& c) const {
  if (word.size() != c.size()) throw GlcError("InvalidState", "length mismatch");
  MatrixXd m = MatrixXd::Identity(n_, n_);
  for (size_t k = 0; k < word.size(); ++k) {
    if (!(c[k] > 0)) throw GlcError("NonPositiveParameter", "string coordinates are positive");
    m = m * y(word[k], c[k]) * torus(-std::log(c[k]) * rs_->simple_coroot(word[k]));
  }
  return m;
}

MatrixXd GroupPicture::eta_w0(const MatrixXd& u) const {
  return gauss(wbar0_.inverse() * u.transpose()).upper;
}
MatrixXd GroupPicture::eta_e_w0(const MatrixXd& u) const {
  return gauss_minus0(wbar0_.inverse() * u.transpose()).inverse();
}
MatrixXd GroupPicture::eta_w0_e(const MatrixXd& v) const {
  return gauss(MatrixXd((wbar0_ * v.transpose()).inverse())).upper;
}

std::vector<double> GroupPicture::string_coords_of_N(MatrixXd npart, const Word& word) const {
  std::vector<double> out;
  for (int i : word) {
    MatrixXd g = sbar(i).inverse() * npart;
    Gauss d = gauss(g);
    // [g]_0 = c^{-alpha_i_vee} in diagonal coordinates
    double logc = -d.a_log[i];
    out.push_back(std::exp(logc));
    npart = d.lower;
  }
  return out;
}

double GroupPicture::f_B(const MatrixXd& xel) const {
  Gauss d = gauss(wbar0_.inverse() * xel);
  MatrixXd z = wbar0_ * d.lower * wbar0_.inverse();
  return chi_upper(z) + chi_upper(d.upper);
}

MatrixXd GroupPicture::minimize_fB(const VectorXd& lam, double* fmin) const {
  const Word& word = rs_->canonical_word(rs_->longest());
  int m = static_cast<int>(word.size());
  auto eval = [&](const VectorXd& xi) {
    std::vector<double> t(static_cast<size_t>(m));
    for (int k = 0; k < m; ++k) t[static_cast<size_t>(k)] = std::exp(xi[k]);
    return f_B(b_T(lam, xu(word, t)));
  };
  VectorXd xi = VectorXd::Zero(m);
  double f = eval(xi);
  double fd = 1e-5;
  for (int iter = 0; iter < 200; ++iter) {
    VectorXd grad(m);
    MatrixXd hess(m, m);
    for (int a = 0; a < m; ++a) {
      VectorXd e = VectorXd::Zero(m);
      e[a] = fd;
      grad[a] = (eval(xi + e) - eval(xi - e)) / (2 * fd);
      hess(a, a) = (eval(xi + e) - 2 * f + eval(xi - e)) / (fd * fd);
      for (int b = a + 1; b < m; ++b) {
        VectorXd eb = VectorXd::Zero(m);
        eb[b] = fd;
        hess(a, b) = hess(b, a) = (eval(xi + e + eb) - eval(xi + e - eb) - eval(xi - e + eb) +
                                   eval(xi - e - eb)) /
                                  (4 * fd * fd);
      }
    }
    if (grad.norm() < 1e-11) break;
    VectorXd step = hess.ldlt().solve(grad);
    if (!step.allFinite() || step.dot(grad) <= 0) step = grad;  // fall back to gradient
    double scale = 1.0;
    for (int ls = 0; ls < 40; ++ls, scale *= 0.5) {
      double fn = eval(xi - scale * step);
      if (fn < f) {
        xi -= scale * step;
        f = fn;
        break;
      }
      if (ls == 39) {
        if (grad.norm() < 1e-7) goto done;
        throw GlcError("NoConvergence", "superpotential minimization stalled");
      }
    }
  }
done:
  if (fmin) *fmin = f;
  std::vector<double> t(static_cast<size_t>(m));
  for (int k = 0; k < m; ++k) t[static_cast<size_t>(k)] = std::exp(xi[k]);
  return b_T(lam, xu(word, t));
}

double GroupPicture::central_charge(const MatrixXd& b1, const MatrixXd& b2) const {
  return f_B(b1) + f_B(b2) - f_B(b1 * b2);
}

}  // namespace glc
