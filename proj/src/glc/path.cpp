#include "glc/path.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "glc/cellint.hpp"
#include "glc/stats.hpp"

namespace glc {

static constexpr double kInf = std::numeric_limits<double>::infinity();

PathX::PathX(const RootSystem* rs, double T, MatrixXd samples)
    : rs_(rs), T_(T), reg_(std::move(samples)) {
  v_ = VectorXd::Zero(rs->ambient_dim());
  if (reg_.cols() != rs->ambient_dim()) throw GlcError("InvalidState", "sample dimension");
  if (reg_.rows() < 2) throw GlcError("InvalidState", "need at least one segment");
}

PathX PathX::zero(const RootSystem* rs, double T, int N) {
  return PathX(rs, T, MatrixXd::Zero(N + 1, rs->ambient_dim()));
}

PathX PathX::linear(const RootSystem* rs, double T, int N, const VectorXd& drift) {
  MatrixXd m(N + 1, rs->ambient_dim());
  for (int j = 0; j <= N; ++j) m.row(j) = (T * j / N) * drift.transpose();
  return PathX(rs, T, std::move(m));
}

VectorXd PathX::value(int j) const {
  double t = time(j);
  if (div_ == Divergence::Start && j == 0)
    throw GlcError("InvalidState", "path diverges at t=0");
  if (div_ == Divergence::End && j == segments())
    throw GlcError("InvalidState", "path diverges at t=T");
  VectorXd out = reg_.row(j);
  if (div_ == Divergence::Start) out += std::log(t) * v_;
  if (div_ == Divergence::End) out += std::log(T_ - t) * v_;
  return out;
}

VectorXd PathX::endpoint() const { return value(segments()); }

PathX PathX::scaled(double s) const {
  PathX out = *this;
  out.reg_ *= s;
  out.v_ *= s;
  return out;
}

PathX PathX::time_flip() const {
  PathX out = *this;
  out.reg_ = reg_.colwise().reverse().eval();
  if (div_ == Divergence::Start) out.div_ = Divergence::End;
  else if (div_ == Divergence::End) out.div_ = Divergence::Start;
  return out;
}

PathX PathX::with_meta(Divergence d, VectorXd v, int wtype) const {
  PathX out = *this;
  out.div_ = d;
  out.v_ = std::move(v);
  out.wtype_ = wtype;
  return out;
}

// ---------------------------------------------------------------------------
// q = 1 kernels. All operate on plain or start-divergent paths; end-divergent
// inputs are handled by time_flip at the call sites.

namespace {

int log_order(const PathX& pi, int i) {
  // m such that exp(-alpha_i(pi(t))) ~ t^m near the divergent start
  double m = -pi.rs().root_pair(i, pi.log_coeff());
  long r = llround(m);
  if (std::abs(m - static_cast<double>(r)) > 1e-6)
    throw GlcError("Internal", "non-integer singularity order");
  return static_cast<int>(r);
}

// log of int_0^{t_j} t^m exp(-alpha_i(r(t))) dt for every grid point.
std::vector<double> forward_logF(const PathX& pi, int i) {
  int N = pi.segments();
  int m = pi.plain() ? 0 : log_order(pi, i);
  if (m < 0) throw GlcError("BruhatOrderViolation", "integrand not integrable near t=0");
  double h = pi.dt();
  VectorXd u = pi.reg() * pi.rs().simple_root(i);
  std::vector<double> out(static_cast<size_t>(N) + 1);
  LogAccumulator acc;
  out[0] = -kInf;
  for (int j = 0; j < N; ++j) {
    acc.add_log(cellint::log_cell(m, pi.time(j), h, u[j], u[j + 1]));
    out[static_cast<size_t>(j) + 1] = acc.log_sum();
  }
  return out;
}

// log of int_{t_j}^T t^m exp(-alpha_i(r(t))) dt; for m <= -2 the j = 0 entry is
// +inf (never used directly, the new asymptote is handled analytically).
std::vector<double> backward_logB(const PathX& pi, int i) {
  int N = pi.segments();
  int m = pi.plain() ? 0 : log_order(pi, i);
  if (m == -1) throw GlcError("Internal", "order -1 cannot occur on Bruhat steps");
  double h = pi.dt();
  VectorXd u = pi.reg() * pi.rs().simple_root(i);
  std::vector<double> out(static_cast<size_t>(N) + 1);
  LogAccumulator acc;
  out[static_cast<size_t>(N)] = -kInf;
  int jmin = (m < 0) ? 1 : 0;
  for (int j = N - 1; j >= jmin; --j) {
    acc.add_log(cellint::log_cell(m, pi.time(j), h, u[j], u[j + 1]));
    out[static_cast<size_t>(j)] = acc.log_sum();
  }
  if (m < 0) out[0] = kInf;
  return out;
}

int right_mul_gen(const RootSystem& rs, int w, int i) {
  // w * s_i = (s_i * w^{-1})^{-1}
  return rs.inverse(rs.mul_gen(i, rs.inverse(w)));
}

void check_asymptote(const PathX& p) {
  if (p.plain()) return;
  const RootSystem& rs = p.rs();
  VectorXd expect = rs.rho_covee() - rs.act(rs.inverse(p.weyl_type()), rs.rho_covee());
  if ((expect - p.log_coeff()).norm() > 1e-6)
    throw GlcError("Internal", "asymptote coefficient inconsistent with Weyl type");
}

// pi + log(c + int_0^t e^{-alpha(pi)}) alpha_vee; c = 0 is the transform T_alpha.
PathX kernel_forward(const PathX& pi, int i, double c) {
  const RootSystem& rs = pi.rs();
  if (pi.divergence() == Divergence::End) throw GlcError("Internal", "kernel_forward on end-divergent path");
  check_asymptote(pi);
  int m = pi.plain() ? 0 : log_order(pi, i);
  auto logF = forward_logF(pi, i);
  const VectorXd& av = rs.simple_coroot(i);
  int N = pi.segments();
  PathX out = pi;
  if (c > 0) {
    double lc = std::log(c);
    for (int j = 0; j <= N; ++j)
      out.reg().row(j) += log_add_exp(lc, logF[static_cast<size_t>(j)]) * av.transpose();
    return out;
  }
  // c = 0: the asymptote ascends by (m+1) alpha_vee and the type by s_alpha
  for (int j = 1; j <= N; ++j)
    out.reg().row(j) += (logF[static_cast<size_t>(j)] - (m + 1) * std::log(pi.time(j))) *
                        av.transpose();
  double u0 = rs.root_pair(i, pi.reg().row(0));
  out.reg().row(0) += (-u0 - std::log(static_cast<double>(m) + 1.0)) * av.transpose();
  int wtype = right_mul_gen(rs, pi.weyl_type(), i);
  PathX res = out.with_meta(Divergence::Start, pi.log_coeff() + (m + 1) * av, wtype);
  check_asymptote(res);
  return res;
}

// pi + log(c + int_t^T e^{-alpha(pi)}) alpha_vee, c > 0 (string reconstruction
// step when the start order is <= -2; type descends by s_alpha).
PathX kernel_backward(const PathX& pi, int i, double c) {
  const RootSystem& rs = pi.rs();
  if (pi.divergence() == Divergence::End) throw GlcError("Internal", "kernel_backward on end-divergent path");
  if (!(c > 0)) throw GlcError("NonPositiveParameter", "backward kernel needs c > 0");
  check_asymptote(pi);
  int m = pi.plain() ? 0 : log_order(pi, i);
  auto logB = backward_logB(pi, i);
  const VectorXd& av = rs.simple_coroot(i);
  int N = pi.segments();
  double lc = std::log(c);
  PathX out = pi;
  if (m >= 0) {
    for (int j = 0; j <= N; ++j)
      out.reg().row(j) += log_add_exp(lc, logB[static_cast<size_t>(j)]) * av.transpose();
    return out;
  }
  for (int j = 1; j <= N; ++j)
    out.reg().row(j) += (log_add_exp(lc, logB[static_cast<size_t>(j)]) -
                         (m + 1) * std::log(pi.time(j))) *
                        av.transpose();
  double u0 = rs.root_pair(i, pi.reg().row(0));
  out.reg().row(0) += (-u0 - std::log(-(static_cast<double>(m) + 1.0))) * av.transpose();
  int wtype = right_mul_gen(rs, pi.weyl_type(), i);
  VectorXd v = pi.log_coeff() + (m + 1) * av;
  if (wtype == rs.identity() && v.norm() < 1e-9)
    return out.with_meta(Divergence::None, VectorXd::Zero(v.size()), wtype);
  PathX res = out.with_meta(Divergence::Start, std::move(v), wtype);
  check_asymptote(res);
  return res;
}

PathX require_q1(const PathX& pi, double q) {
  if (!(q > 0)) throw GlcError("InvalidState", "operation needs q > 0");
  return q == 1.0 ? pi : pi.scaled(1.0 / q);
}
PathX back_q(PathX pi, double q) { return q == 1.0 ? pi : pi.scaled(q); }

VectorXd running_min_fwd(const PathX& pi, int i) {
  VectorXd u = pi.reg() * pi.rs().simple_root(i);
  for (int j = 1; j < u.size(); ++j) u[j] = std::min(u[j], u[j - 1]);
  return u;
}
VectorXd running_min_bwd(const PathX& pi, int i) {
  VectorXd u = pi.reg() * pi.rs().simple_root(i);
  for (int j = static_cast<int>(u.size()) - 2; j >= 0; --j) u[j] = std::min(u[j], u[j + 1]);
  return u;
}

}  // namespace

// ---------------------------------------------------------------------------

double log_exp_functional(const PathX& pi, int i, double q, double a, double b) {
  if (!(q > 0)) throw GlcError("InvalidState", "log_exp_functional needs q > 0");
  if (!(b > a)) throw GlcError("EmptyInterval", "need b > a");
  PathX p = require_q1(pi, q);
  double h = p.dt();
  int ja = static_cast<int>(llround(a / h)), jb = static_cast<int>(llround(b / h));
  if (std::abs(ja * h - a) > 1e-9 * p.horizon() || std::abs(jb * h - b) > 1e-9 * p.horizon())
    throw GlcError("InvalidState", "interval endpoints must lie on the grid");
  int m = p.plain() ? 0 : (p.divergence() == Divergence::Start ? log_order(p, i) : 0);
  if (p.divergence() == Divergence::End) {
    PathX f = p.time_flip();
    return log_exp_functional(f, i, 1.0, p.horizon() - b, p.horizon() - a);
  }
  if (m < 0 && ja == 0) throw GlcError("BruhatOrderViolation", "divergent integral");
  VectorXd u = p.reg() * p.rs().simple_root(i);
  LogAccumulator acc;
  for (int j = ja; j < jb; ++j)
    acc.add_log(cellint::log_cell(m, p.time(j), h, u[j], u[j + 1]));
  return acc.log_sum();
}

double eps_alpha(const PathX& pi, int i, QParam q) {
  if (q.q == 0) return -running_min_fwd(pi, i).minCoeff();
  return q.q * log_exp_functional(pi, i, q.q, 0, pi.horizon());
}

double phi_alpha(const PathX& pi, int i, QParam q) {
  return pi.rs().root_pair(i, pi.endpoint()) + eps_alpha(pi, i, q);
}

PathX pitman(const PathX& pi, int i) {
  if (!pi.plain()) throw GlcError("InvalidState", "Pitman transform on plain paths only");
  VectorXd run = running_min_fwd(pi, i);
  PathX out = pi;
  const VectorXd& av = pi.rs().simple_coroot(i);
  for (int j = 0; j <= pi.segments(); ++j) out.reg().row(j) -= run[j] * av.transpose();
  return out;
}

PathX pitman_w(const PathX& pi, const Word& word) {
  PathX out = pi;
  for (int i : word) out = pitman(out, i);
  return out;
}

PathX geom_T(const PathX& pi, int i, QParam q) {
  if (q.q == 0) return pitman(pi, i);
  return back_q(kernel_forward(require_q1(pi, q.q), i, 0.0), q.q);
}

PathX geom_T_w(const PathX& pi, const Word& word, QParam q) {
  if (q.q == 0) return pitman_w(pi, word);
  PathX out = require_q1(pi, q.q);
  for (int i : word) out = kernel_forward(out, i, 0.0);
  return back_q(std::move(out), q.q);
}

VectorXd hw_path(const PathX& pi, QParam q) {
  const Word& w0 = pi.rs().canonical_word(pi.rs().longest());
  return geom_T_w(pi, w0, q).endpoint();
}

PathX crystal_e(const PathX& pi, int i, double c, QParam q) {
  const RootSystem& rs = pi.rs();
  const VectorXd& av = rs.simple_coroot(i);
  if (!pi.plain()) throw GlcError("InvalidState", "crystal operator acts on plain paths");
  if (q.q == 0) {
    double eps = eps_alpha(pi, i, q), phi = phi_alpha(pi, i, q);
    if (c > eps + 1e-12 || c < -phi - 1e-12)
      throw GlcError("CuttingViolation", "need -phi <= c <= eps at q = 0");
    VectorXd fwd = running_min_fwd(pi, i), bwd = running_min_bwd(pi, i);
    double whole = fwd[pi.segments()];
    PathX out = pi;
    int N = pi.segments();
    for (int j = 1; j < N; ++j)
      out.reg().row(j) += (whole - std::min(fwd[j] - c, bwd[j])) * av.transpose();
    out.reg().row(N) += c * av.transpose();
    return out;
  }
  PathX p = require_q1(pi, q.q);
  double cq = c / q.q;
  auto logF = forward_logF(p, i);
  double logFT = logF.back();
  PathX out = p;
  // log(1 + (e^{cq}-1) e^{d_j}) = logaddexp(log(1 - e^{d_j}), cq + d_j) with
  // d_j = log F_j - log F_T <= 0; stays finite for |c|/q in the hundreds
  for (int j = 0; j <= p.segments(); ++j) {
    double d = logF[static_cast<size_t>(j)] - logFT;
    double log1m = d >= 0 ? -std::numeric_limits<double>::infinity()
                          : std::log(-std::expm1(d));
    out.reg().row(j) += log_add_exp(log1m, cq + d) * av.transpose();
  }
  return back_q(std::move(out), q.q);
}

PathX lowest_proj(const PathX& pi, int i, QParam q) {
  const RootSystem& rs = pi.rs();
  const VectorXd& av = rs.simple_coroot(i);
  if (q.q == 0) {
    if (!pi.plain()) throw GlcError("InvalidState", "q=0 lowest transform on plain paths");
    VectorXd fwd = running_min_fwd(pi, i), bwd = running_min_bwd(pi, i);
    PathX out = pi;
    for (int j = 0; j <= pi.segments(); ++j)
      out.reg().row(j) += (fwd[pi.segments()] - bwd[j]) * av.transpose();
    return out;
  }
  PathX p = require_q1(pi, q.q);
  if (p.divergence() == Divergence::Start)
    throw GlcError("InvalidState", "lowest transform needs a plain or end-divergent path");
  PathX f = p.time_flip();
  double log_total = forward_logF(f, i).back();
  PathX g = kernel_forward(f, i, 0.0);
  for (int j = 0; j <= g.segments(); ++j) g.reg().row(j) -= log_total * av.transpose();
  return back_q(g.time_flip(), q.q);
}

PathX lowest_proj_w(const PathX& pi, const Word& word, QParam q) {
  // e^{-inf}_w = e^{-inf}_{i_l} o ... o e^{-inf}_{i_1}
  PathX out = pi;
  for (int i : word) out = lowest_proj(out, i, q);
  return out;
}

PathX transform_x(const PathX& pi, int i, double xi, QParam q) {
  if (!(xi > 0)) throw GlcError("NonPositiveParameter", "transform_x needs xi > 0");
  const VectorXd& av = pi.rs().simple_coroot(i);
  PathX p = require_q1(pi, q.q);
  PathX out;
  if (p.divergence() == Divergence::End) {
    PathX f = p.time_flip();
    out = kernel_backward(f, i, 1.0 / xi).time_flip();
  } else {
    out = kernel_forward(p, i, 1.0 / xi);
  }
  for (int j = 0; j <= out.segments(); ++j) out.reg().row(j) += std::log(xi) * av.transpose();
  return back_q(std::move(out), q.q);
}

std::vector<double> string_params(const PathX& pi, const Word& word, QParam q) {
  const RootSystem& rs = pi.rs();
  if (!rs.is_reduced(word) || rs.element_of(word) != rs.longest())
    throw GlcError("NonReducedWord", "need a reduced word of w0");
  PathX eta = require_q1(pi, q.q);
  std::vector<double> out;
  for (int i : word) {
    out.push_back(std::exp(-forward_logF(eta, i).back()));
    eta = kernel_forward(eta, i, 0.0);
  }
  return out;
}

std::vector<double> lusztig_params(const PathX& pi, const Word& word, QParam q) {
  const RootSystem& rs = pi.rs();
  if (!rs.is_reduced(word) || rs.element_of(word) != rs.longest())
    throw GlcError("NonReducedWord", "need a reduced word of w0");
  PathX eta = require_q1(pi, q.q);
  std::vector<double> out;
  for (int i : word) {
    PathX f = eta.time_flip();
    out.push_back(std::exp(-forward_logF(f, i).back()));
    eta = lowest_proj(eta, i);
  }
  return out;
}

PathX reconstruct_from_string(const PathX& eta, const Word& word, const std::vector<double>& c,
                              QParam q) {
  if (word.size() != c.size()) throw GlcError("InvalidState", "parameter count mismatch");
  for (double x : c)
    if (!(x > 0)) throw GlcError("NonPositiveParameter", "string parameters must be positive");
  PathX out = require_q1(eta, q.q);
  for (int k = static_cast<int>(word.size()) - 1; k >= 0; --k)
    out = kernel_backward(out, word[static_cast<size_t>(k)], c[static_cast<size_t>(k)]);
  return back_q(std::move(out), q.q);
}

PathX reconstruct_from_lusztig(const PathX& eta, const Word& word, const std::vector<double>& t,
                               QParam q) {
  if (word.size() != t.size()) throw GlcError("InvalidState", "parameter count mismatch");
  for (double x : t)
    if (!(x > 0)) throw GlcError("NonPositiveParameter", "Lusztig parameters must be positive");
  PathX out = require_q1(eta, q.q);
  for (int k = static_cast<int>(word.size()) - 1; k >= 0; --k)
    out = transform_x(out, word[static_cast<size_t>(k)], t[static_cast<size_t>(k)]);
  return back_q(std::move(out), q.q);
}

PathX iota(const PathX& pi) {
  if (pi.divergence() == Divergence::End)
    throw GlcError("InvalidState", "iota needs a finite endpoint");
  VectorXd end = pi.plain() ? VectorXd(pi.reg().row(pi.segments()))
                            : VectorXd(pi.reg().row(pi.segments()) +
                                       std::log(pi.horizon()) * pi.log_coeff().transpose());
  PathX out = pi.time_flip();
  for (int j = 0; j <= out.segments(); ++j) out.reg().row(j) -= end.transpose();
  return out;
}

PathX schutzenberger_path(const PathX& pi) {
  const RootSystem& rs = pi.rs();
  PathX out = iota(pi);
  const MatrixXd& w0 = rs.action(rs.longest());
  out.reg() = -(w0 * out.reg().transpose()).transpose();
  if (!out.plain()) {
    PathX tmp = out.with_meta(out.divergence(), -(w0 * out.log_coeff()), out.weyl_type());
    return tmp;
  }
  return out;
}

PathX concatenate(const PathX& a, const PathX& b) {
  if (!a.plain() || !b.plain()) throw GlcError("InvalidState", "concatenate plain paths");
  if (std::abs(a.dt() - b.dt()) > 1e-12 * a.dt())
    throw GlcError("InvalidState", "concatenate needs equal grid steps");
  int Na = a.segments(), Nb = b.segments();
  MatrixXd m(Na + Nb + 1, a.reg().cols());
  m.topRows(Na + 1) = a.reg();
  for (int j = 1; j <= Nb; ++j) m.row(Na + j) = a.reg().row(Na) + b.reg().row(j);
  return PathX(&a.rs(), a.horizon() + b.horizon(), std::move(m));
}

TensorMaps tensor_maps(const PathX& a, const PathX& b, int i, double c, QParam q) {
  TensorMaps tm;
  tm.gamma = a.endpoint() + b.endpoint();
  double e1 = eps_alpha(a, i, q), f1 = phi_alpha(a, i, q), e2 = eps_alpha(b, i, q),
         f2 = phi_alpha(b, i, q);
  double d = e2 - f1;
  if (q.q == 0) {
    tm.eps = e1 + std::max(d, 0.0);
    tm.phi = f2 + std::max(-d, 0.0);
    tm.c1 = std::max(c, d) - std::max(d, 0.0);
    tm.c2 = std::min(c, d) + std::max(-d, 0.0);
  } else {
    double qq = q.q;
    tm.eps = e1 + qq * log_add_exp(0, d / qq);
    tm.phi = f2 + qq * log_add_exp(0, -d / qq);
    tm.c1 = qq * (log_add_exp(c / qq, d / qq) - log_add_exp(0, d / qq));
    tm.c2 = c - tm.c1;
  }
  return tm;
}

PathX verma_a2_closed_form(const PathX& pi, int ia, int ib, double c1, double c2) {
  const RootSystem& rs = pi.rs();
  if (!pi.plain()) throw GlcError("InvalidState", "plain paths only");
  int N = pi.segments();
  double h = pi.dt();
  VectorXd ua = pi.reg() * rs.simple_root(ia);
  VectorXd ub = pi.reg() * rs.simple_root(ib);
  // plain cumulatives G_alpha, G_beta
  auto cum = [&](const VectorXd& u) {
    std::vector<double> F(static_cast<size_t>(N) + 1, 0.0);
    for (int j = 0; j < N; ++j)
      F[static_cast<size_t>(j) + 1] =
          F[static_cast<size_t>(j)] + std::exp(cellint::log_cell(0, 0, h, u[j], u[j + 1]));
    return F;
  };
  auto Ga = cum(ua), Gb = cum(ub);
  // J_a(t) = int_0^t e^{-a} (1 + ka * G_b(s)/G_b(T)), and symmetrically
  double ka = std::expm1(c1) / Gb.back(), kb = std::expm1(c2) / Ga.back();
  std::vector<double> Ja(static_cast<size_t>(N) + 1, 0.0), Jb(Ja);
  for (int j = 0; j < N; ++j) {
    double base_a = std::exp(cellint::log_cell(0, 0, h, ua[j], ua[j + 1]));
    double base_b = std::exp(cellint::log_cell(0, 0, h, ub[j], ub[j + 1]));
    double cross_ab = cellint::cell_double(h, ua[j], ua[j + 1], ub[j], ub[j + 1]);
    double cross_ba = cellint::cell_double(h, ub[j], ub[j + 1], ua[j], ua[j + 1]);
    Ja[static_cast<size_t>(j) + 1] =
        Ja[static_cast<size_t>(j)] + (1 + ka * Gb[static_cast<size_t>(j)]) * base_a + ka * cross_ab;
    Jb[static_cast<size_t>(j) + 1] =
        Jb[static_cast<size_t>(j)] + (1 + kb * Ga[static_cast<size_t>(j)]) * base_b + kb * cross_ba;
  }
  double k12 = std::expm1(c1 + c2);
  PathX out = pi;
  for (int j = 0; j <= N; ++j) {
    out.reg().row(j) +=
        std::log1p(k12 * Ja[static_cast<size_t>(j)] / Ja.back()) * rs.simple_coroot(ia).transpose() +
        std::log1p(k12 * Jb[static_cast<size_t>(j)] / Jb.back()) * rs.simple_coroot(ib).transpose();
  }
  return out;
}

}  // namespace glc
