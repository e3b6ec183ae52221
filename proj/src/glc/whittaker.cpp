#include "glc/whittaker.hpp"

#include <algorithm>
#include <cmath>

#include "glc/expr.hpp"
#include "glc/stats.hpp"

namespace glc {

namespace {

// Log-integrand in string coordinates: E(c) = L0 + L.c - sum_r K_r exp(a_r.c).
struct StringExponent {
  double L0 = 0;
  VectorXd L;
  std::vector<double> logK;
  std::vector<VectorXd> a;

  double operator()(const VectorXd& c) const {
    double e = L0 + L.dot(c);
    for (size_t r = 0; r < a.size(); ++r) e -= std::exp(logK[r] + a[r].dot(c));
    return e;
  }
  VectorXd grad(const VectorXd& c) const {
    VectorXd g = L;
    for (size_t r = 0; r < a.size(); ++r) g -= std::exp(logK[r] + a[r].dot(c)) * a[r];
    return g;
  }
  MatrixXd hess(const VectorXd& c) const {
    MatrixXd h = MatrixXd::Zero(c.size(), c.size());
    for (size_t r = 0; r < a.size(); ++r)
      h -= std::exp(logK[r] + a[r].dot(c)) * (a[r] * a[r].transpose());
    return h;
  }
};

// String-coordinate data for the supported types (word (1,2,1) in A2).
StringExponent string_exponent(const RootSystem& rs, const VectorXd& lam, const VectorXd& mu) {
  StringExponent se;
  auto unit = [](int dim, int k) {
    VectorXd v = VectorXd::Zero(dim);
    v[k] = 1;
    return v;
  };
  if (rs.type().name() == "A1") {
    se.L0 = mu.dot(lam);
    se.L = VectorXd::Constant(1, -mu.dot(rs.simple_coroot(0)));
    se.logK = {0.0, -rs.root_pair(0, lam)};
    se.a = {-unit(1, 0), unit(1, 0)};
    return se;
  }
  if (rs.type().name() == "A2") {
    double a1l = rs.root_pair(0, lam), a2l = rs.root_pair(1, lam);
    double m1 = mu.dot(rs.simple_coroot(0)), m2 = mu.dot(rs.simple_coroot(1));
    se.L0 = mu.dot(lam);
    se.L = VectorXd(3);
    se.L << -m1, -m2, -m1;
    auto vec3 = [](double x, double y, double z) {
      VectorXd v(3);
      v << x, y, z;
      return v;
    };
    se.logK = {0.0, 0.0, 0.0, -a1l, -a1l, -a2l};
    se.a = {vec3(-1, 0, 0), vec3(0, 0, -1), vec3(0, -1, 1),
            vec3(1, -1, 2), vec3(0, 0, 1),  vec3(0, 1, -1)};
    return se;
  }
  throw GlcError("UnsupportedType", "Whittaker quadrature implemented for A1 and A2");
}

VectorXd find_mode(const StringExponent& se, int dim) {
  VectorXd c = VectorXd::Zero(dim);
  for (int it = 0; it < 200; ++it) {
    VectorXd g = se.grad(c);
    if (g.norm() < 1e-12) break;
    VectorXd step = se.hess(c).ldlt().solve(-g);
    double f0 = se(c), s = 1.0;
    for (int ls = 0; ls < 50; ++ls, s *= 0.5)
      if (se(c + s * step) > f0) break;
    c += s * step;
  }
  return c;
}

double axis_extent(const StringExponent& se, const VectorXd& mode, int d, double sign,
                   double drop) {
  double emax = se(mode);
  double w = 1.0;
  VectorXd c = mode;
  for (int it = 0; it < 200; ++it, w *= 2) {
    c[d] = mode[d] + sign * w;
    if (se(c) < emax - drop) break;
  }
  double lo = w / 2, hi = w;
  for (int it = 0; it < 40; ++it) {
    double mid = 0.5 * (lo + hi);
    c[d] = mode[d] + sign * mid;
    (se(c) < emax - drop ? hi : lo) = mid;
  }
  return hi;
}

double log_psi_grid(const StringExponent& se, int dim, const QuadratureSpec& spec) {
  VectorXd mode = find_mode(se, dim);
  double emax = se(mode);
  VectorXd lo(dim), hi(dim);
  for (int d = 0; d < dim; ++d) {
    lo[d] = mode[d] - 1.35 * axis_extent(se, mode, d, -1, spec.log_tail);
    hi[d] = mode[d] + 1.35 * axis_extent(se, mode, d, +1, spec.log_tail);
  }
  int n = spec.points_per_dim | 1;  // odd point count for composite Simpson
  auto wgt = [n](int i) { return i == 0 || i == n - 1 ? 1.0 : (i % 2 ? 4.0 : 2.0); };
  double total = 0;
  if (dim == 1) {
    double h = (hi[0] - lo[0]) / (n - 1);
    for (int i = 0; i < n; ++i) {
      VectorXd c(1);
      c << lo[0] + i * h;
      total += wgt(i) * std::exp(se(c) - emax);
    }
    return emax + std::log(total * h / 3.0);
  }
  // dim == 3: cache per-axis factors of each exponential term
  Eigen::Vector3d h;
  for (int d = 0; d < 3; ++d) h[d] = (hi[d] - lo[d]) / (n - 1);
  size_t R = se.a.size();
  std::vector<std::vector<double>> ax(R * 3, std::vector<double>(static_cast<size_t>(n)));
  std::vector<std::vector<double>> lin(3, std::vector<double>(static_cast<size_t>(n)));
  for (int d = 0; d < 3; ++d)
    for (int i = 0; i < n; ++i) {
      double cd = lo[d] + i * h[d];
      lin[static_cast<size_t>(d)][static_cast<size_t>(i)] = se.L[d] * cd;
      for (size_t r = 0; r < R; ++r)
        ax[r * 3 + static_cast<size_t>(d)][static_cast<size_t>(i)] =
            std::exp(se.a[r][d] * cd + (d == 0 ? se.logK[r] : 0.0));
    }
  for (int i = 0; i < n; ++i) {
    double wi = wgt(i);
    for (int j = 0; j < n; ++j) {
      double wij = wi * wgt(j);
      double base = se.L0 + lin[0][static_cast<size_t>(i)] + lin[1][static_cast<size_t>(j)] - emax;
      for (int k = 0; k < n; ++k) {
        double e = base + lin[2][static_cast<size_t>(k)];
        for (size_t r = 0; r < R; ++r)
          e -= ax[r * 3][static_cast<size_t>(i)] * ax[r * 3 + 1][static_cast<size_t>(j)] *
               ax[r * 3 + 2][static_cast<size_t>(k)];
        total += wij * wgt(k) * std::exp(e);
      }
    }
  }
  return emax + std::log(total * h[0] * h[1] * h[2] / 27.0);
}

double log_psi_is(const RootSystem& rs, const VectorXd& lam, const VectorXd& mu,
                  const QuadratureSpec& spec) {
  if (rs.type().name() != "A2")
    throw GlcError("UnsupportedType", "importance sampling route implemented for A2");
  double a1 = mu.dot(rs.simple_coroot(0)), a2 = mu.dot(rs.simple_coroot(1));
  if (!(a1 > 0) || !(a2 > 0))
    throw GlcError("DriftOutsideChamber", "gamma proposals need mu in the open chamber");
  double A = std::exp(-rs.root_pair(0, lam)), B = std::exp(-rs.root_pair(1, lam));
  RngStream rng(spec.seed, 77);
  LogAccumulator acc;
  for (long s = 0; s < spec.mc_samples; ++s) {
    double x1 = rng.gamma(a1), x2 = rng.gamma(a2), x3 = rng.gamma(a1 + a2);
    acc.add_log(-A * (x2 / (x1 * x3) + 1.0 / x3) - B / x2);
  }
  return mu.dot(lam) + lgamma_fn(a1) + lgamma_fn(a2) + lgamma_fn(a1 + a2) + acc.log_sum() -
         std::log(static_cast<double>(spec.mc_samples));
}

}  // namespace

double log_psi(const RootSystem& rs, const VectorXd& lam, const VectorXd& mu,
               const QuadratureSpec& spec) {
  if (spec.scheme == QuadratureSpec::Scheme::ImportanceMC) return log_psi_is(rs, lam, mu, spec);
  StringExponent se = string_exponent(rs, lam, mu);
  return log_psi_grid(se, rs.type().name() == "A1" ? 1 : 3, spec);
}

double psi(const RootSystem& rs, const VectorXd& lam, const VectorXd& mu,
           const QuadratureSpec& spec) {
  return std::exp(log_psi(rs, lam, mu, spec));
}

double toda_residual(const RootSystem& rs, const VectorXd& center, const VectorXd& mu, double h,
                     int k, const QuadratureSpec& spec) {
  int r = rs.rank();
  int n = 2 * k + 1;
  // values on the lattice, indexed by chamber coordinates
  std::vector<double> logs;
  std::vector<VectorXd> pts;
  std::vector<std::array<int, 2>> idx;
  for (int i = -k; i <= k; ++i)
    for (int j = -(r > 1 ? k : 0); j <= (r > 1 ? k : 0); ++j) {
      VectorXd xi = VectorXd::Zero(r);
      xi[0] = i * h;
      if (r > 1) xi[1] = j * h;
      pts.push_back(center + rs.from_chamber_coords(xi));
      idx.push_back({i, j});
    }
  for (auto& p : pts) logs.push_back(log_psi(rs, p, mu, spec));
  double logmax = *std::max_element(logs.begin(), logs.end());
  auto at = [&](int i, int j) {
    for (size_t s = 0; s < idx.size(); ++s)
      if (idx[s][0] == i && idx[s][1] == j) return std::exp(logs[s] - logmax);
    throw GlcError("Internal", "lattice lookup");
  };
  double mu2 = mu.dot(mu), worst = 0, top = 0;
  for (size_t s = 0; s < idx.size(); ++s) {
    int i = idx[s][0], j = idx[s][1];
    top = std::max(top, std::exp(logs[s] - logmax));
    if (std::abs(i) == k || (r > 1 && std::abs(j) == k)) continue;
    double lap = (at(i + 1, j) - 2 * at(i, j) + at(i - 1, j)) / (h * h);
    if (r > 1) lap += (at(i, j + 1) - 2 * at(i, j) + at(i, j - 1)) / (h * h);
    double pot = 0;
    for (int d = 0; d < r; ++d)
      pot += 0.5 * rs.root_norm2(d) * std::exp(-rs.root_pair(d, pts[s]));
    double res = 0.5 * lap - (pot + 0.5 * mu2) * at(i, j);
    worst = std::max(worst, std::abs(res));
  }
  return worst / top;
}

double weyl_invariance_check(const RootSystem& rs, const VectorXd& lam, const VectorXd& mu,
                             const QuadratureSpec& spec) {
  double base = log_psi(rs, lam, mu, spec);
  double worst = 0;
  for (int i = 0; i < rs.rank(); ++i) {
    VectorXd smu = rs.reflect(rs.simple_root(i), mu);
    worst = std::max(worst, std::abs(std::expm1(log_psi(rs, lam, smu, spec) - base)));
  }
  return worst;
}

double h_mu(const RootSystem& rs, const VectorXd& lam, const VectorXd& mu) {
  double denom = 1;
  for (auto& beta : rs.positive_roots()) {
    double p = rs.coroot_of(beta).dot(mu);
    if (std::abs(p) < 1e-12) throw GlcError("SingularMu", "mu lies on a wall");
    denom *= p;
  }
  double num = 0;
  for (int w = 0; w < rs.order(); ++w)
    num += (rs.length(w) % 2 ? -1.0 : 1.0) * std::exp(mu.dot(rs.act(w, lam)));
  return num / denom;
}

double psi_q(const RootSystem& rs, const VectorXd& lam, const VectorXd& mu, double q,
             const QuadratureSpec& spec) {
  if (!(q > 0) || q > 1) throw GlcError("InvalidState", "psi_q needs q in (0,1]");
  int m = rs.length(rs.longest());
  VectorXd big = (lam - 4 * q * std::log(q) * rs.rho_covee()) / q;
  return std::exp(m * std::log(q) + log_psi(rs, big, VectorXd(q * mu), spec));
}

// ---------------------------------------------------------------------------

CanonicalSampler::CanonicalSampler(const RootSystem* rs, VectorXd lam, VectorXd mu)
    : rs_(rs), lam_(std::move(lam)) {
  std::string t = rs->type().name();
  if (t != "A1" && t != "A2")
    throw GlcError("UnsupportedType", "canonical sampler implemented for A1 and A2");
  // chamber representative of the spectral parameter (the law is W-invariant)
  int best = 0;
  double bestmin = -1e300;
  for (int w = 0; w < rs->order(); ++w) {
    VectorXd c = rs->act(w, mu);
    double mn = 1e300;
    for (int i = 0; i < rs->rank(); ++i) mn = std::min(mn, rs->root_pair(i, c));
    if (mn > bestmin) {
      bestmin = mn;
      best = w;
    }
  }
  mu_chamber_ = rs->act(best, mu);
  on_wall_ = bestmin <= 1e-10;
  word_ = rs->canonical_word(rs->longest());
  corootseq_ = rs->coroot_enumeration(word_);
  for (auto& bv : corootseq_) shapes_.push_back(bv.dot(mu_chamber_));
  if (on_wall_) {
    im_state_.assign(shapes_.size(), 1.0);
    double lw = 0;
    im_logw_ = -1e300;  // force first proposal to be accepted
    (void)lw;
  }
}

double CanonicalSampler::log_accept(const std::vector<double>& t) const {
  // -chi^-(e^lam [g wbar0]_- e^{-lam}) = -sum_a e^{-a(lam)} chi_a(eta_w0(g))
  if (rs_->type().name() == "A1") return -std::exp(-rs_->root_pair(0, lam_)) / t[0];
  double t1 = t[0], t2 = t[1], t3 = t[2];
  double chi1 = 1.0 / (t1 * (1 + t1 / t3)) + 1.0 / (t1 + t3);
  double chi2 = (1 + t1 / t3) / t2;
  return -std::exp(-rs_->root_pair(0, lam_)) * chi1 - std::exp(-rs_->root_pair(1, lam_)) * chi2;
}

CanonicalSample CanonicalSampler::draw(RngStream& rng) const {
  size_t m = shapes_.size();
  std::vector<double> t(m);
  if (!on_wall_) {
    for (;;) {
      ++proposed_;
      for (size_t k = 0; k < m; ++k) t[k] = rng.gamma(shapes_[k]);
      if (std::log(rng.uniform()) < log_accept(t)) {
        ++accepted_;
        break;
      }
      if (proposed_ > 100000 && acceptance_rate() < 1e-4)
        throw GlcError("AcceptanceTooLow", "rejection sampler acceptance below 1e-4");
    }
  } else {
    // independence Metropolis with floored gamma proposals
    auto logpi = [&](const std::vector<double>& s) {
      double v = log_accept(s);
      for (size_t k = 0; k < m; ++k) v += shapes_[k] * std::log(s[k]) - s[k];
      return v;
    };
    auto logq = [&](const std::vector<double>& s) {
      double v = 0;
      for (size_t k = 0; k < m; ++k)
        v += std::max(shapes_[k], 0.25) * std::log(s[k]) - s[k];
      return v;
    };
    for (int rep = 0; rep < 8; ++rep) {  // thinning
      for (size_t k = 0; k < m; ++k) t[k] = rng.gamma(std::max(shapes_[k], 0.25));
      double lw = logpi(t) - logq(t);
      ++proposed_;
      if (std::log(rng.uniform()) < lw - im_logw_) {
        im_state_ = t;
        im_logw_ = lw;
        ++accepted_;
      }
    }
    t = im_state_;
  }
  CanonicalSample s;
  s.t = t;
  VectorXd g = lam_;
  for (size_t k = 0; k < m; ++k) g += std::log(t[k]) * corootseq_[k];
  s.gamma = rs_->act(rs_->longest(), g);
  return s;
}

double CanonicalSampler::acceptance_rate() const {
  return proposed_ ? static_cast<double>(accepted_) / static_cast<double>(proposed_) : 1.0;
}

// ---------------------------------------------------------------------------

namespace {

struct StringConeData {
  std::vector<Expr> lusztig;  // tropicalize >= 0 for cone membership
  std::vector<Expr> chi;      // chi_alpha of eta^{w0,e}, per simple root
  Word word;
};

const StringConeData& cone_data(const RootSystem& rs) {
  static const StringConeData a1{{Expr::parse("c1")}, {Expr::parse("c1")}, {0}};
  static const StringConeData a2{
      {Expr::parse("c1"), Expr::parse("c3"), Expr::parse("c2/c3")},
      {Expr::parse("c1 + c2/c3"), Expr::parse("c3")},
      {0, 1, 0}};
  if (rs.type().name() == "A1") return a1;
  if (rs.type().name() == "A2") return a2;
  throw GlcError("UnsupportedType", "string polytope data for A1 and A2");
}

double cut_slack(const RootSystem& rs, const Word& word, const VectorXd& lam,
                 const std::vector<double>& c, size_t j) {
  double s = rs.root_pair(static_cast<int>(word[j]), lam) - c[j];
  for (size_t k = j + 1; k < word.size(); ++k)
    s -= c[k] * rs.simple_root(word[j]).dot(rs.simple_coroot(word[k]));
  return s;
}

}  // namespace

bool string_polytope_member(const RootSystem& rs, const VectorXd& lam,
                            const std::vector<double>& c) {
  const auto& data = cone_data(rs);
  auto trop = SemifieldSpec::tropical();
  for (auto& e : data.lusztig)
    if (e.eval(trop, c) < 0) return false;
  for (size_t j = 0; j < data.word.size(); ++j)
    if (cut_slack(rs, data.word, lam, c, j) < 0) return false;
  return true;
}

double string_polytope_qdensity(const RootSystem& rs, const VectorXd& lam,
                                const std::vector<double>& c, double q) {
  if (!(q > 0)) throw GlcError("InvalidState", "qdensity needs q > 0");
  const auto& data = cone_data(rs);
  auto mq = SemifieldSpec::maslov(q);
  double f = 0;
  for (int i = 0; i < rs.rank(); ++i) {
    double m = data.chi[static_cast<size_t>(i)].eval(mq, c);
    f += (2 * q * q / rs.root_norm2(i)) * std::exp(-m / q);
  }
  for (size_t j = 0; j < data.word.size(); ++j) {
    double s = cut_slack(rs, data.word, lam, c, j);
    f += (2 * q * q / rs.root_norm2(data.word[j])) * std::exp(-s / q);
  }
  return std::exp(-f);
}

}  // namespace glc
