#pragma once
// Whittaker functions by quadrature, quantum Toda residuals, canonical-measure
// sampling, the q-degeneration psi_{q,mu} -> h_mu and the string polytope.
//
// psi_mu(lambda) = int_{B(lambda)} exp(<mu, gamma(x)> - f_B(x)) omega(dx),
// evaluated in string coordinates. A1 uses a one-dimensional integral, A2 the
// three-dimensional one for the word (1,2,1); the exponent is concave, so the
// mode is found by Newton and the tensor grid is centered there. An importance
// sampling route with gamma proposals matched to the linear part of the
// exponent (weights bounded by 1) is available for Monte Carlo use.

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "glc/lie.hpp"
#include "glc/rng.hpp"

namespace glc {

struct QuadratureSpec {
  enum class Scheme { TensorGrid, ImportanceMC } scheme = Scheme::TensorGrid;
  int points_per_dim = 180;
  double log_tail = 40;   // integrate where the log-integrand exceeds max - tail
  long mc_samples = 200000;
  uint64_t seed = 1;
};

// log psi_mu(lambda); lambda, mu in ambient coordinates.
double log_psi(const RootSystem& rs, const VectorXd& lam, const VectorXd& mu,
               const QuadratureSpec& spec = {});
double psi(const RootSystem& rs, const VectorXd& lam, const VectorXd& mu,
           const QuadratureSpec& spec = {});

// sup |(1/2 Lap - sum_a 1/2 <a,a> e^{-a(x)} - 1/2 <mu,mu>) psi| / sup |psi|
// over a lattice of chamber coordinates centered at `center` with 2k+1 points
// per axis and finite-difference step h.
double toda_residual(const RootSystem& rs, const VectorXd& center, const VectorXd& mu, double h,
                     int k, const QuadratureSpec& spec = {});

// max over simple reflections s of |psi_{s mu} - psi_mu| / psi_mu
double weyl_invariance_check(const RootSystem& rs, const VectorXd& lam, const VectorXd& mu,
                             const QuadratureSpec& spec = {});

// h_mu(lambda) = sum_w (-1)^{l(w)} e^{<mu, w lam>} / prod_{beta>0} <beta_vee, mu>
double h_mu(const RootSystem& rs, const VectorXd& lam, const VectorXd& mu);
// psi_{q,mu}(lambda) = q^m psi_{q mu}((lambda - 4 q log q rho_vee)/q)
double psi_q(const RootSystem& rs, const VectorXd& lam, const VectorXd& mu, double q,
             const QuadratureSpec& spec = {});

// ---- canonical measure ----

struct CanonicalSample {
  std::vector<double> t;  // twisted Lusztig coordinates
  VectorXd gamma;         // weight
};

// Exact rejection sampler for C_mu(lambda) (A1 and A2): proposes twisted
// coordinates t_j ~ Gamma(<beta_j_vee, mu~>) for a chamber representative mu~
// of mu, accepts with probability exp(-chi^-(e^lam [g wbar0]_- e^{-lam})).
class CanonicalSampler {
 public:
  CanonicalSampler(const RootSystem* rs, VectorXd lam, VectorXd mu);
  CanonicalSample draw(RngStream& rng) const;
  double acceptance_rate() const;  // running estimate
  const Word& word() const { return word_; }
  const std::vector<double>& proposal_shapes() const { return shapes_; }

 private:
  double log_accept(const std::vector<double>& t) const;
  const RootSystem* rs_;
  VectorXd lam_, mu_chamber_;
  Word word_;
  std::vector<double> shapes_;
  std::vector<VectorXd> corootseq_;
  bool on_wall_ = false;              // independence-Metropolis fallback
  mutable std::vector<double> im_state_;
  mutable double im_logw_ = 0;
  mutable long accepted_ = 0, proposed_ = 0;
};

// ---- string polytope / crystallization ----

// Membership: tropicalized eta^{w0,e} coordinates >= 0 and the cut conditions
// c_j <= alpha_{i_j}(lambda) - sum_{k>j} c_k alpha_{i_j}(alpha_{i_k}_vee).
bool string_polytope_member(const RootSystem& rs, const VectorXd& lam,
                            const std::vector<double>& c);
// exp(-f^{K}_{B,q,lambda}(c)), which tends to the polytope indicator as q -> 0.
double string_polytope_qdensity(const RootSystem& rs, const VectorXd& lam,
                                const std::vector<double>& c, double q);

}  // namespace glc
