#pragma once
// Seeded Monte Carlo verification of the distributional identities: Dufresne,
// Matsumoto-Yor inversion, the law of N_infty (A2), Beta-Gamma and exponential
// identities in rank 2, the discrete Pitman kernel with its intertwining law,
// the highest-weight Markov property (A1, marginal level) and the conditional
// representation of T_g(W). Every check is deterministic given (seed, config);
// thresholds are pre-registered here and looser by `slack` in quick runs.

#include "glc/lie.hpp"
#include "glc/path.hpp"
#include "glc/report.hpp"
#include "glc/rng.hpp"

namespace glc {

struct BMConfig {
  double horizon = 1.0;      // T
  int steps_per_unit = 1024; // grid 2^-10 per unit time
  double trunc = 10.0;       // horizon standing in for infinity
};

// Brownian motion with drift on the Cartan subalgebra of rs (ambient coords).
PathX sample_bm(const RootSystem& rs, const VectorXd& drift, double T, int steps, RngStream& rng);

TestReport dufresne_check(double mu, long n, uint64_t seed, double slack = 1.0);
TestReport my_inversion_check(double mu, long n, uint64_t seed, double slack = 1.0);
TestReport n_infty_check(double a1, double a2, long n, uint64_t seed, double slack = 1.0);
TestReport beta_gamma_check(CartanType type, double a1, double a2, long n, uint64_t seed,
                            double slack = 1.0);
TestReport exponential_identity_check(CartanType type, double a1, double a2, long n,
                                      uint64_t seed, double slack = 1.0);
TestReport discrete_pitman_check(long total_steps, uint64_t seed, double slack = 1.0);
TestReport highest_weight_markov_check(double mu, long n, uint64_t seed, double slack = 1.0);
TestReport conditional_representation_check(CartanType type, long n, uint64_t seed,
                                            double slack = 1.0);
TestReport lr_disintegration_check(double lam, double mu, double delta, long n, int bins,
                                   uint64_t seed, double slack = 1.0);

TestReport run_mc_check(const std::string& name, CartanType type, double a1, double a2, long n,
                        uint64_t seed);  // dispatch by name for the CLI

}  // namespace glc
