#pragma once
// Matrix realization of the geometric crystal for type A (SL_2, SL_3, SL_4):
// generators, Gauss decomposition, generalized minors, flows B_t(pi), the
// parametrization charts rho_L / rho_K / rho_T and their inverses, twist maps,
// superpotential, central charge and the involutions.
//
// B2/C2/G2 are covered exclusively through the stored closed-form parameter
// maps in rank2.hpp; no symplectic/orthogonal matrix plumbing here.

#include <Eigen/Dense>
#include <vector>

#include "glc/lie.hpp"
#include "glc/path.hpp"

namespace glc {

class GroupPicture {
 public:
  explicit GroupPicture(const RootSystem* rs);  // type A only

  const RootSystem& rs() const { return *rs_; }
  int n() const { return n_; }

  MatrixXd x(int i, double t) const;
  MatrixXd y(int i, double t) const;
  MatrixXd torus(const VectorXd& ambient) const;  // exp of the diagonal embedding
  VectorXd to_diag(const VectorXd& ambient) const;
  VectorXd from_diag(const VectorXd& diag) const;
  MatrixXd sbar(int i) const;
  MatrixXd wbar(const Word& word) const;
  MatrixXd wbar0() const { return wbar0_; }

  struct Gauss {
    MatrixXd lower;  // unit lower triangular
    VectorXd a_log;  // log of the torus part (diagonal coordinates)
    MatrixXd upper;  // unit upper triangular
  };
  Gauss gauss(const MatrixXd& g) const;  // throws SingularPrincipalMinor
  MatrixXd gauss_lower(const MatrixXd& g) const { return gauss(g).lower; }
  MatrixXd gauss_upper(const MatrixXd& g) const { return gauss(g).upper; }
  MatrixXd gauss_minus0(const MatrixXd& g) const;

  // Delta_{u omega_i, v omega_i}(g) = leading i-minor of wbar(u)^{-1} g wbar(v).
  double minor(const MatrixXd& g, const Word& u, const Word& v, int i) const;
  // Total positivity of x in N via the minor family F(i) of a reduced word.
  bool totally_positive_N(const MatrixXd& x, double tol = 1e-12) const;

  // Flow B_t(pi): dB = B(sum_a kappa_a f_a dt + dpi), A-part = e^{pi(t)} exactly,
  // N-part integrated by per-segment RK4 with step halving. theta_shift scales
  // kappa_a to <a,a>/2 (the conjugation by e^theta).
  struct Flow {
    MatrixXd B, N;
    VectorXd a_log;  // diagonal coordinates of the A part
  };
  Flow flow(const PathX& pi, bool theta_shift = false) const;

  VectorXd hw(const MatrixXd& g) const;     // log [wbar0^{-1} g]_0, ambient coords
  VectorXd gamma(const MatrixXd& g) const;  // log [g]_0
  double eps_group(const MatrixXd& g, int i) const;  // chi^-_i
  double phi_group(const MatrixXd& g, int i) const;
  double chi_lower(const MatrixXd& g) const;  // principal character of [g]_-
  double chi_upper(const MatrixXd& u) const;  // sum of superdiagonal entries
  MatrixXd crystal_action(const MatrixXd& g, int i, double c) const;

  MatrixXd iota_g(const MatrixXd& g) const;           // positive inverse
  MatrixXd schutzenberger_g(const MatrixXd& g) const; // wbar0 eps g^T eps wbar0^{-1}

  // charts of B(lambda)
  MatrixXd rho_L(const MatrixXd& xel) const;
  MatrixXd rho_K(const MatrixXd& xel) const;
  MatrixXd rho_T(const MatrixXd& xel) const;
  MatrixXd b_L(const VectorXd& lam, const MatrixXd& z) const;
  MatrixXd b_K(const VectorXd& lam, const MatrixXd& v) const;
  MatrixXd b_T(const VectorXd& lam, const MatrixXd& u) const;

  MatrixXd xu(const Word& word, const std::vector<double>& t) const;       // x products
  MatrixXd x_minus(const Word& word, const std::vector<double>& c) const;  // x_{-i} products

  // twist maps
  MatrixXd eta_w0(const MatrixXd& u) const;    // [wbar0^{-1} u^T]_+
  MatrixXd eta_e_w0(const MatrixXd& u) const;  // Lusztig -> string variety
  MatrixXd eta_w0_e(const MatrixXd& v) const;  // string -> Lusztig variety

  // string coordinates of a totally positive N-part by minor peeling
  std::vector<double> string_coords_of_N(MatrixXd npart, const Word& word) const;

  double f_B(const MatrixXd& xel) const;  // chi(z) + chi(u) from x = z wbar0 e^lam u
  // gradient descent + Newton in log coordinates of the twisted chart
  MatrixXd minimize_fB(const VectorXd& lam, double* fmin = nullptr) const;
  double central_charge(const MatrixXd& b1, const MatrixXd& b2) const;

 private:
  const RootSystem* rs_;
  int n_;
  MatrixXd wbar0_, epsilon_;  // epsilon = diag(1,-1,1,...)
};

}  // namespace glc
