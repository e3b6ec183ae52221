#pragma once
// The q-family of Littelmann path models on discretized paths.
//
// Paths are piecewise linear on a uniform grid over [0, T]. An extended path
// carries an exact logarithmic term at one endpoint:
//
//    pi(t) = r(t) + log(t) * v        (divergence at the start)
//    pi(t) = r(t) + log(T-t) * v      (divergence at the end)
//
// where the regular part r is stored on the full grid and v lies in the coroot
// lattice (v = rho_vee - w^{-1} rho_vee for a path of type w; scaled by q when
// q != 1). All exponential functionals integrate the log term exactly per cell
// (t^m * exp(affine) closed forms), so transform compositions converge at
// O(h^2) under grid refinement.
//
// Operators at general temperature q > 0 are conjugates of the q = 1 ones by
// path rescaling (exactly, by construction); q = 0 uses the min/inf formulas
// directly, never a numerical limit.

#include <Eigen/Dense>
#include <vector>

#include "glc/lie.hpp"

namespace glc {

enum class Divergence { None, Start, End };

class PathX {
 public:
  PathX() = default;
  // plain path from samples ((N+1) x ambient_dim, row j = value at t_j)
  PathX(const RootSystem* rs, double T, MatrixXd samples);
  static PathX zero(const RootSystem* rs, double T, int N);
  static PathX linear(const RootSystem* rs, double T, int N, const VectorXd& drift);

  const RootSystem& rs() const { return *rs_; }
  double horizon() const { return T_; }
  int segments() const { return static_cast<int>(reg_.rows()) - 1; }
  double dt() const { return T_ / segments(); }
  double time(int j) const { return T_ * j / segments(); }

  const MatrixXd& reg() const { return reg_; }
  MatrixXd& reg() { return reg_; }
  const VectorXd& log_coeff() const { return v_; }
  Divergence divergence() const { return div_; }
  int weyl_type() const { return wtype_; }

  bool plain() const { return div_ == Divergence::None; }
  // pi(t_j); throws at a divergent endpoint
  VectorXd value(int j) const;
  VectorXd endpoint() const;  // pi(T)

  PathX scaled(double s) const;       // s * pi (exact; intertwines the q-structures)
  PathX time_flip() const;            // internal coordinate change t -> T-t
  PathX with_meta(Divergence d, VectorXd v, int wtype) const;

 private:
  const RootSystem* rs_ = nullptr;
  double T_ = 1;
  MatrixXd reg_;   // (N+1) x dim
  VectorXd v_;     // log coefficient
  Divergence div_ = Divergence::None;
  int wtype_ = 0;  // Weyl index of the asymptote type
  friend class PathOps;
};

struct QParam {
  double q = 1.0;  // q >= 0; q = 0 selects the min/inf model
};

// log of int_a^b exp(-alpha_i(pi(s))/q) ds, computed segment-exactly; a, b must
// lie on the grid. Requires q > 0.
double log_exp_functional(const PathX& pi, int i, double q, double a, double b);

// epsilon_alpha and phi_alpha of the q-model (q >= 0).
double eps_alpha(const PathX& pi, int i, QParam q = {});
double phi_alpha(const PathX& pi, int i, QParam q = {});

// Pitman transform (q = 0): pi - inf alpha(pi) alpha_vee. Plain paths only.
PathX pitman(const PathX& pi, int i);
PathX pitman_w(const PathX& pi, const Word& word);  // right-to-left composition

// Geometric transform T^q_alpha; raises the asymptote type by s_alpha on the
// left-weak order. Throws BruhatOrderViolation when the exponential functional
// is not integrable near the divergent start.
PathX geom_T(const PathX& pi, int i, QParam q = {});
// T^q_w = T_{i_k} o ... o T_{i_1} along word = (i_1..i_k); q = 0 gives Pitman.
PathX geom_T_w(const PathX& pi, const Word& word, QParam q = {});

// Highest weight hw(pi) = T^q_{w0} pi (T).
VectorXd hw_path(const PathX& pi, QParam q = {});

// Crystal operator e^c_alpha (plain paths; q >= 0, cutting conditions enforced
// at q = 0).
PathX crystal_e(const PathX& pi, int i, double c, QParam q = {});

// Lowest transforms e^{-inf}: projection onto the low edge (q > 0; q = 0 via
// the min formulas).
PathX lowest_proj(const PathX& pi, int i, QParam q = {});
PathX lowest_proj_w(const PathX& pi, const Word& word, QParam q = {});

// T_{x_alpha(xi)} pi = pi + q log(1 + xi int_0^t e^{-alpha(pi)/q}) alpha_vee.
PathX transform_x(const PathX& pi, int i, double xi, QParam q = {});

// String / Lusztig parameters for a reduced word of w0 (positive reals; q > 0).
std::vector<double> string_params(const PathX& pi, const Word& word, QParam q = {});
std::vector<double> lusztig_params(const PathX& pi, const Word& word, QParam q = {});

// Inverses: reconstruct the path from the highest (resp. lowest) path.
PathX reconstruct_from_string(const PathX& eta, const Word& word,
                              const std::vector<double>& c, QParam q = {});
PathX reconstruct_from_lusztig(const PathX& eta, const Word& word,
                               const std::vector<double>& t, QParam q = {});

// Duality iota(pi)(t) = pi(T-t) - pi(T) and the Schutzenberger involution
// S(pi) = -w0 pi^iota.
PathX iota(const PathX& pi);
PathX schutzenberger_path(const PathX& pi);

// Concatenation and the tensor structure it realizes.
PathX concatenate(const PathX& a, const PathX& b);
struct TensorMaps {
  VectorXd gamma;
  double eps, phi;          // of the pair, for one alpha
  double c1, c2;            // action splitting of a given c
};
TensorMaps tensor_maps(const PathX& a, const PathX& b, int i, double c, QParam q = {});

// Closed form of e^{c1}_a e^{c1+c2}_b e^{c2}_a pi in rank A2 (alpha = i, beta = j).
PathX verma_a2_closed_form(const PathX& pi, int i, int j, double c1, double c2);

}  // namespace glc
