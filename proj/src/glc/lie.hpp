#pragma once
// Root systems and Weyl groups for types A1-A3, B2, C2, G2.
//
// Roots are stored as Euclidean vectors a with alpha(x) = <a, x>; coroots are
// the vectors 2a/<a,a>. The Cartan subalgebra is span(coroots) inside the
// ambient space (sum-zero hyperplane for type A, all of R^2 or the sum-zero
// plane of R^3 otherwise). Rank-1 uses alpha = 2, alpha_vee = 1 on R, so that
// theta = log(2) * omega_vee there; this differs from the simply-laced
// normalization and is deliberate.

#include <Eigen/Dense>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace glc {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Exception with a machine-readable kind ("UnsupportedType", "NonReducedWord", ...)
class GlcError : public std::runtime_error {
 public:
  GlcError(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

struct CartanType {
  char family = 'A';  // 'A','B','C','G'
  int rank = 1;

  static CartanType parse(const std::string& s);
  std::string name() const;
  bool operator==(const CartanType& o) const { return family == o.family && rank == o.rank; }
};

using Word = std::vector<int>;  // simple-reflection indices, 0-based

class RootSystem {
 public:
  explicit RootSystem(CartanType type);

  const CartanType& type() const { return type_; }
  int rank() const { return rank_; }
  int ambient_dim() const { return dim_; }

  const VectorXd& simple_root(int i) const { return roots_[i]; }
  const VectorXd& simple_coroot(int i) const { return coroots_[i]; }
  const VectorXd& fundamental_coweight(int i) const { return coweights_[i]; }
  const VectorXd& rho_covee() const { return rho_covee_; }
  const VectorXd& theta() const { return theta_; }

  // alpha_i(v) = <a_i, v> (roots are linear forms realized via the inner product)
  double root_pair(int i, const VectorXd& v) const { return roots_[i].dot(v); }
  double root_norm2(int i) const { return roots_[i].squaredNorm(); }
  MatrixXd cartan_matrix() const;  // a_ij = alpha_j(alpha_i_vee)

  VectorXd coroot_of(const VectorXd& beta) const { return 2.0 * beta / beta.squaredNorm(); }
  VectorXd reflect(const VectorXd& beta, const VectorXd& v) const {
    return v - beta.dot(v) * coroot_of(beta);
  }
  std::vector<VectorXd> positive_roots() const { return positive_roots_; }

  // Orthonormal basis of span(coroots) = the Cartan subalgebra proper.
  const std::vector<VectorXd>& chamber_basis() const { return chamber_basis_; }
  VectorXd from_chamber_coords(const VectorXd& c) const;

  // ---- Weyl group (elements indexed 0..order-1, 0 = identity) ----
  int order() const { return static_cast<int>(mats_.size()); }
  int identity() const { return 0; }
  int longest() const { return w0_; }
  int length(int w) const { return length_[w]; }
  int mul_gen(int i, int w) const { return left_[w][i]; }  // s_i * w
  int mul(int u, int w) const;
  int inverse(int w) const { return inverse_[w]; }
  const MatrixXd& action(int w) const { return mats_[w]; }
  VectorXd act(int w, const VectorXd& v) const { return mats_[w] * v; }
  const Word& canonical_word(int w) const { return canon_word_[w]; }

  // Every reduced word of w (exhaustive).
  std::vector<Word> reduced_words(int w) const;
  int element_of(const Word& word) const;  // product s_{i_1}...s_{i_k}
  bool is_reduced(const Word& word) const;

  // beta_j = s_{i_1}...s_{i_{j-1}} alpha_{i_j}; for w0 this enumerates all of Phi+.
  std::vector<VectorXd> root_enumeration(const Word& word) const;
  std::vector<VectorXd> coroot_enumeration(const Word& word) const;

  // l(s_i w) = l(w) + 1  iff  -alpha_i(rho_vee - w rho_vee) >= 0, cross-checked
  // against the length table.
  bool bruhat_ascends_left(int i, int w) const;

  // Kumar identities: returns both sides of
  //   lam - w lam        = sum_k alpha_{i_k}(lam) beta_k_vee
  //   lam - w^{-1} lam   = sum_k beta_k(lam) alpha_{i_k}_vee
  std::pair<VectorXd, VectorXd> kumar_sides(const VectorXd& lam, const Word& word) const;
  std::pair<VectorXd, VectorXd> kumar_sides_inv(const VectorXd& lam, const Word& word) const;

  // The constant term c_w in the t -> 0 asymptotics of T_w, computed by the
  // step recursion c_{u s_a} = s_a c_u - log((u a)(rho_vee)) a_vee. (The closed
  // form printed elsewhere holds in type A but fails already in B2; nothing
  // here relies on it.)
  VectorXd asymptotic_shift_cw(int w) const;

  std::string to_json() const;

 private:
  void build_tables();
  void enumerate_weyl();

  CartanType type_;
  int rank_ = 0, dim_ = 0;
  std::vector<VectorXd> roots_, coroots_, coweights_;
  VectorXd rho_covee_, theta_;
  std::vector<VectorXd> positive_roots_;
  std::vector<VectorXd> chamber_basis_;

  std::vector<MatrixXd> mats_;
  std::vector<int> length_, inverse_;
  std::vector<std::vector<int>> left_;  // left_[w][i] = s_i w
  std::vector<Word> canon_word_;
  std::map<std::vector<long long>, int> index_;
  int w0_ = 0;

  std::vector<long long> key_of(const MatrixXd& m) const;
};

}  // namespace glc
