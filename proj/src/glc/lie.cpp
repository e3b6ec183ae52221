#include "glc/lie.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

#include "json.hpp"

namespace glc {

CartanType CartanType::parse(const std::string& s) {
  if (s.size() != 2) throw GlcError("UnsupportedType", "expected e.g. a2/B2/g2, got '" + s + "'");
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  int r = s[1] - '0';
  CartanType t{f, r};
  bool ok = (f == 'A' && r >= 1 && r <= 3) || ((f == 'B' || f == 'C' || f == 'G') && r == 2);
  if (!ok) throw GlcError("UnsupportedType", "unsupported type " + s);
  return t;
}

std::string CartanType::name() const { return std::string(1, family) + std::to_string(rank); }

RootSystem::RootSystem(CartanType type) : type_(type) {
  rank_ = type.rank;
  auto vec = [](std::initializer_list<double> xs) {
    VectorXd v(static_cast<int>(xs.size()));
    int i = 0;
    for (double x : xs) v[i++] = x;
    return v;
  };
  switch (type.family) {
    case 'A':
      if (rank_ == 1) {
        // alpha = 2, alpha_vee = 1 on a = R
        dim_ = 1;
        roots_ = {vec({2.0})};
      } else {
        dim_ = rank_ + 1;
        for (int i = 0; i < rank_; ++i) {
          VectorXd a = VectorXd::Zero(dim_);
          a[i] = 1;
          a[i + 1] = -1;
          roots_.push_back(a);
        }
        dim_ = rank_ + 1;
      }
      break;
    case 'B':
      dim_ = 2;
      roots_ = {vec({1, -1}), vec({0, 1})};
      break;
    case 'C':
      dim_ = 2;
      roots_ = {vec({1, -1}), vec({0, 2})};
      break;
    case 'G':
      dim_ = 3;
      roots_ = {vec({0, 1, -1}), vec({1, -2, 1})};
      break;
    default:
      throw GlcError("UnsupportedType", "family");
  }
  for (auto& a : roots_) coroots_.push_back(coroot_of(a));
  build_tables();
  enumerate_weyl();
}

void RootSystem::build_tables() {
  // fundamental coweights: alpha_i(omega_j) = delta_ij within span(coroots)
  MatrixXd P(rank_, rank_);
  for (int i = 0; i < rank_; ++i)
    for (int k = 0; k < rank_; ++k) P(i, k) = roots_[i].dot(coroots_[k]);
  MatrixXd Pinv = P.inverse();
  for (int j = 0; j < rank_; ++j) {
    VectorXd w = VectorXd::Zero(dim_);
    for (int k = 0; k < rank_; ++k) w += Pinv(k, j) * coroots_[k];
    coweights_.push_back(w);
  }
  rho_covee_ = VectorXd::Zero(dim_);
  for (auto& w : coweights_) rho_covee_ += w;
  theta_ = VectorXd::Zero(dim_);
  for (int i = 0; i < rank_; ++i) theta_ += std::log(root_norm2(i) / 2.0) * coweights_[i];

  // orthonormal basis of span(coroots)
  MatrixXd C(dim_, rank_);
  for (int i = 0; i < rank_; ++i) C.col(i) = coroots_[i];
  Eigen::HouseholderQR<MatrixXd> qr(C);
  MatrixXd Q = qr.householderQ() * MatrixXd::Identity(dim_, rank_);
  for (int i = 0; i < rank_; ++i) chamber_basis_.push_back(Q.col(i));
}

VectorXd RootSystem::from_chamber_coords(const VectorXd& c) const {
  VectorXd v = VectorXd::Zero(dim_);
  for (int i = 0; i < rank_; ++i) v += c[i] * chamber_basis_[i];
  return v;
}

std::vector<long long> RootSystem::key_of(const MatrixXd& m) const {
  std::vector<long long> k;
  k.reserve(static_cast<size_t>(m.size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) k.push_back(llround(m(i, j) * 1e9));
  return k;
}

void RootSystem::enumerate_weyl() {
  std::vector<MatrixXd> gens;
  for (int i = 0; i < rank_; ++i) {
    MatrixXd s = MatrixXd::Identity(dim_, dim_);
    s -= coroots_[i] * roots_[i].transpose();
    gens.push_back(s);
  }
  mats_ = {MatrixXd::Identity(dim_, dim_)};
  length_ = {0};
  canon_word_ = {Word{}};
  index_[key_of(mats_[0])] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int w = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank_; ++i) {
      MatrixXd m = gens[i] * mats_[w];
      auto k = key_of(m);
      if (!index_.count(k)) {
        int idx = static_cast<int>(mats_.size());
        index_[k] = idx;
        mats_.push_back(m);
        length_.push_back(length_[w] + 1);
        Word cw = {i};
        cw.insert(cw.end(), canon_word_[w].begin(), canon_word_[w].end());
        canon_word_.push_back(cw);
        queue.push_back(idx);
      }
    }
  }
  int n = order();
  left_.assign(n, std::vector<int>(rank_));
  inverse_.assign(n, 0);
  for (int w = 0; w < n; ++w) {
    for (int i = 0; i < rank_; ++i) left_[w][i] = index_.at(key_of(gens[i] * mats_[w]));
    inverse_[w] = index_.at(key_of(MatrixXd(mats_[w].inverse())));
    if (length_[w] > length_[w0_]) w0_ = w;
  }

  // positive roots: orbit of the simple roots with positive simple-root coordinates
  MatrixXd R(dim_, rank_);
  for (int i = 0; i < rank_; ++i) R.col(i) = roots_[i];
  auto coords = [&](const VectorXd& b) {
    return VectorXd((R.transpose() * R).ldlt().solve(R.transpose() * b));
  };
  std::map<std::vector<long long>, VectorXd> seen;
  for (int w = 0; w < n; ++w)
    for (int i = 0; i < rank_; ++i) {
      VectorXd b = mats_[w] * roots_[i];
      if (coords(b).minCoeff() > -1e-9) seen.emplace(key_of(b), b);
    }
  for (auto& [k, b] : seen) positive_roots_.push_back(b);
}

MatrixXd RootSystem::cartan_matrix() const {
  MatrixXd a(rank_, rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) a(i, j) = roots_[j].dot(coroots_[i]);
  return a;
}

int RootSystem::mul(int u, int w) const { return index_.at(key_of(mats_[u] * mats_[w])); }

int RootSystem::element_of(const Word& word) const {
  int w = 0;  // builds s_{i_1}...s_{i_k} by right-multiplying: w * s_i = (s_i * w^{-1})^{-1}
  MatrixXd m = MatrixXd::Identity(dim_, dim_);
  for (int i : word) {
    if (i < 0 || i >= rank_) throw GlcError("UnsupportedType", "generator index out of range");
    m = m * action(mul_gen(i, 0));
  }
  w = index_.at(key_of(m));
  return w;
}

bool RootSystem::is_reduced(const Word& word) const {
  return length(element_of(word)) == static_cast<int>(word.size());
}

std::vector<Word> RootSystem::reduced_words(int w) const {
  if (length(w) == 0) return {Word{}};
  std::vector<Word> out;
  for (int i = 0; i < rank_; ++i) {
    int u = mul_gen(i, w);
    if (length(u) == length(w) - 1) {
      for (auto& tail : reduced_words(u)) {
        Word word = {i};
        word.insert(word.end(), tail.begin(), tail.end());
        out.push_back(std::move(word));
      }
    }
  }
  return out;
}

std::vector<VectorXd> RootSystem::root_enumeration(const Word& word) const {
  if (!is_reduced(word)) throw GlcError("NonReducedWord", "word is not reduced");
  std::vector<VectorXd> betas;
  MatrixXd prefix = MatrixXd::Identity(dim_, dim_);
  for (size_t j = 0; j < word.size(); ++j) {
    betas.push_back(prefix * roots_[word[j]]);
    prefix = prefix * action(mul_gen(word[j], 0));
  }
  return betas;
}

std::vector<VectorXd> RootSystem::coroot_enumeration(const Word& word) const {
  auto betas = root_enumeration(word);
  std::vector<VectorXd> out;
  for (auto& b : betas) out.push_back(coroot_of(b));
  return out;
}

bool RootSystem::bruhat_ascends_left(int i, int w) const {
  VectorXd d = rho_covee_ - act(w, rho_covee_);
  bool by_rho = -roots_[i].dot(d) >= -1e-9;
  bool by_len = length(mul_gen(i, w)) == length(w) + 1;
  if (by_rho != by_len) throw GlcError("Internal", "rho criterion disagrees with length");
  return by_len;
}

std::pair<VectorXd, VectorXd> RootSystem::kumar_sides(const VectorXd& lam, const Word& word) const {
  int w = element_of(word);
  auto betas = root_enumeration(word);
  VectorXd lhs = lam - act(w, lam);
  VectorXd rhs = VectorXd::Zero(dim_);
  for (size_t k = 0; k < word.size(); ++k) rhs += roots_[word[k]].dot(lam) * coroot_of(betas[k]);
  return {lhs, rhs};
}

std::pair<VectorXd, VectorXd> RootSystem::kumar_sides_inv(const VectorXd& lam,
                                                          const Word& word) const {
  int w = element_of(word);
  auto betas = root_enumeration(word);
  VectorXd lhs = lam - act(inverse(w), lam);
  VectorXd rhs = VectorXd::Zero(dim_);
  for (size_t k = 0; k < word.size(); ++k) rhs += betas[k].dot(lam) * coroots_[word[k]];
  return {lhs, rhs};
}

VectorXd RootSystem::asymptotic_shift_cw(int w) const {
  // recursion from the start-asymptotics lemma:
  //   c_e = 0,  c_{u s_a} = s_a c_u - log((u a)(rho_vee)) a_vee
  VectorXd c = VectorXd::Zero(dim_);
  int u = identity();
  for (int i : canonical_word(w)) {
    VectorXd ua = act(u, roots_[i]);
    c = reflect(roots_[i], c) - std::log(ua.dot(rho_covee_)) * coroots_[i];
    u = inverse(mul_gen(i, inverse(u)));  // u s_i
  }
  return c;
}

std::string RootSystem::to_json() const {
  nlohmann::json j;
  j["schema"] = "glc-1";
  j["type"] = type_.name();
  j["rank"] = rank_;
  j["ambient_dim"] = dim_;
  auto vecj = [](const VectorXd& v) {
    std::vector<double> x(v.data(), v.data() + v.size());
    return x;
  };
  for (int i = 0; i < rank_; ++i) {
    j["simple_roots"].push_back(vecj(roots_[i]));
    j["simple_coroots"].push_back(vecj(coroots_[i]));
    j["fundamental_coweights"].push_back(vecj(coweights_[i]));
  }
  j["rho_covee"] = vecj(rho_covee_);
  j["theta"] = vecj(theta_);
  MatrixXd a = cartan_matrix();
  for (int i = 0; i < rank_; ++i) {
    std::vector<double> row;
    for (int k = 0; k < rank_; ++k) row.push_back(a(i, k));
    j["cartan_matrix"].push_back(row);
  }
  for (auto& b : positive_roots_) j["positive_roots"].push_back(vecj(b));
  j["weyl_order"] = order();
  j["longest_length"] = length(longest());
  for (auto& word : reduced_words(longest())) {
    std::vector<int> w1;
    for (int i : word) w1.push_back(i + 1);
    j["reduced_words_w0"].push_back(w1);
  }
  return j.dump(2);
}

}  // namespace glc
