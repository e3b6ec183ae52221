#include <cmath>
#include <set>

#include "doctest.h"
#include "glc/lie.hpp"
#include "glc/rng.hpp"

using namespace glc;

namespace {
VectorXd combo(const RootSystem& rs, std::initializer_list<double> coeffs) {
  VectorXd v = VectorXd::Zero(rs.ambient_dim());
  int i = 0;
  for (double c : coeffs) v += c * rs.simple_root(i++);
  return v;
}
VectorXd random_cartan(const RootSystem& rs, RngStream& rng, double amp = 3.0) {
  VectorXd v = VectorXd::Zero(rs.ambient_dim());
  for (const auto& b : rs.chamber_basis()) v += amp * (2 * rng.uniform() - 1) * b;
  return v;
}
}  // namespace

TEST_CASE("construction rejects unsupported types") {
  CHECK_THROWS_AS(CartanType::parse("a4"), GlcError);
  CHECK_THROWS_AS(CartanType::parse("b3"), GlcError);
  CHECK_THROWS_AS(CartanType::parse("x2"), GlcError);
  CHECK_NOTHROW(CartanType::parse("G2"));
}

TEST_CASE("simple roots match the tables") {
  RootSystem a2(CartanType::parse("a2"));
  CHECK(a2.simple_root(0).isApprox((VectorXd(3) << 1, -1, 0).finished()));
  CHECK(a2.simple_root(1).isApprox((VectorXd(3) << 0, 1, -1).finished()));
  RootSystem b2(CartanType::parse("b2"));
  CHECK(b2.simple_root(0).isApprox((VectorXd(2) << 1, -1).finished()));
  CHECK(b2.simple_root(1).isApprox((VectorXd(2) << 0, 1).finished()));
  RootSystem a1(CartanType::parse("a1"));
  CHECK(a1.simple_root(0)[0] == doctest::Approx(2.0));
  CHECK(a1.simple_coroot(0)[0] == doctest::Approx(1.0));
}

TEST_CASE("cartan matrix, rho and theta invariants") {
  for (const char* t : {"A1", "A2", "A3", "B2", "C2", "G2"}) {
    RootSystem rs(CartanType::parse(t));
    CAPTURE(t);
    MatrixXd a = rs.cartan_matrix();
    for (int i = 0; i < rs.rank(); ++i) {
      CHECK(a(i, i) == doctest::Approx(2.0));
      for (int j = 0; j < rs.rank(); ++j) {
        if (i != j) CHECK(a(i, j) <= 1e-12);
        CHECK(a(i, j) == doctest::Approx(std::round(a(i, j))).epsilon(1e-12));
      }
    }
    // rho_vee two ways
    VectorXd half_sum = VectorXd::Zero(rs.ambient_dim());
    for (auto& b : rs.positive_roots()) half_sum += 0.5 * rs.coroot_of(b);
    CHECK((half_sum - rs.rho_covee()).norm() < 1e-12);
    // theta vanishes in the simply-laced normalization
    if (std::string(t) == "A2" || std::string(t) == "A3") CHECK(rs.theta().norm() < 1e-12);
  }
  RootSystem a1(CartanType::parse("a1"));
  CHECK(a1.theta()[0] == doctest::Approx(0.5 * std::log(2.0)));
}

TEST_CASE("weyl group sizes and longest elements") {
  struct Row {
    const char* t;
    int order, len;
  };
  for (auto [t, order, len] : {Row{"A1", 2, 1}, Row{"A2", 6, 3}, Row{"A3", 24, 6},
                               Row{"B2", 8, 4}, Row{"C2", 8, 4}, Row{"G2", 12, 6}}) {
    RootSystem rs(CartanType::parse(t));
    CAPTURE(t);
    CHECK(rs.order() == order);
    CHECK(rs.length(rs.longest()) == len);
    CHECK(rs.length(rs.identity()) == 0);
    for (int w = 0; w < rs.order(); ++w)
      for (int i = 0; i < rs.rank(); ++i) CHECK(rs.mul_gen(i, w) < rs.order());
  }
}

TEST_CASE("reduced words") {
  RootSystem a2(CartanType::parse("a2"));
  auto words = a2.reduced_words(a2.longest());
  REQUIRE(words.size() == 2);
  std::set<Word> ws(words.begin(), words.end());
  CHECK(ws.count({0, 1, 0}) == 1);
  CHECK(ws.count({1, 0, 1}) == 1);
  CHECK(a2.reduced_words(a2.identity()) == std::vector<Word>{{}});

  RootSystem a3(CartanType::parse("a3"));
  auto w3 = a3.reduced_words(a3.longest());
  std::set<Word> s3(w3.begin(), w3.end());
  CHECK(s3.count({0, 1, 2, 0, 1, 0}) == 1);
  CHECK(s3.count({0, 1, 0, 2, 1, 0}) == 1);
  for (auto& w : w3) {
    CHECK(static_cast<int>(w.size()) == 6);
    CHECK(a3.element_of(w) == a3.longest());
  }
}

TEST_CASE("positive root enumerations against the appendix tables") {
  RootSystem a2(CartanType::parse("a2"));
  auto b = a2.root_enumeration({0, 1, 0});
  CHECK((b[0] - combo(a2, {1, 0})).norm() < 1e-12);
  CHECK((b[1] - combo(a2, {1, 1})).norm() < 1e-12);
  CHECK((b[2] - combo(a2, {0, 1})).norm() < 1e-12);

  RootSystem b2(CartanType::parse("b2"));
  auto bb = b2.root_enumeration({0, 1, 0, 1});
  CHECK((bb[0] - combo(b2, {1, 0})).norm() < 1e-12);
  CHECK((bb[1] - combo(b2, {1, 1})).norm() < 1e-12);
  CHECK((bb[2] - combo(b2, {1, 2})).norm() < 1e-12);
  CHECK((bb[3] - combo(b2, {0, 1})).norm() < 1e-12);

  CHECK_THROWS_AS(a2.root_enumeration({0, 0}), GlcError);

  // every reduced word of every element enumerates the same inversion multiset
  for (const char* t : {"A2", "B2", "G2"}) {
    RootSystem rs(CartanType::parse(t));
    for (int w = 0; w < rs.order(); ++w) {
      std::set<std::vector<long long>> ref;
      bool first = true;
      for (auto& word : rs.reduced_words(w)) {
        std::set<std::vector<long long>> cur;
        for (auto& beta : rs.root_enumeration(word)) {
          std::vector<long long> key;
          for (int d = 0; d < beta.size(); ++d) key.push_back(llround(beta[d] * 1e9));
          cur.insert(key);
        }
        CHECK(cur.size() == word.size());
        if (first) {
          ref = cur;
          first = false;
        } else {
          CHECK(cur == ref);
        }
      }
    }
  }
}

TEST_CASE("kumar identities on random inputs") {
  RngStream rng(7, 0);
  for (const char* t : {"A1", "A2", "A3", "B2", "C2", "G2"}) {
    RootSystem rs(CartanType::parse(t));
    CAPTURE(t);
    double worst = 0;
    for (int it = 0; it < 100; ++it) {
      int w = static_cast<int>(rng.next_u64() % static_cast<uint64_t>(rs.order()));
      auto words = rs.reduced_words(w);
      const Word& word = words[rng.next_u64() % words.size()];
      VectorXd lam = random_cartan(rs, rng);
      auto [l1, r1] = rs.kumar_sides(lam, word);
      auto [l2, r2] = rs.kumar_sides_inv(lam, word);
      worst = std::max({worst, (l1 - r1).norm(), (l2 - r2).norm()});
    }
    CHECK(worst < 1e-12);
  }
  RootSystem g2(CartanType::parse("g2"));
  auto [l, r] = g2.kumar_sides(VectorXd::Zero(3), g2.canonical_word(g2.longest()));
  CHECK(l.norm() == 0);
  CHECK(r.norm() == 0);
}

TEST_CASE("rho property and bruhat steps") {
  for (const char* t : {"A2", "B2", "G2"}) {
    RootSystem rs(CartanType::parse(t));
    for (int w = 0; w < rs.order(); ++w) {
      for (auto& word : rs.reduced_words(w)) {
        VectorXd sum = VectorXd::Zero(rs.ambient_dim());
        for (auto& beta : rs.root_enumeration(word)) sum += rs.coroot_of(beta);
        CHECK((rs.rho_covee() - rs.act(w, rs.rho_covee()) - sum).norm() < 1e-12);
      }
      for (int i = 0; i < rs.rank(); ++i) CHECK_NOTHROW(rs.bruhat_ascends_left(i, w));
    }
    for (int i = 0; i < rs.rank(); ++i) {
      CHECK(rs.bruhat_ascends_left(i, rs.identity()));
      CHECK_FALSE(rs.bruhat_ascends_left(i, rs.longest()));
    }
  }
  RootSystem a2(CartanType::parse("a2"));
  CHECK(a2.bruhat_ascends_left(1, a2.element_of({0})));  // l(s2 s1) = 2
}

TEST_CASE("reflections are involutions acting by the textbook formula") {
  RngStream rng(11, 0);
  RootSystem g2(CartanType::parse("g2"));
  for (int it = 0; it < 20; ++it) {
    VectorXd v = random_cartan(g2, rng);
    for (auto& beta : g2.positive_roots()) {
      VectorXd r = g2.reflect(beta, v);
      CHECK((g2.reflect(beta, r) - v).norm() < 1e-12);
      CHECK((r - (v - beta.dot(v) * g2.coroot_of(beta))).norm() == 0);
    }
  }
}

TEST_CASE("asymptotic shift constants satisfy the step recursion") {
  // c_{w s_a} = s_a c_w - log((w a)(rho_vee)) a_vee on ascending steps
  for (const char* t : {"A2", "B2"}) {
    RootSystem rs(CartanType::parse(t));
    for (int w = 0; w < rs.order(); ++w) {
      for (int i = 0; i < rs.rank(); ++i) {
        int ws = rs.inverse(rs.mul_gen(i, rs.inverse(w)));  // w s_i
        if (rs.length(ws) != rs.length(w) + 1) continue;
        VectorXd lhs = rs.asymptotic_shift_cw(ws);
        VectorXd wa = rs.act(w, rs.simple_root(i));
        VectorXd rhs = rs.reflect(rs.simple_root(i), rs.asymptotic_shift_cw(w)) -
                       std::log(wa.dot(rs.rho_covee())) * rs.simple_coroot(i);
        CHECK((lhs - rhs).norm() < 1e-10);
      }
    }
  }
}

TEST_CASE("json serialization carries the tables") {
  RootSystem b2(CartanType::parse("b2"));
  std::string j = b2.to_json();
  CHECK(j.find("\"type\": \"B2\"") != std::string::npos);
  CHECK(j.find("cartan_matrix") != std::string::npos);
  CHECK(j.find("reduced_words_w0") != std::string::npos);
}
