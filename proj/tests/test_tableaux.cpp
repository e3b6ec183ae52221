#include <functional>

#include "doctest.h"
#include "glc/lie.hpp"
#include "glc/tableaux.hpp"

using namespace glc;

TEST_CASE("row insertion") {
  Tableau empty;
  Tableau one = row_insert(empty, 2);
  CHECK(one == Tableau{{2}});
  // inserting 1 into the row [1,2] bumps the 2
  Tableau t = {{1, 2}};
  CHECK(row_insert(t, 1) == Tableau{{1, 1}, {2}});
  CHECK_THROWS_AS(row_insert(Tableau{{2, 1}}, 1), GlcError);
}

TEST_CASE("rsk reproduces the worked example") {
  std::vector<int> w = {1, 2, 1, 1, 2, 1, 2, 2};
  auto pq = rsk(w);
  CHECK(pq.p == Tableau{{1, 1, 1, 1, 2, 2}, {2, 2}});
  CHECK(pq.q == Tableau{{1, 2, 4, 5, 7, 8}, {3, 6}});
  CHECK(rsk_inverse(pq) == w);
  auto e = rsk({});
  CHECK(e.p.empty());
  CHECK(e.q.empty());
}

TEST_CASE("rsk bijectivity brute-forced over short words") {
  std::function<void(std::vector<int>&)> rec = [&](std::vector<int>& w) {
    if (!w.empty()) {
      auto pq = rsk(w);
      CHECK(is_semistandard(pq.p));
      CHECK(is_standard(pq.q));
      CHECK(shape_of(pq.p) == shape_of(pq.q));
      CHECK(rsk_inverse(pq) == w);
      // the letter multiset is preserved
      std::vector<long> mult(4, 0), mult2(4, 0);
      for (int x : w) ++mult[static_cast<size_t>(x)];
      for (auto& row : pq.p)
        for (int x : row) ++mult2[static_cast<size_t>(x)];
      CHECK(mult == mult2);
    }
    if (w.size() == 4) return;
    for (int c = 1; c <= 3; ++c) {
      w.push_back(c);
      rec(w);
      w.pop_back();
    }
  };
  std::vector<int> w;
  rec(w);
}

TEST_CASE("shape trace grows by one cell and matches the pitman walk") {
  std::vector<int> w = {1, 2, 1, 1, 2, 1, 2, 2};
  auto tr = shape_trace(w);
  long prev = 0;
  for (auto& s : tr) {
    long total = 0;
    for (int r : s) total += r;
    CHECK(total == prev + 1);
    prev = total;
  }
  auto gap = shape_gap_trace(w);
  auto walk = pitman_walk(w);
  CHECK(gap == walk);
  CHECK(gap.back() == 4);

  CHECK(shape_gap_trace({2, 2, 2}) == std::vector<int>{1, 2, 3});
  CHECK_THROWS_AS(shape_gap_trace({1, 3}), GlcError);

  // brute force over random-ish length-12 words
  for (uint64_t seed = 0; seed < 40; ++seed) {
    std::vector<int> word;
    uint64_t s = seed * 2654435761u + 7;
    for (int i = 0; i < 12; ++i) {
      s = s * 6364136223846793005ULL + 1442695040888963407ULL;
      word.push_back(1 + static_cast<int>((s >> 33) % 2));
    }
    CHECK(shape_gap_trace(word) == pitman_walk(word));
  }
}

TEST_CASE("discrete pitman kernel") {
  auto [u0, d0] = discrete_pitman_kernel(0);
  CHECK(u0 == doctest::Approx(1.0));
  CHECK(d0 == doctest::Approx(0.0));
  auto [u3, d3] = discrete_pitman_kernel(3);
  CHECK(u3 == doctest::Approx(0.625));
  CHECK(d3 == doctest::Approx(0.375));
  for (int x = 0; x <= 10; ++x) {
    auto [u, d] = discrete_pitman_kernel(x);
    CHECK(u + d == doctest::Approx(1.0));
    if (x > 0) CHECK(u / d == doctest::Approx((x + 2.0) / x));
  }
  CHECK_THROWS_AS(discrete_pitman_kernel(-1), GlcError);
}
