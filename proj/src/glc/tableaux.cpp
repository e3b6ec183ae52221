#include "glc/tableaux.hpp"

#include <algorithm>

#include "glc/lie.hpp"  // GlcError

namespace glc {

YoungDiagram shape_of(const Tableau& t) {
  YoungDiagram s;
  for (auto& row : t) s.push_back(static_cast<int>(row.size()));
  return s;
}

bool is_semistandard(const Tableau& t) {
  for (size_t r = 0; r < t.size(); ++r) {
    if (t[r].empty()) return false;
    if (r + 1 < t.size() && t[r + 1].size() > t[r].size()) return false;
    for (size_t c = 0; c + 1 < t[r].size(); ++c)
      if (t[r][c] > t[r][c + 1]) return false;
    if (r + 1 < t.size())
      for (size_t c = 0; c < t[r + 1].size(); ++c)
        if (t[r][c] >= t[r + 1][c]) return false;
  }
  return true;
}

bool is_standard(const Tableau& t) {
  if (!is_semistandard(t)) return false;
  std::vector<int> all;
  for (auto& row : t) {
    for (size_t c = 0; c + 1 < row.size(); ++c)
      if (row[c] >= row[c + 1]) return false;
    all.insert(all.end(), row.begin(), row.end());
  }
  std::sort(all.begin(), all.end());
  for (size_t i = 0; i < all.size(); ++i)
    if (all[i] != static_cast<int>(i) + 1) return false;
  return true;
}

Tableau row_insert(const Tableau& t, int x) {
  if (!t.empty() && !is_semistandard(t)) throw GlcError("InvalidTableau", "row_insert input");
  Tableau out = t;
  int carry = x;
  for (size_t r = 0;; ++r) {
    if (r == out.size()) {
      out.push_back({carry});
      break;
    }
    auto& row = out[r];
    auto it = std::upper_bound(row.begin(), row.end(), carry);
    if (it == row.end()) {
      row.push_back(carry);
      break;
    }
    std::swap(*it, carry);
  }
  return out;
}

RskPair rsk(const std::vector<int>& word) {
  RskPair pq;
  for (size_t n = 0; n < word.size(); ++n) {
    YoungDiagram before = shape_of(pq.p);
    pq.p = row_insert(pq.p, word[n]);
    YoungDiagram after = shape_of(pq.p);
    size_t r = 0;
    while (r < before.size() && before[r] == after[r]) ++r;
    if (r == pq.q.size()) pq.q.push_back({});
    pq.q[r].push_back(static_cast<int>(n) + 1);
  }
  return pq;
}

std::vector<int> rsk_inverse(const RskPair& pq) {
  Tableau p = pq.p;
  Tableau q = pq.q;
  size_t n = 0;
  for (auto& row : q) n += row.size();
  std::vector<int> word(n);
  for (int step = static_cast<int>(n); step >= 1; --step) {
    // locate 'step' in Q: it is the last entry of some row
    size_t r = q.size();
    for (size_t i = 0; i < q.size(); ++i)
      if (!q[i].empty() && q[i].back() == step) {
        r = i;
        break;
      }
    if (r == q.size()) throw GlcError("InvalidTableau", "recording tableau is not standard");
    q[r].pop_back();
    if (q[r].empty()) q.erase(q.begin() + static_cast<long>(r));
    // reverse bumping from row r upward
    int carry = p[r].back();
    p[r].pop_back();
    if (p[r].empty()) p.erase(p.begin() + static_cast<long>(r));
    for (int i = static_cast<int>(r) - 1; i >= 0; --i) {
      auto& row = p[static_cast<size_t>(i)];
      // rightmost entry strictly smaller than carry
      auto it = std::lower_bound(row.begin(), row.end(), carry);
      --it;
      std::swap(*it, carry);
    }
    word[static_cast<size_t>(step) - 1] = carry;
  }
  return word;
}

std::vector<YoungDiagram> shape_trace(const std::vector<int>& word) {
  std::vector<YoungDiagram> out;
  Tableau p;
  for (int x : word) {
    p = row_insert(p, x);
    out.push_back(shape_of(p));
  }
  return out;
}

std::vector<int> shape_gap_trace(const std::vector<int>& word) {
  for (int x : word)
    if (x != 1 && x != 2) throw GlcError("AlphabetTooLarge", "gap trace needs letters in {1,2}");
  std::vector<int> out;
  for (auto& s : shape_trace(word)) {
    int l1 = s.empty() ? 0 : s[0];
    int l2 = s.size() > 1 ? s[1] : 0;
    out.push_back(l1 - l2);
  }
  return out;
}

std::vector<int> pitman_walk(const std::vector<int>& word) {
  std::vector<int> out;
  int b = 0, inf = 0;
  for (int x : word) {
    b += (x == 2) ? 1 : -1;
    inf = std::min(inf, b);
    out.push_back(b - 2 * inf);
  }
  return out;
}

std::pair<double, double> discrete_pitman_kernel(int x) {
  if (x < 0) throw GlcError("InvalidState", "kernel defined for x >= 0");
  double up = 0.5 * (x + 2) / (x + 1);
  double down = 0.5 * x / (x + 1);
  return {up, down};
}

}  // namespace glc
