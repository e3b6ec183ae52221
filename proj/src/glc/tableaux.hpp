#pragma once
// Young tableaux, Robinson-Schensted row insertion, shape dynamics and the
// discrete Pitman transition kernel. Words are sequences over {1..n}; only the
// word (Robinson-Schensted) form is implemented, not Knuth's matrix version.

#include <utility>
#include <vector>

namespace glc {

using Tableau = std::vector<std::vector<int>>;  // rows of letters
using YoungDiagram = std::vector<int>;          // weakly decreasing row lengths

bool is_semistandard(const Tableau& t);
bool is_standard(const Tableau& t);
YoungDiagram shape_of(const Tableau& t);

// Insert x into the first row, bumping larger letters downward.
Tableau row_insert(const Tableau& t, int x);

struct RskPair {
  Tableau p;  // semistandard
  Tableau q;  // standard, records growth
};
RskPair rsk(const std::vector<int>& word);
std::vector<int> rsk_inverse(const RskPair& pq);

// Shapes after each insertion.
std::vector<YoungDiagram> shape_trace(const std::vector<int>& word);

// lambda1 - lambda2 after each step for a two-letter word, together with the
// Pitman-transformed walk X_n = B_n - 2 inf B (2 read as +1, 1 as -1).
std::vector<int> shape_gap_trace(const std::vector<int>& word);
std::vector<int> pitman_walk(const std::vector<int>& word);

// p_up = (x+2)/(2(x+1)), p_down = x/(2(x+1))
std::pair<double, double> discrete_pitman_kernel(int x);

}  // namespace glc
