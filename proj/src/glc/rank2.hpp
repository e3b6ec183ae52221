#pragma once
// Closed-form changes of Lusztig parametrization between the two reduced words
// of w0 in rank 2, stored as subtraction-free expressions so they evaluate over
// any semifield (positive evaluation for the Beta-Gamma identities, tropical
// for the exponential identities).
//
// Each package also records the gamma-law parameters attached to both words
// (integer combinations c1*a1 + c2*a2 of the two chamber coordinates) and the
// root table in which the map agrees with path-model Lusztig extraction.

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "glc/expr.hpp"
#include "glc/lie.hpp"

namespace glc {

struct Rank2Map {
  CartanType type;                    // label as in the source displays
  Word word_a, word_b;                // e.g. (1,2,1,2) and (2,1,2,1), 0-based
  std::vector<Expr> forward;          // p = R_{a,b}(t)
  std::vector<std::array<int, 2>> params_in;   // gamma parameter of t_k
  std::vector<std::array<int, 2>> params_out;  // gamma parameter of p_k
  CartanType validation_table;        // root table for path cross-validation

  int size() const { return static_cast<int>(forward.size()); }
  std::vector<double> apply(const std::vector<double>& t) const;          // positive semifield
  // the inverse map R_{b,a} = rev . R_{a,b} . rev (Schutzenberger symmetry)
  std::vector<double> apply_back(const std::vector<double>& p) const;
  std::vector<double> apply_tropical(const std::vector<double>& t) const; // (min,+)
  // |det d(log p)/d(log t)| by central finite differences
  double log_jacobian_absdet(const std::vector<double>& t, double rel_step = 1e-5) const;
};

const Rank2Map& rank2_map(CartanType type);  // A2, B2, C2, G2

}  // namespace glc
