#include "glc/rank2.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <map>

namespace glc {

std::vector<double> Rank2Map::apply(const std::vector<double>& t) const {
  for (double x : t)
    if (!(x > 0)) throw GlcError("NonPositiveParameter", "rank-2 map needs positive input");
  std::vector<double> out;
  auto pos = SemifieldSpec::positive();
  for (auto& e : forward) out.push_back(e.eval(pos, t));
  return out;
}

std::vector<double> Rank2Map::apply_back(const std::vector<double>& p) const {
  std::vector<double> rp(p.rbegin(), p.rend());
  auto q = apply(rp);
  return {q.rbegin(), q.rend()};
}

std::vector<double> Rank2Map::apply_tropical(const std::vector<double>& t) const {
  std::vector<double> out;
  auto trop = SemifieldSpec::tropical();
  for (auto& e : forward) out.push_back(e.eval(trop, t));
  return out;
}

double Rank2Map::log_jacobian_absdet(const std::vector<double>& t, double rel_step) const {
  int m = size();
  Eigen::MatrixXd J(m, m);
  for (int k = 0; k < m; ++k) {
    std::vector<double> tp = t, tm = t;
    tp[static_cast<size_t>(k)] *= std::exp(rel_step);
    tm[static_cast<size_t>(k)] *= std::exp(-rel_step);
    auto pp = apply(tp), pm = apply(tm);
    for (int r = 0; r < m; ++r)
      J(r, k) = (std::log(pp[static_cast<size_t>(r)]) - std::log(pm[static_cast<size_t>(r)])) /
                (2 * rel_step);
  }
  return std::abs(J.determinant());
}

namespace {

Rank2Map make(CartanType type, Word wa, Word wb, const std::vector<std::string>& fwd,
              std::vector<std::array<int, 2>> pin, std::vector<std::array<int, 2>> pout,
              CartanType table) {
  Rank2Map m;
  m.type = type;
  m.word_a = std::move(wa);
  m.word_b = std::move(wb);
  for (auto& s : fwd) m.forward.push_back(Expr::parse(s));
  m.params_in = std::move(pin);
  m.params_out = std::move(pout);
  m.validation_table = table;
  return m;
}

std::map<std::string, Rank2Map> build_all() {
  std::map<std::string, Rank2Map> maps;

  maps.emplace("A2", make(CartanType{'A', 2}, {0, 1, 0}, {1, 0, 1},
                          {"(t2*t3)/(t1+t3)", "t1+t3", "(t1*t2)/(t1+t3)"},
                          {{{1, 0}}, {{1, 1}}, {{0, 1}}}, {{{0, 1}}, {{1, 1}}, {{1, 0}}},
                          CartanType{'A', 2}));

  // pi1 = t1 t2 + (t1+t3) t4, pi2 = t1^2 t2 + (t1+t3)^2 t4
  const std::string b_pi1 = "(t1*t2 + (t1+t3)*t4)";
  const std::string b_pi2 = "(t1^2*t2 + (t1+t3)^2*t4)";
  // pi1' = t1 t2 + (t1+t3) t4, pi2' = t3 t4^2 + (t2+t4)^2 t1
  const std::string c_pi2 = "(t3*t4^2 + (t2+t4)^2*t1)";
  std::vector<std::string> b2_fwd = {"t2*t3^2*t4/" + b_pi2, b_pi2 + "/" + b_pi1,
                                     b_pi1 + "^2/" + b_pi2, "t1*t2*t3/" + b_pi1};
  std::vector<std::string> c2_fwd = {"t2*t3*t4/" + b_pi1, b_pi1 + "^2/" + c_pi2,
                                     c_pi2 + "/" + b_pi1, "t1*t2^2*t3/" + c_pi2};

  maps.emplace("B2", make(CartanType{'B', 2}, {0, 1, 0, 1}, {1, 0, 1, 0}, b2_fwd,
                          {{{1, 0}}, {{1, 1}}, {{1, 2}}, {{0, 1}}},
                          {{{0, 1}}, {{1, 2}}, {{1, 1}}, {{1, 0}}}, CartanType{'C', 2}));
  maps.emplace("C2", make(CartanType{'C', 2}, {0, 1, 0, 1}, {1, 0, 1, 0}, c2_fwd,
                          {{{1, 0}}, {{2, 1}}, {{1, 1}}, {{0, 1}}},
                          {{{0, 1}}, {{1, 1}}, {{2, 1}}, {{1, 0}}}, CartanType{'B', 2}));

  const std::string g_pi1 =
      "(t1*t2*t3^2*t4 + t1*t2*(t3+t5)^2*t6 + (t1+t3)*t4*t5^2*t6)";
  const std::string g_pi2 =
      "(t1^2*t2^2*t3^3*t4 + t1^2*t2^2*(t3+t5)^3*t6 + (t1+t3)^2*t4^2*t5^3*t6"
      " + t1*t2*t4*t5^2*t6*(3*t1*t3 + 2*t3^2 + 2*t3*t5 + 2*t1*t5))";
  const std::string g_pi3 =
      "(t1^3*t2^2*t3^3*t4 + t1^3*t2^2*(t3+t5)^3*t6 + (t1+t3)^3*t4^2*t5^3*t6"
      " + t1^2*t2*t4*t5^2*t6*(3*t1*t3 + 3*t3^2 + 3*t3*t5 + 2*t1*t5))";
  const std::string g_pi4 =
      "(t1^2*t2^2*t3^3*t4*(t1*t2*t3^3*t4 + 2*t1*t2*(t3+t5)^3*t6"
      " + (3*t1*t3 + 3*t3^2 + 3*t3*t5 + 2*t1*t5)*t4*t5^2*t6)"
      " + t6^2*(t1*t2*(t3+t5)^2 + (t1+t3)*t4*t5^2)^3)";
  std::vector<std::string> g2_fwd = {"t2*t3^3*t4^2*t5^3*t6/" + g_pi3,
                                     g_pi3 + "/" + g_pi2,
                                     g_pi2 + "^3/(" + g_pi3 + "*" + g_pi4 + ")",
                                     g_pi4 + "/(" + g_pi1 + "*" + g_pi2 + ")",
                                     g_pi1 + "^3/" + g_pi4,
                                     "t1*t2*t3^2*t4*t5/" + g_pi1};
  maps.emplace("G2", make(CartanType{'G', 2}, {0, 1, 0, 1, 0, 1}, {1, 0, 1, 0, 1, 0}, g2_fwd,
                          {{{1, 0}}, {{1, 1}}, {{2, 3}}, {{1, 2}}, {{1, 3}}, {{0, 1}}},
                          {{{0, 1}}, {{1, 3}}, {{1, 2}}, {{2, 3}}, {{1, 1}}, {{1, 0}}},
                          CartanType{'G', 2}));
  return maps;
}

}  // namespace

const Rank2Map& rank2_map(CartanType type) {
  static const std::map<std::string, Rank2Map> maps = build_all();
  auto it = maps.find(type.name());
  if (it == maps.end()) throw GlcError("UnsupportedType", "no rank-2 map for " + type.name());
  return it->second;
}

}  // namespace glc
