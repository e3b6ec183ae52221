#include "glc.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <sstream>
#include <string>

#include "glc/expr.hpp"
#include "glc/group.hpp"
#include "glc/lie.hpp"
#include "glc/mc.hpp"
#include "glc/path.hpp"
#include "glc/suite.hpp"
#include "glc/tableaux.hpp"
#include "glc/whittaker.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <typename F>
int guarded(F&& fn) {
  try {
    fn();
    return GLC_OK;
  } catch (const glc::GlcError& e) {
    g_last_error = e.what();
    return e.kind() == "UsageError" || e.kind() == "UnsupportedType" ||
                   e.kind() == "SyntaxError" || e.kind() == "NegativeConstant" ||
                   e.kind() == "UnboundVariable"
               ? GLC_EINVAL
               : GLC_ERROR;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GLC_ERROR;
  }
}

glc::PathX parse_csv_path(const glc::RootSystem* rs, const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line)) throw glc::GlcError("UsageError", "empty CSV");
  std::vector<double> times;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string cell;
    std::vector<double> row;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    if (static_cast<int>(row.size()) != rs->ambient_dim() + 1)
      throw glc::GlcError("UsageError", "CSV row arity does not match the ambient dimension");
    times.push_back(row[0]);
    rows.push_back({row.begin() + 1, row.end()});
  }
  if (rows.size() < 2) throw glc::GlcError("UsageError", "need at least two samples");
  int n = static_cast<int>(rows.size()) - 1;
  double T = times.back();
  for (size_t j = 0; j < times.size(); ++j)
    if (std::abs(times[j] - T * static_cast<double>(j) / n) > 1e-9 * std::max(1.0, T))
      throw glc::GlcError("UsageError", "CSV grid must be uniform starting at 0");
  glc::MatrixXd m(n + 1, rs->ambient_dim());
  for (int j = 0; j <= n; ++j)
    for (int d = 0; d < rs->ambient_dim(); ++d) m(j, d) = rows[static_cast<size_t>(j)][static_cast<size_t>(d)];
  return glc::PathX(rs, T, std::move(m));
}

std::string path_to_csv(const glc::PathX& p) {
  std::ostringstream out;
  out.precision(12);
  out << "t";
  for (int d = 0; d < p.reg().cols(); ++d) out << ",x" << d + 1;
  out << "\n";
  int j0 = p.divergence() == glc::Divergence::Start ? 1 : 0;
  int j1 = p.divergence() == glc::Divergence::End ? p.segments() - 1 : p.segments();
  for (int j = j0; j <= j1; ++j) {
    out << p.time(j);
    glc::VectorXd v = p.value(j);
    for (int d = 0; d < v.size(); ++d) out << "," << v[d];
    out << "\n";
  }
  return out.str();
}

}  // namespace

extern "C" {

const char* glc_last_error(void) { return g_last_error.c_str(); }
void glc_free(char* ptr) { std::free(ptr); }
const char* glc_version(void) { return "0.1.0"; }

struct glc_rootsystem {
  glc::RootSystem rs;
};
struct glc_expr {
  glc::Expr e;
};

int glc_rootsystem_create(const char* type, glc_rootsystem** out) {
  return guarded([&] {
    *out = new glc_rootsystem{glc::RootSystem(glc::CartanType::parse(type ? type : ""))};
  });
}
void glc_rootsystem_destroy(glc_rootsystem* rs) { delete rs; }
int glc_rootsystem_rank(const glc_rootsystem* rs) { return rs ? rs->rs.rank() : 0; }
int glc_rootsystem_json(const glc_rootsystem* rs, char** out_json) {
  return guarded([&] { *out_json = dup_string(rs->rs.to_json()); });
}

int glc_expr_parse(const char* text, glc_expr** out) {
  return guarded([&] { *out = new glc_expr{glc::Expr::parse(text ? text : "")}; });
}
void glc_expr_destroy(glc_expr* e) { delete e; }
int glc_expr_num_vars(const glc_expr* e) { return e ? e->e.num_vars() : 0; }

int glc_expr_eval(const glc_expr* e, const char* semifield, double q, const double* values,
                  int n_values, double* out) {
  return guarded([&] {
    std::string s = semifield ? semifield : "positive";
    glc::SemifieldSpec spec = glc::SemifieldSpec::positive();
    if (s == "maslov") spec = glc::SemifieldSpec::maslov(q);
    else if (s == "tropical") spec = glc::SemifieldSpec::tropical();
    else if (s != "positive") throw glc::GlcError("UsageError", "unknown semifield " + s);
    *out = e->e.eval(spec, std::vector<double>(values, values + n_values));
  });
}

int glc_expr_maslov_limit_error(const glc_expr* e, const double* x, int n_values, double q,
                                double* out) {
  return guarded([&] {
    *out = e->e.maslov_limit_error(std::vector<double>(x, x + n_values), q);
  });
}

int glc_rsk_json(const char* word, char** out_json) {
  return guarded([&] {
    std::vector<int> w;
    std::istringstream in(word ? word : "");
    std::string cell;
    while (std::getline(in, cell, ',')) w.push_back(std::stoi(cell));
    auto pq = glc::rsk(w);
    json j;
    j["schema"] = "glc-1";
    j["word"] = w;
    j["p"] = pq.p;
    j["q"] = pq.q;
    j["shape_trace"] = glc::shape_trace(w);
    bool two_letter = true;
    for (int x : w) two_letter &= (x == 1 || x == 2);
    if (two_letter && !w.empty()) {
      j["shape_gap_trace"] = glc::shape_gap_trace(w);
      j["pitman_walk"] = glc::pitman_walk(w);
    }
    *out_json = dup_string(j.dump(2));
  });
}

int glc_trop_json(const char* expr_text, const double* points, int n_points, int n_vars,
                  char** out_json) {
  return guarded([&] {
    glc::Expr e = glc::Expr::parse(expr_text ? expr_text : "");
    if (n_vars != e.num_vars())
      throw glc::GlcError("UsageError", "point arity does not match expression variables");
    json j;
    j["schema"] = "glc-1";
    j["expr"] = e.print();
    j["variables"] = e.variables();
    for (int p = 0; p < n_points; ++p) {
      std::vector<double> x(points + static_cast<long>(p) * n_vars,
                            points + static_cast<long>(p + 1) * n_vars);
      json row;
      row["point"] = x;
      row["tropical"] = e.eval(glc::SemifieldSpec::tropical(), x);
      json errs;
      for (double q : {0.25, 0.125, 0.0625, 0.03125})
        errs.push_back({{"q", q}, {"error", e.maslov_limit_error(x, q)}});
      row["limit_errors"] = errs;
      j["evaluations"].push_back(row);
    }
    *out_json = dup_string(j.dump(2));
  });
}

int glc_paths_csv(const char* type, const char* chain, double q, const char* csv_in,
                  char** csv_out) {
  return guarded([&] {
    auto rs = std::make_unique<glc::RootSystem>(glc::CartanType::parse(type ? type : ""));
    glc::PathX p = parse_csv_path(rs.get(), csv_in ? csv_in : "");
    glc::QParam qp{q};
    std::istringstream in(chain ? chain : "");
    std::string op;
    while (std::getline(in, op, ',')) {
      std::istringstream os(op);
      std::string name, arg1, arg2;
      std::getline(os, name, ':');
      std::getline(os, arg1, ':');
      std::getline(os, arg2, ':');
      auto idx = [&](const std::string& a) {
        int i = std::stoi(a) - 1;
        if (i < 0 || i >= rs->rank()) throw glc::GlcError("UsageError", "root index out of range");
        return i;
      };
      if (name == "pitman") p = glc::pitman(p, idx(arg1));
      else if (name == "T") p = glc::geom_T(p, idx(arg1), qp);
      else if (name == "e") p = glc::crystal_e(p, idx(arg1), std::stod(arg2), qp);
      else if (name == "einf") p = glc::lowest_proj(p, idx(arg1), qp);
      else if (name == "Tw0") p = glc::geom_T_w(p, rs->canonical_word(rs->longest()), qp);
      else if (name == "Pw0") p = glc::pitman_w(p, rs->canonical_word(rs->longest()));
      else if (name == "iota") p = glc::iota(p);
      else if (name == "S") p = glc::schutzenberger_path(p);
      else throw glc::GlcError("UsageError", "unknown transform '" + name + "'");
    }
    *csv_out = dup_string(path_to_csv(p));
  });
}

int glc_group_json(const char* type, const char* csv_in, int theta_shift, char** out_json) {
  return guarded([&] {
    auto rs = std::make_unique<glc::RootSystem>(glc::CartanType::parse(type ? type : ""));
    glc::GroupPicture gp(rs.get());
    glc::PathX p = parse_csv_path(rs.get(), csv_in ? csv_in : "");
    auto fl = gp.flow(p, theta_shift != 0);
    json j;
    j["schema"] = "glc-1";
    auto matj = [](const glc::MatrixXd& m) {
      json rows;
      for (int r = 0; r < m.rows(); ++r) {
        json row;
        for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(row);
      }
      return rows;
    };
    auto vecj = [](const glc::VectorXd& v) {
      return std::vector<double>(v.data(), v.data() + v.size());
    };
    j["B"] = matj(fl.B);
    j["N"] = matj(fl.N);
    j["hw"] = vecj(gp.hw(fl.B));
    j["gamma"] = vecj(gp.gamma(fl.B));
    j["f_B"] = gp.f_B(fl.B);
    const glc::Word& word = rs->canonical_word(rs->longest());
    std::vector<int> w1;
    for (int i : word) w1.push_back(i + 1);
    j["word"] = w1;
    j["string_params"] = glc::string_params(p, word);
    j["lusztig_params"] = glc::lusztig_params(p, word);
    *out_json = dup_string(j.dump(2));
  });
}

int glc_whittaker_csv(const char* type, const double* mu, int mu_len, double lam_min,
                      double lam_max, int n_points, char** csv_out) {
  return guarded([&] {
    glc::RootSystem rs(glc::CartanType::parse(type ? type : ""));
    if (mu_len != rs.ambient_dim())
      throw glc::GlcError("UsageError", "mu arity must match the ambient dimension");
    glc::VectorXd m(mu_len);
    for (int i = 0; i < mu_len; ++i) m[i] = mu[i];
    glc::VectorXd dir = glc::VectorXd::Zero(rs.ambient_dim());
    for (const auto& b : rs.chamber_basis()) dir += b;
    dir /= std::sqrt(static_cast<double>(rs.rank()));
    std::ostringstream out;
    out.precision(12);
    out << "lambda,log_psi\n";
    for (int i = 0; i < n_points; ++i) {
      double s = lam_min + (lam_max - lam_min) * i / std::max(1, n_points - 1);
      out << s << "," << glc::log_psi(rs, glc::VectorXd(s * dir), m) << "\n";
    }
    *csv_out = dup_string(out.str());
  });
}

int glc_sample_csv(const char* type, const double* lam, int lam_len, const double* mu,
                   int mu_len, long n, uint64_t seed, char** csv_out) {
  return guarded([&] {
    glc::RootSystem rs(glc::CartanType::parse(type ? type : ""));
    if (lam_len != rs.ambient_dim() || mu_len != rs.ambient_dim())
      throw glc::GlcError("UsageError", "lambda/mu arity must match the ambient dimension");
    glc::VectorXd l(lam_len), m(mu_len);
    for (int i = 0; i < lam_len; ++i) l[i] = lam[i];
    for (int i = 0; i < mu_len; ++i) m[i] = mu[i];
    glc::CanonicalSampler cs(&rs, l, m);
    glc::RngStream rng(seed, 9);
    std::ostringstream out;
    out.precision(12);
    out << "sample";
    for (int d = 0; d < rs.ambient_dim(); ++d) out << ",gamma" << d + 1;
    for (size_t k = 0; k < cs.word().size(); ++k) out << ",t" << k + 1;
    out << "\n";
    for (long i = 0; i < n; ++i) {
      auto s = cs.draw(rng);
      out << i;
      for (int d = 0; d < rs.ambient_dim(); ++d) out << "," << s.gamma[d];
      for (double t : s.t) out << "," << t;
      out << "\n";
    }
    *csv_out = dup_string(out.str());
  });
}

int glc_mc_json(const char* name, const char* type, double a1, double a2, long n, uint64_t seed,
                char** out_json, int* pass) {
  return guarded([&] {
    glc::CartanType t = glc::CartanType::parse(type && *type ? type : "a2");
    glc::TestReport r = glc::run_mc_check(name ? name : "", t, a1, a2, n, seed);
    if (pass) *pass = r.pass() ? 1 : 0;
    *out_json = dup_string(glc::report_json(r));
  });
}

int glc_suite_json(uint64_t seed, int quick, const char* selection, char** out_json, int* pass) {
  return guarded([&] {
    std::vector<int> sel;
    if (selection && *selection) {
      std::istringstream in(selection);
      std::string cell;
      while (std::getline(in, cell, ',')) sel.push_back(std::stoi(cell));
    }
    glc::SuiteResult r = glc::run_suite(seed, quick != 0, sel);
    if (pass) *pass = r.pass() ? 1 : 0;
    *out_json = dup_string(glc::suite_result_json(r));
  });
}

}  // extern "C"
