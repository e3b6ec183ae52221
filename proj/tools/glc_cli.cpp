// glc: command-line front end. Everything goes through the C API in glc.h;
// subcommands emit JSON (reports, tables) or CSV (paths, grids, samples).
// Exit codes: 0 success / checks passed, 1 check failed, 2 usage error.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "glc.h"

namespace {

int emit(const char* data, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << data;
    if (*data && data[strlen(data) - 1] != '\n') std::cout << "\n";
    return 0;
  }
  std::ofstream f(out_path);
  if (!f) {
    std::cerr << "cannot open " << out_path << "\n";
    return 2;
  }
  f << data;
  return 0;
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw CLI::ValidationError("input", "cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<double> parse_vec(const std::string& s) {
  std::vector<double> v;
  std::istringstream in(s);
  std::string cell;
  while (std::getline(in, cell, ',')) v.push_back(std::stod(cell));
  return v;
}

int fail(int rc) {
  std::cerr << "error: " << glc_last_error() << "\n";
  return rc == GLC_EINVAL ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"geometric Littelmann crystal toolkit"};
  app.require_subcommand(1);
  app.fallthrough(true);

  std::string type = "a2", out_path;
  uint64_t seed = 1;
  if (const char* env = std::getenv("GLC_SEED")) seed = std::strtoull(env, nullptr, 10);
  app.add_option("--type", type, "Cartan type: a1,a2,a3,b2,c2,g2")->capture_default_str();
  app.add_option("--seed", seed, "RNG seed (env GLC_SEED)")->capture_default_str();
  app.add_option("--out", out_path, "output file (default stdout)");

  auto* roots = app.add_subcommand("roots", "root system tables as JSON");

  auto* rsk = app.add_subcommand("rsk", "Robinson-Schensted of a word");
  std::string word = "1,2,1,1,2,1,2,2";
  rsk->add_option("--word", word, "comma-separated letters")->capture_default_str();

  auto* trop = app.add_subcommand("trop", "tropicalize a subtraction-free expression");
  std::string expr_text, points_str;
  trop->add_option("--expr", expr_text, "expression text")->required();
  trop->add_option("--points", points_str,
                   "semicolon-separated points, each comma-separated, e.g. '1,2;0,1'");

  auto* paths = app.add_subcommand("paths", "apply a transform chain to a CSV path");
  std::string chain, csv_in = "-";
  double q = 1.0;
  paths->add_option("--chain", chain, "e.g. 'T:1,T:2,T:1' or 'pitman:1' or 'Tw0'")->required();
  paths->add_option("--in", csv_in, "input CSV (default stdin)")->capture_default_str();
  paths->add_option("--q", q, "temperature parameter (0 = min-plus model)")
      ->capture_default_str();

  auto* group = app.add_subcommand("group", "flow a CSV path through the group picture");
  std::string gcsv_in = "-";
  bool theta = false;
  group->add_option("--in", gcsv_in, "input CSV (default stdin)")->capture_default_str();
  group->add_flag("--theta", theta, "apply the theta shift");

  auto* whit = app.add_subcommand("whittaker", "log psi on a lambda grid, CSV out");
  std::string mu_str = "1";
  double lmin = -2, lmax = 3;
  int npts = 51;
  whit->add_option("--mu", mu_str, "spectral parameter (ambient coords)")->capture_default_str();
  whit->add_option("--lambda-min", lmin)->capture_default_str();
  whit->add_option("--lambda-max", lmax)->capture_default_str();
  whit->add_option("--grid", npts, "number of grid points")->capture_default_str();

  auto* sample = app.add_subcommand("sample", "canonical-measure samples, CSV out");
  std::string lam_str = "1", smu_str = "1";
  long sn = 1000;
  sample->add_option("--lambda", lam_str, "highest weight (ambient coords)")
      ->capture_default_str();
  sample->add_option("--mu", smu_str, "spectral parameter (ambient coords)")
      ->capture_default_str();
  sample->add_option("--n", sn, "number of samples")->capture_default_str();

  auto* mc = app.add_subcommand("mc", "run one Monte Carlo identity check");
  std::string check;
  double a1 = 1.0, a2 = 1.0;
  long mn = 100000;
  mc->add_option("check", check,
                 "dufresne | matsumoto-yor | n-infty | beta-gamma | exponential | "
                 "discrete-pitman | highest-weight-markov | conditional-representation | "
                 "lr-disintegration")
      ->required();
  mc->add_option("--mu,--a1", a1, "drift / first parameter")->capture_default_str();
  mc->add_option("--a2", a2, "second parameter")->capture_default_str();
  mc->add_option("--n", mn, "sample size")->capture_default_str();

  auto* suite = app.add_subcommand("suite", "run the acceptance criteria");
  bool quick = false;
  std::string selection;
  suite->add_flag("--quick", quick, "10x smaller N, 2x looser stochastic thresholds");
  suite->add_option("--only", selection, "comma-separated criterion numbers");

  CLI11_PARSE(app, argc, argv);

  char* out = nullptr;
  int rc = GLC_OK;
  int pass = 1;

  if (roots->parsed()) {
    glc_rootsystem* rs = nullptr;
    rc = glc_rootsystem_create(type.c_str(), &rs);
    if (rc == GLC_OK) rc = glc_rootsystem_json(rs, &out);
    glc_rootsystem_destroy(rs);
  } else if (rsk->parsed()) {
    rc = glc_rsk_json(word.c_str(), &out);
  } else if (trop->parsed()) {
    std::vector<double> flat;
    int n_points = 0, n_vars = 0;
    if (!points_str.empty()) {
      std::istringstream in(points_str);
      std::string pt;
      while (std::getline(in, pt, ';')) {
        auto v = parse_vec(pt);
        if (n_vars == 0) n_vars = static_cast<int>(v.size());
        flat.insert(flat.end(), v.begin(), v.end());
        ++n_points;
      }
    }
    rc = glc_trop_json(expr_text.c_str(), flat.data(), n_points, n_vars, &out);
  } else if (paths->parsed()) {
    std::string csv = slurp(csv_in);
    rc = glc_paths_csv(type.c_str(), chain.c_str(), q, csv.c_str(), &out);
  } else if (group->parsed()) {
    std::string csv = slurp(gcsv_in);
    rc = glc_group_json(type.c_str(), csv.c_str(), theta ? 1 : 0, &out);
  } else if (whit->parsed()) {
    auto mu = parse_vec(mu_str);
    rc = glc_whittaker_csv(type.c_str(), mu.data(), static_cast<int>(mu.size()), lmin, lmax,
                           npts, &out);
  } else if (sample->parsed()) {
    auto lam = parse_vec(lam_str), mu = parse_vec(smu_str);
    rc = glc_sample_csv(type.c_str(), lam.data(), static_cast<int>(lam.size()), mu.data(),
                        static_cast<int>(mu.size()), sn, seed, &out);
  } else if (mc->parsed()) {
    rc = glc_mc_json(check.c_str(), type.c_str(), a1, a2, mn, seed, &out, &pass);
  } else if (suite->parsed()) {
    rc = glc_suite_json(seed, quick ? 1 : 0, selection.c_str(), &out, &pass);
  }

  if (rc != GLC_OK) return fail(rc);
  int erc = emit(out, out_path);
  glc_free(out);
  if (erc != 0) return erc;
  return pass ? 0 : 1;
}
