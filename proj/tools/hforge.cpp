// hforge -- construct, verify and classify complex Hadamard matrices of
// order 9 (and the order <= 4 seeds): BCCB orbit constructors, the defect
// engine, equivalence testing, parameter-space scans and the dimension-9
// MUB suite. All output is machine readable (JSON or CSV).

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hforge/analysis.hpp"
#include "hforge/core.hpp"
#include "hforge/io.hpp"
#include "hforge/mubs.hpp"
#include "hforge/orbits.hpp"
#include "hforge/scan.hpp"

using json = nlohmann::ordered_json;
using namespace hforge;

namespace {

// complex values on the command line: "re,im", a phase fraction "p/q"
// (meaning exp(2*pi*i*p/q)), or a bare real
cplx parse_complex(const std::string& text) {
  if (auto slash = text.find('/'); slash != std::string::npos) {
    long p = std::stol(text.substr(0, slash));
    long q = std::stol(text.substr(slash + 1));
    return root_of_unity(q, p).value();
  }
  if (auto comma = text.find(','); comma != std::string::npos) {
    return cplx(std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1)));
  }
  return cplx(std::stod(text), 0.0);
}

Unimodular parse_unimodular(const std::string& text) {
  return Unimodular(parse_complex(text));
}

std::pair<int, int> parse_branch(const std::string& text) {
  if (text.size() != 2 || (text[0] != '+' && text[0] != '-') ||
      (text[1] != '+' && text[1] != '-'))
    throw std::invalid_argument("branch must be two signs, e.g. ++ or +-");
  return {text[0] == '+' ? +1 : -1, text[1] == '+' ? +1 : -1};
}

Matrix read_input(const std::string& path) {
  if (path == "-") return load_matrix(std::cin);
  return load_matrix(path);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open for writing: " + out_path);
    out << text;
    if (text.empty() || text.back() != '\n') out << '\n';
  }
}

json complex_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

json defect_json(const analysis::DefectReport& rep) {
  json j;
  j["n"] = rep.n;
  j["rank"] = rep.rank;
  j["defect"] = rep.defect;
  j["tolerance_used"] = rep.tolerance_used;
  j["gap_ratio"] = rep.gap_ratio;
  j["reliable"] = rep.reliable;
  j["singular_values"] = rep.singular_values;
  return j;
}

json mub_report_json(const mubs::MubReport& rep) {
  json j;
  j["pass"] = rep.pass;
  j["max_unitarity_error"] = rep.max_unitarity_error;
  j["max_unbiasedness_error"] = rep.max_unbiasedness_error;
  j["tolerance_used"] = rep.tolerance_used;
  return j;
}

double env_default_tol(double fallback) {
  if (const char* env = std::getenv("HFORGE_TOL")) {
    try {
      return std::stod(env);
    } catch (...) {
      throw std::invalid_argument("HFORGE_TOL is not a number");
    }
  }
  return fallback;
}

struct ConstructOptions {
  std::string family;
  std::string x = "1", y = "1", u = "1/3", w = "2/3";
  std::string zeta = "0,0", branch = "++";
  std::string mu = "1", xi = "1";
  std::string x1 = "1", x2 = "1", x3 = "1", x4 = "1";
  std::string bu = "1", bv = "1";
  std::string name, t;
  bool use_params = false;  // bare "bc9" with explicit x/y/u/w flags
};

Matrix construct_matrix(const ConstructOptions& o) {
  if (o.family == "bc9-params" || (o.family == "bc9" && o.use_params))
    return orbits::bc9_matrix({parse_unimodular(o.x), parse_unimodular(o.y),
                               parse_unimodular(o.u), parse_unimodular(o.w)});
  if (o.family == "bc9-zeta" || o.family == "bc9") {
    auto [bx, buw] = parse_branch(o.branch);
    return orbits::bc9_matrix(orbits::zeta_to_params({parse_complex(o.zeta), bx, buw}));
  }
  if (o.family == "bc9a") return orbits::bc9a(parse_unimodular(o.mu));
  if (o.family == "bc9b") return orbits::bc9b(parse_unimodular(o.xi));
  if (o.family == "fourier9")
    return orbits::fourier9({parse_unimodular(o.x1), parse_unimodular(o.x2),
                             parse_unimodular(o.x3), parse_unimodular(o.x4)});
  if (o.family == "backelin")
    return orbits::backelin({parse_unimodular(o.bu), parse_unimodular(o.bv)});  // bu mirrors --u
  if (o.family == "special") {
    if (o.name.empty()) throw std::invalid_argument("special requires --name");
    if (o.name == "F4" && !o.t.empty()) return orbits::special_f4(parse_unimodular(o.t));
    return orbits::special(o.name);
  }
  throw std::invalid_argument("unknown family '" + o.family + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hforge: complex Hadamard matrices of order 9 (construction, defect, "
      "equivalence, scans, MUBs)"};
  app.require_subcommand(1);

  std::string out_path;      // shared --out
  double check_tol = env_default_tol(kDefaultTol);
  double rank_tol = env_default_tol(kRankTol);

  // construct
  ConstructOptions con;
  CLI::App* c_construct = app.add_subcommand("construct", "build a matrix and write it as JSON");
  c_construct
      ->add_option("--family", con.family,
                   "bc9-params | bc9-zeta | bc9a | bc9b | fourier9 | backelin | special "
                   "(bc9 picks bc9-params when x/y/u/w are given, bc9-zeta otherwise)")
      ->required();
  c_construct->add_option("--x", con.x, "BCCB parameter x (re,im | p/q | real)");
  c_construct->add_option("--y", con.y, "BCCB parameter y");
  c_construct->add_option("--u", con.u, "BCCB parameter u / Backelin u");
  c_construct->add_option("--w", con.w, "BCCB parameter w");
  c_construct->add_option("--zeta", con.zeta, "orbit coordinate zeta (re,im)");
  c_construct->add_option("--branch", con.branch, "branch signs, e.g. ++, +-, -+, --");
  c_construct->add_option("--mu", con.mu, "suborbit A parameter");
  c_construct->add_option("--xi", con.xi, "suborbit B parameter");
  c_construct->add_option("--x1", con.x1, "Fourier enphasing x1");
  c_construct->add_option("--x2", con.x2, "Fourier enphasing x2");
  c_construct->add_option("--x3", con.x3, "Fourier enphasing x3");
  c_construct->add_option("--x4", con.x4, "Fourier enphasing x4");
  c_construct->add_option("--v", con.bv, "Backelin v");
  c_construct->add_option("--name", con.name, "special-matrix name");
  c_construct->add_option("--t", con.t, "order-4 circulant parameter");
  c_construct->add_option("--out", out_path, "output path (default stdout)");

  // verify hadamard | mub
  CLI::App* c_verify = app.add_subcommand("verify", "check the Hadamard or MUB property");
  c_verify->require_subcommand(1);
  std::string verify_input = "-";
  CLI::App* c_vhad = c_verify->add_subcommand("hadamard", "unimodular entries and H^dag H = n I");
  c_vhad->add_option("input", verify_input, "matrix JSON file, - for stdin");
  c_vhad->add_option("--tol", check_tol, "check tolerance");
  c_vhad->add_option("--out", out_path, "output path");
  std::string mub_which = "b";
  CLI::App* c_vmub = c_verify->add_subcommand("mub", "unitarity and pairwise unbiasedness");
  c_vmub->add_option("--set", mub_which, "b | m")->check(CLI::IsMember({"b", "m"}));
  double mub_tol = env_default_tol(1e-10);
  c_vmub->add_option("--tol", mub_tol, "check tolerance");
  c_vmub->add_option("--out", out_path, "output path");

  // defect
  std::string defect_input = "-";
  CLI::App* c_defect = app.add_subcommand("defect", "defect report of a Hadamard matrix");
  c_defect->add_option("input", defect_input, "matrix JSON file, - for stdin");
  c_defect->add_option("--tol", rank_tol, "singular-value rank threshold (relative)");
  c_defect->add_option("--out", out_path, "output path");

  // equiv
  std::string equiv_a, equiv_b;
  long long budget = 10'000'000;
  CLI::App* c_equiv = app.add_subcommand("equiv", "decide Hadamard equivalence of two matrices");
  c_equiv->add_option("a", equiv_a, "first matrix JSON file")->required();
  c_equiv->add_option("b", equiv_b, "second matrix JSON file")->required();
  c_equiv->add_option("--budget", budget, "search node budget");
  c_equiv->add_option("--out", out_path, "output path");

  // reduce-scan
  std::string reduce_input = "-";
  CLI::App* c_reduce =
      app.add_subcommand("reduce-scan", "find all order-3 Hadamard submatrices");
  c_reduce->add_option("input", reduce_input, "matrix JSON file, - for stdin");
  c_reduce->add_option("--tol", check_tol, "row-orthogonality tolerance");
  c_reduce->add_option("--out", out_path, "output path");

  // scan-zeta
  scan::GridSpec grid;
  std::vector<std::string> branch_args;
  unsigned scan_threads = 0;
  CLI::App* c_scan = app.add_subcommand("scan-zeta", "defect map over the zeta lens (CSV)");
  c_scan->add_option("--re-min", grid.re_min, "grid minimum real part");
  c_scan->add_option("--re-max", grid.re_max, "grid maximum real part");
  c_scan->add_option("--im-min", grid.im_min, "grid minimum imaginary part");
  c_scan->add_option("--im-max", grid.im_max, "grid maximum imaginary part");
  c_scan->add_option("--resolution", grid.resolution, "points per axis");
  c_scan->add_option("--tol", grid.tol, "rank threshold");
  c_scan->add_option("--branches", branch_args, "branch signs, e.g. ++ +- -+ --");
  c_scan->add_option("--threads", scan_threads, "worker threads (0 = hardware)");
  c_scan->add_option("--out", out_path, "output path");

  // census-butson
  CLI::App* c_census =
      app.add_subcommand("census-butson", "defect histogram of the 6^4 sixth-root enphasings");
  c_census->add_option("--out", out_path, "output path");

  // backelin-intersections
  CLI::App* c_bint = app.add_subcommand("backelin-intersections",
                                        "the 27 pairwise intersections of the suborbit loci");
  c_bint->add_option("--out", out_path, "output path");

  // mub-check
  std::string mubcheck_set = "both";
  double mubcheck_tol = env_default_tol(1e-10);
  CLI::App* c_mubcheck = app.add_subcommand(
      "mub-check", "verify the complete MUB sets and print the multiplication table");
  c_mubcheck->add_option("--set", mubcheck_set, "b | m | both")
      ->check(CLI::IsMember({"b", "m", "both"}));
  c_mubcheck->add_option("--tol", mubcheck_tol, "check tolerance");
  c_mubcheck->add_option("--out", out_path, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(c_construct)) {
      con.use_params = c_construct->count("--x") || c_construct->count("--y") ||
                       c_construct->count("--u") || c_construct->count("--w");
      // --u doubles as the Backelin u; its BCCB default (w3) must not leak there
      if (c_construct->count("--u")) con.bu = con.u;
      emit(matrix_to_json(construct_matrix(con)), out_path);
      return 0;
    }

    if (app.got_subcommand(c_verify)) {
      if (c_verify->got_subcommand(c_vhad)) {
        Matrix h = read_input(verify_input);
        bool ok = is_hadamard(h, check_tol);
        json j;
        j["hadamard"] = ok;
        j["n"] = h.size();
        j["tolerance_used"] = check_tol;
        emit(j.dump(), out_path);
        if (!ok) std::cerr << R"({"error": "matrix is not Hadamard at the given tolerance"})" << "\n";
        return ok ? 0 : 1;
      }
      mubs::MubSet set = (mub_which == "b") ? mubs::build_b_set() : mubs::build_m_set();
      mubs::MubReport rep = mubs::verify_mub(set, mub_tol);
      json j = mub_report_json(rep);
      j["set"] = mub_which;
      emit(j.dump(), out_path);
      if (!rep.pass) std::cerr << R"({"error": "MUB verification failed"})" << "\n";
      return rep.pass ? 0 : 1;
    }

    if (app.got_subcommand(c_defect)) {
      emit(defect_json(analysis::defect(read_input(defect_input), rank_tol)).dump(), out_path);
      return 0;
    }

    if (app.got_subcommand(c_equiv)) {
      analysis::EquivalenceVerdict v =
          analysis::equivalent(read_input(equiv_a), read_input(equiv_b), budget);
      json j;
      switch (v.tag) {
        case analysis::EquivalenceTag::Equivalent: j["verdict"] = "equivalent"; break;
        case analysis::EquivalenceTag::Inequivalent: j["verdict"] = "inequivalent"; break;
        case analysis::EquivalenceTag::Unknown: j["verdict"] = "unknown"; break;
      }
      j["reason"] = v.reason;
      if (v.witness) {
        json w;
        w["row"] = v.witness->row;
        w["col"] = v.witness->col;
        w["d1"] = json::array();
        w["d2"] = json::array();
        for (const cplx& z : v.witness->d1) w["d1"].push_back(complex_json(z));
        for (const cplx& z : v.witness->d2) w["d2"].push_back(complex_json(z));
        j["witness"] = w;
      }
      emit(j.dump(), out_path);
      return 0;
    }

    if (app.got_subcommand(c_reduce)) {
      Matrix h = read_input(reduce_input);
      auto hits = analysis::h3_submatrix_scan(h, check_tol);
      json j;
      j["n"] = h.size();
      j["tolerance_used"] = check_tol;
      j["count"] = hits.size();
      j["submatrices"] = json::array();
      for (const auto& [rows, cols] : hits)
        j["submatrices"].push_back({{"rows", rows}, {"cols", cols}});
      emit(j.dump(), out_path);
      return 0;
    }

    if (app.got_subcommand(c_scan)) {
      if (!branch_args.empty()) {
        grid.branches.clear();
        for (const std::string& b : branch_args) grid.branches.push_back(parse_branch(b));
      }
      emit(scan::scan_to_csv(scan::zeta_defect_scan(grid, scan_threads)), out_path);
      return 0;
    }

    if (app.got_subcommand(c_census)) {
      emit(scan::census_to_json(scan::fourier_butson_census()), out_path);
      return 0;
    }

    if (app.got_subcommand(c_bint)) {
      auto pts = scan::backelin_intersections();
      json j;
      j["count"] = pts.size();
      j["points"] = json::array();
      for (const auto& p : pts) {
        json e;
        e["u_phase"] = std::to_string(p.u_exp) + "/9";
        e["v_phase"] = std::to_string(p.v_exp) + "/9";
        e["u"] = complex_json(p.params.u.value());
        e["v"] = complex_json(p.params.v.value());
        e["defect"] = p.defect;
        j["points"].push_back(e);
      }
      emit(j.dump(), out_path);
      return 0;
    }

    if (app.got_subcommand(c_mubcheck)) {
      json j;
      if (mubcheck_set != "m")
        j["b_set"] = mub_report_json(mubs::verify_mub(mubs::build_b_set(), mubcheck_tol));
      if (mubcheck_set != "b")
        j["m_set"] = mub_report_json(mubs::verify_mub(mubs::build_m_set(), mubcheck_tol));
      auto table = mubs::m_multiplication_table();
      j["multiplication_table"] = json::array();
      for (const auto& row : table) j["multiplication_table"].push_back(row);
      emit(j.dump(), out_path);
      return 0;
    }
  } catch (const std::exception& e) {
    json err;
    err["error"] = e.what();
    std::cerr << err.dump() << "\n";
    return 1;
  }
  return 2;
}
