// Command-line front end: construct symplectic matrices with prescribed
// left eigenvalues, verify eigenvalue claims, classify rotation forms,
// run covering experiments, walk the Cayley contraction, and check the
// unit-row norm bound. JSON in, JSON out (--text for tables); exit 0 on
// success, 1 on usage or input errors, 2 on internal numerical faults.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sp2eig/sp2eig.hpp"

namespace {

using nlohmann::json;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + what + ": " + e.what());
  }
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string quat_text(const sp2eig::Quaternion& q) {
  return "[" + fmt17(q.t) + ", " + fmt17(q.x) + ", " + fmt17(q.y) + ", " +
         fmt17(q.z) + "]";
}

void print_matrix_text(const sp2eig::MatH2& m, const std::string& label) {
  std::cout << label << "  " << quat_text(m.a11) << "  " << quat_text(m.a12)
            << "\n"
            << std::string(label.size(), ' ') << "  " << quat_text(m.a21)
            << "  " << quat_text(m.a22) << "\n";
}

void emit(const json& j, bool text_mode, const std::function<void()>& text_fn) {
  if (text_mode)
    text_fn();
  else
    std::cout << sp2eig::dump_json17(j) << "\n";
}

struct Options {
  std::string sigmas_path;
  std::string matrix_path;
  std::string inject_path;
  std::string sigma_inline;
  std::string w_inline;
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
  int steps = 16;
  double tol = -1.0;  // negative: use the subcommand's default
  bool text = false;
};

void run_construct(const Options& opt) {
  const json j = parse_json(read_input(opt.sigmas_path), "--sigmas");
  const std::vector<sp2eig::Quaternion> sigmas =
      sp2eig::quaternion_list_from_json(j);
  const sp2eig::ConstructionResult res = sp2eig::construct(sigmas);
  emit(res, opt.text, [&res] {
    std::cout << "branch      "
              << (res.branch == sp2eig::ConstructionBranch::kFullRank
                      ? "full_rank"
                      : "rank_deficient")
              << "\n";
    std::cout << "rank        " << res.rank << "\n";
    std::cout << "q           " << quat_text(res.q) << "\n";
    std::cout << "cos_theta   " << fmt17(res.cos_theta) << "\n";
    std::cout << "theta       " << fmt17(res.theta) << "\n";
    print_matrix_text(res.matrices[0], "matrix[0]");
    print_matrix_text(res.matrices[1], "matrix[1]");
    std::cout << "residuals   index  re_residual  det_margin[0]  det_margin[1]\n";
    for (std::size_t i = 0; i < res.residuals.size(); ++i)
      std::cout << "            " << i << "  "
                << fmt17(res.residuals[i].re_residual) << "  "
                << fmt17(res.residuals[i].det_margins[0]) << "  "
                << fmt17(res.residuals[i].det_margins[1]) << "\n";
  });
}

void run_verify(const Options& opt) {
  const sp2eig::MatH2 a = sp2eig::math2_from_json(
      parse_json(read_input(opt.matrix_path), "--matrix"));
  const sp2eig::Quaternion sigma = sp2eig::quaternion_from_json(
      parse_json(opt.sigma_inline, "--sigma"));
  const double tol = opt.tol < 0.0 ? sp2eig::kEigenvalueTol : opt.tol;
  const double residual = sp2eig::symplectic_residual(a);
  const double margin = sp2eig::adjoint_det(a - sp2eig::scalar_mat(sigma));
  json out{{"is_eigenvalue", margin <= tol},
           {"margin", margin},
           {"symplectic_residual", residual}};
  if (residual > 1e-8)
    out["warning"] = "matrix is not symplectic; the eigenvalue check is "
                     "reported anyway";
  emit(out, opt.text, [&] {
    std::cout << "is_eigenvalue       " << (margin <= tol ? "true" : "false")
              << "\n"
              << "margin              " << fmt17(margin) << "\n"
              << "symplectic_residual " << fmt17(residual) << "\n";
    if (residual > 1e-8)
      std::cout << "warning             matrix is not symplectic\n";
  });
}

void run_classify(const Options& opt) {
  const sp2eig::MatH2 a = sp2eig::math2_from_json(
      parse_json(read_input(opt.matrix_path), "--matrix"));
  const double tol = opt.tol < 0.0 ? sp2eig::kDetectTol : opt.tol;
  const std::optional<sp2eig::RotationForm> f =
      sp2eig::detect_rotation_form(a, tol);
  json out{{"rotation_form", nullptr}};
  if (f) out["rotation_form"] = *f;
  emit(out, opt.text, [&] {
    if (f)
      std::cout << "rotation_form  q = " << quat_text(f->q)
                << "  theta = " << fmt17(f->theta) << "\n";
    else
      std::cout << "rotation_form  none (finite left spectrum)\n";
  });
}

void run_cover(const Options& opt) {
  const std::vector<sp2eig::Quaternion> sigmas =
      sp2eig::quaternion_list_from_json(
          parse_json(read_input(opt.sigmas_path), "--sigmas"));
  std::vector<sp2eig::MatH2> injected;
  if (!opt.inject_path.empty()) {
    const json j = parse_json(read_input(opt.inject_path), "--inject");
    if (!j.is_array())
      throw std::invalid_argument("--inject: expected an array of matrices");
    for (const auto& e : j) injected.push_back(sp2eig::math2_from_json(e));
  }
  const double threshold = opt.tol < 0.0 ? sp2eig::kEigenvalueTol : opt.tol;
  const sp2eig::CoverReport report = sp2eig::cover_experiment(
      sigmas, opt.samples, opt.seed, threshold, injected);
  emit(report, opt.text, [&report] {
    std::cout << "sigmas            " << report.sigmas.size() << "\n"
              << "samples           " << report.samples << "\n"
              << "seed              " << report.seed << "\n"
              << "threshold         " << fmt17(report.threshold) << "\n"
              << "min_best_margin   " << fmt17(report.min_best_margin) << "\n"
              << "uncovered         " << report.uncovered.size() << "\n";
    for (const auto& u : report.uncovered) {
      std::cout << "uncovered sample " << u.index
                << (u.injected ? " (injected)" : "") << ", margins:";
      for (const double m : u.margins) std::cout << " " << fmt17(m);
      std::cout << "\n";
      print_matrix_text(u.matrix, "  matrix");
    }
  });
}

void run_contract(const Options& opt) {
  const sp2eig::MatH2 a = sp2eig::math2_from_json(
      parse_json(read_input(opt.matrix_path), "--matrix"));
  const sp2eig::Quaternion sigma = sp2eig::quaternion_from_json(
      parse_json(opt.sigma_inline, "--sigma"));
  if (opt.steps < 1) throw std::invalid_argument("--steps must be >= 1");
  const double threshold = opt.tol < 0.0 ? sp2eig::kEigenvalueTol : opt.tol;
  json points = json::array();
  for (int k = 0; k <= opt.steps; ++k) {
    const double t = static_cast<double>(opt.steps - k) / opt.steps;
    const sp2eig::MatH2 at = sp2eig::cayley_path(a, sigma, t);
    const double margin = sp2eig::adjoint_det(at - sp2eig::scalar_mat(sigma));
    points.push_back(json{{"t", t},
                          {"matrix", at},
                          {"symplectic_residual", sp2eig::symplectic_residual(at)},
                          {"margin", margin},
                          {"member", margin > threshold}});
  }
  const json out{{"sigma", sigma}, {"steps", opt.steps}, {"points", points}};
  emit(out, opt.text, [&] {
    std::cout << "t  symplectic_residual  margin\n";
    for (const auto& p : points)
      std::cout << fmt17(p["t"].get<double>()) << "  "
                << fmt17(p["symplectic_residual"].get<double>()) << "  "
                << fmt17(p["margin"].get<double>()) << "\n";
  });
}

void run_bound(const Options& opt) {
  const sp2eig::RealMatrix m = sp2eig::real_matrix_from_json(
      parse_json(read_input(opt.matrix_path), "--matrix"));
  const std::vector<double> w =
      sp2eig::real_vector_from_json(parse_json(opt.w_inline, "--w"));
  const sp2eig::BoundCheck b = sp2eig::bound_check(m, w);
  json out = b;
  out["rows"] = m.rows();
  emit(out, opt.text, [&] {
    std::cout << "rows    " << m.rows() << "\n"
              << "lhs     " << fmt17(b.lhs) << "\n"
              << "rhs     " << fmt17(b.rhs) << "\n"
              << "strict  " << (b.strict ? "true" : "false") << "\n";
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "2x2 symplectic quaternionic matrices with prescribed left "
      "eigenvalues: construction, verification, classification, and "
      "covering experiments"};
  app.require_subcommand(1);

  Options opt;

  CLI::App* construct_cmd = app.add_subcommand(
      "construct",
      "Build the symplectic matrices having the given unit quaternions "
      "(1 to 4) as left eigenvalues");
  construct_cmd->add_option("--sigmas", opt.sigmas_path,
                            "JSON file with an array of quaternions, or - for stdin")
      ->required();
  construct_cmd->add_flag("--text", opt.text, "table output instead of JSON");
  construct_cmd->callback([&opt] { run_construct(opt); });

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Check whether sigma is a left eigenvalue of a matrix");
  verify_cmd->add_option("--matrix", opt.matrix_path,
                         "JSON file with a 2x2 quaternionic matrix, or -")
      ->required();
  verify_cmd->add_option("--sigma", opt.sigma_inline, "inline quaternion JSON")
      ->required();
  verify_cmd->add_option("--tol", opt.tol, "eigenvalue margin threshold");
  verify_cmd->add_flag("--text", opt.text, "table output instead of JSON");
  verify_cmd->callback([&opt] { run_verify(opt); });

  CLI::App* classify_cmd = app.add_subcommand(
      "classify",
      "Recover (q, theta) when the matrix lies in the infinite-spectrum "
      "rotation family");
  classify_cmd->add_option("--matrix", opt.matrix_path,
                           "JSON file with a 2x2 quaternionic matrix, or -")
      ->required();
  classify_cmd->add_option("--tol", opt.tol, "detection tolerance");
  classify_cmd->add_flag("--text", opt.text, "table output instead of JSON");
  classify_cmd->callback([&opt] { run_classify(opt); });

  CLI::App* cover_cmd = app.add_subcommand(
      "cover",
      "Sample random symplectic matrices and report the ones no "
      "Omega(sigma) covers");
  cover_cmd->add_option("--sigmas", opt.sigmas_path,
                        "JSON file with an array of quaternions, or -")
      ->required();
  cover_cmd->add_option("--samples", opt.samples, "number of random draws")
      ->required();
  cover_cmd->add_option("--seed", opt.seed, "random seed (default 0)");
  cover_cmd->add_option("--tol", opt.tol, "membership threshold");
  cover_cmd->add_option("--inject", opt.inject_path,
                        "JSON file with extra matrices to evaluate alongside "
                        "the random draws");
  cover_cmd->add_flag("--text", opt.text, "table output instead of JSON");
  cover_cmd->callback([&opt] { run_cover(opt); });

  CLI::App* contract_cmd = app.add_subcommand(
      "contract",
      "Evaluate the Cayley contraction of Omega(sigma) on a grid from "
      "t = 1 down to t = 0");
  contract_cmd->add_option("--matrix", opt.matrix_path,
                           "JSON file with a 2x2 quaternionic matrix, or -")
      ->required();
  contract_cmd->add_option("--sigma", opt.sigma_inline, "inline quaternion JSON")
      ->required();
  contract_cmd->add_option("--steps", opt.steps, "grid steps (default 16)");
  contract_cmd->add_option("--tol", opt.tol, "membership threshold");
  contract_cmd->add_flag("--text", opt.text, "table output instead of JSON");
  contract_cmd->callback([&opt] { run_contract(opt); });

  CLI::App* bound_cmd = app.add_subcommand(
      "bound",
      "Check the strict bound ||M w|| < sqrt(rows) ||w|| for a full-rank "
      "unit-row matrix");
  bound_cmd->add_option("--matrix", opt.matrix_path,
                        "JSON file with a real matrix as rows, or -")
      ->required();
  bound_cmd->add_option("--w", opt.w_inline, "inline vector JSON")->required();
  bound_cmd->add_flag("--text", opt.text, "table output instead of JSON");
  bound_cmd->callback([&opt] { run_bound(opt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  } catch (const sp2eig::numeric_fault& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
