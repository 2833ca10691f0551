#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "flatgrid/affine_equiv.hpp"
#include "flatgrid/algebraic.hpp"
#include "flatgrid/obstruction.hpp"
#include "flatgrid/semiregular.hpp"
#include "flatgrid/sweep.hpp"
#include "flatgrid/thurston.hpp"
#include "flatgrid/veech.hpp"

using namespace flatgrid;

namespace {

// exit codes: 0 ok, 1 verification failure, 2 invalid parameters, 3 I/O or parse error
constexpr int kOk = 0;
constexpr int kVerifyFail = 1;
constexpr int kBadParams = 2;
constexpr int kIoError = 3;

double tolerance() {
  if (const char* env = std::getenv("FLATGRID_TOL")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v > 0) return v;
    std::cerr << "ignoring malformed FLATGRID_TOL\n";
  }
  return kDefaultTol;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot open " + path + " for writing");
  out << content;
  if (!out) throw std::ios_base::failure("write failed on " + path);
}

std::string read_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TranslationSurface build_model(int m, int n, const std::string& model) {
  if (model == "grid")
    return rectangle_surface(grid_graph(m, n).graph, eigen_width(m, n));
  if (model == "semiregular") return semiregular_surface(m, n);
  if (model == "quotient") return semiregular_quotient(m, n);
  throw std::invalid_argument("unknown model '" + model + "'");
}

int cmd_build(int m, int n, const std::string& model, const std::string& out) {
  write_output(out, write_tsurf(build_model(m, n, model)));
  return kOk;
}

int cmd_analyze(const std::string& path, double tol) {
  TranslationSurface s = read_tsurf(read_input(path));
  ValidationReport rep = validate(s, tol);
  std::cout << "polygons: " << s.polygon_count() << "\n";
  std::cout << "edges: " << s.total_edges() / 2 << "\n";
  std::cout << "valid: " << (rep.ok ? "true" : "false") << "\n";
  if (!rep.ok) {
    std::cout << "violation: " << rep.message << " (polygon " << rep.poly << ", edge "
              << rep.edge << ")\n";
    return kVerifyFail;
  }
  std::cout << "area: " << format_double(s.area()) << "\n";
  StratumInfo st = stratum(s, tol);
  std::cout << "components: " << st.components << "\n";
  std::cout << "genus: " << st.genus << "\n";
  auto zs = st.zeros();
  if (zs.empty()) {
    std::cout << "zeros: none\n";
  } else {
    // group by order
    std::cout << "zeros:";
    int i = 0;
    while (i < static_cast<int>(zs.size())) {
      int j = i;
      while (j < static_cast<int>(zs.size()) && zs[j] == zs[i]) ++j;
      std::cout << " " << (j - i) << "x" << zs[i];
      i = j;
    }
    std::cout << "\n";
  }
  std::cout << "marked_points: " << st.marked_points() << "\n";
  std::cout << "cone_angles:";
  for (int o : st.orders) std::cout << " " << (o + 1) << "x2pi";
  std::cout << "\n";
  return kOk;
}

int cmd_verify(int m, int n, const std::string& which, double tol) {
  auto report = [&](bool pass, const std::string& name, const std::string& detail) {
    std::cout << name << "(" << m << "," << n << "): " << (pass ? "pass" : "FAIL");
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << "\n";
    return pass ? kOk : kVerifyFail;
  };
  if (which == "mu") {
    VerifyReport r = verify_mu(m, n, tol);
    std::cout << "max_deviation: " << format_double(r.max_deviation) << "\n";
    return report(r.pass, "mu", r.detail);
  }
  if (which == "nu") {
    VerifyReport r = verify_nu(m, n, tol);
    std::cout << "max_deviation: " << format_double(r.max_deviation) << "\n";
    return report(r.pass, "nu", r.detail);
  }
  if (which == "iota") {
    VerifyReport r = verify_iota_conjugacy(m, n, tol);
    return report(r.pass, "iota", r.detail);
  }
  if (which == "veech") {
    RelationReport rel = relation_check(m, n);
    for (const std::string& f : rel.failures) std::cout << "relation FAIL: " << f << "\n";
    VerifyGeneratorsReport r = verify_generators(m, n, tol);
    for (const auto& c : r.generators)
      std::cout << "generator " << c.name << ": "
                << (c.certified ? "certified via " + c.route : "NOT CERTIFIED") << "\n";
    for (const auto& oc : r.orthogonal)
      std::cout << "orthogonal " << oc.name << ": " << (oc.is_automorphism ? "yes" : "no")
                << " (expected " << (oc.expected ? "yes" : "no") << ")\n";
    std::cout << "note: " << r.scope_note << "\n";
    return report(rel.pass && r.pass, "veech", r.detail);
  }
  if (which == "sc") {
    ScRatioReport r = sc_ratio_check(m, n, std::max(tol, 1e-6));
    std::cout << "constancy_deviation: " << format_double(r.max_relative_deviation)
              << "\n";
    std::cout << "geometric_deviation: " << format_double(r.geometric_deviation) << "\n";
    return report(r.pass, "sc", r.detail);
  }
  throw std::invalid_argument("unknown verification '" + which + "'");
}

int cmd_table(int max_m, int max_n, const std::string& out, bool serial) {
  SweepResult res = sweep_rows(max_m, max_n, !serial);
  write_output(out, sweep_csv(res.rows));
  if (!res.consistent) {
    std::cerr << "closed-form cross-check failed: " << res.detail << "\n";
    return kVerifyFail;
  }
  return kOk;
}

int cmd_render(const std::string& path, const std::string& out) {
  TranslationSurface s = read_tsurf(read_input(path));
  write_output(out, render_svg(s));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"grid-graph and semiregular-polygon translation surfaces"};
  app.require_subcommand(1);
  double tol = tolerance();

  int m = 0, n = 0, max_m = 8, max_n = 8;
  std::string model = "grid", out, path, which;
  bool serial = false;

  auto* build = app.add_subcommand("build", "construct a surface and write TSURF");
  build->add_option("--m", m, "first parameter")->required();
  build->add_option("--n", n, "second parameter")->required();
  build->add_option("--model", model, "grid | semiregular | quotient");
  build->add_option("--out", out, "output path (default stdout)");

  auto* analyze = app.add_subcommand("analyze", "validate a TSURF file and report its stratum");
  analyze->add_option("path", path, "TSURF file")->required();

  auto* verify = app.add_subcommand("verify", "run one of the verification suites");
  verify->add_option("--m", m, "first parameter")->required();
  verify->add_option("--n", n, "second parameter")->required();
  verify->add_option("--which", which, "mu | nu | iota | veech | sc")->required();

  auto* table = app.add_subcommand("table", "emit the parameter sweep as CSV");
  table->add_option("--max-m", max_m, "largest m");
  table->add_option("--max-n", max_n, "largest n");
  table->add_option("--out", out, "output path (default stdout)");
  table->add_flag("--serial", serial, "disable the parallel sweep");

  auto* render = app.add_subcommand("render", "render a TSURF file as SVG");
  render->add_option("path", path, "TSURF file")->required();
  render->add_option("--out", out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
    if (build->parsed()) return cmd_build(m, n, model, out);
    if (analyze->parsed()) return cmd_analyze(path, tol);
    if (verify->parsed()) return cmd_verify(m, n, which, tol);
    if (table->parsed()) return cmd_table(max_m, max_n, out, serial);
    if (render->parsed()) return cmd_render(path, out);
    return kBadParams;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kBadParams;
  } catch (const TsurfParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return kBadParams;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFail;
  }
}
