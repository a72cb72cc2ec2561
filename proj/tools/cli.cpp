// Copyright 2026 The bosonkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "bosonkit/ensembles.hpp"
#include "bosonkit/error.hpp"
#include "bosonkit/fock.hpp"
#include "bosonkit/matrix.hpp"
#include "bosonkit/moments.hpp"
#include "bosonkit/representations.hpp"
#include "bosonkit/semiclassics.hpp"
#include "bosonkit/validation.hpp"

namespace bosonkit::cli {
namespace {

using json = nlohmann::json;

struct Common {
  std::string format = "json";
  std::string output;
  std::uint64_t seed = 0;
};

struct MatrixSource {
  std::string path;
  std::size_t haar = 0;
  std::size_t quench = 0;
  double disorder = 0.0;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--output", c.output, "Write results to this file instead of stdout");
  cmd->add_option("--seed", c.seed, "Seed for every random draw")->capture_default_str();
}

void add_matrix_source(CLI::App* cmd, MatrixSource& s) {
  auto* file = cmd->add_option("--matrix", s.path, "Matrix file (rows cols, then re,im entries)");
  auto* haar = cmd->add_option("--haar", s.haar, "Haar-random unitary of this dimension");
  auto* quench = cmd->add_option("--quench", s.quench, "Quench unitary of this dimension");
  cmd->add_option("--disorder", s.disorder, "Phase disorder for --quench")->needs(quench);
  file->excludes(haar)->excludes(quench);
  haar->excludes(quench);
}

UnitaryMatrix load_unitary(const MatrixSource& s, std::uint64_t seed) {
  if (!s.path.empty()) {
    const ComplexMatrix m = read_matrix_file(s.path);
    return UnitaryMatrix(m);
  }
  if (s.haar > 0) return sample_haar(s.haar, seed);
  if (s.quench > 0) return quench_unitary(s.quench, s.disorder, seed);
  throw CLI::RequiredError("one of --matrix, --haar, --quench");
}

std::vector<double> parse_reals(const std::string& text) {
  std::vector<double> values;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != token.size()) {
      throw Error(ErrorCode::ParseError, "not a number: '" + token + "'");
    }
    values.push_back(v);
  }
  if (values.empty()) throw Error(ErrorCode::ParseError, "empty number list");
  return values;
}

// "re:im,re:im,..."; a bare number is real.
std::vector<Complex> parse_complexes(const std::string& text) {
  std::vector<Complex> values;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    const auto colon = token.find(':');
    if (colon == std::string::npos) {
      values.emplace_back(parse_reals(token).front(), 0.0);
    } else {
      values.emplace_back(parse_reals(token.substr(0, colon)).front(),
                          parse_reals(token.substr(colon + 1)).front());
    }
  }
  if (values.empty()) throw Error(ErrorCode::ParseError, "empty complex list");
  return values;
}

std::string fmt(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

json matrix_json(const ComplexMatrix& m) {
  json re = json::array();
  json im = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json rr = json::array();
    json ir = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      rr.push_back(m(i, j).real());
      ir.push_back(m(i, j).imag());
    }
    re.push_back(rr);
    im.push_back(ir);
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

std::string matrix_csv(const ComplexMatrix& m) {
  std::ostringstream s;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) s << ',';
      s << fmt(m(i, j).real()) << ',' << fmt(m(i, j).imag());
    }
    s << '\n';
  }
  return s.str();
}

// Single-row CSV from flat key/value JSON.
std::string object_csv(const json& j) {
  std::string header;
  std::string row;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!header.empty()) {
      header += ',';
      row += ',';
    }
    header += it.key();
    if (it->is_string()) {
      row += it->get<std::string>();
    } else if (it->is_number_float()) {
      row += fmt(it->get<double>());
    } else if (it->is_array()) {
      std::string joined;
      for (const auto& v : *it) {
        if (!joined.empty()) joined += ' ';
        joined += v.is_number_float() ? fmt(v.get<double>()) : v.dump();
      }
      row += joined;
    } else {
      row += it->dump();
    }
  }
  return header + '\n' + row + '\n';
}

class Emitter {
 public:
  Emitter(const Common& c, std::ostream& out) : common_(c), out_(out) {}

  bool csv() const { return common_.format == "csv"; }

  void emit(const json& j, const std::string& csv_text) {
    const std::string text = csv() ? csv_text : j.dump(2) + '\n';
    if (common_.output.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(common_.output, std::ios::binary);
    if (!file) throw Error(ErrorCode::InvalidArgument, "cannot open output file " + common_.output);
    file << text;
  }

 private:
  const Common& common_;
  std::ostream& out_;
};

json amplitude_json(Complex a, std::string_view path) {
  return {{"re", a.real()},
          {"im", a.imag()},
          {"modulus", std::abs(a)},
          {"probability", std::norm(a)},
          {"path", std::string(path)}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"bosonkit: many-boson scattering amplitudes, permanents and Ginibre moments",
               "bosonkit"};
  app.require_subcommand(1);
  std::function<int()> action;

  // amplitude
  Common amp_c;
  MatrixSource amp_src;
  std::string amp_in, amp_out, amp_path = "permanent";
  auto* amp = app.add_subcommand("amplitude", "Fock amplitude A(n -> m)");
  add_common(amp, amp_c);
  add_matrix_source(amp, amp_src);
  amp->add_option("--in", amp_in, "Input occupations n1,n2,...")->required();
  amp->add_option("--out", amp_out, "Output occupations m1,m2,...")->required();
  amp->add_option("--path", amp_path, "Evaluation route")
      ->check(CLI::IsMember(
          {"permanent", "contour", "oracle", "coherent-integral", "quadrature-integral"}))
      ->capture_default_str();
  amp->callback([&] {
    action = [&] {
      const UnitaryMatrix u = load_unitary(amp_src, amp_c.seed);
      const auto n = OccupationVector::parse(amp_in);
      const auto m = OccupationVector::parse(amp_out);
      ComplexAmplitude a{};
      if (amp_path == "permanent") a = amplitude_fock(u, n, m);
      if (amp_path == "contour") a = amplitude_fock_contour(u, n, m);
      if (amp_path == "oracle") a = amplitude_fock_oracle(u, n, m);
      if (amp_path == "coherent-integral") a = amplitude_fock_via_coherent_integral(u, n, m);
      if (amp_path == "quadrature-integral") a = amplitude_fock_via_quadrature_integral(u, n, m);
      const json j = amplitude_json(a.value, amp_path);
      Emitter(amp_c, out).emit(j, object_csv(j));
      return 0;
    };
  });

  // distribution
  Common dist_c;
  MatrixSource dist_src;
  std::string dist_in;
  auto* dist = app.add_subcommand("distribution", "All output probabilities |A(n -> m)|^2");
  add_common(dist, dist_c);
  add_matrix_source(dist, dist_src);
  dist->add_option("--in", dist_in, "Input occupations n1,n2,...")->required();
  dist->callback([&] {
    action = [&] {
      const UnitaryMatrix u = load_unitary(dist_src, dist_c.seed);
      const auto n = OccupationVector::parse(dist_in);
      json rows = json::array();
      std::string csv = "occupation,probability\n";
      for (const auto& o : output_distribution(u, n)) {
        rows.push_back({{"occupation", o.occupation.values()}, {"probability", o.probability}});
        csv += '"' + o.occupation.to_string() + "\"," + fmt(o.probability) + '\n';
      }
      Emitter(dist_c, out).emit({{"input", n.to_string()}, {"outcomes", rows}}, csv);
      return 0;
    };
  });

  // sample
  Common smp_c;
  MatrixSource smp_src;
  std::string smp_in;
  std::size_t smp_count = 10;
  auto* smp = app.add_subcommand("sample", "Draw output occupations");
  add_common(smp, smp_c);
  add_matrix_source(smp, smp_src);
  smp->add_option("--in", smp_in, "Input occupations n1,n2,...")->required();
  smp->add_option("--count", smp_count, "Number of draws")->capture_default_str();
  smp->callback([&] {
    action = [&] {
      const UnitaryMatrix u = load_unitary(smp_src, smp_c.seed);
      const auto n = OccupationVector::parse(smp_in);
      json rows = json::array();
      std::string csv = "occupation\n";
      for (const auto& o : sample_outputs(u, n, smp_count, smp_c.seed)) {
        rows.push_back(o.values());
        csv += '"' + o.to_string() + "\"\n";
      }
      Emitter(smp_c, out).emit({{"input", n.to_string()}, {"samples", rows}}, csv);
      return 0;
    };
  });

  // moments
  Common mom_c;
  int mom_order = 6;
  int mom_dim = 1;
  bool mom_exact = false;
  std::size_t mom_draws = 0;
  double mom_sigma2 = 0.5;
  auto* mom = app.add_subcommand("moments", "Ginibre moments <|Perm A|^order>");
  add_common(mom, mom_c);
  mom->add_option("--order", mom_order, "Moment order")
      ->check(CLI::IsMember({2, 4, 6}))
      ->required();
  mom->add_option("--dim", mom_dim, "Matrix dimension N")->required();
  auto* exact_flag = mom->add_flag("--exact", mom_exact, "Exact rational moment");
  auto* mc_opt = mom->add_option("--mc", mom_draws, "Monte Carlo with this many draws");
  mom->add_option("--sigma2", mom_sigma2, "Entry variance per real part (Monte Carlo)")
      ->capture_default_str();
  exact_flag->excludes(mc_opt);
  mom->callback([&] {
    action = [&] {
      const int n = mom_order / 2;
      if (mom_draws > 0) {
        const auto mc = moment_monte_carlo(n, mom_dim, mom_sigma2, mom_draws, mom_c.seed);
        const json j = {{"order", mom_order},         {"dim", mom_dim},
                        {"sigma2", mom_sigma2},       {"draws", mom_draws},
                        {"estimate", mc.estimate},    {"stderr", mc.standard_error}};
        Emitter(mom_c, out).emit(j, object_csv(j));
        return 0;
      }
      const MomentResult r = n == 1   ? moment2_exact(mom_dim)
                             : n == 2 ? moment4_exact(mom_dim)
                                      : moment6_exact(mom_dim);
      const json j = {{"order", mom_order},
                      {"dim", mom_dim},
                      {"coefficient", r.coefficient.to_string()},
                      {"sigma_power", r.sigma_power},
                      {"scaled", r.scaled.to_string()}};
      Emitter(mom_c, out).emit(j, object_csv(j));
      return 0;
    };
  });

  // haar / ginibre / quench
  Common haar_c;
  std::size_t haar_dim = 0;
  auto* haar = app.add_subcommand("haar", "Haar-random unitary");
  add_common(haar, haar_c);
  haar->add_option("--dim", haar_dim, "Dimension")->required();
  haar->callback([&] {
    action = [&] {
      const UnitaryMatrix u = sample_haar(haar_dim, haar_c.seed);
      const ComplexMatrix& m = u.matrix();
      Emitter(haar_c, out).emit(matrix_json(m), matrix_csv(m));
      return 0;
    };
  });

  Common gin_c;
  std::size_t gin_dim = 0;
  double gin_sigma2 = 0.5;
  auto* gin = app.add_subcommand("ginibre", "Complex Ginibre matrix");
  add_common(gin, gin_c);
  gin->add_option("--dim", gin_dim, "Dimension")->required();
  gin->add_option("--sigma2", gin_sigma2, "Variance of real and imaginary parts")
      ->capture_default_str();
  gin->callback([&] {
    action = [&] {
      const ComplexMatrix m = sample_ginibre(gin_dim, gin_sigma2, gin_c.seed);
      Emitter(gin_c, out).emit(matrix_json(m), matrix_csv(m));
      return 0;
    };
  });

  Common qu_c;
  std::size_t qu_dim = 0;
  double qu_disorder = 0.0;
  auto* qu = app.add_subcommand("quench", "Lattice quench unitary");
  add_common(qu, qu_c);
  qu->add_option("--dim", qu_dim, "Number of sites")->required();
  qu->add_option("--disorder", qu_disorder, "Phase disorder strength")->capture_default_str();
  qu->callback([&] {
    action = [&] {
      const UnitaryMatrix u = quench_unitary(qu_dim, qu_disorder, qu_c.seed);
      const ComplexMatrix& m = u.matrix();
      Emitter(qu_c, out).emit(matrix_json(m), matrix_csv(m));
      return 0;
    };
  });

  // shooting
  Common sh_c;
  MatrixSource sh_src;
  std::string sh_in, sh_out;
  auto* sh = app.add_subcommand("shooting", "Solve the saddle-point phase problem");
  add_common(sh, sh_c);
  add_matrix_source(sh, sh_src);
  sh->add_option("--in", sh_in, "Input occupations")->required();
  sh->add_option("--out", sh_out, "Output occupations")->required();
  sh->callback([&] {
    action = [&] {
      const ShootingProblem p{load_unitary(sh_src, sh_c.seed), OccupationVector::parse(sh_in),
                              OccupationVector::parse(sh_out)};
      const ShootingSolution s = solve_shooting(p, sh_c.seed);
      const json j = {
          {"status", s.status == ShootingStatus::Converged ? "converged" : "no_solution_found"},
          {"residual", s.residual},
          {"start_index", s.start_index},
          {"theta", s.theta},
          {"chi", s.chi}};
      Emitter(sh_c, out).emit(j, object_csv(j));
      return 0;
    };
  });

  // quadrature
  Common qd_c;
  MatrixSource qd_src;
  std::string qd_q, qd_big_q;
  auto* qd = app.add_subcommand("quadrature", "Quadrature amplitude <Q'|q>");
  add_common(qd, qd_c);
  add_matrix_source(qd, qd_src);
  qd->add_option("--q", qd_q, "Input quadratures q1,q2,...")->required();
  qd->add_option("--Q", qd_big_q, "Output quadratures Q1,Q2,...")->required();
  qd->callback([&] {
    action = [&] {
      const UnitaryMatrix u = load_unitary(qd_src, qd_c.seed);
      const QuadratureTransform t(u);
      const Complex a = t.amplitude(QuadraturePoint(parse_reals(qd_q)),
                                    QuadraturePoint(parse_reals(qd_big_q)));
      json j = amplitude_json(a, "quadrature");
      j["flat_probability"] = t.probability();
      Emitter(qd_c, out).emit(j, object_csv(j));
      return 0;
    };
  });

  // coherent
  Common co_c;
  MatrixSource co_src;
  std::string co_phi, co_psi;
  auto* co = app.add_subcommand("coherent", "Coherent-state amplitude <psi'|phi>");
  add_common(co, co_c);
  add_matrix_source(co, co_src);
  co->add_option("--phi", co_phi, "Input amplitudes re:im,re:im,...")->required();
  co->add_option("--psi", co_psi, "Output amplitudes re:im,re:im,...")->required();
  co->callback([&] {
    action = [&] {
      const UnitaryMatrix u = load_unitary(co_src, co_c.seed);
      const Complex a = amplitude_coherent(u, CoherentLabel(parse_complexes(co_phi)),
                                           CoherentLabel(parse_complexes(co_psi)));
      const json j = amplitude_json(a, "coherent");
      Emitter(co_c, out).emit(j, object_csv(j));
      return 0;
    };
  });

  // validate
  Common val_c;
  ValidationOptions val_o;
  auto* val = app.add_subcommand("validate", "Run the cross-path consistency suite");
  add_common(val, val_c);
  val->add_option("--dim-max", val_o.dim_max, "Largest size used by amplitude checks")
      ->capture_default_str();
  val->add_flag("--inject-fault", val_o.fault_injection)->group("");
  val->callback([&] {
    action = [&] {
      if (val_c.seed != 0) val_o.seed = val_c.seed;
      const ValidationReport report = run_validation(val_o);
      json rows = json::array();
      std::ostringstream text;
      text << "check,result,detail\n";
      for (const auto& c : report.checks) {
        rows.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        text << '"' << c.name << "\"," << (c.passed ? "PASS" : "FAIL") << ",\"" << c.detail
             << "\"\n";
      }
      Emitter(val_c, out)
          .emit({{"checks", rows}, {"all_passed", report.all_passed()}}, text.str());
      return report.all_passed() ? 0 : static_cast<int>(kValidationFailed);
    };
  });

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return kUsage;
  }
  try {
    return action();
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::ParseError ? kUsage : kPrecondition;
  }
}

}  // namespace bosonkit::cli
