#include "xover/classes.hpp"
#include "xover/constructions.hpp"
#include "xover/evaluation.hpp"
#include "xover/io.hpp"
#include "xover/model.hpp"
#include "xover/optimizer.hpp"
#include "xover/symmetry.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCertification = 3;
constexpr int kExitUnsupported = 4;

struct TRange {
  int lo = 0, hi = 0;
};

TRange parse_t_range(const std::string& text) {
  TRange r;
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    r.lo = r.hi = std::stoi(text);
  } else {
    r.lo = std::stoi(text.substr(0, dots));
    r.hi = std::stoi(text.substr(dots + 2));
  }
  if (r.lo < 2 || r.hi < r.lo) throw CLI::ValidationError("-t", "bad t range");
  return r;
}

/// Paper-style cell: exact fraction when available, otherwise two decimals
/// with 0+/1- marking values within 0.005 of the bounds.
std::string render_cell(double v, const xover::Rat* exact) {
  if (exact) return xover::rat_str(*exact);
  if (std::abs(v) < 1e-9) return "0";
  if (std::abs(v - 1.0) < 1e-9) return "1";
  if (v < 0.005) return "0+";
  if (v > 0.995) return "1-";
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << v;
  return os.str();
}

std::string class_label(const xover::EquivalenceClass& cls) {
  std::ostringstream os;
  os << "[ ";
  for (int v : cls.canonical) os << v << ' ';
  os << ']';
  return os.str();
}

void print_solution_table(const xover::MaximinSolution& sol, std::ostream& out) {
  out << "k=" << sol.k << " t=" << sol.t << "\n";
  size_t width = 0;
  for (const auto& [cls, pi] : sol.active)
    width = std::max(width, class_label(cls).size());
  for (size_t i = 0; i < sol.active.size(); ++i) {
    const auto& [cls, pi] = sol.active[i];
    const xover::Rat* exact = nullptr;
    if (sol.exact && sol.exact->verified) exact = &sol.exact->proportions[i].second;
    out << "Prop. " << std::left << std::setw(int(width)) << class_label(cls)
        << "  " << render_cell(pi, exact) << "\n";
  }
  const xover::Rat* hexact =
      (sol.exact && sol.exact->verified) ? &sol.exact->h_star : nullptr;
  if (hexact) {
    out << "h*" << std::string(width + 4, ' ') << xover::rat_str(*hexact) << "\n";
  } else {
    out << "h*" << std::string(width + 4, ' ') << std::setprecision(10)
        << sol.h_star << "\n";
  }
  out << "certificate: " << (sol.certificate.passed() ? "passed" : sol.certificate.failure)
      << " (kkt " << std::scientific << std::setprecision(2)
      << sol.certificate.kkt_residual << ", inactive gap "
      << sol.certificate.max_inactive_gap << ")\n";
}

int run_optimize(int k, const TRange& tr, bool rational, double tol_active,
                 const std::string& format, std::ostream& out) {
  xover::SolverSettings cfg;
  cfg.active_rtol = tol_active;
  cfg.want_exact = rational;
  bool all_certified = true;

  if (tr.lo == tr.hi && format != "csv") {
    auto sol = xover::solve_maximin(k, tr.lo, cfg);
    if (format == "json")
      out << xover::solution_to_json(sol) << "\n";
    else
      print_solution_table(sol, out);
    return sol.certificate.passed() ? kExitOk : kExitCertification;
  }

  // Range: assemble the paper-style table, one solve per t.
  std::vector<xover::MaximinSolution> sols;
  for (int t = tr.lo; t <= tr.hi; ++t) {
    sols.push_back(xover::solve_maximin(k, t, cfg));
    all_certified = all_certified && sols.back().certificate.passed();
  }
  if (format == "json") {
    std::string sep;
    out << "[\n";
    for (const auto& s : sols) {
      out << sep << xover::solution_to_json(s);
      sep = ",\n";
    }
    out << "\n]\n";
  } else {
    std::set<xover::EquivalenceClass> shown;
    for (const auto& s : sols)
      for (const auto& [cls, pi] : s.active)
        if (pi > 1e-9) shown.insert(cls);
    const char* sep = (format == "csv") ? "," : "  ";
    out << "t";
    for (const auto& s : sols) out << sep << s.t;
    out << "\n";
    for (const auto& cls : shown) {
      out << (format == "csv" ? cls.str() : "Prop. " + class_label(cls));
      for (const auto& s : sols) {
        double pi = 0.0;
        const xover::Rat* exact = nullptr;
        for (size_t i = 0; i < s.active.size(); ++i)
          if (s.active[i].first == cls) {
            pi = s.active[i].second;
            if (s.exact && s.exact->verified)
              exact = &s.exact->proportions[i].second;
          }
        out << sep << render_cell(pi, exact);
      }
      out << "\n";
    }
    out << "h*";
    for (const auto& s : sols) {
      if (s.exact && s.exact->verified)
        out << sep << xover::rat_str(s.exact->h_star);
      else {
        std::ostringstream os;
        os << std::fixed << std::setprecision(2) << s.h_star;
        out << sep << os.str();
      }
    }
    out << "\n";
  }
  return all_certified ? kExitOk : kExitCertification;
}

xover::Triplet parse_seed(const std::string& text) {
  xover::Triplet seed{1, 2, 3};
  std::istringstream is(text);
  std::string tok;
  int i = 0;
  while (std::getline(is, tok, ',') && i < 3) seed[i++] = std::stoi(tok);
  if (i != 3) throw CLI::ValidationError("--seed-triplet", "need three labels");
  return seed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cross-over design optimizer for total effects under the full "
               "treatment x carry-over interaction model"};
  app.require_subcommand(1);

  std::string format = "table";
  app.add_option("--format", format, "Output format: table|json|csv")
      ->capture_default_str();

  // ---- optimize ----
  auto* opt = app.add_subcommand("optimize", "Optimal proportions for one (k, t)");
  int opt_k = 0;
  std::string opt_t;
  bool opt_rational = false;
  double tol_active = 1e-7;
  opt->add_option("-k", opt_k, "Periods")->required()->check(CLI::Range(2, 9));
  opt->add_option("-t", opt_t, "Treatments")->required();
  opt->add_flag("--rational", opt_rational, "Verify an exact rational solution");
  opt->add_option("--tol-active", tol_active, "Relative activity tolerance");

  // ---- table ----
  auto* tab = app.add_subcommand("table", "Optimal-proportion table over a t range");
  int tab_k = 0;
  std::string tab_t;
  bool tab_rational = false;
  tab->add_option("-k", tab_k, "Periods")->required()->check(CLI::Range(2, 9));
  tab->add_option("-t", tab_t, "Treatment range, e.g. 2..16")->required();
  tab->add_flag("--rational", tab_rational, "Exact fractions where verified");

  // ---- classes ----
  auto* cls = app.add_subcommand("classes", "Enumerate sequence equivalence classes");
  int cls_k = 0, cls_t = 0;
  cls->add_option("-k", cls_k, "Periods")->required()->check(CLI::Range(2, 12));
  cls->add_option("-t", cls_t, "Treatments")->required()->check(CLI::Range(2, 30));

  // ---- evaluate ----
  auto* ev = app.add_subcommand("evaluate", "Efficiency report for a design file");
  std::string ev_file;
  int ev_t = 0;
  bool ev_transpose = false, ev_periods = false;
  ev->add_option("design", ev_file, "Design CSV")->required();
  ev->add_option("-t", ev_t, "Treatments")->required();
  ev->add_flag("--transpose", ev_transpose, "Rows are periods, columns subjects");
  ev->add_flag("--periods-model", ev_periods, "Evaluate under the period-effects model");

  // ---- construct ----
  auto* con = app.add_subcommand("construct", "Reduced t(t-1)-subject design");
  int con_t = 0;
  std::string con_pattern, con_method = "oa", con_seed = "1,2,3", con_out, con_sidecar;
  con->add_option("-t", con_t, "Treatments")->required();
  con->add_option("--pattern", con_pattern, "Generating class, e.g. 1122333")
      ->required();
  con->add_option("--method", con_method, "oa|gf")->check(CLI::IsMember({"oa", "gf"}));
  con->add_option("--seed-triplet", con_seed, "gf seed labels, e.g. 1,2,3");
  con->add_option("-o,--output", con_out, "Write CSV here (default stdout)");
  con->add_option("--sidecar", con_sidecar, "Write construction metadata JSON");

  // ---- generate ----
  auto* gen = app.add_subcommand("generate", "Symmetric design generated by a class");
  int gen_t = 0;
  std::string gen_class, gen_out;
  gen->add_option("--pattern", gen_class, "Class, e.g. 1122")->required();
  gen->add_option("-t", gen_t, "Treatments")->required();
  gen->add_option("-o,--output", gen_out, "Write CSV here (default stdout)");

  // ---- check ----
  auto* chk = app.add_subcommand("check", "Balance/symmetry report for a design file");
  std::string chk_file;
  int chk_t = 0;
  bool chk_transpose = false;
  chk->add_option("design", chk_file, "Design CSV")->required();
  chk->add_option("-t", chk_t, "Treatments")->required();
  chk->add_flag("--transpose", chk_transpose, "Rows are periods, columns subjects");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*opt) return run_optimize(opt_k, parse_t_range(opt_t), opt_rational,
                                  tol_active, format, std::cout);
    if (*tab) {
      TRange r = parse_t_range(tab_t);
      if (r.lo > 30 || r.hi > 30) {
        std::cerr << "table: t range capped at 30\n";
        return kExitUnsupported;
      }
      return run_optimize(tab_k, r, tab_rational, 1e-7, format, std::cout);
    }
    if (*cls) {
      auto list = xover::enumerate_classes(cls_k, cls_t);
      if (format == "json") {
        nlohmann::json j;
        j["k"] = cls_k;
        j["t"] = cls_t;
        j["count"] = list.size();
        std::vector<std::string> names;
        for (const auto& c : list) names.push_back(c.str());
        j["classes"] = names;
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& c : list) std::cout << c.str() << "\n";
        std::cout << "# " << list.size() << " classes\n";
      }
      return kExitOk;
    }
    if (*ev) {
      auto d = xover::read_design_csv_file(ev_file, ev_t, ev_transpose);
      auto sol = xover::solve_maximin(d.k(), d.t());
      if (!sol.certificate.passed()) {
        std::cerr << "optimizer certificate failed: " << sol.certificate.failure << "\n";
        return kExitCertification;
      }
      auto rep = xover::evaluate(d, sol, ev_periods);
      nlohmann::json j = {
          {"n", d.n()},
          {"k", d.k()},
          {"t", d.t()},
          {"h_star", sol.h_star},
          {"trace_eff", rep.trace_eff},
          {"a_eff", rep.a_eff},
          {"d_eff", rep.d_eff},
          {"e_eff", rep.e_eff},
          {"estimable", rep.estimable},
          {"completely_symmetric", rep.completely_symmetric},
          {"contrast_eigenvalues", rep.contrast_eigenvalues},
      };
      if (format == "json") {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "n=" << d.n() << " k=" << d.k() << " t=" << d.t()
                  << "  h*=" << std::setprecision(10) << sol.h_star << "\n"
                  << std::fixed << std::setprecision(4)
                  << "A-efficiency  " << rep.a_eff << "\n"
                  << "D-efficiency  " << rep.d_eff << "\n"
                  << "E-efficiency  " << rep.e_eff << "\n"
                  << "trace eff.    " << rep.trace_eff << "\n"
                  << "completely symmetric: " << (rep.completely_symmetric ? "yes" : "no")
                  << ", estimable: " << (rep.estimable ? "yes" : "no") << "\n";
      }
      return kExitOk;
    }
    if (*con) {
      auto pattern = xover::class_from_string(con_pattern);
      xover::Method method =
          con_method == "gf" ? xover::Method::gf : xover::Method::oa;
      if (method == xover::Method::gf && !xover::GaloisField::supported_order(con_t)) {
        std::cerr << "construct: t=" << con_t << " is not a supported prime power\n";
        return kExitUnsupported;
      }
      auto sd = xover::starting_design(con_t, method, parse_seed(con_seed));
      auto design = xover::build_reduced_design(con_t, pattern, method,
                                                parse_seed(con_seed));
      if (con_out.empty()) {
        xover::write_design_csv(std::cout, design);
      } else {
        std::ofstream f(con_out);
        xover::write_design_csv(f, design);
      }
      if (!con_sidecar.empty()) {
        std::ofstream f(con_sidecar);
        f << xover::construction_sidecar_json(sd, pattern) << "\n";
      }
      return kExitOk;
    }
    if (*gen) {
      auto pattern = xover::class_from_string(gen_class);
      auto design = xover::symmetric_design_from_class(pattern, gen_t);
      if (gen_out.empty()) {
        xover::write_design_csv(std::cout, design);
      } else {
        std::ofstream f(gen_out);
        xover::write_design_csv(f, design);
      }
      return kExitOk;
    }
    if (*chk) {
      auto d = xover::read_design_csv_file(chk_file, chk_t, chk_transpose);
      auto balance = xover::check_strong_balance(d);
      auto cmp = xover::compare_period_models(d);
      auto phi = xover::info_phi(d);
      nlohmann::json j = {
          {"n", d.n()},
          {"k", d.k()},
          {"t", d.t()},
          {"strongly_balanced", balance.strongly_balanced},
          {"first_period_equal", balance.first_period_equal},
          {"self_precedence_equal", balance.self_precedence_equal},
          {"pair_precedence_equal", balance.pair_precedence_equal},
          {"completely_symmetric", xover::is_completely_symmetric(phi.m)},
          {"trace_plain", cmp.trace_plain},
          {"trace_periods", cmp.trace_periods},
          {"period_model_equal", cmp.equal},
      };
      if (d.t() <= 8) {
        auto aut = xover::automorphism_group(d);
        j["automorphism_order"] = aut.order;
        j["transitive"] = aut.transitive;
        j["doubly_transitive"] = aut.doubly_transitive;
      } else {
        j["automorphism_order"] = nullptr;
        std::cerr << "check: automorphism search skipped (t > 8 unsupported)\n";
      }
      std::cout << j.dump(2) << "\n";
      return (chk_t <= 8) ? kExitOk : kExitUnsupported;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
