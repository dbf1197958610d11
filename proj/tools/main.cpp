#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "assoc/cluster.hpp"
#include "assoc/geometry.hpp"
#include "assoc/interval_oracle.hpp"
#include "assoc/json_io.hpp"
#include "assoc/quiver.hpp"
#include "assoc/verify.hpp"
#include "assoc/window.hpp"

namespace {

using namespace assoc;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::BadInput, "cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string maybe_file(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') return slurp(arg.substr(1));
  return arg;
}

DynkinQuiver quiver_from_options(const std::string& quiver_arg, const std::string& type_arg) {
  if (!quiver_arg.empty()) return parse_quiver(maybe_file(quiver_arg));
  if (!type_arg.empty()) return standard_quiver(parse_type_name(type_arg));
  fail(Errc::BadInput, "provide --quiver or --type");
}

CTuple c_from_option(const TranslationWindow& w, const std::string& spec, unsigned long long seed) {
  if (spec.empty() || spec == "ones") return ones_c(w);
  if (spec == "zero" || spec == "zeros") return zero_c(w);
  if (spec.rfind("e:", 0) == 0) {
    auto comma = spec.find(',', 2);
    if (comma == std::string::npos) fail(Errc::BadInput, "unit deformation spec is e:i,j");
    return unit_c(w, {std::stoi(spec.substr(2, comma - 2)), std::stoi(spec.substr(comma + 1))});
  }
  if (spec == "random") return random_c(w, seed, 1, 10);
  std::vector<Rational> vals;
  std::stringstream ss(maybe_file(spec));
  std::string item;
  while (std::getline(ss, item, ',')) vals.push_back(parse_rational(item));
  return make_c(w, std::move(vals));
}

WIdx alpha_from_option(const std::string& spec) {
  auto comma = spec.find(',');
  if (comma == std::string::npos) fail(Errc::BadInput, "--alpha expects i,j");
  return {std::stoi(spec.substr(0, comma)), std::stoi(spec.substr(comma + 1))};
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content << "\n";
    return;
  }
  std::string tmp = out_path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) fail(Errc::BadInput, "cannot write file '" + tmp + "'");
    out << content << "\n";
  }
  if (std::rename(tmp.c_str(), out_path.c_str()) != 0)
    fail(Errc::BadInput, "cannot move output into place at '" + out_path + "'");
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::NotSimplyLaced:
    case Errc::NotDynkin:
    case Errc::Disconnected:
    case Errc::BadLabels:
    case Errc::BadInput:
    case Errc::VarSetMismatch:
    case Errc::NonMonomialImage:
    case Errc::DimensionMismatch:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact generalized associahedra, cluster variables and F-polynomial Newton polytopes for ADE quivers"};
  app.require_subcommand(1);

  std::string quiver_arg, type_arg, c_arg, alpha_arg, out_arg, format_arg = "json", ice_arg,
              check_arg = "all";
  unsigned long long seed = 1;
  int max_rank_a = 7, max_rank_d = 6, max_rank_e = 6;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--quiver", quiver_arg, "quiver text '1->2;3->2', JSON, or @file");
    cmd->add_option("--type", type_arg, "Dynkin type name (A3, D4, E6) with the default orientation");
    cmd->add_option("--out", out_arg, "output path (default stdout)");
  };

  CLI::App* arq = app.add_subcommand("arq", "dump the translation window (dims, g-vectors, slices)");
  add_common(arq);

  CLI::App* gv = app.add_subcommand("gvectors", "dump the g-vectors");
  add_common(gv);

  CLI::App* poly = app.add_subcommand("polytope", "enumerate the deformed polytope vertices");
  add_common(poly);
  poly->add_option("--c", c_arg, "deformation: ones | zero | e:i,j | comma list | random");
  poly->add_option("--seed", seed, "seed for random deformations");
  poly->add_option("--format", format_arg, "json | off");

  CLI::App* fp = app.add_subcommand("fpoly", "F-polynomials (principal coefficients)");
  add_common(fp);
  fp->add_option("--alpha", alpha_arg, "single index i,j");

  CLI::App* univ = app.add_subcommand("universal", "universal coefficient matrix and F-polynomials");
  add_common(univ);
  univ->add_option("--alpha", alpha_arg, "single index i,j");

  CLI::App* sep = app.add_subcommand("separation", "compare separation specialization with direct mutation");
  add_common(sep);
  sep->add_option("--ice", ice_arg, "ice quiver JSON (@file) | principal | universal | trivial");

  CLI::App* ver = app.add_subcommand("verify", "run theorem checks; nonzero exit on failure");
  add_common(ver);
  ver->add_option("--check", check_arg, "all | th1 | th2 | universal | degenerate | separation | compat | oracle");
  ver->add_option("--c", c_arg, "deformation for th1/degenerate");
  ver->add_option("--alpha", alpha_arg, "index for th2/universal/oracle");
  ver->add_option("--seed", seed, "seed for randomized deformations");
  int max_rank_all = 0;
  ver->add_option("--max-rank", max_rank_all, "rank ceiling applied to every series in --check all");
  ver->add_option("--max-rank-a", max_rank_a, "rank ceiling for type A in --check all");
  ver->add_option("--max-rank-d", max_rank_d, "rank ceiling for type D in --check all");
  ver->add_option("--max-rank-e", max_rank_e, "rank ceiling for type E in --check all");

  CLI11_PARSE(app, argc, argv);

  try {
    if (arq->parsed()) {
      auto w = build_window(quiver_from_options(quiver_arg, type_arg));
      write_output(out_arg, window_json(w));
      return 0;
    }
    if (gv->parsed()) {
      auto w = build_window(quiver_from_options(quiver_arg, type_arg));
      write_output(out_arg, gvectors_json(w));
      return 0;
    }
    if (poly->parsed()) {
      auto q = quiver_from_options(quiver_arg, type_arg);
      auto w = build_window(q);
      auto h = hom_table(w);
      CTuple c = c_from_option(w, c_arg, seed);
      VertexMap vm;
      if (c.strictly_positive()) {
        vm = enumerate_vertices(w, h, c);
      } else {
        // cluster-solve fallback: every vertex is among the cluster points
        auto atlas = enumerate_atlas(w);
        for (const auto& T : atlas.clusters) {
          vm.clusters.push_back(T);
          vm.points.push_back(vertex_for_cluster(w, h, c, T));
        }
      }
      if (format_arg == "off") {
        write_output(out_arg, off_export(w, vm));
      } else {
        write_output(out_arg, polytope_with_ambient_json(w, vm));
      }
      return 0;
    }
    if (fp->parsed()) {
      auto q = quiver_from_options(quiver_arg, type_arg);
      auto w = build_window(q);
      auto vars = slice_variables(w, framed(q));
      std::vector<std::string> xs;
      for (int i = 1; i <= w.n(); ++i) xs.push_back("x" + std::to_string(i));
      std::vector<LaurentPoly> fpolys;
      for (const auto& v : vars) fpolys.push_back(set_vars_to_one(v, xs));
      if (!alpha_arg.empty()) {
        int p = w.pos(alpha_from_option(alpha_arg));
        if (p < 0) fail(Errc::BadInput, "--alpha outside the window");
        write_output(out_arg, to_string(fpolys[p]));
      } else {
        write_output(out_arg, fpoly_json(w, fpolys));
      }
      return 0;
    }
    if (univ->parsed()) {
      auto q = quiver_from_options(quiver_arg, type_arg);
      auto w = build_window(q);
      auto fpolys = universal_f_polynomials(w);
      if (!alpha_arg.empty()) {
        int p = w.pos(alpha_from_option(alpha_arg));
        if (p < 0) fail(Errc::BadInput, "--alpha outside the window");
        write_output(out_arg, to_string(fpolys[p]));
      } else {
        write_output(out_arg, universal_json(w, fpolys));
      }
      return 0;
    }
    if (sep->parsed()) {
      auto q = quiver_from_options(quiver_arg, type_arg);
      auto ctx = make_context(q, true);
      IceQuiver ice = ice_arg.empty() || ice_arg == "principal" ? framed(q)
                      : ice_arg == "universal"                  ? universal_ice(ctx.w)
                      : ice_arg == "trivial"                    ? trivial_ice(q)
                                                                : parse_ice_json(maybe_file(ice_arg));
      Report r = check_separation(ctx, ice, ice_arg.empty() ? "principal" : ice_arg);
      write_output(out_arg, report_json_line(r));
      return r.pass ? 0 : 1;
    }
    if (ver->parsed()) {
      std::vector<Report> reports;
      if (check_arg == "all" && quiver_arg.empty() && type_arg.empty()) {
        VerifyOptions opt;
        opt.seed = seed;
        if (max_rank_all > 0) max_rank_a = max_rank_d = max_rank_e = max_rank_all;
        opt.poly_max_a = max_rank_a;
        opt.poly_max_d = max_rank_d;
        opt.poly_max_e = max_rank_e;
        reports = run_standard_suite(opt);
      } else {
        auto q = quiver_from_options(quiver_arg, type_arg);
        bool needs_atlas = check_arg != "th1";
        auto ctx = make_context(q, needs_atlas || check_arg == "all");
        auto alphas = [&]() {
          std::vector<WIdx> out;
          if (!alpha_arg.empty())
            out.push_back(alpha_from_option(alpha_arg));
          else
            for (int p : ctx.w.inner_positions) out.push_back(ctx.w.indices[p]);
          return out;
        };
        if (check_arg == "all" || check_arg == "th1")
          reports.push_back(check_theorem_one(ctx, c_from_option(ctx.w, c_arg, seed)));
        if (check_arg == "all" || check_arg == "th2")
          for (WIdx a : alphas()) reports.push_back(check_theorem_two(ctx, a));
        if (check_arg == "all" || check_arg == "universal")
          for (WIdx a : alphas()) reports.push_back(check_universal(ctx, a));
        if (check_arg == "all" || check_arg == "degenerate") {
          CTuple c = c_arg.empty() ? zero_c(ctx.w) : c_from_option(ctx.w, c_arg, seed);
          reports.push_back(check_degenerate(ctx, c));
        }
        if (check_arg == "all" || check_arg == "separation") {
          reports.push_back(check_separation(ctx, framed(q), "principal"));
          reports.push_back(check_separation(ctx, universal_ice(ctx.w), "universal"));
        }
        if (check_arg == "all" || check_arg == "compat")
          reports.push_back(check_compat_agreement(ctx));
        if ((check_arg == "all" && q.type.series == DynkinSeries::A) || check_arg == "oracle")
          for (WIdx a : alphas()) reports.push_back(check_oracle_three_way(ctx, a));
      }
      int failed = 0;
      std::string body;
      for (const auto& r : reports) {
        body += report_json_line(r) + "\n";
        if (!r.pass) ++failed;
      }
      body += "# " + std::to_string(reports.size() - failed) + "/" + std::to_string(reports.size()) +
              " checks passed";
      write_output(out_arg, body);
      return failed == 0 ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
