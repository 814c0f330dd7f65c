#include <CLI11.hpp>

#include <iostream>
#include <optional>

#include "lagten/epw.hpp"
#include "lagten/error.hpp"
#include "lagten/hypersurfaces.hpp"
#include "lagten/io.hpp"
#include "lagten/lattice.hpp"
#include "lagten/plane_curves.hpp"
#include "lagten/report.hpp"
#include "lagten/smith.hpp"
#include "lagten/tens.hpp"
#include "lagten/version.hpp"

using namespace lagten;

namespace {

struct Globals {
  std::uint64_t seed = 1;
  std::uint64_t budget = 2'500'000;
  std::string json = "-";
};

Json incidence_json(const IncidenceReport& r) {
  return Json{{"pairs", r.pairs},
              {"incident_pairs", r.incident_pairs},
              {"distinct_points", r.distinct_points},
              {"all_incident", r.all_incident},
              {"points_distinct", r.points_distinct},
              {"planes_distinct", r.planes_distinct},
              {"span_dim", r.span_dim},
              {"isotropic", r.isotropic},
              {"lagrangian_spanning", r.lagrangian_spanning}};
}

TenConfig build_recipe(const std::string& recipe, std::uint32_t p, int k, std::uint64_t seed) {
  if (recipe == "3331" || recipe == "three-conic") {
    if ((p && p != 29) || (k && k != 2)) throw Error("ten construct: recipe 3331 is defined over F_{29^2} only");
    return construct_3331().config;
  }
  if (recipe == "morin13") {
    if (k > 1) throw Error("ten construct: morin13 is built over a prime field");
    return construct_morin13(FiniteField(p ? p : 11), seed).config;
  }
  throw Error("unknown recipe \"" + recipe + "\" (expected 3331 or morin13)");
}

MultPointSet nodes_for(std::uint32_t prime, const Globals& g) {
  if (prime == 0) return select_winger_prime(31, 499, 2, std::max<std::uint64_t>(g.budget, 2'000'000), g.seed).nodes;
  const FiniteField f(prime);
  return find_nodes(f, winger_sextic(f), 2, std::max<std::uint64_t>(g.budget, 2'000'000), g.seed);
}

// A form file may carry its own "field"; otherwise the prime field F_p is used.
FiniteField form_field(const Json& j, std::uint32_t p) {
  if (j.contains("field")) return FiniteField(field_from_json(j.at("field")));
  if (p == 0) throw Error("form file has no \"field\" entry; pass --p");
  return FiniteField(p);
}

Json form_file(const FiniteField& f, const MultiPoly& form) {
  Json j = to_json(f, form);
  j["field"] = to_json(f.spec());
  return j;
}

Json gram_json(const IntLattice& l) {
  const Signature s = l.signature();
  return {{"label", l.label()},
          {"rank", l.rank()},
          {"gram", to_json(l.gram())},
          {"det", to_json(l.det())},
          {"signature", {s.positive, s.negative, s.zero}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lagrangian tens of planes in P^5, EPW sextics and lattice checks"};
  app.set_version_flag("--version", std::string(kVersion));
  Globals g;
  app.add_option("--seed", g.seed, "Global RNG seed");
  app.add_option("--budget", g.budget, "Maximum number of points for exhaustive scans");
  app.add_option("--json", g.json, "Output path, or - for standard output");
  app.require_subcommand(1);

  std::string in_path, out_path;
  auto add_in = [&](CLI::App* c) { c->add_option("--in", in_path, "Input JSON file")->required(); };
  auto add_out = [&](CLI::App* c) { c->add_option("--out", out_path, "Output path (overrides --json)"); };

  auto* ten = app.add_subcommand("ten", "Build and check configurations of planes");
  ten->require_subcommand(1);
  auto* ten_construct = ten->add_subcommand("construct", "Emit a configuration as TenConfig JSON");
  std::string recipe;
  std::uint32_t ten_p = 0;
  int ten_k = 0;
  ten_construct->add_option("--recipe", recipe, "3331 or morin13")->required();
  ten_construct->add_option("--p", ten_p, "Field characteristic");
  ten_construct->add_option("--k", ten_k, "Extension degree");
  ten_construct->add_option("--seed", g.seed, "RNG seed");
  add_out(ten_construct);
  auto* ten_verify = ten->add_subcommand("verify", "Incidence, span and isotropy of a configuration");
  add_in(ten_verify);
  add_out(ten_verify);
  auto* ten_dualize = ten->add_subcommand("dualize", "Replace every plane by its annihilator");
  add_in(ten_dualize);
  add_out(ten_dualize);
  auto* ten_tangent = ten->add_subcommand("tangent-rank", "Rank of the linearized incidence system");
  add_in(ten_tangent);
  add_out(ten_tangent);

  auto* cubic = app.add_subcommand("cubic", "Hypersurfaces through planes and singular scans");
  cubic->require_subcommand(1);
  auto* cubic_planes = cubic->add_subcommand("through-planes", "Forms of a given degree containing all planes");
  int degree = 3;
  add_in(cubic_planes);
  cubic_planes->add_option("-d,--degree", degree, "Form degree");
  add_out(cubic_planes);
  auto* cubic_scan = cubic->add_subcommand("scan", "Singular points of a form over F_{p^k}, k <= K");
  std::string form_path;
  int max_level = 1;
  std::uint32_t scan_p = 0;
  cubic_scan->add_option("--form", form_path, "Form JSON")->required();
  cubic_scan->add_option("-K", max_level, "Largest extension degree scanned");
  cubic_scan->add_option("--p", scan_p, "Characteristic when the form file has no field");
  cubic_scan->add_option("--budget", g.budget, "Maximum number of points scanned");
  add_out(cubic_scan);

  auto* epw = app.add_subcommand("epw", "EPW sextics of Lagrangian subspaces");
  epw->require_subcommand(1);
  auto* epw_form_cmd = epw->add_subcommand("form", "EPW sextic of the span of a configuration");
  bool certify = false;
  add_in(epw_form_cmd);
  add_out(epw_form_cmd);
  epw_form_cmd->add_flag("--certify", certify, "Exact degree-10 chart certificate");
  auto* epw_corank = epw->add_subcommand("corank", "Corank of the subspace at a point");
  std::string point_text;
  add_in(epw_corank);
  epw_corank->add_option("--point", point_text, "Coordinates, e.g. \"1,0,2,0,0,3\"")->required();
  add_out(epw_corank);
  auto* epw_theta = epw->add_subcommand("theta", "Planes whose Plücker vector lies in the subspace");
  std::uint32_t theta_p = 5;
  std::string theta_in;
  epw_theta->add_option("--p", theta_p, "Characteristic for the default morin13 configuration");
  epw_theta->add_option("--in", theta_in, "TenConfig JSON (default: morin13 over F_p)");
  epw_theta->add_option("--budget", g.budget, "Maximum number of points of P^9 enumerated");
  add_out(epw_theta);
  auto* epw_power = epw->add_subcommand("check-power", "Whether a form is a scalar multiple of base^exp");
  std::string base_path;
  int exponent = 1;
  std::uint32_t power_p = 0;
  epw_power->add_option("--form", form_path, "Form JSON")->required();
  epw_power->add_option("--base", base_path, "Base form JSON")->required();
  epw_power->add_option("--exp", exponent, "Exponent")->required();
  epw_power->add_option("--p", power_p, "Characteristic when the form files have no field");
  add_out(epw_power);

  auto* lattice = app.add_subcommand("lattice", "Plane-class, embedding and BB lattice computations");
  lattice->require_subcommand(1);
  auto* lattice_gram = lattice->add_subcommand("gram", "Gram matrix of a preset lattice");
  std::string preset;
  lattice_gram->add_option("--preset", preset, "M10, M11, BB or EPW")
      ->required()
      ->check(CLI::IsMember({"M10", "M11", "BB", "EPW"}));
  add_out(lattice_gram);
  auto* lattice_smith = lattice->add_subcommand("smith", "Smith normal form of an integer matrix");
  add_in(lattice_smith);
  add_out(lattice_smith);
  auto* lattice_summary = lattice->add_subcommand("summary", "Embedding and discriminant comparison");
  add_out(lattice_summary);

  auto* coble = app.add_subcommand("coble", "Coble septic and decimic tens from the Winger sextic");
  auto* coble_build = coble->add_subcommand("build", "Emit the ten as TenConfig JSON");
  coble->require_subcommand(1);
  std::string kind = "septic";
  std::uint32_t coble_prime = 0;
  coble_build->add_option("--kind", kind, "septic or decimic")->check(CLI::IsMember({"septic", "decimic"}));
  coble_build->add_option("--prime", coble_prime, "Characteristic (default: first prime with ten split nodes)");
  add_out(coble_build);

  auto* suite = app.add_subcommand("suite", "Run the check suite and emit a report");
  std::string config_path;
  suite->add_option("--config", config_path, "Suite config JSON");
  add_out(suite);

  CLI11_PARSE(app, argc, argv);

  try {
    Json out;
    int code = 0;
    if (*ten_construct) {
      TenConfig cfg = build_recipe(recipe, ten_p, ten_k, g.seed);
      cfg.provenance.seed = g.seed;
      out = to_json(cfg);
    } else if (*ten_verify) {
      const TenConfig cfg = ten_from_json(read_json_file(in_path));
      const IncidenceReport inc = verify(FiniteField(cfg.field), cfg);
      out = incidence_json(inc);
      if (!inc.all_incident) code = 1;
    } else if (*ten_dualize) {
      const TenConfig cfg = ten_from_json(read_json_file(in_path));
      out = to_json(dualize(FiniteField(cfg.field), cfg));
    } else if (*ten_tangent) {
      const TenConfig cfg = ten_from_json(read_json_file(in_path));
      const FiniteField f(cfg.field);
      const auto charts = admissible_charts(f, cfg);
      if (charts.empty()) throw NotTransverse("ten tangent-rank: no chart is transverse to every plane");
      const auto tr = tangent_rank(f, cfg, charts.front());
      out = {{"rank", tr.rank}, {"equations", tr.equations}, {"unknowns", tr.unknowns},
             {"tangent_dim", tr.tangent_dim}};
    } else if (*cubic_planes) {
      const TenConfig cfg = ten_from_json(read_json_file(in_path));
      const FiniteField f(cfg.field);
      const FormSystem sys = through_planes(f, cfg.planes, degree);
      Json basis = Json::array();
      for (const auto& b : sys.basis) basis.push_back(to_json(f, b));
      out = {{"degree", degree}, {"dimension", sys.dimension()}, {"basis", basis}};
    } else if (*cubic_scan) {
      const Json j = read_json_file(form_path);
      const FiniteField f = form_field(j, scan_p);
      const SingularScan scan = singular_scan(f, form_from_json(f, j), max_level, g.budget, g.seed);
      Json levels = Json::array();
      for (const auto& lv : scan.levels) {
        Json pts = Json::array();
        for (const auto& x : lv.points) pts.push_back(to_json(lv.field, x));
        levels.push_back({{"level", lv.level}, {"field", to_json(lv.field.spec())}, {"points", pts}});
      }
      out = {{"found", scan.found()}, {"points_scanned", scan.points_scanned},
             {"certificate", scan.certificate()}, {"levels", levels}};
    } else if (*epw_form_cmd) {
      const TenConfig cfg = ten_from_json(read_json_file(in_path));
      const FiniteField f(cfg.field);
      const auto a = LagrangianSubspace::from_config(f, cfg);
      const EpwForm e = epw_form(f, a, {g.seed});
      // The form sits at top level so the file feeds check-power and scan directly.
      if (e.base_sextic)
        out = form_file(f, *e.base_sextic);
      else if (e.sextic)
        out = form_file(e.field, *e.sextic);
      out["degenerate"] = e.degenerate;
      out["path"] = e.path;
      out["chart"] = e.chart;
      out["verified_points"] = e.verified_points;
      out["cross_chart"] = e.cross_chart;
      out["cross_chart_ok"] = e.cross_chart_ok;
      out["interpolation_field"] = to_json(e.field.spec());
      if (certify && e.chart >= 0) {
        const auto cert = certify_chart_factor(e.field, e.embedding ? map_subspace(*e.embedding, a) : a, e.chart);
        out["certificate"] = {{"grid_points", cert.grid_points}, {"degree_at_most_10", cert.degree_at_most_10},
                              {"divides", cert.divides}, {"residual", cert.residual}};
      }
      if (e.degenerate) code = 1;
    } else if (*epw_corank) {
      const TenConfig cfg = ten_from_json(read_json_file(in_path));
      const FiniteField f(cfg.field);
      const auto a = LagrangianSubspace::from_config(f, cfg);
      const std::string text = point_text.starts_with('[') ? point_text : "[" + point_text + "]";
      const Point x = point_from_json(f, Json::parse(text));
      if (x.size() != 6) throw Error("epw corank: a point needs 6 coordinates");
      out = {{"point", to_json(f, x)}, {"corank", corank(f, a, x)}};
    } else if (*epw_theta) {
      const FiniteField f(theta_in.empty() ? FieldSpec{theta_p, 1, {}} : ten_from_json(read_json_file(theta_in)).field);
      const TenConfig cfg = theta_in.empty() ? independent_planes(f, construct_morin13(f, g.seed).config)
                                             : ten_from_json(read_json_file(theta_in));
      const auto a = LagrangianSubspace::from_config(f, cfg);
      Json planes = Json::array();
      for (const auto& p : theta_enumerate(f, a, g.budget)) planes.push_back(to_json(f, p));
      out = {{"field", to_json(f.spec())}, {"recipe", cfg.provenance.recipe}, {"count", planes.size()},
             {"planes", planes}};
    } else if (*epw_power) {
      const Json fj = read_json_file(form_path), bj = read_json_file(base_path);
      const FiniteField f = form_field(fj, power_p);
      const FiniteField fb = form_field(bj, power_p);
      if (!(f.spec() == fb.spec())) throw Error("epw check-power: form and base are over different fields");
      const bool ok = is_scalar_power(f, form_from_json(f, fj), form_from_json(f, bj), exponent);
      out = {{"exp", exponent}, {"scalar_power", ok}};
      if (!ok) code = 1;
    } else if (*lattice_gram) {
      if (preset == "M10") out = gram_json(plane_class_gram(10));
      if (preset == "M11") out = gram_json(plane_class_gram(11));
      if (preset == "BB") out = gram_json(bb_matrix());
      if (preset == "EPW") out = gram_json(epw_bb_lattice());
    } else if (*lattice_smith) {
      const IntMatrix m = int_matrix_from_json(read_json_file(in_path));
      const SmithForm s = smith_normal_form(m);
      Json factors = Json::array();
      for (const auto& d : s.factors) factors.push_back(to_json(d));
      Json orders = Json::array();
      for (const auto& d : cokernel_orders(m)) orders.push_back(to_json(d));
      out = {{"factors", factors}, {"cokernel", orders}};
      if (m.rows() == m.cols()) out["det"] = to_json(int_det(m));
    } else if (*lattice_summary) {
      const auto ec = embed_and_complement();
      const auto bb = bb_discriminant_compare();
      out = {{"plane_classes_det", to_json(plane_class_gram(10).det())},
             {"embedding",
              {{"product_mismatches", ec.product_mismatches},
               {"complement_det", to_json(ec.complement_det)},
               {"special_block", to_json(ec.special_block)}}},
             {"bb",
              {{"det_bb", to_json(bb.det_bb)},
               {"det_epw", to_json(bb.det_epw)},
               {"non_isometric", bb.non_isometric},
               {"sigma_fourth", to_json(bb.sigma_fourth)},
               {"h_epw_fourth", to_json(bb.h_epw_fourth)}}}};
    } else if (*coble) {
      const MultPointSet nodes = nodes_for(coble_prime, g);
      const FiniteField f(nodes.field);
      const CobleTen t = coble_ten(f, nodes, kind == "septic" ? CobleKind::Septic : CobleKind::Decimic);
      TenConfig cfg = t.config;
      cfg.provenance.seed = g.seed;
      out = to_json(cfg);
    } else if (*suite) {
      SuiteConfig cfg = config_path.empty() ? SuiteConfig{} : load_suite_config(config_path);
      if (config_path.empty()) {
        cfg.seed = g.seed;
        cfg.budget = g.budget;
      }
      const RunReport rep = run_suite(cfg);
      out = rep.to_json();
      if (rep.hard_failure()) code = 1;
    }
    write_json(out, out_path.empty() ? g.json : out_path);
    return code;
  } catch (const std::exception& e) {
    std::cerr << "lagten: " << e.what() << "\n";
    return 2;
  }
}
