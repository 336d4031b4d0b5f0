#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

namespace ecalc::cli {

namespace {

Preset preset_for(const std::string& group) {
  if (group == "D4") return Preset::SplitD4;
  if (group == "2D4") return Preset::QuasiD4;
  if (group == "3D4") return Preset::TriD4;
  if (auto p = preset_from_name(group)) return *p;
  throw CalcError(ErrorCode::InvalidInput, "unknown group '" + group + "'");
}

void emit(std::ostream& out, Format format, const std::string& md, const nlohmann::json& js) {
  if (format == Format::Json)
    out << js.dump(2) << "\n";
  else
    out << md;
}

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndeterminateZeroRegion: return kIndeterminate;
    case ErrorCode::InvalidInput:
    case ErrorCode::NotFiniteType:
    case ErrorCode::LabelInconsistency:
    case ErrorCode::UnknownRoot:
    case ErrorCode::UnsupportedGroup: return kConfigError;
    default: return kCheckFailure;
  }
}

RootSystem load_system(const RunConfig& cfg) {
  if (!cfg.system_file.empty()) {
    std::ifstream in(cfg.system_file);
    if (!in) throw CalcError(ErrorCode::InvalidInput, "cannot open " + cfg.system_file);
    nlohmann::json doc;
    try {
      in >> doc;
    } catch (const nlohmann::json::exception& e) {
      throw CalcError(ErrorCode::InvalidInput, std::string("bad JSON: ") + e.what());
    }
    return RootSystem::from_json(doc);
  }
  return RootSystem::build(preset_for(cfg.group));
}

std::set<int> parabolic_levi(const RootSystem& system, const std::string& parabolic) {
  if (parabolic == "borel") return {};
  if (system.rank() < 2) throw CalcError(ErrorCode::UnsupportedGroup, "only the Borel is proper in rank one");
  if (parabolic == "P") return levi_P(system);
  if (parabolic == "Q") return levi_Q(system);
  throw CalcError(ErrorCode::InvalidInput, "unknown parabolic '" + parabolic + "'");
}

TorusCharacter resolve_line(const RootSystem& system, const RunConfig& cfg) {
  if (!cfg.character.empty()) {
    TorusCharacter lambda;
    std::stringstream ss(cfg.character);
    for (std::string part; std::getline(ss, part, ',');) lambda.coords.push_back(AffineForm::parse(part));
    if (lambda.rank() != system.rank())
      throw CalcError(ErrorCode::InvalidInput, "character needs " + std::to_string(system.rank()) + " coordinates");
    return lambda;
  }
  if (cfg.line.empty()) return parabolic_line(system, parabolic_levi(system, cfg.parabolic));
  if (cfg.line == "chiQ") return line_chi_Q(system);
  if (cfg.line == "chiP") return line_chi_P(system);
  if (cfg.line == "muP") return line_mu_P(system);
  if (cfg.line == "muQ") return line_mu_Q(system);
  if (cfg.line == "kappa") return line_kappa(system);
  throw CalcError(ErrorCode::InvalidInput, "unknown line '" + cfg.line + "'");
}

Rational resolve_point(const RunConfig& cfg) {
  if (!cfg.point.empty()) return parse_rational(cfg.point);
  if (cfg.parabolic == "P") return Rational(3, 10);
  if (cfg.parabolic == "Q") return Rational(1, 6);
  return Rational(1, 2);
}

namespace {

ConstantTerm build_constant_term(const RunConfig& cfg, const RootSystem& system) {
  ConstantTermOptions opts;
  opts.parallel = cfg.parallel;
  return constant_term(system, parabolic_levi(system, cfg.parabolic), resolve_line(system, cfg), opts);
}

}  // namespace

int cmd_table(const RunConfig& cfg, std::ostream& out) {
  const RootSystem system = load_system(cfg);
  const ConstantTerm ct = build_constant_term(cfg, system);
  const Rational point = resolve_point(cfg);
  const EvalOptions opts{cfg.assume_no_real_zeros};
  if (cfg.format == Format::Json)
    out << table_json(ct, point, opts).dump(2) << "\n";
  else
    out << table_markdown(ct, point, opts);
  return kOk;
}

int cmd_poles(const RunConfig& cfg, std::ostream& out) {
  const RootSystem system = load_system(cfg);
  const ConstantTerm ct = build_constant_term(cfg, system);
  const PoleReport rep = pole_report(ct, resolve_point(cfg), EvalOptions{cfg.assume_no_real_zeros});
  if (cfg.format == Format::Json)
    out << pole_report_json(ct, rep).dump(2) << "\n";
  else
    out << pole_report_markdown(ct, rep);
  return kOk;
}

int cmd_sw(const RunConfig& cfg, std::ostream& out) {
  const RootSystem system = load_system(cfg);
  const SiegelWeilReport rep = siegel_weil_constant(system, EvalOptions{cfg.assume_no_real_zeros});
  if (cfg.format == Format::Json)
    out << siegel_weil_json(system, rep).dump(2) << "\n";
  else
    out << rep.constant.to_string() << "\n\n" << siegel_weil_markdown(system, rep);
  return rep.orders_match && rep.points_related ? kOk : kCheckFailure;
}

int cmd_sharp_check(const RunConfig& cfg, std::ostream& out) {
  const RootSystem system = load_system(cfg);
  const WeylGroup group(system);
  bool ok = true;
  nlohmann::json js = {{"schema", kJsonSchema}, {"kind", "sharp_check"}, {"group", system.name()}};
  std::string md = "# Normalized series checks: " + system.name() + "\n\n";

  nlohmann::json inv = nlohmann::json::array();
  for (int i = 1; i <= system.rank(); ++i) {
    const InvarianceResult r = sharp_invariance_check(system, i);
    ok = ok && r.ok;
    md += "W-invariance under w" + std::to_string(i) + ": " + (r.ok ? "pass" : "FAIL " + r.detail) + "\n";
    inv.push_back({{"simple_index", i}, {"ok", r.ok}, {"detail", r.detail}});
  }
  js["invariance"] = inv;

  std::size_t checked = 0, failed = 0;
  for (int i = 1; i <= system.rank(); ++i)
    for (const WeylWord& w : group.elements()) {
      ++checked;
      if (!h0_cancellation_check(group, system.simple_root(i), w)) ++failed;
    }
  ok = ok && failed == 0;
  md += "H^0 cancellation (simple roots x W): " + std::to_string(checked - failed) + "/" + std::to_string(checked) +
        " pass\n";
  js["h0"] = {{"checked", checked}, {"failed", failed}};

  const EntirenessReport ent = entireness_report(system);
  ok = ok && ent.entire;
  nlohmann::json hyper = nlohmann::json::array();
  for (const auto& h : ent.hyperplanes)
    hyper.push_back({{"root", h.alpha.coords}, {"eps", h.eps}, {"pole_survives", h.pole_survives},
                     {"terms_checked", h.terms_checked}});
  md += "entire (no surviving pole along any H_alpha^eps, eps in {-1,0,1}): " +
        std::string(ent.entire ? "yes" : "NO") + " (" + std::to_string(ent.hyperplanes.size()) + " hyperplanes)\n";
  js["entireness"] = {{"entire", ent.entire}, {"hyperplanes", hyper}};
  js["ok"] = ok;
  emit(out, cfg.format, md, js);
  return ok ? kOk : kCheckFailure;
}

int cmd_lfactor(const std::string& source, const std::string& chi, std::optional<int> order_at, Format format,
                std::ostream& out) {
  Source src;
  if (source == "Vtau")
    src = Source::VTau;
  else if (source == "Vchi")
    src = Source::VChi;
  else
    throw CalcError(ErrorCode::InvalidInput, "unknown source '" + source + "'");
  if (chi != "trivial" && chi != "nontrivial") throw CalcError(ErrorCode::InvalidInput, "--chi trivial|nontrivial");
  const LFactorization f = lfactor_standard(src);
  nlohmann::json js = {{"schema", kJsonSchema}, {"kind", "lfactor"}, {"source", source},
                       {"factorization", f.to_json()}};
  std::string md;
  if (order_at) {
    if (*order_at != 2) throw CalcError(ErrorCode::UnmodeledPoint, "only s=2 is modeled");
    const PoleOrderResult r = order_at_2_detailed(f, chi == "trivial");
    js["order_at_2"] = r.order;
    js["axioms"] = r.axioms;
    md = std::to_string(r.order) + "\n";
  } else {
    md = "L^S(s,pi,st) = " + f.to_string() + "\n";
  }
  emit(out, format, md, js);
  return kOk;
}

int cmd_tate(const std::string& function, int k, const std::string& z, Format format, std::ostream& out) {
  ShellFunction f;
  if (function == "lattice")
    f = ShellFunction::lattice(k);
  else if (function == "shell")
    f = ShellFunction::shell(k);
  else
    throw CalcError(ErrorCode::InvalidInput, "unknown function '" + function + "'");
  const TateResult r = tate_integral(f, AffineForm::parse(z));
  nlohmann::json js = r.to_json();
  js["schema"] = kJsonSchema;
  js["kind"] = "tate";
  emit(out, format, r.to_string() + "\n", js);
  return kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact constant terms, pole orders and residue constants of degenerate Eisenstein series"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "md";

  auto add_common = [&](CLI::App* sub, bool with_line) {
    sub->add_option("--group", cfg.group, "D4, 2D4, 3D4, G2 or A1")
        ->check(CLI::IsMember({"D4", "2D4", "3D4", "G2", "A1", "split_D4", "quasi_D4", "tri_D4"}));
    sub->add_option("--system", cfg.system_file, "custom root system JSON {cartan, labels}");
    sub->add_option("--format", format, "md or json")->check(CLI::IsMember({"md", "json"}));
    sub->add_flag("--assume-no-real-zeros", cfg.assume_no_real_zeros,
                  "treat xi values at arguments in (0,1) as nonzero");
    if (!with_line) return;
    sub->add_option("--parabolic", cfg.parabolic, "borel, P or Q")->check(CLI::IsMember({"borel", "P", "Q"}));
    sub->add_option("--line", cfg.line, "chiQ, chiP, muP, muQ or kappa")
        ->check(CLI::IsMember({"chiQ", "chiP", "muP", "muQ", "kappa"}));
    sub->add_option("--character", cfg.character, "custom line, e.g. \"6s+2,-1,-1\"");
    sub->add_option("--point", cfg.point, "evaluation point p/q");
    sub->add_flag("--parallel", cfg.parallel, "evaluate terms concurrently");
  };

  auto* table = app.add_subcommand("table", "Gindikin-Karpelevich table of a constant term");
  add_common(table, true);
  auto* poles = app.add_subcommand("poles", "pole order report with exponent grouping");
  add_common(poles, true);
  auto* sw = app.add_subcommand("sw", "Siegel-Weil constants");
  add_common(sw, false);
  auto* sharp = app.add_subcommand("sharp-check", "W-invariance, H^0 cancellation and entireness checks");
  add_common(sharp, false);

  std::string source = "Vtau", chi = "nontrivial";
  std::optional<int> order_at;
  auto* lf = app.add_subcommand("lfactor", "factorization of the standard L-function of G2");
  lf->add_option("--source", source, "Vtau or Vchi")->check(CLI::IsMember({"Vtau", "Vchi"}));
  lf->add_option("--chi", chi, "trivial or nontrivial")->check(CLI::IsMember({"trivial", "nontrivial"}));
  lf->add_option("--order-at", order_at, "report the pole order at this point (2)");
  lf->add_option("--format", format, "md or json")->check(CLI::IsMember({"md", "json"}));

  std::string function = "lattice", z = "2s+3";
  int k = 0;
  auto* tate = app.add_subcommand("tate", "spherical Tate integral as a formal identity");
  tate->add_option("--function", function, "lattice or shell")->check(CLI::IsMember({"lattice", "shell"}));
  tate->add_option("--k", k, "valuation index");
  tate->add_option("--z", z, "exponent z as an affine form, e.g. 2s+3");
  tate->add_option("--format", format, "md or json")->check(CLI::IsMember({"md", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }
  cfg.format = format == "json" ? Format::Json : Format::Markdown;

  try {
    if (table->parsed()) return cmd_table(cfg, out);
    if (poles->parsed()) return cmd_poles(cfg, out);
    if (sw->parsed()) return cmd_sw(cfg, out);
    if (sharp->parsed()) return cmd_sharp_check(cfg, out);
    if (lf->parsed()) return cmd_lfactor(source, chi, order_at, cfg.format, out);
    if (tate->parsed()) return cmd_tate(function, k, z, cfg.format, out);
  } catch (const CalcError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kConfigError;
}

}  // namespace ecalc::cli
