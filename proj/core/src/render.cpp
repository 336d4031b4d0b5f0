#include "ecalc/render.hpp"

namespace ecalc {

namespace {

std::string cell(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

nlohmann::json laurent_json(const LaurentData& l) { return {{"order", l.order}, {"leading", l.leading.to_json()}}; }

nlohmann::json vector_json(const std::vector<Rational>& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

std::string header(const ConstantTerm& ct) {
  return ct.group.name() + ", Levi " + levi_text(ct.levi) + ", line " + render_character(ct.group, ct.line);
}

}  // namespace

std::string levi_text(const std::set<int>& levi) {
  std::string out = "{";
  for (int i : levi) out += (out.size() > 1 ? "," : "") + std::to_string(i);
  return out + "}";
}

std::string table_markdown(const ConstantTerm& ct, const Rational& point, const EvalOptions& opts) {
  const std::string at = ct.variable + "=" + point.get_str();
  std::string out = "# Constant term: " + cell(header(ct)) + "\n\n";
  out += "| w | J(w," + ct.variable + ") | order of pole at " + at + " | exponent | exponent at " + at + " |\n";
  out += "|---|---|---|---|---|\n";
  for (const GKTerm& t : ct.terms) {
    const LaurentData l = leading_coeff_at(t.j_factor, {ct.variable, point, {}}, opts);
    const TorusCharacter ev = t.exponent.evaluate({{ct.variable, point}});
    out += "| " + t.word.to_string() + " | " + cell(t.j_factor.to_string()) + " | " + std::to_string(-l.order) +
           " | " + cell(render_character(ct.group, t.exponent)) + " | " + cell(render_character(ct.group, ev)) +
           " |\n";
  }
  return out;
}

nlohmann::json table_json(const ConstantTerm& ct, const Rational& point, const EvalOptions& opts) {
  nlohmann::json rows = nlohmann::json::array();
  for (const GKTerm& t : ct.terms) {
    const LaurentData l = leading_coeff_at(t.j_factor, {ct.variable, point, {}}, opts);
    rows.push_back({{"w", t.word.to_string()},
                    {"letters", t.word.letters},
                    {"j_factor", t.j_factor.to_json()},
                    {"pole_order", -l.order},
                    {"laurent", laurent_json(l)},
                    {"exponent", character_json(t.exponent)},
                    {"exponent_at_point", vector_json(t.exponent.values({{ct.variable, point}}))}});
  }
  return {{"schema", kJsonSchema},
          {"kind", "table"},
          {"group", ct.group.name()},
          {"levi", ct.levi},
          {"line", character_json(ct.line)},
          {"variable", ct.variable},
          {"point", point.get_str()},
          {"rows", rows}};
}

std::string pole_report_markdown(const ConstantTerm& ct, const PoleReport& rep) {
  std::string out = "# Pole report: " + cell(header(ct)) + " at " + rep.variable + "=" + rep.point.get_str() + "\n\n";
  out += "order of pole: " + std::to_string(rep.order) + "\n\n";
  out += "square integrable: " + std::string(rep.square_integrable ? "yes" : "no") + "\n\n";
  out += "| limit exponent | members | pole order | leading coefficient | log t term |\n";
  out += "|---|---|---|---|---|\n";
  for (const ExponentGroup& g : rep.groups) {
    std::string members;
    for (const auto& m : g.members)
      members += (members.empty() ? "" : ", ") + m.word.to_string() + " (" + std::to_string(-m.laurent.order) + ")";
    out += "| " + render_vector(g.limit_exponent) + " | " + members + " | " +
           (g.exact ? "" : "<= ") + std::to_string(g.pole_order) + " | " + cell(g.leading.to_string()) + " | " +
           (g.log_term ? "yes" : "no") + " |\n";
  }
  out += "\nsurviving exponents:";
  for (const auto& e : rep.surviving_exponents) out += " " + render_vector(e);
  return out + "\n";
}

nlohmann::json pole_report_json(const ConstantTerm& ct, const PoleReport& rep) {
  nlohmann::json groups = nlohmann::json::array();
  for (const ExponentGroup& g : rep.groups) {
    nlohmann::json members = nlohmann::json::array();
    for (const auto& m : g.members)
      members.push_back({{"w", m.word.to_string()},
                         {"laurent", laurent_json(m.laurent)},
                         {"exponent_slope", vector_json(m.exponent_slope)}});
    nlohmann::json leading = nlohmann::json::array();
    for (const auto& t : g.leading.terms()) leading.push_back(t.to_json());
    groups.push_back({{"limit_exponent", vector_json(g.limit_exponent)},
                      {"members", members},
                      {"pole_order", g.pole_order},
                      {"exact", g.exact},
                      {"leading", leading},
                      {"log_term", g.log_term}});
  }
  nlohmann::json surviving = nlohmann::json::array();
  for (const auto& e : rep.surviving_exponents) surviving.push_back(vector_json(e));
  return {{"schema", kJsonSchema},
          {"kind", "poles"},
          {"group", ct.group.name()},
          {"levi", ct.levi},
          {"line", character_json(ct.line)},
          {"variable", rep.variable},
          {"point", rep.point.get_str()},
          {"order", rep.order},
          {"groups", groups},
          {"surviving_exponents", surviving},
          {"square_integrable", rep.square_integrable}};
}

std::string siegel_weil_markdown(const RootSystem& system, const SiegelWeilReport& rep) {
  std::string labels;
  for (const auto& l : rep.residue_labels) labels += (labels.empty() ? "R_" : ", R_") + l.symbol;
  std::string out = "# Siegel-Weil constants: " + system.name() + "\n\n";
  out += "| quantity | order | leading |\n|---|---|---|\n";
  auto row = [&](const std::string& what, const LaurentData& l) {
    out += "| " + what + " | " + std::to_string(l.order) + " | " + l.leading.to_string() + " |\n";
  };
  row("normalized limit along mu^P at 3/10 (in coordinate " + std::to_string(rep.p_side.free_index) + ")",
      rep.p_side.in_free);
  row("normalized limit along mu^Q at 1/6 (in coordinate " + std::to_string(rep.q_side.free_index) + ")",
      rep.q_side.in_free);
  row("J(" + rep.intertwiner_word.to_string() + ") along chi^P at 3/10", rep.intertwiner);
  out += "\nconstant: " + rep.constant.to_string() + "\n";
  out += "section-level constant: " + rep.section_constant.to_string() + "\n";
  out += "pole orders E_P(3/10) / E_Q(1/6): " + std::to_string(rep.e_p_order) + " / " +
         std::to_string(rep.e_q_order) + (rep.orders_match ? " (match the normalizer)" : " (MISMATCH)") + "\n";
  out += "mu^P_{3/10} = w1 . mu^Q_{1/6}: " + std::string(rep.points_related ? "yes" : "no") + "\n";
  out += "residue symbols: " + labels + (rep.residue_labels.size() == 1 ? " (printed as R)" : "") + "\n";
  return out;
}

nlohmann::json siegel_weil_json(const RootSystem& system, const SiegelWeilReport& rep) {
  nlohmann::json labels = nlohmann::json::array();
  for (const auto& l : rep.residue_labels) labels.push_back("R_" + l.symbol);
  return {{"schema", kJsonSchema},
          {"kind", "siegel_weil"},
          {"group", system.name()},
          {"constant", rep.constant.to_json()},
          {"constant_text", rep.constant.to_string()},
          {"section_constant", rep.section_constant.to_json()},
          {"p_side", {{"in_s", laurent_json(rep.p_side.in_s)}, {"in_free", laurent_json(rep.p_side.in_free)},
                      {"free_index", rep.p_side.free_index}}},
          {"q_side", {{"in_s", laurent_json(rep.q_side.in_s)}, {"in_free", laurent_json(rep.q_side.in_free)},
                      {"free_index", rep.q_side.free_index}}},
          {"intertwiner", {{"w", rep.intertwiner_word.to_string()}, {"laurent", laurent_json(rep.intertwiner)}}},
          {"e_p_order", rep.e_p_order},
          {"e_q_order", rep.e_q_order},
          {"orders_match", rep.orders_match},
          {"points_related", rep.points_related},
          {"residue_labels", labels}};
}

}  // namespace ecalc
