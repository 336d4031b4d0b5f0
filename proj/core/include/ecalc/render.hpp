#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "ecalc/sharp.hpp"
#include "ecalc/eisenstein.hpp"

namespace ecalc {

inline constexpr const char* kJsonSchema = "eisencalc/1";

std::string table_markdown(const ConstantTerm& ct, const Rational& point, const EvalOptions& opts = {});
nlohmann::json table_json(const ConstantTerm& ct, const Rational& point, const EvalOptions& opts = {});

std::string pole_report_markdown(const ConstantTerm& ct, const PoleReport& rep);
nlohmann::json pole_report_json(const ConstantTerm& ct, const PoleReport& rep);

std::string siegel_weil_markdown(const RootSystem& system, const SiegelWeilReport& rep);
nlohmann::json siegel_weil_json(const RootSystem& system, const SiegelWeilReport& rep);

std::string levi_text(const std::set<int>& levi);  // "{2,3}"

}  // namespace ecalc
