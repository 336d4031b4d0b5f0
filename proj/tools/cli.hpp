#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "ecalc/ecalc.hpp"

namespace ecalc::cli {

enum ExitCode { kOk = 0, kConfigError = 1, kIndeterminate = 2, kCheckFailure = 3 };

enum class Format { Markdown, Json };

struct RunConfig {
  std::string group = "2D4";
  std::string system_file;  // custom root system JSON, overrides group
  std::string parabolic = "Q";
  std::string line;         // named line; empty = the parabolic's own chi line
  std::string character;    // custom comma-separated affine coordinates, overrides line
  std::string point;        // "p/q"; empty = 1/6 for Q, 3/10 for P, 1/2 for borel
  Format format = Format::Markdown;
  bool assume_no_real_zeros = false;
  bool parallel = false;
};

RootSystem load_system(const RunConfig& cfg);
std::set<int> parabolic_levi(const RootSystem& system, const std::string& parabolic);
TorusCharacter resolve_line(const RootSystem& system, const RunConfig& cfg);
Rational resolve_point(const RunConfig& cfg);

int cmd_table(const RunConfig& cfg, std::ostream& out);
int cmd_poles(const RunConfig& cfg, std::ostream& out);
int cmd_sw(const RunConfig& cfg, std::ostream& out);
int cmd_sharp_check(const RunConfig& cfg, std::ostream& out);
int cmd_lfactor(const std::string& source, const std::string& chi, std::optional<int> order_at, Format format,
                std::ostream& out);
int cmd_tate(const std::string& function, int k, const std::string& z, Format format, std::ostream& out);

// Full command line entry point; maps errors to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int exit_code_for(ErrorCode code);

}  // namespace ecalc::cli
