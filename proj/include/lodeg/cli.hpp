#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lodeg/invariants.hpp"

namespace lodeg::cli {

/// A parsed variety file: {"variables": [...], "polynomials": [...],
/// "assumed_irreducible": bool, "homogeneous": bool}.
struct VarietyFile {
  std::string path;
  std::string digest;  // "fnv1a64:" + 16 hex digits of the raw bytes
  VarietySpec spec;
};

/// Throws InputError (with line and column) on malformed documents.
VarietyFile parse_variety_file(const std::string& text, const std::string& path);
VarietyFile load_variety_file(const std::string& path);

std::string fnv1a64_hex(const std::string& bytes);

struct Options {
  std::string command;
  std::string input;
  std::vector<std::uint64_t> primes;
  std::uint64_t seed = 0x5EED;
  std::size_t trials = 2;
  double budget_secs = 120;
  std::string format = "json";
  std::optional<std::string> covector;
  std::vector<std::string> slices;
  std::optional<std::size_t> i;
  bool timings = false;
};

/// Runs one command and returns its report; `exit_code` is 0, or 5 when a
/// verification fails.
nlohmann::json run_command(const Options& opts, int& exit_code);

/// Text rendering of a report.
std::string render_text(const nlohmann::json& report);

/// Full command-line entry point; returns the process exit code.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace lodeg::cli
