#pragma once

#include "coalg/coalgebra.hpp"

#include <string>
#include <string_view>

namespace coalg {

/// Reads a spec file (JSON). Errors are ParseError whose where() reads
/// "line L, column C (/json/pointer)".
CoalgebraSpec parse_spec_json(std::string_view text, const std::string& default_name = "spec");
CoalgebraSpec load_spec_file(const std::string& path);

/// Pretty-printed spec file; parse_spec_json(spec_to_json(s)) rebuilds s.
std::string spec_to_json(const CoalgebraSpec& spec);

/// FNV-1a 64-bit digest as 16 hex digits.
std::string fnv1a64_hex(std::string_view bytes);

/// Command-line label syntax "family:index", "~family:index" for barred copies.
Label parse_label(const CoalgebraSpec& spec, std::string_view text);
/// Linear combination of labels: "f:1", "2*f:1 - 1/2*e:0", "f:1 + ~f:2".
FormalVector parse_vector(const CoalgebraSpec& spec, std::string_view text);

} // namespace coalg
