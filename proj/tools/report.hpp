#pragma once

#include "coalg/check_report.hpp"
#include "coalg/closure.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cli {

inline constexpr const char* engine_version = "1.0.0";

enum ExitCode { Pass = 0, Fail = 1, Usage = 2, Budget = 3 };

struct SpecInfo {
    std::string name;
    std::string source; // "builtin", "file", "construction"
    std::string digest; // FNV-1a 64 of the file bytes, or of the exported spec
};

struct TraceEntry {
    std::string generators;
    coalg::ClosureTrace trace;
    std::vector<std::string> added_labels; // formatted, per step, space separated
};

struct Output {
    std::string query;
    std::string value;
};

struct CatalogItem {
    std::string kind; // "example" or "algebra"
    std::string name;
    std::string description;
    std::string lineage;
};

struct Report {
    std::string command;
    std::vector<std::string> argv;
    bool has_spec = false;
    SpecInfo spec;
    std::vector<coalg::CheckReport> checks;
    std::vector<TraceEntry> traces;
    std::vector<Output> outputs;
    std::vector<CatalogItem> catalog;
    std::vector<std::uint64_t> seeds;
    std::vector<std::string> errors;
    double seconds = 0;
    int exit_code = Pass;

    /// Pass unless a check failed; Budget when a closure ran out of budget.
    int verdict_code() const;
};

std::string render_json(const Report& r);
std::string render_text(const Report& r);

} // namespace cli
