#include "report.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>

namespace cli {

using nlohmann::ordered_json;

int Report::verdict_code() const
{
    for (const auto& c : checks)
        if (!c.passed)
            return Fail;
    for (const auto& t : traces)
        if (!t.trace.closed())
            return Budget;
    return Pass;
}

std::string render_json(const Report& r)
{
    ordered_json j;
    j["engine"] = {{"name", "coalg"}, {"version", engine_version}};
    j["command"] = r.command;
    j["argv"] = r.argv;
    if (r.has_spec) {
        j["spec"] = {{"name", r.spec.name}, {"source", r.spec.source}};
        if (!r.spec.digest.empty())
            j["spec"]["digest"] = "fnv1a64:" + r.spec.digest;
    }
    j["checks"] = ordered_json::array();
    for (const auto& c : r.checks) {
        ordered_json jc;
        jc["check"] = c.check;
        jc["verdict"] = c.passed ? "pass" : "fail";
        jc["max_index"] = c.max_index;
        jc["intervals"] = ordered_json::array();
        for (const auto& iv : c.intervals)
            jc["intervals"].push_back({{"family", iv.family}, {"lo", iv.lo}, {"hi", iv.hi}});
        jc["labels_checked"] = c.labels_checked;
        jc["failures"] = c.failures;
        jc["witnesses"] = ordered_json::array();
        for (const auto& w : c.witnesses)
            jc["witnesses"].push_back({{"label", w.label}, {"residual", w.residual}, {"note", w.note}});
        jc["note"] = c.note;
        j["checks"].push_back(std::move(jc));
    }
    j["traces"] = ordered_json::array();
    for (const auto& t : r.traces) {
        ordered_json jt;
        jt["generators"] = t.generators;
        jt["verdict"] = t.trace.closed() ? "closed" : "budget-exceeded";
        jt["interpretation"] = t.trace.closed() ? "finite-dimensional" : "divergence-evidence";
        jt["dimension"] = t.trace.dimension();
        jt["dimensions"] = t.trace.dimensions;
        jt["added"] = t.added_labels;
        j["traces"].push_back(std::move(jt));
    }
    j["outputs"] = ordered_json::array();
    for (const auto& o : r.outputs)
        j["outputs"].push_back({{"query", o.query}, {"value", o.value}});
    if (!r.catalog.empty()) {
        j["catalog"] = ordered_json::array();
        for (const auto& c : r.catalog)
            j["catalog"].push_back(
                {{"kind", c.kind}, {"name", c.name}, {"description", c.description}, {"lineage", c.lineage}});
    }
    j["seeds"] = r.seeds;
    j["errors"] = r.errors;
    j["seconds"] = r.seconds;
    j["exit_code"] = r.exit_code;
    return j.dump(2) + "\n";
}

std::string render_text(const Report& r)
{
    std::ostringstream out;
    if (r.has_spec) {
        out << "spec " << r.spec.name << " (" << r.spec.source;
        if (!r.spec.digest.empty())
            out << ", fnv1a64 " << r.spec.digest;
        out << ")\n";
    }
    for (const auto& c : r.checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.check << ": ";
        if (c.passed)
            out << "verified up to index " << c.max_index;
        else
            out << c.failures << " failing of " << c.labels_checked;
        out << " (" << c.labels_checked << " checked";
        for (const auto& iv : c.intervals)
            out << "; " << iv.family << " " << iv.lo << ".." << iv.hi;
        out << ")\n";
        if (!c.note.empty())
            out << "  note: " << c.note << "\n";
        for (const auto& w : c.witnesses) {
            out << "  witness " << w.label << ": " << w.residual;
            if (!w.note.empty())
                out << "  [" << w.note << "]";
            out << "\n";
        }
    }
    for (const auto& t : r.traces) {
        out << "closure of {" << t.generators << "}: ";
        if (t.trace.closed())
            out << "FiniteDimensional(" << t.trace.dimension() << ")\n";
        else
            out << "DivergenceEvidence after " << t.trace.steps() << " steps (evidence, not proof)\n";
        out << "  dimensions";
        for (std::size_t i = 0; i < t.trace.dimensions.size(); ++i)
            out << (i ? "," : " ") << t.trace.dimensions[i];
        out << "\n";
        for (std::size_t k = 0; k < t.added_labels.size() && k < 6; ++k)
            out << "  step " << k + 1 << " adds " << (t.added_labels[k].empty() ? "nothing" : t.added_labels[k])
                << "\n";
    }
    for (const auto& o : r.outputs)
        out << o.query << " = " << o.value << "\n";
    for (const auto& c : r.catalog) {
        out << c.name << "  " << c.description;
        if (!c.lineage.empty())
            out << "  [" << c.lineage << "]";
        out << "\n";
    }
    if (!r.seeds.empty()) {
        out << "seeds";
        for (auto s : r.seeds)
            out << " " << s;
        out << "\n";
    }
    for (const auto& e : r.errors)
        out << "error: " << e << "\n";
    return out.str();
}

} // namespace cli
