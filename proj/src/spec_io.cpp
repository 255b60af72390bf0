#include "coalg/spec_io.hpp"

#include <json.hpp>

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace coalg {

using nlohmann::json;

namespace {

std::string pointer_escape(const std::string& key)
{
    std::string out;
    for (char c : key) {
        if (c == '~')
            out += "~0";
        else if (c == '/')
            out += "~1";
        else
            out += c;
    }
    return out;
}

// Maps JSON pointers to the byte offset of the member key (objects) or the
// element (arrays). Runs only on text nlohmann has already accepted.
class Locator {
public:
    explicit Locator(std::string_view text) : s_(text) { value(""); }

    std::string where(const std::string& pointer) const
    {
        auto it = offsets_.find(pointer);
        std::size_t off = it == offsets_.end() ? 0 : it->second;
        return position(s_, off) + " (" + (pointer.empty() ? "/" : pointer) + ")";
    }

    static std::string position(std::string_view s, std::size_t off)
    {
        long line = 1, col = 1;
        for (std::size_t i = 0; i < off && i < s.size(); ++i) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else if ((static_cast<unsigned char>(s[i]) & 0xC0) != 0x80) {
                ++col;
            }
        }
        return "line " + std::to_string(line) + ", column " + std::to_string(col);
    }

private:
    void ws()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
    }

    std::string string()
    {
        std::string out;
        ++i_; // opening quote
        while (i_ < s_.size() && s_[i_] != '"') {
            if (s_[i_] == '\\') {
                out += s_.substr(i_, 2);
                i_ += 2;
            } else {
                out += s_[i_++];
            }
        }
        ++i_;
        // Keys with escapes are rare in spec files; decode them through nlohmann.
        if (out.find('\\') != std::string::npos)
            out = json::parse("\"" + out + "\"").get<std::string>();
        return out;
    }

    void value(const std::string& path)
    {
        ws();
        if (!offsets_.count(path))
            offsets_[path] = i_;
        if (s_[i_] == '{') {
            ++i_;
            ws();
            while (s_[i_] != '}') {
                std::size_t at = i_;
                std::string key = string();
                std::string child = path + "/" + pointer_escape(key);
                offsets_[child] = at;
                ws();
                ++i_; // ':'
                value(child);
                ws();
                if (s_[i_] == ',') {
                    ++i_;
                    ws();
                }
            }
            ++i_;
        } else if (s_[i_] == '[') {
            ++i_;
            ws();
            for (std::size_t k = 0; s_[i_] != ']'; ++k) {
                value(path + "/" + std::to_string(k));
                ws();
                if (s_[i_] == ',') {
                    ++i_;
                    ws();
                }
            }
            ++i_;
        } else if (s_[i_] == '"') {
            string();
        } else {
            while (i_ < s_.size() && !std::strchr(",]} \t\r\n", s_[i_]))
                ++i_;
        }
    }

    std::string_view s_;
    std::size_t i_ = 0;
    std::map<std::string, std::size_t> offsets_;
};

// Message of a ParseError without its where() prefix.
std::string bare_message(const ParseError& e)
{
    std::string m = e.what();
    if (!e.where().empty() && m.rfind(e.where() + ": ", 0) == 0)
        m = m.substr(e.where().size() + 2);
    return m;
}

class SpecReader {
public:
    SpecReader(std::string_view text, std::string default_name) : loc_(text), name_(std::move(default_name)) {}

    CoalgebraSpec read(const json& root)
    {
        expect_object(root, "", {"name", "field", "graded", "families", "delta", "coderivation", "shift_bound"});
        if (root.contains("name"))
            name_ = str(root["name"], "/name");
        if (!root.contains("field"))
            fail("", "missing key 'field'");
        if (str(root["field"], "/field") != "Q")
            fail("/field", "field must be \"Q\" (exact rationals)");
        bool graded = false;
        if (root.contains("graded")) {
            if (!root["graded"].is_boolean())
                fail("/graded", "'graded' must be true or false");
            graded = root["graded"].get<bool>();
        }
        for (const char* key : {"families", "delta", "shift_bound"})
            if (!root.contains(key))
                fail("", std::string("missing key '") + key + "'");

        const json& fams = root["families"];
        if (!fams.is_array() || fams.empty())
            fail("/families", "'families' must be a nonempty array");
        std::vector<FamilyDecl> decls;
        for (std::size_t k = 0; k < fams.size(); ++k)
            decls.push_back(family(fams[k], "/families/" + std::to_string(k)));
        for (const auto& d : decls)
            if (d.parity && !graded)
                fail("/graded", "odd family '" + to_string(d.key) + "' needs \"graded\": true");

        Rule delta = rule(root["delta"], "/delta", 2);
        std::optional<Rule> d;
        if (root.contains("coderivation") && !root["coderivation"].is_null())
            d = rule(root["coderivation"], "/coderivation", 1);
        const json& s = root["shift_bound"];
        if (!s.is_number_integer() || s.get<long>() < 0)
            fail("/shift_bound", "'shift_bound' must be a non-negative integer");
        try {
            return CoalgebraSpec(name_, std::move(decls), std::move(delta), std::move(d), s.get<long>(), graded);
        } catch (const PreconditionError& e) {
            fail("", e.what());
        }
    }

private:
    [[noreturn]] void fail(const std::string& pointer, const std::string& msg) const
    {
        throw ParseError(msg, loc_.where(pointer));
    }

    void expect_object(const json& j, const std::string& p, std::initializer_list<const char*> allowed) const
    {
        if (!j.is_object())
            fail(p, "expected an object");
        for (const auto& [key, v] : j.items()) {
            bool ok = false;
            for (const char* a : allowed)
                ok = ok || key == a;
            if (!ok) {
                std::string list;
                for (const char* a : allowed)
                    list += (list.empty() ? "" : ", ") + std::string(a);
                fail(p + "/" + pointer_escape(key), "unknown key '" + key + "' (expected one of " + list + ")");
            }
        }
    }

    std::string str(const json& j, const std::string& p) const
    {
        if (!j.is_string())
            fail(p, "expected a string");
        return j.get<std::string>();
    }

    // Integers may be written as JSON numbers or as expression strings.
    std::string expr_text(const json& j, const std::string& p) const
    {
        if (j.is_number_integer())
            return std::to_string(j.get<long>());
        return str(j, p);
    }

    FamilyKey key(const std::string& name, const std::string& p) const
    {
        bool bar = !name.empty() && name[0] == '~';
        std::string base = bar ? name.substr(1) : name;
        if (base.empty())
            fail(p, "empty family name");
        for (char c : base)
            if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
                fail(p, "family name '" + name + "' may only use letters, digits and '_'");
        return FamilyKey{Symbol(base), bar};
    }

    FamilyDecl family(const json& j, const std::string& p)
    {
        expect_object(j, p, {"name", "parity", "range"});
        if (!j.contains("name") || !j.contains("range"))
            fail(p, "a family needs 'name' and 'range'");
        FamilyDecl d;
        d.key = key(str(j["name"], p + "/name"), p + "/name");
        if (j.contains("parity")) {
            if (!j["parity"].is_number_integer() || (j["parity"] != 0 && j["parity"] != 1))
                fail(p + "/parity", "parity must be 0 or 1");
            d.parity = j["parity"].get<int>();
        }
        const json& r = j["range"];
        if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() ||
            !(r[1].is_number_integer() || r[1].is_null()))
            fail(p + "/range", "range must be [lo, hi] with integer lo and integer or null hi");
        d.lo = r[0].get<long>();
        if (!r[1].is_null())
            d.hi = r[1].get<long>();
        if (d.lo < 0 || (d.hi && *d.hi < d.lo))
            fail(p + "/range", "range must satisfy 0 <= lo <= hi");
        if (!families_.insert(d.key).second)
            fail(p + "/name", "duplicate family '" + to_string(d.key) + "'");
        return d;
    }

    Rule rule(const json& j, const std::string& p, int arity)
    {
        if (!j.is_array())
            fail(p, "expected an array of per-family entries");
        Rule r;
        r.arity = arity;
        std::set<FamilyKey> seen;
        for (std::size_t k = 0; k < j.size(); ++k) {
            std::string ep = p + "/" + std::to_string(k);
            expect_object(j[k], ep, {"family", "terms"});
            if (!j[k].contains("family") || !j[k].contains("terms"))
                fail(ep, "an entry needs 'family' and 'terms'");
            FamilyKey fk = key(str(j[k]["family"], ep + "/family"), ep + "/family");
            if (!families_.count(fk))
                fail(ep + "/family", "undeclared family '" + to_string(fk) + "'");
            if (!seen.insert(fk).second)
                fail(ep + "/family", "second entry for family '" + to_string(fk) + "'");
            const json& terms = j[k]["terms"];
            if (!terms.is_array())
                fail(ep + "/terms", "expected an array of terms");
            FamilyRule fr{fk, {}};
            for (std::size_t t = 0; t < terms.size(); ++t)
                fr.terms.push_back(term(terms[t], ep + "/terms/" + std::to_string(t), arity));
            r.families.push_back(std::move(fr));
        }
        return r;
    }

    template <class F>
    auto expression(const std::string& p, F&& f) const
    {
        try {
            return f();
        } catch (const ParseError& e) {
            fail(p, bare_message(e) + (e.where().empty() ? "" : " at " + e.where()));
        }
    }

    AffineIndex affine(const json& j, const std::string& p, const std::vector<std::string>& names) const
    {
        std::string text = expr_text(j, p);
        return expression(p, [&] { return parse_affine_index(text, names); });
    }

    std::vector<Guard> guard(const json& j, const std::string& p, const std::vector<std::string>& names) const
    {
        std::string text = str(j, p);
        if (auto pct = text.find('%'); pct != std::string::npos) {
            auto eq = text.find("==", pct);
            if (eq == std::string::npos)
                fail(p, "congruence guards read 'expr % m == r'");
            AffineIndex e = expression(p, [&] { return parse_affine_index(text.substr(0, pct), names); });
            long m = 0, r = 0;
            try {
                m = std::stol(text.substr(pct + 1, eq - pct - 1));
                r = std::stol(text.substr(eq + 2));
            } catch (const std::exception&) {
                fail(p, "modulus and residue must be integers");
            }
            if (m <= 0)
                fail(p, "modulus must be positive");
            return {Guard::congruent(e, m, r)};
        }
        for (const char* op : {">=", "<=", "=="}) {
            auto at = text.find(op);
            if (at == std::string::npos)
                continue;
            AffineIndex lhs = expression(p, [&] { return parse_affine_index(text.substr(0, at), names); });
            AffineIndex rhs = expression(p, [&] { return parse_affine_index(text.substr(at + 2), names); });
            AffineIndex diff = lhs - rhs;
            if (op[0] == '>')
                return {Guard::at_least(diff, 0)};
            if (op[0] == '<')
                return {Guard::at_most(diff, 0)};
            return {Guard::at_least(diff, 0), Guard::at_most(diff, 0)};
        }
        fail(p, "a guard reads 'a >= b', 'a <= b', 'a == b' or 'a % m == r'");
    }

    FactorExpr factor(const json& j, const std::string& p, const std::vector<std::string>& names) const
    {
        std::string text = str(j, p);
        auto open = text.find('[');
        if (open == std::string::npos || text.back() != ']')
            fail(p, "a factor reads 'family[index expression]'");
        std::string fam = text.substr(0, open);
        while (!fam.empty() && fam.back() == ' ')
            fam.pop_back();
        FamilyKey fk = key(fam, p);
        if (!families_.count(fk))
            fail(p, "undeclared family '" + fam + "'");
        std::string idx = text.substr(open + 1, text.size() - open - 2);
        return FactorExpr{fk, expression(p, [&] { return parse_affine_index(idx, names); })};
    }

    RuleTerm term(const json& j, const std::string& p, int arity) const
    {
        expect_object(j, p, {"sum", "where", "coeff", "factors"});
        RuleTerm t;
        std::vector<std::string> names{"n"};
        if (j.contains("sum")) {
            const json& sums = j["sum"];
            if (!sums.is_array())
                fail(p + "/sum", "expected an array of summation ranges");
            for (std::size_t k = 0; k < sums.size(); ++k) {
                std::string sp = p + "/sum/" + std::to_string(k);
                expect_object(sums[k], sp, {"var", "from", "to"});
                if (!sums[k].contains("var") || !sums[k].contains("from") || !sums[k].contains("to"))
                    fail(sp, "a summation range needs 'var', 'from' and 'to'");
                std::string var = str(sums[k]["var"], sp + "/var");
                if (var.empty() || !std::isalpha(static_cast<unsigned char>(var[0])))
                    fail(sp + "/var", "summation variables are identifiers");
                for (const auto& existing : names)
                    if (existing == var)
                        fail(sp + "/var", "variable '" + var + "' is already bound");
                AffineIndex lo = affine(sums[k]["from"], sp + "/from", names);
                AffineIndex hi = affine(sums[k]["to"], sp + "/to", names);
                t.sums.push_back(SumRange{var, lo, hi});
                names.push_back(var);
            }
        }
        if (j.contains("where")) {
            const json& g = j["where"];
            if (!g.is_array())
                fail(p + "/where", "expected an array of guards");
            for (std::size_t k = 0; k < g.size(); ++k)
                for (Guard& gg : guard(g[k], p + "/where/" + std::to_string(k), names))
                    t.guards.push_back(std::move(gg));
        }
        if (j.contains("coeff")) {
            std::string text = j["coeff"].is_number_integer() ? std::to_string(j["coeff"].get<long>())
                                                               : str(j["coeff"], p + "/coeff");
            t.coeff = expression(p + "/coeff", [&] { return parse_index_poly(text, names); });
        }
        if (!j.contains("factors"))
            fail(p, "a term needs 'factors'");
        const json& fs = j["factors"];
        if (!fs.is_array() || static_cast<int>(fs.size()) != arity)
            fail(p + "/factors", "expected " + std::to_string(arity) + " factor" + (arity == 1 ? "" : "s"));
        for (std::size_t k = 0; k < fs.size(); ++k)
            t.factors.push_back(factor(fs[k], p + "/factors/" + std::to_string(k), names));
        return t;
    }

    Locator loc_;
    std::string name_;
    std::set<FamilyKey> families_;
};

nlohmann::ordered_json rule_json(const Rule& r)
{
    auto out = nlohmann::ordered_json::array();
    for (const FamilyRule& fr : r.families) {
        nlohmann::ordered_json e;
        e["family"] = to_string(fr.family);
        e["terms"] = nlohmann::ordered_json::array();
        for (const RuleTerm& t : fr.terms) {
            const auto names = t.var_names();
            nlohmann::ordered_json jt;
            if (!t.sums.empty()) {
                jt["sum"] = nlohmann::ordered_json::array();
                for (const SumRange& s : t.sums)
                    jt["sum"].push_back({{"var", s.var}, {"from", s.lo.to_string(names)}, {"to", s.hi.to_string(names)}});
            }
            if (!t.guards.empty()) {
                jt["where"] = nlohmann::ordered_json::array();
                for (const Guard& g : t.guards)
                    jt["where"].push_back(g.to_string(names));
            }
            jt["coeff"] = t.coeff.to_string(names);
            jt["factors"] = nlohmann::ordered_json::array();
            for (const FactorExpr& f : t.factors)
                jt["factors"].push_back(to_string(f.family) + "[" + f.index.to_string(names) + "]");
            e["terms"].push_back(std::move(jt));
        }
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace

CoalgebraSpec parse_spec_json(std::string_view text, const std::string& default_name)
{
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        std::string msg = e.what();
        if (auto colon = msg.find(": syntax error"); colon != std::string::npos)
            msg = msg.substr(colon + 2);
        throw ParseError(msg, Locator::position(text, e.byte > 0 ? e.byte - 1 : 0));
    }
    return SpecReader(text, default_name).read(root);
}

CoalgebraSpec load_spec_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open spec file", path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string name = path;
    if (auto slash = name.find_last_of('/'); slash != std::string::npos)
        name = name.substr(slash + 1);
    if (auto dot = name.rfind(".json"); dot != std::string::npos && dot + 5 == name.size())
        name = name.substr(0, dot);
    try {
        return parse_spec_json(buf.str(), name);
    } catch (const ParseError& e) {
        throw ParseError(bare_message(e), path + ": " + e.where());
    }
}

std::string spec_to_json(const CoalgebraSpec& spec)
{
    nlohmann::ordered_json j;
    j["name"] = spec.name();
    j["field"] = "Q";
    j["graded"] = spec.graded();
    j["families"] = nlohmann::ordered_json::array();
    for (const FamilyDecl& f : spec.families()) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array({f.lo, nullptr});
        if (f.hi)
            r[1] = *f.hi;
        j["families"].push_back({{"name", to_string(f.key)}, {"parity", f.parity}, {"range", r}});
    }
    j["delta"] = rule_json(spec.delta_rule());
    if (spec.coderivation_rule())
        j["coderivation"] = rule_json(*spec.coderivation_rule());
    j["shift_bound"] = spec.shift_bound();
    return j.dump(2) + "\n";
}

std::string fnv1a64_hex(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char out[17];
    std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
    return out;
}

Label parse_label(const CoalgebraSpec& spec, std::string_view text)
{
    std::string t(text);
    while (!t.empty() && t.front() == ' ')
        t.erase(t.begin());
    while (!t.empty() && t.back() == ' ')
        t.pop_back();
    bool bar = !t.empty() && t[0] == '~';
    if (bar)
        t.erase(t.begin());
    auto colon = t.rfind(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == t.size())
        throw ParseError("labels read 'family:index' or '~family:index', got '" + std::string(text) + "'", "");
    long index = 0;
    try {
        std::size_t used = 0;
        index = std::stol(t.substr(colon + 1), &used);
        if (used != t.size() - colon - 1)
            throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw ParseError("label index in '" + std::string(text) + "' is not an integer", "");
    }
    FamilyKey key{Symbol(t.substr(0, colon)), bar};
    if (!spec.find_family(key))
        throw ParseError("unknown family '" + to_string(key) + "' in label '" + std::string(text) + "'", "");
    return spec.label(key, index);
}

FormalVector parse_vector(const CoalgebraSpec& spec, std::string_view text)
{
    TermCollector<Label> out;
    std::string s(text);
    std::size_t i = 0;
    bool any = false;
    while (i < s.size()) {
        while (i < s.size() && s[i] == ' ')
            ++i;
        if (i == s.size())
            break;
        Scalar sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (any) {
            throw ParseError("expected '+' or '-' in '" + s + "'", "column " + std::to_string(i + 1));
        }
        std::size_t end = i;
        while (end < s.size() && !((s[end] == '+' || s[end] == '-') && end > i))
            ++end;
        std::string piece = s.substr(i, end - i);
        Scalar coeff = 1;
        if (auto star = piece.find('*'); star != std::string::npos) {
            std::string c = piece.substr(0, star);
            c.erase(0, c.find_first_not_of(' '));
            c.erase(c.find_last_not_of(' ') + 1);
            coeff = parse_scalar(c);
            piece = piece.substr(star + 1);
        }
        out.add(parse_label(spec, piece), sign * coeff);
        any = true;
        i = end;
    }
    if (!any)
        throw ParseError("empty vector expression", "");
    return out.finish();
}

} // namespace coalg
