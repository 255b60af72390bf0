#include "coalg/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace coalg {

namespace {

std::string fresh_name(const std::vector<std::string>& taken, const std::string& base)
{
    if (std::find(taken.begin(), taken.end(), base) == taken.end())
        return base;
    for (int k = 2;; ++k) {
        std::string cand = base + std::to_string(k);
        if (std::find(taken.begin(), taken.end(), cand) == taken.end())
            return cand;
    }
}

/// Substitutes the factor `position` of `outer` by each term of the unary rule
/// `inner` evaluated at that factor's index.
RuleTerm splice(const RuleTerm& outer, std::size_t position, const RuleTerm& inner, bool bar_result)
{
    RuleTerm out = outer;
    std::vector<std::string> names = outer.var_names();
    std::vector<AffineIndex> images;
    images.push_back(outer.factors[position].index);
    for (std::size_t k = 0; k < inner.sums.size(); ++k) {
        images.push_back(AffineIndex::variable(outer.num_vars() + k));
        std::string name = fresh_name(names, inner.sums[k].var);
        names.push_back(name);
        out.sums.push_back(
            SumRange{name, inner.sums[k].lo.compose(images), inner.sums[k].hi.compose(images)});
    }
    for (const Guard& g : inner.guards)
        out.guards.push_back(g.compose(images));
    out.coeff = outer.coeff * inner.coeff.compose(images);
    FactorExpr f = inner.factors[0];
    f.index = f.index.compose(images);
    if (bar_result)
        f.family.bar = true;
    out.factors[position] = f;
    return out;
}

FamilyKey barred(FamilyKey k)
{
    k.bar = true;
    return k;
}

} // namespace

Rule compose_factor(const Rule& rule, int position, const Rule& d, bool bar_result)
{
    if (d.arity != 1)
        throw PreconditionError("compose_factor needs a unary rule");
    if (position < 0 || position >= rule.arity)
        throw PreconditionError("compose_factor position out of range");
    const auto p = static_cast<std::size_t>(position);
    Rule out;
    out.arity = rule.arity;
    for (const FamilyRule& fr : rule.families) {
        FamilyRule nf{fr.family, {}};
        for (const RuleTerm& t : fr.terms) {
            const FamilyRule* dr = d.find(t.factors[p].family);
            if (!dr)
                continue;
            for (const RuleTerm& dt : dr->terms)
                nf.terms.push_back(splice(t, p, dt, bar_result));
        }
        if (!nf.terms.empty())
            out.families.push_back(std::move(nf));
    }
    return out;
}

CoalgebraSpec gelfand_dorfman(const CoalgebraSpec& spec)
{
    if (!spec.differential())
        throw PreconditionError("gelfand-dorfman needs a differential spec; '" + spec.name() + "' has no coderivation");
    Rule delta = compose_factor(spec.delta_rule(), 1, *spec.coderivation_rule());
    return CoalgebraSpec("gelfand-dorfman(" + spec.name() + ")", spec.families(), std::move(delta), std::nullopt,
                         2 * spec.shift_bound(), spec.graded());
}

CoalgebraSpec antisymmetrize(const CoalgebraSpec& spec)
{
    Rule out;
    out.arity = 2;
    for (const FamilyRule& fr : spec.delta_rule().families) {
        FamilyRule nf{fr.family, fr.terms};
        for (const RuleTerm& t : fr.terms) {
            RuleTerm f = t;
            std::swap(f.factors[0], f.factors[1]);
            bool odd_pair = spec.graded() && spec.family(t.factors[0].family).parity == 1 &&
                            spec.family(t.factors[1].family).parity == 1;
            f.coeff = odd_pair ? t.coeff : -t.coeff;
            nf.terms.push_back(std::move(f));
        }
        out.families.push_back(std::move(nf));
    }
    return CoalgebraSpec("antisymmetrize(" + spec.name() + ")", spec.families(), std::move(out),
                         std::nullopt, spec.shift_bound(), spec.graded());
}

CoalgebraSpec kantor(const CoalgebraSpec& spec)
{
    if (!spec.differential())
        throw PreconditionError("kantor needs a differential spec; '" + spec.name() + "' has no coderivation");
    if (spec.graded())
        throw PreconditionError("kantor needs an ungraded spec");
    std::vector<FamilyDecl> families;
    for (const FamilyDecl& f : spec.families()) {
        if (f.key.bar)
            throw PreconditionError("kantor input already has barred family '" + to_string(f.key) + "'");
        families.push_back(f);
        FamilyDecl b = f;
        b.key = barred(f.key);
        b.parity = 1;
        families.push_back(b);
    }
    const Rule& d = *spec.coderivation_rule();
    // c̄1 ⊗ d(c2)‾ and -d(c1)‾ ⊗ c̄2
    Rule bar_left = spec.delta_rule();
    for (FamilyRule& fr : bar_left.families)
        for (RuleTerm& t : fr.terms)
            t.factors[0].family = barred(t.factors[0].family);
    Rule first = compose_factor(bar_left, 1, d, true);
    Rule bar_right = spec.delta_rule();
    for (FamilyRule& fr : bar_right.families)
        for (RuleTerm& t : fr.terms) {
            t.factors[1].family = barred(t.factors[1].family);
            t.coeff = -t.coeff;
        }
    Rule second = compose_factor(bar_right, 0, d, true);

    Rule out;
    out.arity = 2;
    for (const FamilyRule& fr : spec.delta_rule().families) {
        FamilyRule even{fr.family, fr.terms};
        for (const Rule* r : {&first, &second})
            if (const FamilyRule* x = r->find(fr.family))
                even.terms.insert(even.terms.end(), x->terms.begin(), x->terms.end());
        out.families.push_back(std::move(even));

        FamilyRule odd{barred(fr.family), {}};
        for (const RuleTerm& t : fr.terms) {
            RuleTerm a = t;
            a.factors[0].family = barred(a.factors[0].family);
            RuleTerm b = t;
            b.factors[1].family = barred(b.factors[1].family);
            odd.terms.push_back(std::move(a));
            odd.terms.push_back(std::move(b));
        }
        out.families.push_back(std::move(odd));
    }
    return CoalgebraSpec("kantor(" + spec.name() + ")", std::move(families), std::move(out), std::nullopt,
                         2 * spec.shift_bound(), true);
}

// ---- graded duals ----

namespace {

RuleTerm constant_term(long n, const Scalar& c, std::vector<FactorExpr> factors)
{
    RuleTerm t;
    t.guards = {Guard::at_least(AffineIndex::variable(0), n), Guard::at_most(AffineIndex::variable(0), n)};
    t.coeff = IndexPoly(c);
    t.factors = std::move(factors);
    return t;
}

} // namespace

CoalgebraSpec graded_dual(const GradedAlgebraSpec& a, long horizon)
{
    if (!a.dimension || !a.multiply)
        throw PreconditionError("graded algebra '" + a.name + "' is missing dimension or multiplication data");
    if (horizon < a.min_degree)
        throw PreconditionError("horizon lies below the lowest degree");
    if (a.derivation_degree.has_value() != static_cast<bool>(a.derivation))
        throw PreconditionError("graded algebra '" + a.name + "' has incomplete derivation data");

    const long m = a.min_degree;
    auto dim = [&](long deg) {
        int d = a.dimension(deg);
        if (d < 0 || static_cast<std::size_t>(d) > a.slot_names.size())
            throw PreconditionError("dimension of degree " + std::to_string(deg) + " exceeds the named slots");
        return d;
    };
    std::vector<FamilyKey> keys;
    for (const auto& s : a.slot_names)
        keys.push_back(FamilyKey{Symbol(s), false});

    // Each slot must exist on an interval of degrees.
    std::vector<FamilyDecl> families;
    for (std::size_t k = 0; k < keys.size(); ++k) {
        std::optional<long> lo, hi;
        for (long deg = m; deg <= horizon; ++deg) {
            bool present = static_cast<std::size_t>(dim(deg)) > k;
            if (present) {
                if (hi && *hi != deg - 1)
                    throw PreconditionError("slot '" + a.slot_names[k] + "' is not present on an interval of degrees");
                if (!lo)
                    lo = deg;
                hi = deg;
            }
        }
        if (lo)
            families.push_back(FamilyDecl{keys[k], 0, *lo - m, *hi - m});
    }
    if (families.empty())
        throw PreconditionError("graded algebra '" + a.name + "' is zero below the horizon");

    Rule delta;
    delta.arity = 2;
    for (long i = m; i <= horizon; ++i)
        for (long j = m; i + j <= horizon && j <= horizon; ++j)
            for (int x = 0; x < dim(i); ++x)
                for (int y = 0; y < dim(j); ++y)
                    for (const auto& [k, c] : a.multiply(i, x, j, y)) {
                        if (sgn(c) == 0)
                            continue;
                        if (k < 0 || k >= dim(i + j))
                            throw PreconditionError("product leaves the component of degree " +
                                                    std::to_string(i + j));
                        delta.entry(keys[static_cast<std::size_t>(k)])
                            .terms.push_back(constant_term(
                                i + j - m, c,
                                {FactorExpr{keys[static_cast<std::size_t>(x)], AffineIndex(i - m)},
                                 FactorExpr{keys[static_cast<std::size_t>(y)], AffineIndex(j - m)}}));
                    }

    std::optional<Rule> d;
    long shift = 0;
    if (a.derivation_degree) {
        const long dd = *a.derivation_degree;
        shift = std::abs(dd);
        d = Rule{1, {}};
        // d*(x*_{n,k}) = Σ_a D(x_{n-dd,a})_k x*_{n-dd,a}
        for (long n = m; n <= horizon; ++n) {
            long src = n - dd;
            if (src < m)
                continue;
            int src_dim = src <= horizon ? dim(src) : a.dimension(src);
            for (int x = 0; x < src_dim; ++x)
                for (const auto& [k, c] : a.derivation(src, x)) {
                    if (sgn(c) == 0)
                        continue;
                    if (k < 0 || k >= dim(n))
                        throw PreconditionError("derivation leaves the component of degree " + std::to_string(n));
                    auto xs = static_cast<std::size_t>(x);
                    if (xs >= keys.size())
                        throw PreconditionError("derivation source exceeds the named slots");
                    d->entry(keys[static_cast<std::size_t>(k)])
                        .terms.push_back(constant_term(n - m, c, {FactorExpr{keys[xs], AffineIndex(src - m)}}));
                }
        }
    }
    return CoalgebraSpec("graded-dual(" + a.name + ", " + std::to_string(horizon) + ")", std::move(families),
                         std::move(delta), std::move(d), shift, false);
}

GradedAlgebraSpec polynomial_algebra_with_derivative()
{
    GradedAlgebraSpec a;
    a.name = "fx-diff-algebra";
    a.slot_names = {"x"};
    a.dimension = [](long) { return 1; };
    a.multiply = [](long, int, long, int) { return GradedAlgebraSpec::Coords{{0, Scalar(1)}}; };
    a.derivation_degree = -1;
    a.derivation = [](long i, int) {
        if (i == 0)
            return GradedAlgebraSpec::Coords{};
        return GradedAlgebraSpec::Coords{{0, Scalar(i)}};
    };
    return a;
}

GradedAlgebraSpec truncated_polynomial_algebra(int k)
{
    if (k < 1)
        throw PreconditionError("truncation order must be positive");
    GradedAlgebraSpec a;
    a.name = "truncated-fx-" + std::to_string(k);
    a.slot_names = {"x"};
    a.dimension = [k](long deg) { return deg < k ? 1 : 0; };
    a.multiply = [k](long i, int, long j, int) {
        if (i + j >= k)
            return GradedAlgebraSpec::Coords{};
        return GradedAlgebraSpec::Coords{{0, Scalar(1)}};
    };
    return a;
}

GradedAlgebraSpec idempotent_line()
{
    GradedAlgebraSpec a;
    a.name = "idempotent-line";
    a.slot_names = {"u"};
    a.dimension = [](long deg) { return deg == 0 ? 1 : 0; };
    a.multiply = [](long, int, long, int) { return GradedAlgebraSpec::Coords{{0, Scalar(1)}}; };
    return a;
}

// ---- builtin examples ----

namespace {

struct TermBuilder {
    std::vector<SumRange> sums;
    std::vector<Guard> guards;
    std::string coeff = "1";
    std::vector<std::pair<FamilyKey, std::string>> factors;
};

FamilyKey fam(const char* name, bool bar = false) { return FamilyKey{Symbol(name), bar}; }

RuleTerm build(const TermBuilder& b)
{
    RuleTerm t;
    t.sums = b.sums;
    t.guards = b.guards;
    std::vector<std::string> names = t.var_names();
    t.coeff = parse_index_poly(b.coeff, names);
    for (const auto& [key, idx] : b.factors)
        t.factors.push_back(FactorExpr{key, parse_affine_index(idx, names)});
    return t;
}

SumRange sum_i(const char* lo, const char* hi)
{
    std::vector<std::string> names{"n"};
    return SumRange{"i", parse_affine_index(lo, names), parse_affine_index(hi, names)};
}

Guard mod3(long r) { return Guard::congruent(AffineIndex::variable(0), 3, r); }

void add(Rule& r, FamilyKey key, const TermBuilder& b) { r.entry(key).terms.push_back(build(b)); }

Rule unary() { return Rule{1, {}}; }
Rule binary() { return Rule{2, {}}; }

FamilyDecl singleton(FamilyKey key, int parity = 0) { return FamilyDecl{key, parity, 0, 0}; }
FamilyDecl infinite(FamilyKey key, long lo, int parity = 0) { return FamilyDecl{key, parity, lo, std::nullopt}; }

CoalgebraSpec example1()
{
    auto e = fam("e"), f = fam("f");
    Rule delta = binary();
    add(delta, e, {{}, {}, "1", {{e, "0"}, {e, "0"}}});
    add(delta, f, {{}, {}, "1", {{f, "n"}, {e, "0"}}});
    add(delta, f, {{}, {}, "1", {{e, "0"}, {f, "n"}}});
    Rule d = unary();
    add(d, f, {{}, {}, "1", {{f, "n+1"}}});
    return CoalgebraSpec("example1", {singleton(e), infinite(f, 1)}, delta, d, 1, false);
}

CoalgebraSpec example2()
{
    auto e = fam("e"), f = fam("f");
    Rule delta = binary();
    add(delta, f, {{}, {}, "1", {{e, "0"}, {f, "n+1"}}});
    return CoalgebraSpec("example2", {singleton(e), infinite(f, 1)}, delta, std::nullopt, 1, false);
}

CoalgebraSpec example3()
{
    auto e = fam("e"), f = fam("f");
    Rule delta = binary();
    add(delta, f, {{}, {}, "1", {{e, "0"}, {f, "n+1"}}});
    add(delta, f, {{}, {}, "-1", {{f, "n+1"}, {e, "0"}}});
    return CoalgebraSpec("example3", {singleton(e), infinite(f, 1)}, delta, std::nullopt, 1, false);
}

CoalgebraSpec example4()
{
    auto x = fam("x");
    Rule delta = binary();
    add(delta, x, {{sum_i("0", "n")}, {}, "1", {{x, "i"}, {x, "n-i"}}});
    Rule d = unary();
    add(d, x, {{}, {}, "n+1", {{x, "n+1"}}});
    return CoalgebraSpec("example4", {infinite(x, 0)}, delta, d, 1, false);
}

CoalgebraSpec example5()
{
    auto x = fam("x");
    Rule delta = binary();
    add(delta, x, {{sum_i("0", "n")}, {}, "n-i+1", {{x, "i"}, {x, "n-i+1"}}});
    return CoalgebraSpec("example5", {infinite(x, 0)}, delta, std::nullopt, 1, false);
}

CoalgebraSpec example6()
{
    auto x = fam("x");
    Rule delta = binary();
    add(delta, x, {{sum_i("0", "n+1")}, {}, "n+1-2i", {{x, "i"}, {x, "n+1-i"}}});
    return CoalgebraSpec("example6", {infinite(x, 0)}, delta, std::nullopt, 1, false);
}

CoalgebraSpec example7()
{
    auto e = fam("e"), f = fam("f"), eb = fam("e", true), fb = fam("f", true);
    Rule delta = binary();
    add(delta, e, {{}, {}, "1", {{e, "0"}, {e, "0"}}});
    add(delta, f, {{}, {}, "1", {{e, "0"}, {f, "n"}}});
    add(delta, f, {{}, {}, "1", {{f, "n"}, {e, "0"}}});
    add(delta, f, {{}, {}, "1", {{eb, "0"}, {fb, "n+1"}}});
    add(delta, f, {{}, {}, "-1", {{fb, "n+1"}, {eb, "0"}}});
    add(delta, eb, {{}, {}, "1", {{e, "0"}, {eb, "0"}}});
    add(delta, eb, {{}, {}, "1", {{eb, "0"}, {e, "0"}}});
    add(delta, fb, {{}, {}, "1", {{e, "0"}, {fb, "n"}}});
    add(delta, fb, {{}, {}, "1", {{fb, "n"}, {e, "0"}}});
    add(delta, fb, {{}, {}, "1", {{eb, "0"}, {f, "n"}}});
    add(delta, fb, {{}, {}, "1", {{f, "n"}, {eb, "0"}}});
    return CoalgebraSpec("example7", {singleton(e), infinite(f, 1), singleton(eb, 1), infinite(fb, 1, 1)}, delta,
                         std::nullopt, 1, true);
}

CoalgebraSpec example8()
{
    auto x = fam("x"), xb = fam("x", true);
    Rule delta = binary();
    add(delta, x, {{sum_i("0", "n")}, {}, "1", {{x, "i"}, {x, "n-i"}}});
    add(delta, x, {{sum_i("0", "n+1")}, {}, "n+1-2i", {{xb, "i"}, {xb, "n-i+1"}}});
    add(delta, xb, {{sum_i("0", "n")}, {}, "1", {{xb, "i"}, {x, "n-i"}}});
    add(delta, xb, {{sum_i("0", "n")}, {}, "1", {{x, "i"}, {xb, "n-i"}}});
    return CoalgebraSpec("example8", {infinite(x, 0), infinite(xb, 0, 1)}, delta, std::nullopt, 1, true);
}

CoalgebraSpec example9()
{
    auto e1 = fam("e_1"), e2 = fam("e_2"), f = fam("f");
    Rule delta = binary();
    add(delta, f, {{}, {mod3(1)}, "1", {{e1, "0"}, {f, "n+2"}}});
    add(delta, f, {{}, {mod3(2)}, "1", {{e2, "0"}, {f, "n+1"}}});
    add(delta, f, {{}, {mod3(0)}, "1", {{e2, "0"}, {f, "n+1"}}});
    add(delta, f, {{}, {mod3(0)}, "-1", {{f, "n+1"}, {e2, "0"}}});
    add(delta, f, {{}, {mod3(0)}, "-1", {{e1, "0"}, {f, "n+2"}}});
    add(delta, f, {{}, {mod3(0)}, "1", {{f, "n+2"}, {e1, "0"}}});
    return CoalgebraSpec("example9", {singleton(e1), singleton(e2), infinite(f, 1)}, delta, std::nullopt, 2, false);
}

struct Registered {
    BuiltinInfo info;
    CoalgebraSpec (*make)();
};

const std::vector<Registered>& registry()
{
    static const std::vector<Registered> r = {
        {{"example1", "differential coalgebra e, f_1, f_2, ...: Δ(e) = e⊗e, Δ(f_i) = f_i⊗e + e⊗f_i, d(f_i) = f_{i+1}",
          "base"},
         example1},
        {{"example2", "Novikov coalgebra Δ_N(f_i) = e⊗f_{i+1}; not locally finite, dual satisfies (xy)z = 0",
          "gelfand-dorfman(example1)"},
         example2},
        {{"example3", "Lie coalgebra Δ_L(f_i) = e⊗f_{i+1} - f_{i+1}⊗e; not locally finite",
          "antisymmetrize(example2)"},
         example3},
        {{"example4", "graded dual of F[x] with ∂: Δ(x_n) = Σ x_i⊗x_{n-i}, d(x_n) = (n+1)x_{n+1}",
          "graded-dual(fx-diff-algebra)"},
         example4},
        {{"example5", "simple Novikov coalgebra Δ_N(x_n) = Σ (n-i+1) x_i⊗x_{n-i+1}", "gelfand-dorfman(example4)"},
         example5},
        {{"example6", "simple Lie coalgebra Δ_L(x_n) = Σ (n+1-2i) x_i⊗x_{n+1-i}", "antisymmetrize(example5)"},
         example6},
        {{"example7", "Jordan supercoalgebra on e, f_i and odd copies; not locally finite", "kantor(example1)"},
         example7},
        {{"example8", "simple Jordan supercoalgebra on x_n and odd copies", "kantor(example4)"}, example8},
        {{"example9", "right-alternative coalgebra e_1, e_2, f_i with period-3 rule; not locally finite", "base"},
         example9},
    };
    return r;
}

} // namespace

const std::vector<BuiltinInfo>& builtin_catalog()
{
    static const std::vector<BuiltinInfo> infos = [] {
        std::vector<BuiltinInfo> out;
        for (const auto& r : registry())
            out.push_back(r.info);
        return out;
    }();
    return infos;
}

CoalgebraSpec builtin(std::string_view name)
{
    for (const auto& r : registry())
        if (r.info.name == name)
            return r.make();
    throw PreconditionError("unknown example '" + std::string(name) + "'");
}

GradedAlgebraSpec builtin_algebra(std::string_view name)
{
    if (name == "fx-diff-algebra")
        return polynomial_algebra_with_derivative();
    if (name == "truncated-fx-3")
        return truncated_polynomial_algebra(3);
    if (name == "idempotent-line")
        return idempotent_line();
    throw PreconditionError("unknown graded algebra '" + std::string(name) + "'");
}

const std::vector<BuiltinInfo>& builtin_algebra_catalog()
{
    static const std::vector<BuiltinInfo> infos = {
        {"fx-diff-algebra", "F[x] graded by degree with the derivation d/dx", "graded dual gives example4"},
        {"truncated-fx-3", "F[x]/(x^3) graded by degree", "graded dual is a 3-dimensional coalgebra"},
        {"idempotent-line", "F u with u u = u in degree 0", "graded dual is the group-like line"},
    };
    return infos;
}

CheckReport equivalent_on(const CoalgebraSpec& a, const CoalgebraSpec& b, CheckRange range)
{
    std::set<std::pair<FamilyKey, int>> fa, fb;
    for (const auto& f : a.families())
        fa.emplace(f.key, f.parity);
    for (const auto& f : b.families())
        fb.emplace(f.key, f.parity);
    CheckReport report = CheckReport::started("equivalent(" + a.name() + ", " + b.name() + ")", a, range.max_index);
    if (fa != fb) {
        report.add_witness(Witness{"", "", "family declarations differ"});
        return report;
    }
    const bool with_d = a.differential() || b.differential();
    for (const Label& l : a.labels_up_to(range.max_index)) {
        ++report.labels_checked;
        FormalTensor r = delta(a, l) - delta(b, l);
        if (!r.is_zero())
            report.add_witness(Witness{a.format(l), a.format(r), "Δ differs"});
        if (with_d) {
            auto dv = [&](const CoalgebraSpec& s) { return s.differential() ? apply_d(s, l) : FormalVector{}; };
            FormalVector rd = dv(a) - dv(b);
            if (!rd.is_zero())
                report.add_witness(Witness{a.format(l), a.format(rd), "d differs"});
        }
    }
    report.finish();
    return report;
}

} // namespace coalg
