// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.

#include "coalg/closure.hpp"
#include "coalg/constructions.hpp"
#include "coalg/dual.hpp"
#include "coalg/identities.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace coalg;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            detail << (detail.tellp() > 0 ? "; " : "") << what;
        }
    }
    void require(const CheckReport& r, const std::string& what)
    {
        std::string extra;
        if (!r.passed && !r.witnesses.empty())
            extra = " (witness " + r.witnesses[0].label + ": " + r.witnesses[0].residual + ")";
        require(r.passed, what + extra);
    }
};

FormalVector b(const CoalgebraSpec& s, const char* fam, long i = 0, bool bar = false)
{
    return FormalVector::basis(s.label(fam, i, bar));
}

const NAPoly& id(const char* name) { return lookup_identity(name).poly; }

// Dimension after k steps is at least k + 1 for every k ≤ 20, and the budget ran out.
bool grows_linearly(const ClosureTrace& t)
{
    if (t.closed() || t.dimensions.size() < 21)
        return false;
    for (std::size_t k = 0; k <= 20; ++k)
        if (t.dimensions[k] < k + 1)
            return false;
    return true;
}

void criterion1(Outcome& o)
{
    auto ex1 = builtin("example1");
    o.require(check_identity(ex1, id("associativity"), {100}), "coassociativity");
    o.require(cocommutativity_check(ex1, {100}, false), "cocommutativity");
    o.require(coderivation_check(ex1, {100}), "coderivation");
}

void criterion2(Outcome& o)
{
    auto ex1 = builtin("example1");
    o.require(check_identity(ex1, parse_identity("x1' x2'"), {100}), "(d⊗d)Δ = 0");
    o.require(bruteforce_identity(ex1, parse_identity("x1' x2'"), 12), "oracle x'y' = 0");
}

void criterion3(Outcome& o)
{
    auto gd = gelfand_dorfman(builtin("example1"));
    o.require(equivalent_on(gd, builtin("example2"), {60}), "gelfand-dorfman(example1) = example2");
    o.require(check_identity(gd, id("left-symmetry"), {60}), "left symmetry");
    o.require(check_identity(gd, id("novikov-right-commutativity"), {60}), "right commutativity");
    o.require(check_identity(gd, parse_identity("(x1 x2) x3"), {60}), "(x1x2)x3 coidentity");
    o.require(bruteforce_identity(gd, parse_identity("(x1 x2) x3"), 12), "(x1x2)x3 oracle");
}

void criterion4(Outcome& o)
{
    auto lie = antisymmetrize(builtin("example2"));
    o.require(equivalent_on(lie, builtin("example3"), {60}), "antisymmetrize(example2) = example3");
    o.require(check_identity(lie, id("anticommutativity"), {60}), "anticocommutativity");
    o.require(check_identity(lie, id("jacobi"), {60}), "Jacobi");
    o.require(check_identity(lie, parse_identity("[[x1,x2],[x3,x4]]"), {60}), "metabelian");
}

void criterion5(Outcome& o)
{
    for (const char* name : {"example1", "example2", "example3"}) {
        auto spec = builtin(name);
        auto r = local_finiteness_probe(spec, {b(spec, "f", 1)}, {20, 4096});
        o.require(!r.finite && grows_linearly(r.trace), std::string(name) + " divergence trace");
    }
    auto ex2 = builtin("example2");
    Subspace start, want;
    start.insert(b(ex2, "f", 1));
    for (auto v : {b(ex2, "f", 1), b(ex2, "e"), b(ex2, "f", 2)})
        want.insert(v);
    o.require(bimodule_step(ex2, start) == want, "example2 step 1 is span{f_1, e, f_2}");
    // step k of example2 is exactly span{e, f_1, ..., f_{k+1}}
    auto t = generated_subcoalgebra(ex2, {b(ex2, "f", 1)}, {20, 4096});
    bool exact = true;
    for (std::size_t k = 1; k <= 20 && k < t.dimensions.size(); ++k)
        exact = exact && t.dimensions[k] == k + 2 && t.added[k - 1].size() == (k == 1 ? 2u : 1u);
    o.require(exact, "example2 grows one f per step");
}

void criterion6(Outcome& o)
{
    auto fx = graded_dual(polynomial_algebra_with_derivative(), 61);
    bool closed_forms = true;
    for (long n = 0; n <= 60; ++n) {
        std::vector<FormalTensor::Term> raw;
        for (long i = 0; i <= n; ++i)
            raw.emplace_back(TensorKey{fx.label("x", i), fx.label("x", n - i)}, 1);
        closed_forms = closed_forms && delta(fx, fx.label("x", n)) == FormalTensor::from_terms(2, raw);
        closed_forms = closed_forms && apply_d(fx, fx.label("x", n)) ==
                                           FormalVector::basis(fx.label("x", n + 1), Scalar(n + 1));
    }
    o.require(closed_forms, "graded dual matches Δ(x_n) = Σ x_i⊗x_{n-i}, d(x_n) = (n+1)x_{n+1}");
    o.require(equivalent_on(fx, builtin("example4"), {60}), "graded dual = example4");
    for (const char* name : {"example4", "example5", "example6"})
        o.require(simplicity_probe(builtin(name), 30, 10, 1), std::string(name) + " simplicity at N = 30");
    o.require(simplicity_probe(builtin("example8"), 20, 10, 1), "example8 simplicity at N = 20");
}

void criterion7(Outcome& o)
{
    auto k = kantor(builtin("example1"));
    o.require(equivalent_on(k, builtin("example7"), {60}), "kantor(example1) = example7");
    o.require(check_identity(k, id("supercommutativity"), {40}), "supercommutativity");
    for (const char* sig : {"eo", "oe"})
        o.require(check_identity(k, parse_identity("x1 x2 - x2 x1").with_signature(sig), {40}), "xz = zx");
    o.require(check_identity(k, id("square-zero-products").with_signature("oooo"), {40}), "(z1z2)(z3z4) = 0");
    auto r = local_finiteness_probe(k, {b(k, "f", 1, true)}, {20, 4096});
    o.require(!r.finite && grows_linearly(r.trace), "closure of ~f_1 diverges");
}

void criterion8(Outcome& o)
{
    auto ex9 = builtin("example9");
    for (const char* name : {"right-alternativity-linearized", "moufang-linearized", "left-nilpotent-4",
                             "square-zero-products"})
        o.require(check_identity(ex9, id(name), {60}), name);
    auto r = local_finiteness_probe(ex9, {b(ex9, "f", 1), b(ex9, "f", 2)}, {20, 4096});
    bool pattern = r.trace.subspace.contains_label(ex9.label("e_1", 0)) &&
                   r.trace.subspace.contains_label(ex9.label("e_2", 0));
    for (long n = 1; n <= 10; ++n)
        pattern = pattern && r.trace.subspace.contains_label(ex9.label("f", 3 * n));
    o.require(!r.finite && grows_linearly(r.trace) && pattern, "closure of {f_1, f_2} diverges through e_1, e_2, f_3n");
}

void criterion9(Outcome& o)
{
    GrassmannOptions opts;
    opts.generators = 3;
    opts.samples = 50;
    o.require(grassmann_envelope_check(builtin("example7"), opts), "example7 envelope");
    o.require(grassmann_envelope_check(builtin("example8"), opts), "example8 envelope");
    auto control = grassmann_envelope_check(as_graded_even(builtin("example3")), opts);
    o.require(!control.passed && !control.witnesses.empty(), "non-Jordan control fails with a witness");
}

void criterion10(Outcome& o)
{
    int compared = 0, discrepancies = 0;
    for (const char* name : {"example1", "example2", "example3", "example4", "example5", "example6", "example9"}) {
        auto spec = builtin(name);
        for (const auto& e : builtin_identities()) {
            if (e.poly.arity() > 4 || (!spec.differential() && e.name == "derivative-products"))
                continue;
            ++compared;
            bool coid = check_identity(spec, e.poly, {10}).passed;
            bool brute = bruteforce_identity(spec, e.poly, 10).passed;
            if (coid != brute) {
                ++discrepancies;
                o.require(false, std::string(name) + " " + e.name);
            }
        }
    }
    o.detail << (o.detail.tellp() > 0 ? "; " : "") << compared << " pairs compared, " << discrepancies
             << " discrepancies";
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
        {"Example 1 coassociative, cocommutative, d a coderivation up to 100", criterion1},
        {"(d⊗d)Δ = 0 on Example 1 and x'y' = 0 in the dual", criterion2},
        {"Gelfand-Dorfman gives Example 2, Novikov, (xy)z = 0", criterion3},
        {"antisymmetrization gives Example 3, Lie and metabelian", criterion4},
        {"closures of f_1 in Examples 1 to 3 diverge step for step", criterion5},
        {"graded dual of F[x] is Example 4; simplicity of Examples 4, 5, 6, 8", criterion6},
        {"Kantor gives Example 7, super identities, divergent odd closure", criterion7},
        {"Example 9 right-alternative identities and mod 3 closure pattern", criterion8},
        {"Grassmann envelope of Examples 7 and 8, failing control", criterion9},
        {"coidentity and brute-force dual verdicts agree", criterion10},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += o.ok ? 0 : 1;
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first;
        if (!o.ok || o.detail.tellp() > 0)
            std::cout << " [" << o.detail.str() << "]";
        std::cout << " (" << static_cast<long>(secs * 1000) << " ms)\n";
    }
    return failed ? 1 : 0;
}
