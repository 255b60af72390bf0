#include "coalg/constructions.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace testing;

namespace {

// Closed formulas written independently of the rule tables.
FormalTensor ex4_delta(const CoalgebraSpec& s, long n)
{
    std::vector<FormalTensor::Term> raw;
    for (long i = 0; i <= n; ++i)
        raw.emplace_back(TensorKey{L(s, "x", i), L(s, "x", n - i)}, 1);
    return FormalTensor::from_terms(2, raw);
}

} // namespace

TEST_SUITE("coalgebra")
{
    TEST_CASE("delta on the builtin examples")
    {
        auto ex1 = builtin("example1");
        CHECK(delta(ex1, L(ex1, "e")) == T({{1, {L(ex1, "e"), L(ex1, "e")}}}));
        CHECK(delta(ex1, L(ex1, "f", 3)) ==
              T({{1, {L(ex1, "f", 3), L(ex1, "e")}}, {1, {L(ex1, "e"), L(ex1, "f", 3)}}}));
        auto ex4 = builtin("example4");
        CHECK(delta(ex4, L(ex4, "x", 3)) == ex4_delta(ex4, 3));
        auto ex9 = builtin("example9");
        CHECK(delta(ex9, L(ex9, "f", 1)) == T({{1, {L(ex9, "e_1"), L(ex9, "f", 3)}}}));
        CHECK(ex9.format(delta(ex9, L(ex9, "f", 1))) == "e_1⊗f_3");
    }

    TEST_CASE("delta_linear")
    {
        auto ex1 = builtin("example1");
        auto ex2 = builtin("example2");
        CHECK(delta_linear(ex1, FormalVector{}).is_zero());
        CHECK(delta_linear(ex2, V({{1, L(ex2, "f", 1)}, {-1, L(ex2, "f", 2)}})) ==
              T({{1, {L(ex2, "e"), L(ex2, "f", 2)}}, {-1, {L(ex2, "e"), L(ex2, "f", 3)}}}));
        CHECK(delta_linear(ex1, V({{2, L(ex1, "e")}})) == T({{2, {L(ex1, "e"), L(ex1, "e")}}}));
    }

    TEST_CASE("delta is linear on random vectors")
    {
        auto ex4 = builtin("example4");
        std::mt19937_64 rng(3);
        auto rnd_vec = [&] {
            TermCollector<Label> c;
            for (int k = 0; k < 4; ++k)
                c.add(L(ex4, "x", static_cast<long>(rng() % 8)), make_scalar(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 4)));
            return c.finish();
        };
        for (int trial = 0; trial < 50; ++trial) {
            FormalVector u = rnd_vec(), v = rnd_vec();
            Scalar a = make_scalar(static_cast<long>(rng() % 9) - 4, 3), b = make_scalar(static_cast<long>(rng() % 5) + 1, 2);
            CHECK(delta_linear(ex4, u * a + v * b) == a * delta_linear(ex4, u) + b * delta_linear(ex4, v));
            CHECK(delta_linear(ex4, u) == delta_linear(ex4, u));
        }
    }

    TEST_CASE("apply_d")
    {
        auto ex1 = builtin("example1");
        auto ex4 = builtin("example4");
        CHECK(apply_d(ex1, L(ex1, "f", 5)) == V({{1, L(ex1, "f", 6)}}));
        CHECK(apply_d(ex4, L(ex4, "x", 2)) == V({{3, L(ex4, "x", 3)}}));
        CHECK(apply_d(ex1, L(ex1, "e")).is_zero());
        CHECK_THROWS_AS(apply_d(builtin("example2"), L(ex1, "e")), PreconditionError);
    }

    TEST_CASE("out-of-range labels")
    {
        auto ex1 = builtin("example1");
        CHECK_THROWS_AS(ex1.label("f", 0), RangeError);
        CHECK_THROWS_AS(ex1.label("g", 1), RangeError);
        CHECK_THROWS_AS(delta(ex1, Label(FamilyKey{Symbol("f"), false}, 0)), RangeError);
    }

    TEST_CASE("builtin deltas match closed formulas on indices up to 30")
    {
        auto ex4 = builtin("example4"), ex5 = builtin("example5"), ex6 = builtin("example6"), ex8 = builtin("example8");
        auto ex9 = builtin("example9");
        for (long n = 0; n <= 30; ++n) {
            CHECK(delta(ex4, L(ex4, "x", n)) == ex4_delta(ex4, n));
            std::vector<FormalTensor::Term> r5, r6, r8;
            for (long i = 0; i <= n; ++i)
                r5.emplace_back(TensorKey{L(ex5, "x", i), L(ex5, "x", n - i + 1)}, n - i + 1);
            // Δ_L(x_n) = Σ_{i≤n} (n-i+1) x_i⊗x_{n-i+1} - (i+1) x_{i+1}⊗x_{n-i}
            for (long i = 0; i <= n; ++i) {
                r6.emplace_back(TensorKey{L(ex6, "x", i), L(ex6, "x", n - i + 1)}, n - i + 1);
                r6.emplace_back(TensorKey{L(ex6, "x", i + 1), L(ex6, "x", n - i)}, -(i + 1));
            }
            for (long i = 0; i <= n; ++i) {
                r8.emplace_back(TensorKey{L(ex8, "x", i), L(ex8, "x", n - i)}, 1);
            }
            for (long i = 0; i <= n; ++i) {
                r8.emplace_back(TensorKey{Lb(ex8, "x", i), Lb(ex8, "x", n - i + 1)}, n - i + 1);
                r8.emplace_back(TensorKey{Lb(ex8, "x", i + 1), Lb(ex8, "x", n - i)}, -(i + 1));
            }
            CHECK(delta(ex5, L(ex5, "x", n)) == FormalTensor::from_terms(2, r5));
            CHECK(delta(ex6, L(ex6, "x", n)) == FormalTensor::from_terms(2, r6));
            CHECK(delta(ex8, L(ex8, "x", n)) == FormalTensor::from_terms(2, r8));
            if (n >= 1) {
                auto e1 = L(ex9, "e_1"), e2 = L(ex9, "e_2");
                auto f = [&](long i) { return L(ex9, "f", i); };
                FormalTensor want;
                if (n % 3 == 1)
                    want = T({{1, {e1, f(n + 2)}}});
                else if (n % 3 == 2)
                    want = T({{1, {e2, f(n + 1)}}});
                else
                    want = T({{1, {e2, f(n + 1)}}, {-1, {f(n + 1), e2}}, {-1, {e1, f(n + 2)}}, {1, {f(n + 2), e1}}});
                CHECK(delta(ex9, f(n)) == want);
            }
        }
    }

    TEST_CASE("coderivation_check")
    {
        CHECK(coderivation_check(builtin("example1"), {50}).passed);
        CHECK(coderivation_check(builtin("example4"), {100}).passed);
        CHECK(coderivation_check(builtin("example1"), {100}).passed);

        auto ex1 = builtin("example1");
        Rule d = *ex1.coderivation_rule();
        RuleTerm de;
        de.factors = {FactorExpr{FamilyKey{Symbol("e"), false}, AffineIndex(0)}};
        d.entry(FamilyKey{Symbol("e"), false}).terms.push_back(de);
        auto bad = coderivation_check(ex1.with_coderivation(d), {10});
        CHECK_FALSE(bad.passed);
        REQUIRE_FALSE(bad.witnesses.empty());
        CHECK(bad.witnesses[0].label == "e");
        // Δ(d e) - (d⊗id + id⊗d)Δ(e) = e⊗e - 2 e⊗e
        CHECK(bad.witnesses[0].residual == "-e⊗e");
    }

    TEST_CASE("cocommutativity_check")
    {
        CHECK(cocommutativity_check(builtin("example1"), {40}, false).passed);
        auto r = cocommutativity_check(builtin("example2"), {40}, false);
        CHECK_FALSE(r.passed);
        REQUIRE_FALSE(r.witnesses.empty());
        CHECK(r.witnesses[0].label == "f_1");
        CHECK(r.witnesses[0].residual == "e⊗f_2 - f_2⊗e");
        CHECK(cocommutativity_check(builtin("example7"), {40}, true).passed);
        CHECK_FALSE(cocommutativity_check(builtin("example7"), {40}, false).passed);
    }

    TEST_CASE("validate_shift_bound")
    {
        CHECK(validate_shift_bound(builtin("example1"), {40}).passed);
        CHECK(validate_shift_bound(builtin("example9"), {40}).passed);
        CHECK_FALSE(validate_shift_bound(builtin("example9").with_shift_bound(1), {40}).passed);
        auto bad = validate_shift_bound(builtin("example4").with_shift_bound(0), {10});
        CHECK_FALSE(bad.passed);
        for (const char* name : {"example1", "example2", "example3", "example4", "example5", "example6", "example7",
                                 "example8", "example9"})
            CHECK_MESSAGE(validate_shift_bound(builtin(name), {30}).passed, name);
    }

    TEST_CASE("labels_up_to clamps families")
    {
        auto ex1 = builtin("example1");
        auto ls = ex1.labels_up_to(3);
        CHECK(ls.size() == 4); // e, f_1, f_2, f_3
        auto report = CheckReport::started("x", ex1, 3);
        REQUIRE(report.intervals.size() == 2);
    }
}
