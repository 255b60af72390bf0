#include "coalg/constructions.hpp"
#include "coalg/dual.hpp"
#include "coalg/identities.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace testing;

namespace {

Functional xi(const Label& l, Scalar c = 1) { return FormalVector::basis(l, c); }

// Relabels a functional of Example 1 into Example 7, optionally barring every label.
Functional carry(const CoalgebraSpec& to, const Functional& f, bool bar)
{
    TermCollector<Label> out;
    for (const auto& [l, c] : f)
        out.add(to.label(l.family.name.str(), l.index, bar), c);
    return out.finish();
}

} // namespace

TEST_SUITE("dual")
{
    TEST_CASE("products and derivations on coordinate functionals")
    {
        auto ex1 = builtin("example1");
        CHECK(dual_product(ex1, xi(L(ex1, "e")), xi(L(ex1, "e"))) == xi(L(ex1, "e")));
        CHECK(dual_product(ex1, xi(L(ex1, "f", 1)), xi(L(ex1, "e"))) == xi(L(ex1, "f", 1)));
        CHECK(dual_derivation(ex1, xi(L(ex1, "f", 2))) == xi(L(ex1, "f", 1)));
        CHECK(dual_derivation(ex1, xi(L(ex1, "e"))).is_zero());
        auto ex4 = builtin("example4");
        CHECK(dual_derivation(ex4, xi(L(ex4, "x", 3))) == xi(L(ex4, "x", 2), 3));
        CHECK_THROWS_AS(dual_derivation(builtin("example2"), xi(L(ex1, "e"))), PreconditionError);

        auto ex2 = builtin("example2");
        Functional ef2 = dual_product(ex2, xi(L(ex2, "e")), xi(L(ex2, "f", 2)));
        CHECK(ef2 == xi(L(ex2, "f", 1)));
        for (const Label& l : ex2.labels_up_to(12))
            CHECK(dual_product(ex2, ef2, xi(l)).is_zero());
        CHECK(format_functional(ex4, V({{2, L(ex4, "x", 1)}, {-1, L(ex4, "x", 0)}})) == "-ξ[x_0] + 2*ξ[x_1]");
    }

    TEST_CASE("a too small shift bound is caught while transposing")
    {
        auto bad = builtin("example9").with_shift_bound(1);
        DualAlgebra a(bad);
        CHECK_THROWS_AS(a.product(xi(L(bad, "e_1")), xi(L(bad, "f", 3))), PreconditionError);
    }

    TEST_CASE("Example 1's dual is associative, commutative and satisfies x'y' = 0")
    {
        auto ex1 = builtin("example1");
        DualAlgebra a(ex1);
        auto ls = ex1.labels_up_to(10);
        for (const Label& x : ls)
            for (const Label& y : ls) {
                Functional xy = a.product(xi(x), xi(y));
                CHECK(xy == a.product(xi(y), xi(x)));
                CHECK(a.product(a.derivation(xi(x)), a.derivation(xi(y))).is_zero());
                // Leibniz rule for d*
                CHECK(a.derivation(xy) == a.product(a.derivation(xi(x)), xi(y)) + a.product(xi(x), a.derivation(xi(y))));
                for (const Label& z : ls)
                    CHECK(a.product(xy, xi(z)) == a.product(xi(x), a.product(xi(y), xi(z))));
            }
    }

    TEST_CASE("brute-force evaluation of identities")
    {
        CHECK(bruteforce_identity(builtin("example1"), parse_identity("x1 x2 - x2 x1"), 10).passed);
        CHECK(bruteforce_identity(builtin("example2"), parse_identity("(x1 x2) x3"), 10).passed);
        CHECK(bruteforce_identity(builtin("example9"), parse_identity("(x1 x2)(x3 x4)"), 10).passed);
        auto r = bruteforce_identity(builtin("example2"), parse_identity("x1 x2 - x2 x1"), 10);
        CHECK_FALSE(r.passed);
        REQUIRE_FALSE(r.witnesses.empty());
        CHECK(r.witnesses[0].label == "(ξ[e], ξ[f_2])");
        CHECK(r.witnesses[0].residual == "ξ[f_1]");
    }

    TEST_CASE("brute force and coidentity checks agree")
    {
        for (const char* name : {"example1", "example2", "example3", "example4", "example5", "example6", "example9"}) {
            auto spec = builtin(name);
            for (const auto& e : builtin_identities()) {
                if (e.poly.arity() > 4)
                    continue;
                if (!spec.differential() && e.name == "derivative-products")
                    continue;
                bool coid = check_identity(spec, e.poly, {10}).passed;
                bool brute = bruteforce_identity(spec, e.poly, 10).passed;
                CHECK_MESSAGE(coid == brute, name << " " << e.name);
            }
        }
    }

    TEST_CASE("graded brute force on Example 7")
    {
        auto ex7 = builtin("example7");
        CHECK(bruteforce_identity(ex7, lookup_identity("supercommutativity").poly, 8).passed);
        CHECK_FALSE(bruteforce_identity(ex7, lookup_identity("commutativity").poly, 8).passed);
        CHECK(bruteforce_identity(ex7, lookup_identity("square-zero-products").poly.with_signature("oooo"), 6).passed);
    }

    TEST_CASE("Kantor products follow the doubling table")
    {
        auto ex1 = builtin("example1");
        auto ex7 = builtin("example7");
        DualAlgebra a1(ex1), a7(ex7);
        auto ls = ex1.labels_up_to(10);
        for (const Label& x : ls)
            for (const Label& y : ls) {
                Functional ab = a1.product(xi(x), xi(y));
                Functional bar_bar = a1.product(xi(x), a1.derivation(xi(y))) - a1.product(a1.derivation(xi(x)), xi(y));
                Functional x7 = carry(ex7, xi(x), false), y7 = carry(ex7, xi(y), false);
                Functional xb = carry(ex7, xi(x), true), yb = carry(ex7, xi(y), true);
                CHECK(a7.product(x7, y7) == carry(ex7, ab, false));
                CHECK(a7.product(x7, yb) == carry(ex7, ab, true));
                CHECK(a7.product(xb, y7) == carry(ex7, ab, true));
                CHECK(a7.product(xb, yb) == carry(ex7, bar_bar, false));
            }
    }

    TEST_CASE("Grassmann signs")
    {
        CHECK(grassmann_sign(0b001, 0b010) == 1);
        CHECK(grassmann_sign(0b010, 0b001) == -1);
        CHECK(grassmann_sign(0b011, 0b100) == 1);
        CHECK(grassmann_sign(0b100, 0b011) == 1);
        CHECK(grassmann_sign(0b101, 0b010) == -1);
        CHECK(grassmann_sign(0b001, 0b001) == 0);
        GrassmannElement g;
        auto ex7 = builtin("example7");
        CHECK_THROWS_AS(g.add(0b1, xi(L(ex7, "e"))), PreconditionError);
        g.add(0b1, xi(Lb(ex7, "e")));
        CHECK_FALSE(g.is_zero());
    }

    TEST_CASE("Grassmann envelope of the Jordan duals")
    {
        GrassmannOptions opts;
        CHECK(grassmann_envelope_check(builtin("example7"), opts).passed);
        CHECK(grassmann_envelope_check(builtin("example8"), opts).passed);
        auto control = grassmann_envelope_check(as_graded_even(builtin("example3")), opts);
        CHECK_FALSE(control.passed);
        CHECK_FALSE(control.witnesses.empty());
        auto again = grassmann_envelope_check(as_graded_even(builtin("example3")), opts);
        REQUIRE(again.witnesses.size() == control.witnesses.size());
        CHECK(again.witnesses[0].label == control.witnesses[0].label);
        CHECK_THROWS_AS(grassmann_envelope_check(builtin("example1"), opts), PreconditionError);
    }
}
