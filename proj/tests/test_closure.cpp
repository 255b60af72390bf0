#include "coalg/closure.hpp"
#include "coalg/constructions.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace testing;

namespace {

FormalVector b(const Label& l) { return FormalVector::basis(l); }

Subspace span(std::initializer_list<Label> ls)
{
    Subspace s;
    for (const Label& l : ls)
        s.insert(b(l));
    return s;
}

} // namespace

TEST_SUITE("closure")
{
    TEST_CASE("one bimodule step")
    {
        auto ex2 = builtin("example2");
        CHECK(bimodule_step(ex2, span({L(ex2, "f", 1)})) == span({L(ex2, "f", 1), L(ex2, "e"), L(ex2, "f", 2)}));
        auto ex1 = builtin("example1");
        CHECK(bimodule_step(ex1, span({L(ex1, "e")})) == span({L(ex1, "e")}));
        auto ex9 = builtin("example9");
        CHECK(bimodule_step(ex9, span({L(ex9, "f", 1)})) == span({L(ex9, "f", 1), L(ex9, "e_1"), L(ex9, "f", 3)}));
    }

    TEST_CASE("bimodule step is monotone and ignores the presentation")
    {
        auto ex5 = builtin("example5");
        Subspace a, c;
        a.insert(V({{1, L(ex5, "x", 2)}, {1, L(ex5, "x", 4)}}));
        a.insert(V({{1, L(ex5, "x", 2)}, {-1, L(ex5, "x", 4)}}));
        c.insert(b(L(ex5, "x", 4)));
        c.insert(V({{3, L(ex5, "x", 2)}, {2, L(ex5, "x", 4)}}));
        REQUIRE(a == c);
        Subspace sa = bimodule_step(ex5, a);
        CHECK(sa == bimodule_step(ex5, c));
        for (const FormalVector& v : a.vectors())
            CHECK(sa.contains(v));
    }

    TEST_CASE("Example 2 grows by one label per step")
    {
        auto ex2 = builtin("example2");
        auto t = generated_subcoalgebra(ex2, {b(L(ex2, "f", 1))}, {20, 4096});
        CHECK_FALSE(t.closed());
        REQUIRE(t.dimensions.size() == 21);
        for (std::size_t k = 1; k <= 20; ++k) {
            CHECK(t.dimensions[k] == k + 2);
            CHECK(t.dimensions[k] >= t.dimensions[k - 1]);
        }
        // exactly span{e, f_1, …, f_21} after 20 steps
        for (long i = 1; i <= 21; ++i)
            CHECK(t.subspace.contains_label(L(ex2, "f", i)));
        CHECK(t.subspace.contains_label(L(ex2, "e")));
        CHECK(t.dimension() == 22);
    }

    TEST_CASE("closures of f_1 diverge in Examples 1 and 3")
    {
        for (const char* name : {"example1", "example3"}) {
            auto spec = builtin(name);
            auto r = local_finiteness_probe(spec, {b(L(spec, "f", 1))}, {20, 4096});
            CHECK_FALSE(r.finite);
            for (std::size_t k = 1; k < r.trace.dimensions.size(); ++k)
                CHECK(r.trace.dimensions[k] > r.trace.dimensions[k - 1]);
        }
        // without d, f_1 spans a subcoalgebra of Example 1 together with e
        auto plain = builtin("example1").without_coderivation();
        auto r = local_finiteness_probe(plain, {b(L(plain, "f", 1))});
        CHECK(r.finite);
        CHECK(r.dimension == 2);
    }

    TEST_CASE("finite closures")
    {
        auto tr = graded_dual(truncated_polynomial_algebra(3), 10);
        auto t = generated_subcoalgebra(tr, {b(L(tr, "x", 2))});
        CHECK(t.closed());
        CHECK(t.dimension() == 3);
        CHECK(t.added.back().empty());
        CHECK(bimodule_step(tr, t.subspace) == t.subspace);
        auto u = graded_dual(idempotent_line(), 0);
        auto r = local_finiteness_probe(u, {b(L(u, "u"))});
        CHECK(r.finite);
        CHECK(r.dimension == 1);
        auto ex1 = builtin("example1");
        CHECK(local_finiteness_probe(ex1, {b(L(ex1, "e"))}).dimension == 1);
        CHECK_THROWS_AS(generated_subcoalgebra(ex1, {b(L(ex1, "e"))}, {0, 10}), PreconditionError);
    }

    TEST_CASE("odd generator in Example 7 and the mod 3 pattern of Example 9")
    {
        auto ex7 = builtin("example7");
        auto r7 = local_finiteness_probe(ex7, {b(Lb(ex7, "f", 1))}, {20, 4096});
        CHECK_FALSE(r7.finite);
        CHECK(r7.trace.dimensions.back() >= 21);

        auto ex9 = builtin("example9");
        auto r9 = local_finiteness_probe(ex9, {b(L(ex9, "f", 1)), b(L(ex9, "f", 2))}, {20, 4096});
        CHECK_FALSE(r9.finite);
        CHECK(r9.trace.subspace.contains_label(L(ex9, "e_1")));
        CHECK(r9.trace.subspace.contains_label(L(ex9, "e_2")));
        for (long n = 1; n <= 10; ++n)
            CHECK(r9.trace.subspace.contains_label(L(ex9, "f", 3 * n)));
    }

    TEST_CASE("Example 6 reaches x_0 within two steps")
    {
        auto ex6 = builtin("example6");
        for (long n = 0; n <= 10; ++n) {
            auto t = generated_subcoalgebra(ex6, {b(L(ex6, "x", n))}, {2, 4096});
            CHECK_MESSAGE(t.subspace.contains_label(L(ex6, "x", 0)), n);
        }
    }

    TEST_CASE("simplicity probe")
    {
        for (const char* name : {"example4", "example5", "example6"})
            CHECK_MESSAGE(simplicity_probe(builtin(name), 30, 5, 1).passed, name);
        CHECK(simplicity_probe(builtin("example8"), 20, 5, 1).passed);
        auto bad = simplicity_probe(builtin("example1"), 30, 5, 1);
        CHECK_FALSE(bad.passed);
        REQUIRE_FALSE(bad.witnesses.empty());
        CHECK(bad.witnesses[0].label == "e");
        CHECK_THROWS_AS(simplicity_probe(builtin("example4"), 0, 1, 1), PreconditionError);
    }
}
