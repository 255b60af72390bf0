#include "coalg/constructions.hpp"
#include "coalg/identities.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace testing;

namespace {

FormalTensor D(const CoalgebraSpec&, const Label& b) { return FormalTensor::basis({b}); }

// (Δ⊗id - id⊗Δ)Δ
FormalTensor assoc_op(const CoalgebraSpec& s, const Label& b)
{
    FormalTensor d = apply_delta_at(s, D(s, b), 0);
    return apply_delta_at(s, d, 0) - apply_delta_at(s, d, 1);
}

FormalTensor permute(const FormalTensor& t, const std::vector<int>& perm)
{
    std::vector<FormalTensor::Term> raw;
    for (const auto& [k, c] : t.terms()) {
        TensorKey nk(k.size());
        for (std::size_t i = 0; i < k.size(); ++i)
            nk[static_cast<std::size_t>(perm[i] - 1)] = k[i];
        raw.emplace_back(nk, c);
    }
    return FormalTensor::from_terms(t.arity(), raw);
}

} // namespace

TEST_SUITE("identities")
{
    TEST_CASE("parse and print")
    {
        auto p = parse_identity("(x1 x2) x3 - x1 (x2 x3)");
        CHECK(p.arity() == 3);
        CHECK(p.multilinear());
        CHECK(parse_identity(to_string(p)) == p);
        CHECK(parse_identity("(x1,x2,x3)") == p);
        CHECK(parse_identity("[x1,x2]") == parse_identity("x1*x2 - x2*x1"));
        CHECK(parse_identity("1/2 x1 x2 + 1/2 x1 x2") == parse_identity("x1 x2"));
        auto d = parse_identity("x1' x2'");
        CHECK(d.terms().size() == 1);
        CHECK(d.terms()[0].second->left->derivative == 1);
        CHECK(parse_identity("(x1 x2)'") == parse_identity("x1' x2 + x1 x2'"));
        CHECK(parse_identity("-3/2 (x2 x1)") == Scalar(-3, 2) * parse_identity("x2 x1"));
    }

    TEST_CASE("parse errors carry a column")
    {
        auto col = [](const char* text) {
            try {
                parse_identity(text);
            } catch (const ParseError& e) {
                return e.where();
            }
            return std::string("no error");
        };
        CHECK(col("x1 x2 x3") == "column 1");
        CHECK(col("x1 + x0") == "column 6");
        CHECK(col("(x1 x2") == "column 7");
        CHECK(col("x1 - x1") == "column 1");
        CHECK(col("") == "column 1");
        CHECK(col("x1 ? x2") == "column 4");
        CHECK_THROWS_AS(parse_signature("eq"), ParseError);
    }

    TEST_CASE("translate renders operator expressions")
    {
        CHECK(translate(parse_identity("(x1 x2) x3 - x1 (x2 x3)"), {}).to_string() == "(Δ⊗id)Δ - (id⊗Δ)Δ");
        CHECK(translate(parse_identity("(x1 x2) x3 - (x1 x3) x2"), {}).to_string() ==
              "(Δ⊗id)Δ - (id⊗τ)(Δ⊗id)Δ");
        CHECK(translate(parse_identity("x1' x2'"), {}).to_string() == "(id⊗d)(d⊗id)Δ");
        CHECK_THROWS_AS(translate(parse_identity("x1 x1"), {}), PreconditionError);
    }

    TEST_CASE("translated right alternativity equals its operator form term for term")
    {
        auto ex9 = builtin("example9");
        auto phi = translate(lookup_identity("right-alternativity-linearized").poly, {});
        for (const Label& b : ex9.labels_up_to(40)) {
            FormalTensor a = assoc_op(ex9, b);
            FormalTensor want = a + flip(a, 2, false);
            CHECK(phi.apply(ex9, b) == want);
        }
    }

    TEST_CASE("translated Novikov identities equal their operator forms")
    {
        auto ex5 = builtin("example5");
        auto left_sym = translate(lookup_identity("left-symmetry").poly, {});
        auto right_comm = translate(lookup_identity("novikov-right-commutativity").poly, {});
        for (const Label& b : ex5.labels_up_to(20)) {
            FormalTensor a = assoc_op(ex5, b);
            CHECK(left_sym.apply(ex5, b) == a - flip(a, 1, false));
            FormalTensor dd = apply_delta_at(ex5, apply_delta_at(ex5, D(ex5, b), 0), 0);
            CHECK(right_comm.apply(ex5, b) == dd - flip(dd, 2, false));
        }
    }

    TEST_CASE("catalog")
    {
        CHECK(lookup_identity("novikov-right-commutativity").poly == parse_identity("(x1 x2) x3 - (x1 x3) x2"));
        CHECK(lookup_identity("right-alternativity-linearized").poly == parse_identity("(x1,x2,x3) + (x1,x3,x2)"));
        CHECK(lookup_identity("jacobi").poly == parse_identity("(x1 x2) x3 + (x2 x3) x1 + (x3 x1) x2"));
        for (const auto& e : builtin_identities())
            CHECK_MESSAGE(e.poly.multilinear(), e.name);
        CHECK(lookup_identity("jordan-linearized").poly.arity() == 4);
        CHECK_THROWS_AS(lookup_identity("nope"), PreconditionError);
    }

    TEST_CASE("linearize")
    {
        CHECK(linearize(parse_identity("(x1 x2) x2 - x1 (x2 x2)")) ==
              parse_identity("(x1 x2) x3 + (x1 x3) x2 - x1 (x2 x3) - x1 (x3 x2)"));
        CHECK(linearize(parse_identity("x1 x1")) == parse_identity("x1 x2 + x2 x1"));
        auto jordan = parse_identity("((x1 x1) x2) x1 - (x1 x1) (x2 x1)");
        auto lin = linearize(jordan);
        CHECK(lin.terms().size() == 12);
        CHECK(lin.multilinear());
        CHECK(substitute_slots(lin, {1, 1, 1, 2}) == Scalar(6) * jordan);
        auto sq = linearize(parse_identity("x1 x1"));
        CHECK(substitute_slots(sq, {1, 1}) == Scalar(2) * parse_identity("x1 x1"));
        CHECK_THROWS_AS(linearize(parse_identity("x1 x1 + x1")), PreconditionError);
        CHECK_THROWS_AS(linearize(parse_identity("x1 x2").with_signature("oo")), PreconditionError);
    }

    TEST_CASE("check_identity on the builtin examples")
    {
        CHECK(check_identity(builtin("example2"), lookup_identity("left-nilpotent-3").poly, {40}).passed);
        CHECK(check_identity(builtin("example1"), lookup_identity("derivative-products").poly, {40}).passed);
        CHECK(check_identity(builtin("example3"), lookup_identity("metabelian").poly, {30}).passed);
        CHECK(check_identity(builtin("example3"), lookup_identity("jacobi").poly, {30}).passed);
        CHECK(check_identity(builtin("example3"), lookup_identity("anticommutativity").poly, {30}).passed);
        CHECK(check_identity(builtin("example1"), lookup_identity("associativity").poly, {30}).passed);
        CHECK_FALSE(check_identity(builtin("example2"), lookup_identity("associativity").poly, {30}).passed);
        for (const char* id : {"right-alternativity-linearized", "moufang-linearized", "left-nilpotent-4",
                               "square-zero-products"})
            CHECK_MESSAGE(check_identity(builtin("example9"), lookup_identity(id).poly, {60}).passed, id);
        CHECK_FALSE(check_identity(builtin("example9"), lookup_identity("associativity").poly, {30}).passed);
    }

    TEST_CASE("sign sensitivity on Example 7")
    {
        auto ex7 = builtin("example7");
        CHECK(check_identity(ex7, lookup_identity("supercommutativity").poly, {30}).passed);
        auto plain = check_identity(ex7, lookup_identity("commutativity").poly, {30});
        CHECK_FALSE(plain.passed);
        REQUIRE_FALSE(plain.witnesses.empty());
        CHECK(plain.witnesses[0].label.rfind("f_", 0) == 0);
        // (z1 z2)(z3 z4) = 0 for odd z, and commutativity for even-even and even-odd pairs.
        CHECK(check_identity(ex7, lookup_identity("square-zero-products").poly.with_signature("oooo"), {30}).passed);
        CHECK(check_identity(ex7, parse_identity("x1 x2 - x2 x1").with_signature("ee"), {30}).passed);
        CHECK(check_identity(ex7, parse_identity("x1 x2 - x2 x1").with_signature("eo"), {30}).passed);
        for (bool kp : {false, true}) {
            CHECK(check_identity(ex7, lookup_identity("supercommutativity").poly, {30}, kp).passed);
            CHECK(check_identity(ex7, lookup_identity("square-zero-products").poly.with_signature("oooo"), {30}, kp)
                      .passed);
        }
        // Jordan consequences on every parity signature.
        const auto& jordan = lookup_identity("jordan-linearized").poly;
        for (int mask = 0; mask < 16; ++mask) {
            std::string sig;
            for (int k = 0; k < 4; ++k)
                sig += (mask >> k) & 1 ? 'o' : 'e';
            CHECK_MESSAGE(check_identity(ex7, jordan.with_signature(sig), {20}).passed, sig);
            CHECK_MESSAGE(check_identity(builtin("example8"), jordan.with_signature(sig), {12}).passed, sig);
        }
    }

    TEST_CASE("permuting slots permutes the coidentity factors")
    {
        auto ex4 = builtin("example4");
        for (const char* id : {"jacobi", "left-symmetry", "moufang-linearized", "metabelian"}) {
            const NAPoly& p = lookup_identity(id).poly;
            std::vector<int> perm(static_cast<std::size_t>(p.arity()));
            for (int i = 0; i < p.arity(); ++i)
                perm[static_cast<std::size_t>(i)] = i + 1;
            std::swap(perm[0], perm[1]);
            auto phi = translate(p, {});
            auto phi2 = translate(p.relabel(perm), {});
            for (const Label& b : ex4.labels_up_to(8))
                CHECK(phi2.apply(ex4, b) == permute(phi.apply(ex4, b), perm));
        }
    }
}
