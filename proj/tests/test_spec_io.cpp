#include "coalg/constructions.hpp"
#include "coalg/spec_io.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace testing;

namespace {

std::string where_of(const std::string& text)
{
    try {
        parse_spec_json(text);
    } catch (const ParseError& e) {
        return e.where();
    }
    return "no error";
}

const char* ex1_text = R"({
  "name": "ex1",
  "field": "Q",
  "families": [
    {"name": "e", "range": [0, 0]},
    {"name": "f", "range": [1, null]}
  ],
  "delta": [
    {"family": "e", "terms": [{"factors": ["e[0]", "e[0]"]}]},
    {"family": "f", "terms": [{"factors": ["f[n]", "e[0]"]}, {"factors": ["e[0]", "f[n]"]}]}
  ],
  "coderivation": [
    {"family": "f", "terms": [{"factors": ["f[n+1]"]}]}
  ],
  "shift_bound": 1
})";

} // namespace

TEST_SUITE("specio")
{
    TEST_CASE("a handwritten spec file matches the builtin")
    {
        auto s = parse_spec_json(ex1_text);
        CHECK(s.name() == "ex1");
        auto ex1 = builtin("example1");
        for (const Label& l : ex1.labels_up_to(30)) {
            CHECK(delta(s, l) == delta(ex1, l));
            CHECK(apply_d(s, l) == apply_d(ex1, l));
        }
    }

    TEST_CASE("builtins round-trip through the spec format")
    {
        for (const auto& info : builtin_catalog()) {
            auto spec = builtin(info.name);
            std::string text = spec_to_json(spec);
            auto back = parse_spec_json(text);
            CHECK(back.name() == spec.name());
            CHECK(back.graded() == spec.graded());
            CHECK(back.shift_bound() == spec.shift_bound());
            CHECK(spec_to_json(back) == text);
            for (const Label& l : spec.labels_up_to(30)) {
                CHECK_MESSAGE(delta(back, l) == delta(spec, l), info.name);
                if (spec.differential())
                    CHECK(apply_d(back, l) == apply_d(spec, l));
            }
        }
        auto gd = graded_dual(truncated_polynomial_algebra(3), 5);
        auto back = parse_spec_json(spec_to_json(gd));
        for (const Label& l : gd.labels_up_to(2))
            CHECK(delta(back, l) == delta(gd, l));
    }

    TEST_CASE("errors cite a position and the offending key")
    {
        CHECK(where_of("{\n  \"field\": \"Q\",\n  \"familes\": []\n}") == "line 3, column 3 (/familes)");
        CHECK(where_of("{\"field\": \"R\"}") == "line 1, column 2 (/field)");
        CHECK(where_of("{\"field\": \"Q\",\n \"families\": [{\"name\": \"e\", \"range\": [0, 0]}],\n \"delta\": "
                       "[{\"family\": \"g\", \"terms\": []}], \"shift_bound\": 0}") ==
              "line 3, column 13 (/delta/0/family)");
        CHECK(where_of("{\"field\": \"Q\",\n  ]") == "line 2, column 3");
        std::string bad_factor = ex1_text;
        bad_factor.replace(bad_factor.find("f[n+1]"), 6, "f[n+*]");
        CHECK(where_of(bad_factor) == "line 13, column 44 (/coderivation/0/terms/0/factors/0)");
        std::string odd = ex1_text;
        odd.replace(odd.find("\"range\": [0, 0]"), 15, "\"parity\": 1, \"range\": [0, 0]");
        CHECK(where_of(odd).find("(/graded)") != std::string::npos);
        CHECK_THROWS_AS(load_spec_file("/nonexistent.json"), ParseError);
    }

    TEST_CASE("guards and sums")
    {
        const char* text = R"({"field": "Q", "families": [{"name": "x", "range": [0, null]}],
          "delta": [{"family": "x", "terms": [
            {"sum": [{"var": "i", "from": 0, "to": "n"}], "where": ["i % 2 == 0", "n - i >= 1"],
             "coeff": "i + 1", "factors": ["x[i]", "x[n-i]"]}]}],
          "shift_bound": 0})";
        auto s = parse_spec_json(text);
        CHECK(delta(s, L(s, "x", 4)) == T({{1, {L(s, "x", 0), L(s, "x", 4)}}, {3, {L(s, "x", 2), L(s, "x", 2)}}}));
        CHECK(parse_spec_json(spec_to_json(s)).delta_rule().families[0].terms == s.delta_rule().families[0].terms);
    }

    TEST_CASE("labels and vectors on the command line")
    {
        auto ex7 = builtin("example7");
        CHECK(parse_label(ex7, "f:3") == L(ex7, "f", 3));
        CHECK(parse_label(ex7, "~f:3") == Lb(ex7, "f", 3));
        CHECK(parse_vector(ex7, "2*f:1 - 1/2*~e:0") == V({{2, L(ex7, "f", 1)}, {Scalar(-1, 2), Lb(ex7, "e")}}));
        CHECK_THROWS_AS(parse_label(ex7, "g:1"), ParseError);
        CHECK_THROWS_AS(parse_label(ex7, "f"), ParseError);
        CHECK_THROWS_AS(parse_label(ex7, "f:0"), RangeError);
        CHECK(fnv1a64_hex("") == "cbf29ce484222325");
        CHECK(fnv1a64_hex("a") == "af63dc4c8601ec8c");
    }
}
