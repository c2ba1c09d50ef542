#include "planar/encodings.hpp"
#include "planar/term.hpp"
#include "planar/typing.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace planar;

namespace {

std::vector<std::string> occurrence_names(const Term& t)
{
    std::vector<std::string> out;
    for (const auto& o : free_occurrences(t)) {
        out.push_back(o.name);
    }
    return out;
}

std::vector<Term> combinator_corpus()
{
    std::vector<Term> out = {mk_bool(Bit::zero), mk_bool(Bit::one)};
    for (Connective c : {Connective::cstt, Connective::cstf, Connective::not_, Connective::and_, Connective::or_,
                         Connective::id, Connective::compose}) {
        out.push_back(mk_connective(c));
    }
    for (std::size_t n = 0; n <= 4; ++n) {
        out.push_back(encode_bitvec(BitVector(n, Bit::one)));
        out.push_back(mk_vector_op(AppendConst{Bit::zero, n}));
        out.push_back(mk_vector_op(NotInPlace{n}));
        out.push_back(mk_vector_op(AndInPlace{n}));
        out.push_back(mk_vector_op(Last{n + 1}));
        for (std::size_t i = 1; i <= n; ++i) {
            out.push_back(mk_vector_op(Fetch{i, n}));
            out.push_back(mk_vector_op(NotAppend{i, n}));
            for (std::size_t j = 1; j <= n; ++j) {
                out.push_back(mk_gate_and(i, j, n));
                out.push_back(mk_gate_or(i, j, n));
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("Context rejects duplicate names")
{
    CHECK_NOTHROW(Context({"a", "b"}));
    CHECK_THROWS_AS(Context({"a", "a"}), std::invalid_argument);
    CHECK(format_context(Context({"f", "g"})) == "[f, g]");
    CHECK(format_context(Context()) == "[]");
}

TEST_CASE("check_linear examples")
{
    CHECK(check_linear(parse_term("\\x. \\y. \\f. f y x")).linear());

    const auto dup = check_linear(parse_term("\\x. x x"));
    CHECK_FALSE(dup.linear());
    REQUIRE(dup.witnesses.size() == 1);
    CHECK(dup.witnesses[0].name == "x");
    CHECK(dup.witnesses[0].occurrences == 2);
    CHECK(dup.witnesses[0].bound);
    CHECK(dup.witnesses[0].binder.empty());

    const auto weak = check_linear(parse_term("\\x. \\y. x"));
    CHECK_FALSE(weak.linear());
    REQUIRE(weak.witnesses.size() == 1);
    CHECK(weak.witnesses[0].name == "y");
    CHECK(weak.witnesses[0].occurrences == 0);
    CHECK(weak.witnesses[0].binder == Path{Dir::body});

    const auto free_twice = check_linear(parse_term("f f"));
    CHECK_FALSE(free_twice.linear());
    REQUIRE(free_twice.witnesses.size() == 1);
    CHECK_FALSE(free_twice.witnesses[0].bound);
    CHECK(free_twice.witnesses[0].occurrences == 2);

    CHECK(is_linear(parse_term("f (\\x. x) g")));
    CHECK(is_linear(parse_term("\\x. x (\\x. x)")));
    CHECK_FALSE(is_linear(parse_term("\\x. (\\x. x) x x")));
}

TEST_CASE("infer_planar_context examples")
{
    const auto ok = infer_planar_context(parse_term("\\x. \\y. f x y"));
    REQUIRE(ok.ok());
    CHECK(ok.context() == Context({"f"}));

    const auto bad = infer_planar_context(parse_term("\\x. \\y. f y x"));
    REQUIRE_FALSE(bad.ok());
    CHECK(bad.failure().at == Path{Dir::body});
    CHECK_FALSE(bad.failure().linearity.has_value());

    const auto closed = infer_planar_context(parse_term("\\k. \\f. k f (\\x. x)"));
    REQUIRE(closed.ok());
    CHECK(closed.context().empty());

    const auto open = infer_planar_context(parse_term("f (g x) y"));
    REQUIRE(open.ok());
    CHECK(open.context() == Context({"f", "g", "x", "y"}));

    const auto nonlinear = infer_planar_context(parse_term("\\a. \\x. x x"));
    REQUIRE_FALSE(nonlinear.ok());
    REQUIRE(nonlinear.failure().linearity.has_value());
    CHECK_FALSE(nonlinear.failure().linearity->linear());
    CHECK(nonlinear.failure().at == Path{});
}

TEST_CASE("failure reports the leftmost-outermost violating abstraction")
{
    // Both the outer lambda (binder z) and the inner one in the argument
    // violate; the outer is reported.
    const auto v = infer_planar_context(parse_term("\\z. z (\\a. \\b. f b a)"));
    REQUIRE_FALSE(v.ok());
    CHECK(v.failure().at == Path{});

    // Only the right-hand argument violates.
    const auto w = infer_planar_context(parse_term("g (\\p. p) (\\a. \\b. h b a)"));
    REQUIRE_FALSE(w.ok());
    CHECK(w.failure().at == Path{Dir::arg, Dir::body});
}

TEST_CASE("check_planar examples")
{
    CHECK(check_planar(mk_bool(Bit::one)));
    CHECK(check_planar(mk_bool(Bit::zero)));
    CHECK_FALSE(check_planar(parse_term("\\x. \\y. \\f. f y x")));
    CHECK(check_planar(parse_term("\\x. x")));
    CHECK(check_planar(parse_term("\\x. \\y. f x y")));
    CHECK_FALSE(check_planar(parse_term("\\x. \\y. f y x")));
    CHECK_FALSE(check_planar(parse_term("\\x. x x")));
}

TEST_CASE("exchange separates linear from planar")
{
    const Term swapped_false = parse_term("\\x. \\y. \\f. f y x");
    CHECK(check_linear(swapped_false).linear());
    CHECK_FALSE(check_planar(swapped_false));
    CHECK(oracle::derivable_with_exchange({}, swapped_false));
    CHECK_FALSE(oracle::derivable_ordered({}, swapped_false));
}

TEST_CASE("enumerate_planar small cases")
{
    const auto two = enumerate_planar(2);
    REQUIRE(two.size() == 1);
    CHECK(alpha_eq(two[0], parse_term("\\x. x")));

    const auto four = enumerate_planar(4);
    CHECK(four.size() == 1);
    const auto five = enumerate_planar(5);
    bool found = false;
    for (const Term& t : five) {
        found = found || alpha_eq(t, parse_term("\\x. \\y. x y"));
    }
    CHECK(found);

    CHECK_THROWS_AS(enumerate_planar(max_enumeration_size + 1), std::invalid_argument);
}

TEST_CASE("enumerator matches generate-and-filter over all linear terms")
{
    // The oracle names binders by depth exactly like the enumerator, so
    // alpha-classes coincide with printed strings.
    std::map<std::size_t, std::set<std::string>> expected;
    for (std::size_t size = 1; size <= 14; ++size) {
        for (const Term& t : oracle::linear_terms(size, {}, 0)) {
            if (oracle::derivable_ordered({}, t)) {
                expected[size].insert(print_term(t));
            }
        }
    }
    std::map<std::size_t, std::set<std::string>> actual;
    std::size_t visited = 0;
    for_each_planar(14, [&](const Term& t) {
        ++visited;
        CHECK(check_planar(t));
        CHECK(free_occurrences(t).empty());
        const bool fresh = actual[term_size(t)].insert(print_term(t)).second;
        CHECK(fresh);
    });
    std::size_t total = 0;
    for (std::size_t size = 1; size <= 14; ++size) {
        CAPTURE(size);
        CHECK(actual[size] == expected[size]);
        total += expected[size].size();
    }
    CHECK(visited == total);
    // Only sizes 3L-1 occur for closed linear terms.
    for (const auto& [size, terms] : expected) {
        if (!terms.empty()) {
            CHECK(size % 3 == 2);
        }
    }
}

TEST_CASE("enumerated terms are pairwise alpha-distinct")
{
    const auto terms = enumerate_planar(11);
    for (std::size_t a = 0; a < terms.size(); ++a) {
        for (std::size_t b = a + 1; b < terms.size(); ++b) {
            if (term_size(terms[a]) == term_size(terms[b])) {
                CHECK_FALSE(alpha_eq(terms[a], terms[b]));
            }
        }
    }
}

TEST_CASE("checkers agree with naive derivation search on all closed terms up to size 8")
{
    std::size_t linear_count = 0;
    std::size_t planar_count = 0;
    for (std::size_t size = 1; size <= 8; ++size) {
        for (const Term& t : oracle::raw_terms(size, 0)) {
            const bool exc = oracle::derivable_with_exchange({}, t);
            const bool ord = oracle::derivable_ordered({}, t);
            CAPTURE(print_term(t));
            CHECK(check_linear(t).linear() == exc);
            CHECK(check_planar(t) == ord);
            linear_count += exc ? 1 : 0;
            planar_count += ord ? 1 : 0;
        }
    }
    CHECK(planar_count > 0);
    CHECK(linear_count > planar_count);
}

TEST_CASE("open terms: an ordering exists exactly when the inferred one works")
{
    for (std::size_t size = 1; size <= 7; ++size) {
        for (const Term& t : oracle::raw_terms(size, 2)) {
            CAPTURE(print_term(t));
            const auto names = occurrence_names(t);
            std::set<std::string> distinct(names.begin(), names.end());
            const bool linear = check_linear(t).linear();
            if (distinct.size() != names.size()) {
                CHECK_FALSE(linear);
                continue;
            }
            std::vector<std::string> perm(distinct.begin(), distinct.end());
            bool any_ordered = false;
            bool any_exchange = false;
            std::vector<std::vector<std::string>> working;
            do {
                if (oracle::derivable_ordered(perm, t)) {
                    any_ordered = true;
                    working.push_back(perm);
                }
                any_exchange = any_exchange || oracle::derivable_with_exchange(perm, t);
            } while (std::next_permutation(perm.begin(), perm.end()));

            CHECK(linear == any_exchange);
            const auto verdict = infer_planar_context(t);
            CHECK(verdict.ok() == any_ordered);
            if (verdict.ok()) {
                REQUIRE(working.size() == 1);
                CHECK(verdict.context().names() == working[0]);
            }
        }
    }
}

TEST_CASE("inferred context is the left-to-right free occurrence list")
{
    std::size_t checked = 0;
    auto check = [&](const Term& t) {
        const auto v = infer_planar_context(t);
        REQUIRE(v.ok());
        CHECK(v.context().names() == occurrence_names(t));
        CHECK(check_linear(t).linear());
        ++checked;
    };
    for_each_planar(14, check);
    for (const Term& t : combinator_corpus()) {
        CAPTURE(print_term(t));
        check(t);
    }
    // Open subterms of planar terms are planar with their own contexts.
    for (const Term& t : enumerate_planar(11)) {
        if (t.is_lam()) {
            check(t.body());
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("planar implies linear on raw corpus")
{
    for (std::size_t size = 1; size <= 7; ++size) {
        for (const Term& t : oracle::raw_terms(size, 1)) {
            if (check_planar(t)) {
                CHECK(check_linear(t).linear());
            }
        }
    }
}
