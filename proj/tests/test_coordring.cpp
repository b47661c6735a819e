#include "unicluster/coordring.hpp"
#include "unicluster/verify.hpp"

#include <doctest.h>

using namespace unicluster;

namespace {
MultiPoly P(const std::string& s) { return MultiPoly::parse(s); }
}

TEST_CASE("generic matrix entries") {
    SymUniMat g = generic_matrix();
    CHECK(g.entry(1, 2) == MultiPoly::variable(Var::a12));
    CHECK(g.entry(2, 2) == MultiPoly(1));
    CHECK(g.entry(3, 1).is_zero());
}

TEST_CASE("minors of the generic matrix") {
    SymUniMat g = generic_matrix();
    CHECK(minor(g, MinorSpec::parse("D[12][23]")) == P("a12*a23 - a13"));
    CHECK(minor(g, MinorSpec::parse("D[2][4]")) == P("a24"));
    CHECK(minor(g, MinorSpec::parse("D[23][34]")) == P("a23*a34 - a24"));
    CHECK(minor(g, MinorSpec::parse("D[123][234]")) == P("a12*a23*a34 - a12*a24 - a13*a34 + a14"));
    SymUniMat id;
    CHECK(minor(id, MinorSpec::parse("D[1][2]")).is_zero());
}

TEST_CASE("one-parameter subgroups") {
    MultiPoly t = MultiPoly::variable(Var::t1);
    CHECK(one_param(1, t).entry(1, 2) == t);
    CHECK(one_param(3, t).entry(3, 4) == t);
    CHECK(one_param(2, MultiPoly(0)) == SymUniMat{});
    CHECK_THROWS(one_param(4, t));
}

TEST_CASE("word validation is computational") {
    CHECK(validate_word({2, 1, 3, 2, 1, 3}));
    CHECK_FALSE(validate_word({1, 1, 1, 1, 1, 1}));
    // Independent oracle: multiply the transpositions by hand.
    {
        int perm[4] = {1, 2, 3, 4};
        for (int s : {1, 2, 1, 3, 2, 1}) std::swap(perm[s - 1], perm[s]);
        bool is_longest = perm[0] == 4 && perm[1] == 3 && perm[2] == 2 && perm[3] == 1;
        CHECK(is_longest);
        CHECK(validate_word({1, 2, 1, 3, 2, 1}) == is_longest);
    }
    CHECK_FALSE(validate_word({2, 1, 3, 2, 1}));     // too short
    CHECK_FALSE(validate_word({2, 1, 3, 2, 1, 2}));  // wrong permutation
    CHECK_FALSE(Word::parse("111111").has_value());
    CHECK(Word::parse("213213").has_value());
}

TEST_CASE("word matrix rejects invalid words") {
    Word bad{{1, 1, 1, 1, 1, 1}};
    CHECK_THROWS(word_matrix(bad));
}

TEST_CASE("word matrix matches the worked product") {
    SymUniMat m = word_matrix(*Word::parse("213213"));
    CHECK(m.entry(1, 2) == P("t2 + t5"));
    CHECK(m.entry(1, 3) == P("t2*t4"));
    CHECK(m.entry(1, 4) == P("t2*t4*t6"));
    CHECK(m.entry(2, 3) == P("t1 + t4"));
    CHECK(m.entry(2, 4) == P("t1*t3 + t1*t6 + t4*t6"));
    CHECK(m.entry(3, 4) == P("t3 + t6"));
}

TEST_CASE("the twelve non-trivial minors") {
    const auto& list = nontrivial_minors();
    CHECK(list.size() == 12);
    CHECK(std::count(list.begin(), list.end(), MinorSpec::parse("D[123][234]")) == 1);
    CHECK(std::count(list.begin(), list.end(), MinorSpec::parse("D[1][1]")) == 0);
    // Integer coefficients, degree bounded by the number of rows.
    for (const auto& spec : list) {
        const MultiPoly& p = generic_minor(spec);
        CHECK(p.total_degree() <= static_cast<int>(spec.rows.size()));
        CHECK_FALSE(p.is_zero());
    }
}

TEST_CASE("exchange identities") {
    auto D = [](const char* s) { return MinorSpec::parse(s); };
    CHECK(check_identity({D("D[12][24]"), D("D[23][34]")},
                         {{D("D[123][234]"), D("D[2][4]")}, {D("D[3][4]"), D("D[12][34]")}}));
    CHECK(check_identity({D("D[1][2]"), D("D[2][4]")}, {{D("D[12][24]")}, {D("D[1][4]")}}));
    CHECK_FALSE(check_identity({D("D[1][2]"), D("D[2][3]")}, {{D("D[12][23]")}, {D("D[1][4]")}}));
}

TEST_CASE("total positivity at t = 1") {
    std::array<Rational, 6> ones;
    ones.fill(Rational(1));
    RatUniMat m = evaluate_at(word_matrix(*Word::parse("213213")), ones);
    CHECK(is_totally_positive(m));
    CHECK(criterion_six(m));

    RatUniMat id;
    CHECK_FALSE(is_totally_positive(id));
    CHECK_FALSE(criterion_six(id));

    RatUniMat neg;
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) neg.set(i, j, Rational(1));
    neg.set(1, 2, Rational(-1));
    CHECK_FALSE(is_totally_positive(neg));
}

TEST_CASE("criterion equivalence on seeded samples") {
    SampleRng rng(2024);
    int agreements = 0;
    for (int i = 0; i < 250; ++i) {
        RatUniMat m = random_unitriangular(rng);
        CHECK(criterion_six(m) == is_totally_positive(m));
        ++agreements;
    }
    CHECK(agreements == 250);
    for (int i = 0; i < 50; ++i) {
        RatUniMat m = random_positive_parametrized(rng, *Word::parse(i % 2 ? "121321" : "213213"));
        CHECK(is_totally_positive(m));
    }
}

TEST_CASE("exactly sixteen reduced words represent the longest element") {
    // Exhaustive scan of all length-6 sequences over {1,2,3}; the count of
    // standard Young tableaux of staircase shape (3,2,1) is 16.
    std::vector<Word> words;
    for (int code = 0; code < 729; ++code) {
        int c = code;
        std::string digits;
        for (int k = 0; k < 6; ++k) {
            digits += static_cast<char>('1' + c % 3);
            c /= 3;
        }
        auto w = Word::parse(digits);
        if (w) words.push_back(*w);
    }
    CHECK(words.size() == 16);
    // Positive parameters land in the totally positive part for every word.
    SampleRng rng(99);
    for (const Word& w : words) {
        RatUniMat m = random_positive_parametrized(rng, w);
        CHECK(is_totally_positive(m));
        CHECK(criterion_six(m));
    }
}

TEST_CASE("minor spec parsing") {
    MinorSpec s = MinorSpec::parse("D[123][234]");
    CHECK(s.rows == std::vector<int>{1, 2, 3});
    CHECK(s.to_string() == "D[123][234]");
    CHECK_THROWS(MinorSpec::parse("D[12][2]"));
    CHECK_THROWS(MinorSpec::parse("D[21][12]"));
    CHECK_THROWS(MinorSpec::parse("D[1234][1234]"));
    CHECK_THROWS(MinorSpec::parse("[1][2]"));
}
