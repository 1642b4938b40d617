#include <stdexcept>

#include "doctest.h"
#include "subcomp/source.hpp"

using namespace subcomp;

namespace {

const Alphabet kAb("ab");

std::set<Word> wordset(std::initializer_list<const char*> words) {
    std::set<Word> out;
    for (const char* w : words) out.insert(Word(std::string(w)));
    return out;
}

LanguageSource finite(std::initializer_list<const char*> words) {
    FiniteSource fin;
    for (const char* w : words) fin.words.insert(Word(std::string(w)));
    return LanguageSource{kAb, std::move(fin)};
}

}  // namespace

TEST_CASE("factors of U are a^{n-k} b^k") {
    LanguageSource u = make_builtin("U");
    FactorEnumeration f2 = enumerate_factors(u, 2);
    CHECK(f2.exact);
    CHECK(f2.factors.members == wordset({"aa", "ab", "bb"}));
    FactorEnumeration f0 = enumerate_factors(u, 0);
    CHECK(f0.factors.members == std::set<Word>{Word()});
}

TEST_CASE("factors of a^k b") {
    FactorEnumeration f3 = enumerate_factors(make_builtin("AKB"), 3);
    CHECK(f3.exact);
    CHECK(f3.factors.members == wordset({"aaa", "aab"}));
}

TEST_CASE("the two-sided word ...aaabbb... has the factors of U") {
    LanguageSource src = make_builtin("AAABBB");
    FactorEnumeration f2 = enumerate_factors(src, 2, 10);
    CHECK(f2.exact);
    CHECK(f2.factors.members == wordset({"aa", "ab", "bb"}));
    for (std::size_t n = 0; n <= 8; ++n)
        CHECK(enumerate_factors(src, n, 64).factors.members ==
              enumerate_factors(make_builtin("U"), n).factors.members);
}

TEST_CASE("finite sources enumerate exactly") {
    LanguageSource src = finite({"aabb", "ba"});
    CHECK(enumerate_factors(src, 2).factors.members == wordset({"aa", "ab", "bb", "ba"}));
    CHECK(enumerate_factors(src, 0).factors.members == std::set<Word>{Word()});
    CHECK(enumerate_factors(finite({}), 0).factors.members.empty());
}

TEST_CASE("horizon below n is rejected on word sources") {
    CHECK_THROWS_AS(enumerate_factors(make_builtin("FIBONACCI"), 5, 3), std::invalid_argument);
}

TEST_CASE("exactness flags for word sources") {
    LanguageSource periodic{kAb, InfiniteSource{EventuallyPeriodic{Word("b"), Word("ab")}}};
    CHECK(enumerate_factors(periodic, 4, 64).exact);         // 64 >= 1 + 2 + 4
    CHECK_FALSE(enumerate_factors(periodic, 4, 6).exact);    // window too small to prove
    CHECK_FALSE(enumerate_factors(make_builtin("FIBONACCI"), 4, 64).exact);
    CHECK(enumerate_factors(make_builtin("FIBONACCI"), 0, 64).exact);  // {empty} always
}

TEST_CASE("monotone window property") {
    LanguageSource fib = make_builtin("FIBONACCI");
    for (std::size_t n = 1; n <= 8; ++n) {
        auto small = enumerate_factors(fib, n, 32).factors.members;
        auto large = enumerate_factors(fib, n, 256).factors.members;
        for (const Word& w : small) CHECK(large.count(w) == 1);
    }
}

TEST_CASE("extendability") {
    CHECK(is_extendable(finite({"a", "ab"})) == Extendability::No);
    CHECK(is_extendable(finite({})) == Extendability::Yes);  // vacuously
    CHECK(is_extendable(make_builtin("U")) == Extendability::Yes);
    CHECK(is_extendable(make_builtin("AKB")) == Extendability::No);
    CHECK(is_extendable(make_builtin("FIBONACCI")) == Extendability::Yes);
    CHECK(is_extendable(make_builtin("AAABBB")) == Extendability::Yes);
}

TEST_CASE("periodic factor counts stabilize at the least period") {
    // |prefix| = 0: the count plateaus at the primitive root length.
    struct Case {
        const char* cycle;
        std::size_t period;
    };
    for (Case c : {Case{"ab", 2}, Case{"abab", 2}, Case{"aab", 3}, Case{"aabaab", 3},
                   Case{"a", 1}}) {
        LanguageSource src{kAb, InfiniteSource{EventuallyPeriodic{Word(), Word(std::string(c.cycle))}}};
        std::size_t n = 2 * c.period + 2;
        FactorEnumeration f = enumerate_factors(src, n, 128);
        CHECK(f.exact);
        CHECK(f.factors.size() == c.period);
    }
}

TEST_CASE("sturmian all-ones directive has complexity n+1") {
    LanguageSource src{kAb, InfiniteSource{SturmianCF{{1}, {1}}}};
    for (std::size_t n = 1; n <= 200; n += (n < 12 ? 1 : 47)) {
        FactorEnumeration f = enumerate_factors(src, n, 8192);
        CHECK(f.factors.size() == n + 1);
    }
}

TEST_CASE("length-zero enumeration distinguishes empty from non-empty languages") {
    Nfa no_finals(2, kAb);
    no_finals.add_transition(0, 'a', 1);
    no_finals.starts = {0};
    LanguageSource empty_regular{kAb, RegularSource{no_finals}};
    CHECK(enumerate_factors(empty_regular, 0).factors.size() == 0);

    LanguageSource u = make_builtin("U");
    CHECK(enumerate_factors(u, 0).factors.size() == 1);
    CHECK(enumerate_factors(finite({""}), 0).factors.size() == 1);
}

TEST_CASE("builtin catalog resolves every name") {
    for (const auto& info : builtin_catalog()) CHECK_NOTHROW(make_builtin(info.name));
    CHECK_THROWS_AS(make_builtin("NOPE"), std::invalid_argument);
}
