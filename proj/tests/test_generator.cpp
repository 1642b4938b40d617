#include <stdexcept>

#include "doctest.h"
#include "subcomp/generator.hpp"

using namespace subcomp;

namespace {
const Alphabet kAb("ab");

Morphic fib() {
    Morphic m;
    m.rules.emplace('a', Word("ab"));
    m.rules.emplace('b', Word("a"));
    m.seed = 'a';
    return m;
}
}  // namespace

TEST_CASE("eventually periodic expansion") {
    Generator gen = EventuallyPeriodic{Word(), Word("ab")};
    CHECK(expand_prefix(gen, 5, kAb) == Word("ababa"));
    CHECK(expand_prefix(gen, 0, kAb) == Word());
    Generator with_prefix = EventuallyPeriodic{Word("b"), Word("a")};
    CHECK(expand_prefix(with_prefix, 4, kAb) == Word("baaa"));
}

TEST_CASE("morphic fixed points") {
    // a -> ab, b -> a iterates a, ab, aba, abaab, abaababa
    CHECK(expand_prefix(fib(), 8, kAb) == Word("abaababa"));
    Morphic tm;
    tm.rules.emplace('a', Word("ab"));
    tm.rules.emplace('b', Word("ba"));
    tm.seed = 'a';
    CHECK(expand_prefix(tm, 8, kAb) == Word("abbabaab"));
}

TEST_CASE("morphic coding") {
    Morphic m = fib();
    m.coding.emplace('a', 'b');
    m.coding.emplace('b', 'a');
    CHECK(expand_prefix(m, 8, kAb) == Word("babbabab"));
}

TEST_CASE("non-prolongable morphisms are rejected") {
    Morphic bad;
    bad.rules.emplace('a', Word("ba"));  // image does not start with the seed
    bad.rules.emplace('b', Word("a"));
    bad.seed = 'a';
    CHECK_THROWS_AS(expand_prefix(Generator{bad}, 4, kAb), std::invalid_argument);

    Morphic short_image;
    short_image.rules.emplace('a', Word("a"));  // fixed point cannot grow
    short_image.seed = 'a';
    CHECK_THROWS_AS(expand_prefix(Generator{short_image}, 4, kAb), std::invalid_argument);
}

TEST_CASE("sturmian standard words") {
    // All partial quotients 1: s_1 = ab, s_2 = aba, s_3 = abaab, s_4 = abaababa.
    Generator gen = SturmianCF{{1, 1}, {1}};
    CHECK(expand_prefix(gen, 8, kAb) == Word("abaababa"));
    // Matches the morphic fixed point of a -> ab, b -> a on a long prefix.
    CHECK(expand_prefix(gen, 500, kAb) == expand_prefix(fib(), 500, kAb));

    Generator zero = SturmianCF{{0}, {1}};
    CHECK_THROWS_AS(expand_prefix(zero, 4, kAb), std::invalid_argument);
    Generator no_tail = SturmianCF{{1}, {}};
    CHECK_THROWS_AS(expand_prefix(no_tail, 4, kAb), std::invalid_argument);
}

TEST_CASE("empty cycle is rejected") {
    Generator gen = EventuallyPeriodic{Word("a"), Word()};
    CHECK_THROWS_AS(expand_prefix(gen, 3, kAb), std::invalid_argument);
}
