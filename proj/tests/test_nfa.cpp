#include <random>

#include "doctest.h"
#include "subcomp/nfa.hpp"
#include "subcomp/source.hpp"
#include "subcomp/verify.hpp"

using namespace subcomp;

namespace {

const Alphabet kAb("ab");

Nfa single_word_nfa(const std::string& w) {
    Nfa nfa(w.size() + 1, kAb);
    for (std::size_t i = 0; i < w.size(); ++i)
        nfa.add_transition(static_cast<State>(i), w[i], static_cast<State>(i + 1));
    nfa.starts = {0};
    nfa.finals = {static_cast<State>(w.size())};
    return nfa;
}

const Nfa& u_nfa() {
    static const Nfa nfa = std::get<RegularSource>(make_builtin("U").kind).automaton;
    return nfa;
}

const Nfa& akb_nfa() {
    static const Nfa nfa = std::get<RegularSource>(make_builtin("AKB").kind).automaton;
    return nfa;
}

std::set<Word> words_up_to(const Dfa& dfa, std::size_t max_len) {
    std::set<Word> out;
    for (std::size_t n = 0; n <= max_len; ++n) {
        std::set<Word> words = enumerate_words(dfa, n);
        out.insert(words.begin(), words.end());
    }
    return out;
}

}  // namespace

TEST_CASE("determinize a one-state loop") {
    Nfa nfa(1, kAb);
    nfa.add_transition(0, 'a', 0);
    nfa.starts = {0};
    nfa.finals = {0};
    Dfa dfa = determinize(nfa);
    CHECK(dfa.state_count == 1);
    CHECK(accepts(dfa, Word("aaa")));
    CHECK_FALSE(accepts(dfa, Word("ab")));
}

TEST_CASE("determinize the a*b* automaton") {
    Dfa dfa = determinize(u_nfa());
    CHECK(dfa.state_count == 2);
    CHECK(accepts(dfa, Word("aabb")));
    CHECK(accepts(dfa, Word()));
    CHECK_FALSE(accepts(dfa, Word("ba")));
}

TEST_CASE("determinize an automaton with no finals") {
    Nfa nfa(2, kAb);
    nfa.add_transition(0, 'a', 1);
    nfa.starts = {0};
    Dfa dfa = determinize(nfa);
    CHECK(dfa.finals.empty());
    CHECK_FALSE(accepts(dfa, Word("a")));
}

TEST_CASE("minimal DFA of a*b* has two states") {
    Dfa dfa = minimize(determinize(u_nfa()));
    CHECK(dfa.state_count == 2);
    CHECK(words_up_to(dfa, 4) == words_up_to(determinize(u_nfa()), 4));
}

TEST_CASE("trim drops unreachable states") {
    Nfa nfa(3, kAb);
    nfa.add_transition(0, 'a', 1);
    nfa.add_transition(2, 'b', 1);  // unreachable from the start
    nfa.starts = {0};
    nfa.finals = {1};
    Nfa trimmed = trim(nfa);
    CHECK(trimmed.state_count == 2);
    CHECK(accepts(trimmed, Word("a")));
}

TEST_CASE("minimize is idempotent") {
    std::mt19937_64 seeds(5);
    for (int i = 0; i < 50; ++i) {
        Nfa nfa = build_random_nfa(make_random_spec(99, static_cast<std::uint64_t>(i)));
        Dfa m1 = minimize(determinize(nfa));
        Dfa m2 = minimize(m1);
        CHECK(m1.state_count == m2.state_count);
        CHECK(words_up_to(m1, 5) == words_up_to(m2, 5));
    }
}

TEST_CASE("factor closure of a single word") {
    Nfa closure = factor_closure(single_word_nfa("ab"));
    CHECK(accepts(closure, Word()));
    CHECK(accepts(closure, Word("a")));
    CHECK(accepts(closure, Word("b")));
    CHECK(accepts(closure, Word("ab")));
    CHECK_FALSE(accepts(closure, Word("ba")));
    CHECK_FALSE(accepts(closure, Word("aa")));
}

TEST_CASE("U is factor-closed") {
    Dfa u = language_dfa(u_nfa());
    Dfa fact_u = factor_dfa(u_nfa());
    CHECK(words_up_to(u, 6) == words_up_to(fact_u, 6));
}

TEST_CASE("factor closure is idempotent on the language") {
    std::mt19937_64 seeds(7);
    for (int i = 0; i < 30; ++i) {
        Nfa nfa = build_random_nfa(make_random_spec(1234, static_cast<std::uint64_t>(i)));
        Nfa once = factor_closure(nfa);
        Nfa twice = factor_closure(once);
        CHECK(words_up_to(language_dfa(once), 5) == words_up_to(language_dfa(twice), 5));
    }
}

TEST_CASE("shift_finals by zero keeps the language") {
    Dfa before = language_dfa(akb_nfa());
    Dfa after = language_dfa(shift_finals(akb_nfa(), 0));
    CHECK(words_up_to(before, 6) == words_up_to(after, 6));
}

TEST_CASE("shift_finals examples") {
    // L = {ab}: words with w A^1 meeting L are exactly {a}.
    Dfa shifted = language_dfa(shift_finals(single_word_nfa("ab"), 1));
    CHECK(words_up_to(shifted, 4) == std::set<Word>{Word("a")});

    // L = a* b: shifting by one gives a*.
    Dfa akb1 = language_dfa(shift_finals(akb_nfa(), 1));
    CHECK(words_up_to(akb1, 3) ==
          std::set<Word>{Word(), Word("a"), Word("aa"), Word("aaa")});
}

TEST_CASE("shift_finals composes additively") {
    for (int i = 0; i < 40; ++i) {
        Nfa nfa = build_random_nfa(make_random_spec(321, static_cast<std::uint64_t>(i)));
        std::mt19937_64 rng(static_cast<std::uint64_t>(i));
        std::size_t a = rng() % 4, b = rng() % 4;
        Dfa composed = language_dfa(shift_finals(shift_finals(nfa, a), b));
        Dfa direct = language_dfa(shift_finals(nfa, a + b));
        CHECK(words_up_to(composed, 5) == words_up_to(direct, 5));
    }
}

TEST_CASE("stabilize_lprime on the running examples") {
    // U: the chain is constant from the start and Fact(L') = U.
    LprimeResult u = stabilize_lprime(u_nfa());
    CHECK(u.entry_index == 0);
    CHECK(words_up_to(language_dfa(u.fact_lprime), 4) == words_up_to(language_dfa(u_nfa()), 4));

    // A finite language dies out: Fact(L') is empty.
    LprimeResult fin = stabilize_lprime(single_word_nfa("ab"));
    CHECK(words_up_to(language_dfa(fin.fact_lprime), 4).empty());

    // L = a* b: L_1 = a*, and factors of L' are a*.
    LprimeResult akb = stabilize_lprime(akb_nfa());
    std::set<Word> expected{Word(), Word("a"), Word("aa"), Word("aaa")};
    CHECK(words_up_to(language_dfa(akb.fact_lprime), 3) == expected);
}

TEST_CASE("count_words_per_length on a*b*") {
    std::vector<BigNat> counts = count_words_per_length(language_dfa(u_nfa()), 10);
    for (std::size_t n = 0; n <= 10; ++n) CHECK(counts[n] == BigNat(n + 1));
}

TEST_CASE("count_words_per_length on Fact(a^k b)") {
    std::vector<BigNat> counts = count_words_per_length(factor_dfa(akb_nfa()), 8);
    CHECK(counts[0] == 1);
    for (std::size_t n = 1; n <= 8; ++n) CHECK(counts[n] == 2);
}

TEST_CASE("count_words_per_length on the full binary language") {
    Nfa nfa(1, kAb);
    nfa.add_transition(0, 'a', 0);
    nfa.add_transition(0, 'b', 0);
    nfa.starts = {0};
    nfa.finals = {0};
    std::vector<BigNat> counts = count_words_per_length(language_dfa(nfa), 70);
    BigNat expected = 1;
    for (std::size_t n = 0; n <= 70; ++n, expected *= 2) CHECK(counts[n] == expected);
}

TEST_CASE("determinization cap is reported") {
    // "a at position 21 from the end" needs 2^21 subsets, past the cap.
    const State n = 21;
    Nfa nfa(n + 1, kAb);
    nfa.add_transition(0, 'a', 0);
    nfa.add_transition(0, 'b', 0);
    nfa.add_transition(0, 'a', 1);
    for (State i = 1; i < n; ++i) {
        nfa.add_transition(i, 'a', i + 1);
        nfa.add_transition(i, 'b', i + 1);
    }
    nfa.starts = {0};
    nfa.finals = {n};
    CHECK_THROWS_AS(determinize(nfa), CapExceededError);
}

TEST_CASE("enumerate_words_up_to matches per-length enumeration") {
    for (int i = 0; i < 25; ++i) {
        Nfa nfa = build_random_nfa(make_random_spec(2024, static_cast<std::uint64_t>(i)));
        CHECK(enumerate_words_up_to(trim(nfa), 5) == words_up_to(language_dfa(nfa), 5));
    }
}
