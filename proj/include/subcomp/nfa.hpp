#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "subcomp/bignat.hpp"
#include "subcomp/word.hpp"

namespace subcomp {

using State = std::uint32_t;

struct Transition {
    State from = 0;
    char symbol = 0;
    State to = 0;
    auto operator<=>(const Transition&) const = default;
};

/// Nondeterministic finite automaton without epsilon transitions.
struct Nfa {
    std::size_t state_count = 0;
    Alphabet alphabet;
    std::set<Transition> transitions;
    std::set<State> starts;
    std::set<State> finals;

    explicit Nfa(Alphabet a) : alphabet(std::move(a)) {}
    Nfa(std::size_t states, Alphabet a) : state_count(states), alphabet(std::move(a)) {}

    void add_transition(State from, char symbol, State to);
    void check_invariants() const;  // throws std::invalid_argument
};

/// Deterministic automaton with a partial transition function.
/// state_count == 0 encodes the empty automaton (empty language);
/// its start index is -1.
struct Dfa {
    std::size_t state_count = 0;
    Alphabet alphabet;
    std::vector<std::vector<std::int32_t>> next;  // [state][symbol index], -1 if undefined
    std::int32_t start = -1;
    std::set<State> finals;
    bool trim = false;

    explicit Dfa(Alphabet a) : alphabet(std::move(a)) {}

    std::int32_t next_state(State s, std::size_t symbol_index) const {
        return next[s][symbol_index];
    }
    bool is_final(State s) const { return finals.count(s) > 0; }
    std::size_t out_degree(State s) const;
};

/// Subset-construction state cap: beyond this the algorithms refuse to
/// continue instead of silently approximating.
inline constexpr std::size_t kDeterminizationCap = std::size_t{1} << 20;

struct CapExceededError : std::runtime_error {
    CapExceededError() : std::runtime_error("determinization cap exceeded") {}
};

/// Accessible subset construction. Throws CapExceededError past the cap.
Dfa determinize(const Nfa& nfa);

/// Restriction to states reachable from a start and co-reachable to a final.
Nfa trim(const Nfa& nfa);
Dfa trim(const Dfa& dfa);

/// Minimal trim DFA for the same language (partition refinement over the
/// completion, sink removed again afterwards).
Dfa minimize(const Dfa& dfa);

/// Automaton for the set of factors of the input's language: trim, then
/// mark every surviving state both start and final.
Nfa factor_closure(const Nfa& nfa);

/// Automaton for L_k = { w : w x in L for some |x| = k }: k rounds of
/// reverse relaxation of the final set over the transition relation.
Nfa shift_finals(const Nfa& nfa, std::size_t k);

/// Factor automaton of L' = { w : w is a factor of L_k for every k }.
/// The final-set sequence lives in a finite space; the chain of factor
/// languages is non-increasing, so the first repetition freezes it.
struct LprimeResult {
    Nfa fact_lprime;
    std::size_t entry_index = 0;  // chain is constant from this shift on
    std::size_t period = 1;
};
LprimeResult stabilize_lprime(const Nfa& nfa);

/// c(n) = number of distinct accepted words of length n, for n = 0..N.
/// Deterministic input means paths and words coincide, so this is a path
/// count from the start state. Exact unbounded integers.
std::vector<BigNat> count_words_per_length(const Dfa& dfa, std::size_t N);

/// Same dynamic program with an arbitrary target set instead of the finals.
std::vector<BigNat> count_words_reaching(const Dfa& dfa, const std::set<State>& targets,
                                         std::size_t N);

/// All accepted words of exactly length n, in symbol-index DFS order.
std::set<Word> enumerate_words(const Dfa& dfa, std::size_t n);

/// All accepted words of length <= max_len via live-subset search on the
/// NFA itself (no determinization, no cap).
std::set<Word> enumerate_words_up_to(const Nfa& nfa, std::size_t max_len);

bool accepts(const Nfa& nfa, const Word& w);
bool accepts(const Dfa& dfa, const Word& w);

/// trim . determinize . factor_closure . trim, then minimize: the standard
/// pipeline from an arbitrary NFA to the canonical factor DFA its
/// complexity is counted on.
Dfa factor_dfa(const Nfa& nfa);

/// trim . determinize . trim: canonical trim DFA of the language itself.
Dfa language_dfa(const Nfa& nfa);

/// Deterministic trie automaton accepting exactly the given finite set.
Nfa trie_nfa(const std::set<Word>& words, const Alphabet& alphabet);

}  // namespace subcomp
