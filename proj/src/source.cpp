#include "subcomp/source.hpp"

#include <algorithm>
#include <stdexcept>

namespace subcomp {

namespace {

bool generator_window_exact(const Generator& gen, std::size_t n, std::size_t horizon) {
    const auto* ep = std::get_if<EventuallyPeriodic>(&gen);
    if (ep == nullptr) return false;
    return horizon >= ep->prefix.length() + ep->cycle.length() + n;
}

FactorEnumeration enumerate_word_source(const LanguageSource& src, std::size_t n,
                                        std::size_t horizon) {
    if (horizon < n) throw std::invalid_argument("horizon smaller than requested factor length");
    FactorEnumeration out;
    out.factors = factors_of_word(materialize_window(src, horizon), n);
    if (n == 0) {
        out.exact = true;  // the empty word is always the only length-0 factor
        return out;
    }
    if (const auto* inf = std::get_if<InfiniteSource>(&src.kind)) {
        out.exact = generator_window_exact(inf->gen, n, horizon);
    } else {
        const auto& bi = std::get<BiInfiniteSource>(src.kind);
        out.exact = generator_window_exact(bi.left, n, horizon) &&
                    generator_window_exact(bi.right, n, horizon);
    }
    return out;
}

}  // namespace

Word materialize_window(const LanguageSource& src, std::size_t horizon) {
    if (const auto* inf = std::get_if<InfiniteSource>(&src.kind))
        return expand_prefix(inf->gen, horizon, src.alphabet);
    const auto& bi = std::get<BiInfiniteSource>(src.kind);
    std::string left = expand_prefix(bi.left, horizon, src.alphabet).str();
    std::reverse(left.begin(), left.end());
    return Word(left + expand_prefix(bi.right, horizon, src.alphabet).str());
}

FactorEnumeration enumerate_factors(const LanguageSource& src, std::size_t n,
                                    std::optional<std::size_t> horizon) {
    if (const auto* fin = std::get_if<FiniteSource>(&src.kind)) {
        FactorEnumeration out;
        out.factors.length = n;
        for (const Word& w : fin->words) {
            FactorSet f = factors_of_word(w, n);
            out.factors.members.insert(f.members.begin(), f.members.end());
        }
        return out;
    }
    if (const auto* reg = std::get_if<RegularSource>(&src.kind)) {
        FactorEnumeration out;
        out.factors.length = n;
        out.factors.members = enumerate_words(factor_dfa(reg->automaton), n);
        return out;
    }
    return enumerate_word_source(src, n, horizon.value_or(default_horizon(n)));
}

Extendability is_extendable(const LanguageSource& src) {
    if (const auto* fin = std::get_if<FiniteSource>(&src.kind)) {
        for (const Word& w : fin->words) {
            bool extends = false;
            for (std::size_t a = 0; a < src.alphabet.size() && !extends; ++a)
                extends = fin->words.count(w + src.alphabet.symbol(a)) > 0;
            if (!extends) return Extendability::No;
        }
        return Extendability::Yes;
    }
    if (const auto* reg = std::get_if<RegularSource>(&src.kind)) {
        // On the trim DFA: every accepting state needs a move to an
        // accepting state.
        Dfa dfa = language_dfa(reg->automaton);
        for (State q : dfa.finals) {
            bool extends = false;
            for (std::size_t a = 0; a < dfa.alphabet.size() && !extends; ++a) {
                std::int32_t t = dfa.next[q][a];
                extends = t >= 0 && dfa.is_final(static_cast<State>(t));
            }
            if (!extends) return Extendability::No;
        }
        return Extendability::Yes;
    }
    return Extendability::Yes;  // language of an infinite or bi-infinite word
}

namespace {

Nfa builtin_u() {
    // a* b*
    Nfa nfa(2, Alphabet("ab"));
    nfa.add_transition(0, 'a', 0);
    nfa.add_transition(0, 'b', 1);
    nfa.add_transition(1, 'b', 1);
    nfa.starts = {0};
    nfa.finals = {0, 1};
    return nfa;
}

Nfa builtin_akb() {
    // a* b
    Nfa nfa(2, Alphabet("ab"));
    nfa.add_transition(0, 'a', 0);
    nfa.add_transition(0, 'b', 1);
    nfa.starts = {0};
    nfa.finals = {1};
    return nfa;
}

Nfa builtin_baab() {
    // b (aa)* b
    Nfa nfa(4, Alphabet("ab"));
    nfa.add_transition(0, 'b', 1);
    nfa.add_transition(1, 'a', 2);
    nfa.add_transition(2, 'a', 1);
    nfa.add_transition(1, 'b', 3);
    nfa.starts = {0};
    nfa.finals = {3};
    return nfa;
}

Nfa builtin_mix() {
    // a* b*  union  a (bb)* a  union  b (aa)* b
    Nfa nfa(10, Alphabet("ab"));
    nfa.add_transition(0, 'a', 0);
    nfa.add_transition(0, 'b', 1);
    nfa.add_transition(1, 'b', 1);
    nfa.add_transition(2, 'a', 3);
    nfa.add_transition(3, 'b', 4);
    nfa.add_transition(4, 'b', 3);
    nfa.add_transition(3, 'a', 5);
    nfa.add_transition(6, 'b', 7);
    nfa.add_transition(7, 'a', 8);
    nfa.add_transition(8, 'a', 7);
    nfa.add_transition(7, 'b', 9);
    nfa.starts = {0, 2, 6};
    nfa.finals = {0, 1, 5, 9};
    return nfa;
}

Generator fibonacci_gen() {
    Morphic m;
    m.rules.emplace('a', Word("ab"));
    m.rules.emplace('b', Word("a"));
    m.seed = 'a';
    return m;
}

Generator thue_morse_gen() {
    Morphic m;
    m.rules.emplace('a', Word("ab"));
    m.rules.emplace('b', Word("ba"));
    m.seed = 'a';
    return m;
}

}  // namespace

const std::vector<BuiltinInfo>& builtin_catalog() {
    static const std::vector<BuiltinInfo> catalog = {
        {"U", "words a^i b^j; complexity n+1"},
        {"AAABBB", "bi-infinite word ...aaabbb...; same language as U"},
        {"BAAB",
         "words b a^{2k} b; complexity 4 (even n), 3 (odd n >= 3); p(1) = 2 because "
         "b a^0 and a^0 b are the same one-letter word"},
        {"MIX",
         "U plus a b^{2k} a plus b a^{2k} b; complexity n+3 (odd n >= 3), n+5 (even n >= 4) - "
         "the side factors b a^{n-1} and b^{n-1} a count at every length"},
        {"AKB", "words a^k b; complexity 2 with a special factor at every length"},
        {"FIBONACCI", "fixed point of a -> ab, b -> a; Sturmian, complexity n+1"},
        {"THUEMORSE", "fixed point of a -> ab, b -> ba"},
    };
    return catalog;
}

LanguageSource make_builtin(const std::string& name) {
    Alphabet ab("ab");
    if (name == "U") return LanguageSource{ab, RegularSource{builtin_u()}};
    if (name == "AAABBB")
        return LanguageSource{
            ab, BiInfiniteSource{EventuallyPeriodic{Word(), Word("a")},
                                 EventuallyPeriodic{Word(), Word("b")}}};
    if (name == "BAAB") return LanguageSource{ab, RegularSource{builtin_baab()}};
    if (name == "MIX") return LanguageSource{ab, RegularSource{builtin_mix()}};
    if (name == "AKB") return LanguageSource{ab, RegularSource{builtin_akb()}};
    if (name == "FIBONACCI") return LanguageSource{ab, InfiniteSource{fibonacci_gen()}};
    if (name == "THUEMORSE") return LanguageSource{ab, InfiniteSource{thue_morse_gen()}};
    throw std::invalid_argument("unknown builtin language: " + name);
}

}  // namespace subcomp
