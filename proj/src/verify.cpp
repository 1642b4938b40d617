#include "subcomp/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "json.hpp"
#include "subcomp/io.hpp"

namespace subcomp {

std::string outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Pass: return "pass";
        case Outcome::Fail: return "fail";
        default: return "undetermined";
    }
}

std::string report_json_line(const CheckReport& report) {
    nlohmann::json j{{"check", report.check},
                     {"instance", report.instance},
                     {"outcome", outcome_name(report.outcome)},
                     {"details", report.details}};
    return j.dump();
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// mt19937_64 output is pinned by the standard, so identical seeds give
// identical automata on every platform.
struct DetRng {
    std::mt19937_64 engine;
    explicit DetRng(std::uint64_t seed) : engine(seed) {}
    std::uint64_t next() { return engine(); }
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine() % n); }
    double unit() { return static_cast<double>(engine() >> 11) * 0x1.0p-53; }
    bool chance(double p) { return unit() < p; }
};

CheckReport pass(std::string check, std::string instance, std::string details) {
    return CheckReport{std::move(check), std::move(instance), Outcome::Pass, std::move(details)};
}
CheckReport fail(std::string check, std::string instance, std::string details) {
    return CheckReport{std::move(check), std::move(instance), Outcome::Fail, std::move(details)};
}
CheckReport undetermined(std::string check, std::string instance, std::string details) {
    return CheckReport{std::move(check), std::move(instance), Outcome::Undetermined,
                       std::move(details)};
}

}  // namespace

RandomRegularSpec make_random_spec(std::uint64_t master_seed, std::uint64_t index) {
    DetRng rng(splitmix64(master_seed ^ splitmix64(index)));
    RandomRegularSpec spec;
    spec.seed = rng.next();
    spec.state_count = 1 + rng.below(8);
    spec.alphabet_size = 1 + rng.below(3);
    spec.transition_density = 0.05 + 0.9 * rng.unit();
    spec.final_density = 0.1 + 0.9 * rng.unit();
    return spec;
}

Nfa build_random_nfa(const RandomRegularSpec& spec) {
    DetRng rng(spec.seed);
    Alphabet alphabet(std::string("abc").substr(0, spec.alphabet_size));
    Nfa nfa(spec.state_count, alphabet);
    nfa.starts = {0};
    for (State q = 0; q < spec.state_count; ++q)
        for (std::size_t a = 0; a < spec.alphabet_size; ++a) {
            if (rng.chance(spec.transition_density))
                nfa.add_transition(q, alphabet.symbol(a),
                                   static_cast<State>(rng.below(spec.state_count)));
            if (rng.chance(spec.transition_density / 4))
                nfa.add_transition(q, alphabet.symbol(a),
                                   static_cast<State>(rng.below(spec.state_count)));
        }
    for (State q = 0; q < spec.state_count; ++q)
        if (rng.chance(spec.final_density)) nfa.finals.insert(q);
    return nfa;
}

LanguageSource random_regular_source(const RandomRegularSpec& spec) {
    Nfa nfa = build_random_nfa(spec);
    Alphabet alphabet = nfa.alphabet;
    return LanguageSource{alphabet, RegularSource{std::move(nfa)}};
}

// ---------------------------------------------------------------------------
// Oracle: self-contained adjacency, reachability and label enumeration.

namespace {

struct OracleView {
    std::size_t states = 0;
    std::string symbols;
    std::vector<std::vector<std::vector<State>>> step;  // [state][symbol] -> targets
    std::vector<State> live;                            // reachable and co-reachable
};

OracleView make_oracle_view(const Nfa& nfa) {
    OracleView view;
    view.states = nfa.state_count;
    view.symbols = nfa.alphabet.symbols();
    view.step.assign(view.states, std::vector<std::vector<State>>(view.symbols.size()));
    for (const auto& t : nfa.transitions)
        view.step[t.from][static_cast<std::size_t>(nfa.alphabet.index_of(t.symbol))].push_back(
            t.to);

    std::vector<bool> fwd(view.states, false), bwd(view.states, false);
    std::vector<State> queue;
    for (State s : nfa.starts) {
        fwd[s] = true;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        State q = queue.back();
        queue.pop_back();
        for (const auto& targets : view.step[q])
            for (State t : targets)
                if (!fwd[t]) {
                    fwd[t] = true;
                    queue.push_back(t);
                }
    }
    for (State s : nfa.finals) {
        bwd[s] = true;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        State q = queue.back();
        queue.pop_back();
        for (const auto& t : nfa.transitions)
            if (t.to == q && !bwd[t.from]) {
                bwd[t.from] = true;
                queue.push_back(t.from);
            }
    }
    for (State q = 0; q < view.states; ++q)
        if (fwd[q] && bwd[q]) view.live.push_back(q);
    return view;
}

// Walks the prefix tree of labels of paths through live states. Each tree
// node is a distinct label; on_label is called once per node (depth > 0).
// Returns false when the walk was aborted by the callback.
bool walk_labels(const OracleView& view, std::size_t max_len,
                 const std::function<bool(const std::string&, std::size_t)>& on_label) {
    std::vector<bool> is_live(view.states, false);
    for (State q : view.live) is_live[q] = true;
    std::string buffer;
    auto dfs = [&](auto&& self, const std::vector<State>& current) -> bool {
        if (buffer.size() == max_len) return true;
        for (std::size_t a = 0; a < view.symbols.size(); ++a) {
            std::set<State> next;
            for (State q : current)
                for (State t : view.step[q][a])
                    if (is_live[t]) next.insert(t);
            if (next.empty()) continue;
            buffer.push_back(view.symbols[a]);
            bool keep_going = on_label(buffer, buffer.size());
            if (keep_going)
                keep_going = self(self, std::vector<State>(next.begin(), next.end()));
            buffer.pop_back();
            if (!keep_going) return false;
        }
        return true;
    };
    return dfs(dfs, view.live);
}

// Distinct labels per length, in one pass. Exact because tree nodes and
// distinct labels coincide.
std::vector<std::size_t> oracle_label_counts(const Nfa& nfa, std::size_t n_max) {
    OracleView view = make_oracle_view(nfa);
    std::vector<std::size_t> counts(n_max + 1, 0);
    counts[0] = view.live.empty() ? 0 : 1;  // the empty factor
    walk_labels(view, n_max, [&](const std::string&, std::size_t depth) {
        ++counts[depth];
        return true;
    });
    return counts;
}

}  // namespace

std::vector<Word> oracle_truncation(const LanguageSource& src, std::size_t max_len) {
    if (const auto* fin = std::get_if<FiniteSource>(&src.kind))
        return std::vector<Word>(fin->words.begin(), fin->words.end());
    if (!src.is_regular())
        throw std::invalid_argument("oracle truncation supports finite and regular sources");
    if (max_len > 14) throw std::invalid_argument("oracle truncation beyond supported length 14");
    const Nfa& nfa = std::get<RegularSource>(src.kind).automaton;
    OracleView view = make_oracle_view(nfa);
    std::vector<Word> out;
    if (!view.live.empty()) out.push_back(Word());
    walk_labels(view, max_len, [&](const std::string& label, std::size_t) {
        out.push_back(Word(label));
        return true;
    });
    return out;
}

FactorSet oracle_factors(const std::vector<Word>& truncation, std::size_t n) {
    FactorSet out;
    out.length = n;
    for (const Word& w : truncation) {
        if (w.length() < n) continue;
        const std::string& text = w.str();
        for (std::size_t i = 0; i + n <= text.size(); ++i)
            out.members.insert(Word(text.substr(i, n)));
    }
    return out;
}

FactorSet oracle_factors(const LanguageSource& src, std::size_t n, std::size_t max_len) {
    return oracle_factors(oracle_truncation(src, max_len), n);
}

std::size_t oracle_factor_count_capped(const Nfa& nfa, std::size_t n, std::size_t cap) {
    if (cap == 0) return 0;
    OracleView view = make_oracle_view(nfa);
    if (n == 0) return view.live.empty() ? 0 : 1;
    std::size_t count = 0;
    walk_labels(view, n, [&](const std::string&, std::size_t depth) {
        if (depth == n && ++count >= cap) return false;
        return true;
    });
    return count;
}

// ---------------------------------------------------------------------------
// Window period detection, self-contained.

namespace {

// Least q >= 1 with w[i] == w[i+q] everywhere; |w| if none below that.
std::size_t least_window_period(const std::string& w) {
    for (std::size_t q = 1; q < w.size(); ++q) {
        bool ok = true;
        for (std::size_t i = 0; i + q < w.size(); ++i)
            if (w[i] != w[i + q]) {
                ok = false;
                break;
            }
        if (ok) return q;
    }
    return w.size();
}

// Least q such that w[i] == w[i+q] from some tail start t on. Attested
// only when the periodic tail covers at least 4q+4 symbols: two bare
// repetitions would false-positive on aperiodic windows that happen to
// end in a square.
std::optional<std::size_t> eventual_window_period(const std::string& w, std::size_t q_cap) {
    for (std::size_t q = 1; q <= std::min(q_cap, w.size() / 2); ++q) {
        std::size_t t = 0;
        for (std::size_t i = w.size() - q; i-- > 0;)
            if (w[i] != w[i + q]) {
                t = i + 1;
                break;
            }
        if (w.size() >= t + 4 * q + 4) return q;
    }
    return std::nullopt;
}

std::string big_str(const BigNat& v) { return v.str(); }

}  // namespace

// ---------------------------------------------------------------------------
// Statement checks.

CheckReport check_gap_theorem(const LanguageSource& src, const std::string& instance,
                              std::size_t n_max) {
    const char* name = "gap_theorem";
    if (!src.is_regular()) return undetermined(name, instance, "requires a regular source");
    const Nfa& nfa = std::get<RegularSource>(src.kind).automaton;
    GapVerdict verdict = classify(src, n_max);

    if (const auto* bounded = std::get_if<BoundedProven>(&verdict)) {
        if (bounded->bound > 1'000'000)
            return pass(name, instance, "bounded with bound " + big_str(bounded->bound) +
                                            "; oracle cross-check skipped (bound too large)");
        std::size_t cap = bounded->bound.convert_to<std::size_t>() + 1;
        for (std::size_t n = 0; n <= n_max; ++n) {
            std::size_t count = oracle_factor_count_capped(nfa, n, cap);
            if (BigNat(count) > bounded->bound)
                return fail(name, instance,
                            "oracle found " + std::to_string(count) + " factors of length " +
                                std::to_string(n) + ", bound is " + big_str(bounded->bound));
        }
        return pass(name, instance,
                    "bounded, bound " + big_str(bounded->bound) + ", oracle-checked to n=" +
                        std::to_string(n_max));
    }
    if (std::holds_alternative<LinearLowerBoundProven>(verdict)) {
        for (std::size_t n = 0; n <= n_max; ++n) {
            std::size_t count = oracle_factor_count_capped(nfa, n, n + 2);
            if (count < n + 1)
                return fail(name, instance,
                            "oracle found only " + std::to_string(count) +
                                " factors of length " + std::to_string(n) +
                                " against the linear verdict");
        }
        return pass(name, instance, "linear lower bound, oracle-checked p(n) > n to n=" +
                                        std::to_string(n_max));
    }
    return fail(name, instance, "dichotomy violated: verdict is neither bounded nor linear");
}

CheckReport check_er82v(const LanguageSource& src, const std::string& instance,
                        std::size_t sample_len, bool formal_mode) {
    const char* name = "er82v_roundtrip";
    if (!src.is_regular()) return undetermined(name, instance, "requires a regular source");
    const Nfa& nfa = std::get<RegularSource>(src.kind).automaton;
    GapVerdict verdict = classify(src, sample_len);
    const auto* bounded = std::get_if<BoundedProven>(&verdict);
    if (bounded == nullptr)
        return undetermined(name, instance, "requires a bounded regular source");
    const auto& cert = std::get<BoundedCertificate>(bounded->certificate);

    Nfa closure = factor_closure(trim(nfa));
    CoverCheck sampled = verify_triple_cover(closure, cert.triples, CoverMode::Sampled, sample_len);
    if (sampled.outcome == CoverOutcome::NotCovered)
        return fail(name, instance,
                    "sampled cover misses \"" + sampled.counterexample->str() + "\"");
    CoverCheck formal{CoverOutcome::CapExceeded, std::nullopt};
    if (formal_mode) {
        formal = verify_triple_cover(closure, cert.triples, CoverMode::Formal, 0);
        if (formal.outcome == CoverOutcome::NotCovered)
            return fail(name, instance,
                        "formal cover misses \"" + formal.counterexample->str() + "\"");
    }

    // Converse: the cover language's own complexity is bounded, both
    // structurally and against a bound derived from the triple lengths.
    std::string formal_note = !formal_mode                                ? "skipped"
                              : formal.outcome == CoverOutcome::Covered   ? "exact"
                                                                          : "cap-exceeded";
    std::string details = "covered (sampled to " + std::to_string(sample_len) + ", formal " +
                          formal_note + "), |T|=" + std::to_string(cert.triples.size());
    if (!cert.triples.empty()) {
        Nfa cover = cover_automaton(src.alphabet, cert.triples);
        Dfa cover_factors = factor_dfa(cover);
        GapCertificate converse = decide_bounded(cover_factors);
        if (!converse.bounded())
            return fail(name, instance, "cover language is not bounded");
        BigNat derived = 0;
        for (const auto& t : cert.triples) {
            BigNat side(t[0].length() + t[1].length() + t[2].length() + 2);
            derived += side * side;
        }
        for (const BigNat& c : count_words_per_length(cover_factors, sample_len))
            if (c > derived)
                return fail(name, instance, "cover profile exceeds the derived bound " +
                                                big_str(derived));
    }
    return pass(name, instance, details);
}

CheckReport check_mh1938(const LanguageSource& src, const std::string& instance, std::size_t N) {
    const char* name = "mh1938";
    if (!std::holds_alternative<BiInfiniteSource>(src.kind))
        return undetermined(name, instance, "requires a bi-infinite source");
    std::size_t horizon = default_horizon(N);
    const std::string window = materialize_window(src, horizon).str();
    std::size_t q = least_window_period(window);
    bool periodic = q <= window.size() / 2;

    ComplexityProfile prof = profile(src, N, horizon);
    if (periodic) {
        if (!prof.all_exact())
            return undetermined(name, instance, "window-limited profile on a periodic word");
        FiatcResult fiatc = is_fiatc(prof);
        if (!fiatc.is_fiatc)
            return fail(name, instance, "profile of a periodic word is not FIATC");
        if (prof.p[prof.N] != BigNat(q))
            return fail(name, instance, "sup p = " + big_str(prof.p[prof.N]) +
                                            " but least period is " + std::to_string(q));
        return pass(name, instance,
                    "periodic: FIATC with plateau " + std::to_string(fiatc.m) + ", sup p = " +
                        std::to_string(q) + " = least period");
    }
    for (std::size_t n = 0; n < N; ++n)
        if (prof.p[n] >= prof.p[n + 1])
            return fail(name, instance,
                        "aperiodic word but profile stalls at n=" + std::to_string(n));
    return pass(name, instance, "aperiodic: profile strictly increasing to n=" + std::to_string(N));
}

CheckReport check_mh1973(const LanguageSource& src, const std::string& instance, std::size_t N) {
    const char* name = "mh1973";
    const auto* inf = std::get_if<InfiniteSource>(&src.kind);
    if (inf == nullptr) return undetermined(name, instance, "requires a one-sided infinite source");
    std::size_t horizon = default_horizon(N);
    ComplexityProfile prof = profile(src, N, horizon);

    if (std::holds_alternative<EventuallyPeriodic>(inf->gen)) {
        if (!prof.all_exact())
            return undetermined(name, instance, "window-limited profile on an eventually periodic word");
        FiatcResult fiatc = is_fiatc(prof);
        if (!fiatc.is_fiatc)
            return fail(name, instance, "profile of an eventually periodic word is not FIATC");
        const std::string window = materialize_window(src, horizon).str();
        auto period = eventual_window_period(window, window.size() / 2);
        if (!period)
            return fail(name, instance, "no eventual period detected inside the window");
        if (BigNat(*period) > prof.p[prof.N])
            return fail(name, instance, "eventual period " + std::to_string(*period) +
                                            " exceeds sup p = " + big_str(prof.p[prof.N]));
        return pass(name, instance, "eventually periodic: FIATC, period " +
                                        std::to_string(*period) + " <= sup p = " +
                                        big_str(prof.p[prof.N]));
    }
    for (std::size_t n = 0; n < N; ++n)
        if (prof.p[n] >= prof.p[n + 1])
            return fail(name, instance,
                        "aperiodic word but profile stalls at n=" + std::to_string(n));
    return pass(name, instance, "aperiodic: profile strictly increasing to n=" + std::to_string(N));
}

namespace {

CheckReport claims_chain_regular(const LanguageSource& src, const std::string& instance,
                                 std::size_t n_max, std::size_t k_max) {
    const char* name = "claims_chain";
    const Nfa nfa = trim(std::get<RegularSource>(src.kind).automaton);

    // Factor sets F_n(L_k) for the chain prefix.
    std::vector<std::vector<std::set<Word>>> factors(k_max + 1);
    for (std::size_t k = 0; k <= k_max; ++k) {
        Dfa fdfa = factor_dfa(shift_finals(nfa, k));
        for (std::size_t n = 0; n <= n_max; ++n) factors[k].push_back(enumerate_words(fdfa, n));
    }

    // Claim 1: the factor chain is non-increasing.
    for (std::size_t k = 0; k < k_max; ++k)
        for (std::size_t n = 0; n <= n_max; ++n)
            for (const Word& w : factors[k + 1][n])
                if (!factors[k][n].count(w))
                    return fail(name, instance,
                                "claim 1: \"" + display(w) + "\" is a factor of L_" +
                                    std::to_string(k + 1) + " but not of L_" + std::to_string(k));

    LprimeResult lp = stabilize_lprime(nfa);

    // Claim 2: the language of factors of L' is extendable.
    {
        Alphabet alphabet = src.alphabet;
        LanguageSource lprime_src{alphabet, RegularSource{lp.fact_lprime}};
        if (is_extendable(lprime_src) != Extendability::Yes)
            return fail(name, instance, "claim 2: Fact(L') is not extendable");
    }

    // Claim 4: per length, the chain F_n(L_k) stabilizes inside L' by the
    // stabilization index.
    std::size_t search_cap = std::min<std::size_t>(lp.entry_index, 32);
    Dfa lprime_dfa = language_dfa(lp.fact_lprime);
    for (std::size_t n = 0; n <= n_max; ++n) {
        std::set<Word> settled = enumerate_words(factor_dfa(shift_finals(nfa, lp.entry_index)), n);
        bool found = false;
        for (std::size_t k = 0; k <= search_cap && !found; ++k) {
            std::set<Word> fk =
                k <= k_max ? factors[k][n]
                           : enumerate_words(factor_dfa(shift_finals(nfa, k)), n);
            found = fk == settled;
        }
        if (!found && lp.entry_index > search_cap) found = true;  // witnessed at entry itself
        if (!found)
            return fail(name, instance,
                        "claim 4: no stabilization index found for n=" + std::to_string(n));
        for (const Word& w : settled)
            if (!accepts(lprime_dfa, w))
                return fail(name, instance, "claim 4: \"" + display(w) +
                                                "\" settled in the chain but is outside Fact(L')");
    }

    // Claim 3: if some p_k is bounded then p is bounded. Beyond the
    // stabilization window the final-set patterns repeat, so nothing new
    // can appear there.
    bool p_bounded = decide_bounded(factor_dfa(nfa)).bounded();
    std::size_t k3_cap = std::min<std::size_t>(lp.entry_index + lp.period, 24);
    for (std::size_t k = 0; k <= k3_cap; ++k) {
        if (decide_bounded(factor_dfa(shift_finals(nfa, k))).bounded() && !p_bounded)
            return fail(name, instance,
                        "claim 3: p_" + std::to_string(k) + " is bounded but p is not");
    }

    return pass(name, instance,
                "claims 1-4 hold; stabilization entry " + std::to_string(lp.entry_index) +
                    ", period " + std::to_string(lp.period) +
                    (p_bounded ? ", p bounded" : ", p unbounded"));
}

// For the language of an infinite word every factor extends on the right
// inside the word, so L_k = L for all k and L' = Fact(u); the claims
// reduce to occurrence checks inside the window.
CheckReport claims_chain_word(const LanguageSource& src, const std::string& instance,
                              std::size_t n_max, std::size_t k_max) {
    const char* name = "claims_chain";
    std::size_t horizon = default_horizon(n_max + k_max);
    const std::string window = materialize_window(src, horizon).str();

    for (std::size_t n = 0; n <= n_max; ++n) {
        FactorEnumeration fn = enumerate_factors(src, n, horizon);
        for (const Word& w : fn.factors.members) {
            // An occurrence with k_max symbols of slack puts w in every L_k,
            // k <= k_max (claims 1 and 4), and witnesses a right extension
            // (claim 2).
            bool slack = false;
            for (std::size_t pos = window.find(w.str()); pos != std::string::npos;
                 pos = window.find(w.str(), pos + 1)) {
                if (pos + n + k_max <= window.size()) {
                    slack = true;
                    break;
                }
            }
            if (!slack)
                return fail(name, instance,
                            "factor \"" + display(w) +
                                "\" has no occurrence with slack inside the window");
        }
    }

    // Claim 3 instance: p_k = p here, so boundedness transfers trivially;
    // record which side of the dichotomy the window shows.
    GapVerdict verdict = classify(src, n_max + k_max, horizon);
    std::string side = std::holds_alternative<BoundedProven>(verdict)
                           ? "p bounded (plateau proven)"
                           : "no plateau within the window";
    return pass(name, instance, "L_k = L for all k (window-checked); " + side);
}

}  // namespace

CheckReport check_claims_chain(const LanguageSource& src, const std::string& instance,
                               std::size_t n_max, std::size_t k_max) {
    if (src.is_regular()) return claims_chain_regular(src, instance, n_max, k_max);
    if (src.is_word_source()) return claims_chain_word(src, instance, n_max, k_max);
    return undetermined("claims_chain", instance, "requires a regular source or a word source");
}

CheckReport check_exercise2_decomposition(const LanguageSource& src, const std::string& instance,
                                          std::size_t sample_len) {
    const char* name = "exercise2_pairs";
    if (!src.is_regular() && !src.is_finite())
        return undetermined(name, instance, "requires a regular or finite source");
    const Nfa nfa = src.is_regular()
                        ? std::get<RegularSource>(src.kind).automaton
                        : trie_nfa(std::get<FiniteSource>(src.kind).words, src.alphabet);

    if (!has_finitely_many_specials(factor_dfa(nfa)))
        return undetermined(name, instance,
                            "infinitely many special factors; the pair form does not apply");

    auto pairs = derive_pair_decomposition(language_dfa(nfa));
    if (!pairs)
        return fail(name, instance,
                    "finitely many specials certified but the pair derivation found a cycle exit");

    for (const Word& w : enumerate_words_up_to(trim(nfa), sample_len)) {
        bool covered = false;
        for (const auto& p : *pairs) {
            if (w.length() < p[0].length() || !is_prefix(p[0], w)) continue;
            Word tail = w.substr(p[0].length(), w.length() - p[0].length());
            if (tail.length() % p[1].length() != 0) continue;
            bool match = true;
            for (std::size_t i = 0; i < tail.length() && match; ++i)
                match = tail.at(i) == p[1].at(i % p[1].length());
            if (match) {
                covered = true;
                break;
            }
        }
        if (!covered)
            return fail(name, instance, "pair cover misses \"" + display(w) + "\"");
    }
    return pass(name, instance,
                "|T'| = " + std::to_string(pairs->size()) + ", sampled cover holds to length " +
                    std::to_string(sample_len));
}

// ---------------------------------------------------------------------------
// Suites.

namespace {

const std::vector<std::string> kRegularBuiltins = {"U", "BAAB", "MIX", "AKB"};
const std::vector<std::string> kWordBuiltins = {"AAABBB", "FIBONACCI", "THUEMORSE"};

std::string spec_instance(const RandomRegularSpec& spec, std::uint64_t index) {
    std::ostringstream out;
    out << "random[" << index << "] states=" << spec.state_count
        << " alpha=" << spec.alphabet_size;
    return out.str();
}

std::string random_primitive_cycle(DetRng& rng) {
    for (;;) {
        std::size_t len = 1 + rng.below(8);
        std::string cycle;
        for (std::size_t i = 0; i < len; ++i) cycle.push_back(rng.chance(0.5) ? 'a' : 'b');
        bool primitive = true;
        for (std::size_t d = 1; d < len && primitive; ++d) {
            if (len % d != 0) continue;
            bool repeats = true;
            for (std::size_t i = 0; i + d < len && repeats; ++i) repeats = cycle[i] == cycle[i + d];
            if (repeats) primitive = false;
        }
        if (primitive) return cycle;
    }
}

// Two-sided periodic word with the given cycle: the left generator emits
// u(-1), u(-2), ... which is the reversed cycle.
LanguageSource biinfinite_periodic(const std::string& cycle) {
    Alphabet ab("ab");
    std::string reversed(cycle.rbegin(), cycle.rend());
    return LanguageSource{ab, BiInfiniteSource{EventuallyPeriodic{Word(), Word(reversed)},
                                               EventuallyPeriodic{Word(), Word(cycle)}}};
}

LanguageSource eventually_periodic_source(const std::string& prefix, const std::string& cycle) {
    Alphabet ab("ab");
    return LanguageSource{ab, InfiniteSource{EventuallyPeriodic{Word(prefix), Word(cycle)}}};
}

Nfa b_a_star_nfa() {
    Nfa nfa(2, Alphabet("ab"));
    nfa.add_transition(0, 'b', 1);
    nfa.add_transition(1, 'a', 1);
    nfa.starts = {0};
    nfa.finals = {1};
    return nfa;
}

LanguageSource finite_source(const Alphabet& alphabet, std::vector<std::string> words) {
    FiniteSource fin;
    for (auto& w : words) fin.words.insert(Word(std::move(w)));
    return LanguageSource{alphabet, std::move(fin)};
}

std::vector<CheckReport> suite_oracle(const SuiteOptions& opts) {
    std::vector<CheckReport> reports;
    const char* name = "oracle_agreement";
    auto run_instance = [&](const LanguageSource& src, const std::string& inst) {
        ComplexityProfile prof = profile(src, 10);
        const Nfa& nfa = std::get<RegularSource>(src.kind).automaton;
        std::vector<std::size_t> counts = oracle_label_counts(nfa, 10);
        for (std::size_t n = 0; n <= 10; ++n)
            if (prof.p[n] != BigNat(counts[n])) {
                reports.push_back(fail(name, inst,
                                       "p(" + std::to_string(n) + ") = " + big_str(prof.p[n]) +
                                           " vs oracle " + std::to_string(counts[n])));
                return;
            }
        reports.push_back(pass(name, inst, "profile equals oracle counts for n <= 10"));
    };
    for (const auto& b : kRegularBuiltins) run_instance(make_builtin(b), "builtin " + b);
    for (std::uint64_t i = 0; i < opts.oracle_specs; ++i) {
        RandomRegularSpec spec = make_random_spec(opts.seed, i);
        run_instance(random_regular_source(spec), spec_instance(spec, i));
    }
    {
        LanguageSource akb = make_builtin("AKB");
        ComplexityProfile prof = profile(akb, 10);
        prof.p[3] += 1;  // corrupted count
        auto counts = oracle_label_counts(std::get<RegularSource>(akb.kind).automaton, 10);
        bool detected = prof.p[3] != BigNat(counts[3]);
        reports.push_back(detected
                              ? pass("oracle_agreement_negative_control", "builtin AKB, p(3)+1",
                                     "corrupted count detected: 3 vs oracle 2")
                              : fail("oracle_agreement_negative_control", "builtin AKB, p(3)+1",
                                     "corruption went unnoticed"));
    }
    return reports;
}

std::vector<CheckReport> suite_gap(const SuiteOptions& opts) {
    std::vector<CheckReport> reports;
    for (const auto& b : kRegularBuiltins)
        reports.push_back(check_gap_theorem(make_builtin(b), "builtin " + b, 12));
    for (std::uint64_t i = 0; i < opts.gap_specs; ++i) {
        RandomRegularSpec spec = make_random_spec(opts.seed, i);
        reports.push_back(check_gap_theorem(random_regular_source(spec), spec_instance(spec, i), 12));
    }
    {
        // A bound shrunk by one must be caught by the oracle cross-check.
        LanguageSource akb = make_builtin("AKB");
        const Nfa& nfa = std::get<RegularSource>(akb.kind).automaton;
        bool detected = false;
        for (std::size_t n = 1; n <= 12 && !detected; ++n)
            detected = oracle_factor_count_capped(nfa, n, 3) > 1;
        reports.push_back(detected ? pass("gap_theorem_negative_control", "builtin AKB, bound-1",
                                          "oracle rejects the shrunk bound 1")
                                   : fail("gap_theorem_negative_control", "builtin AKB, bound-1",
                                          "shrunk bound went unnoticed"));
    }
    return reports;
}

std::vector<CheckReport> suite_er82v(const SuiteOptions& opts) {
    std::vector<CheckReport> reports;
    reports.push_back(
        check_er82v(make_builtin("AKB"), "builtin AKB", opts.sample_len, opts.formal_covers));
    reports.push_back(
        check_er82v(make_builtin("BAAB"), "builtin BAAB", opts.sample_len, opts.formal_covers));
    std::size_t taken = 0;
    for (std::uint64_t i = 0; i < opts.gap_specs && taken < 40; ++i) {
        RandomRegularSpec spec = make_random_spec(opts.seed, i);
        LanguageSource src = random_regular_source(spec);
        if (!std::holds_alternative<BoundedProven>(classify(src, 0))) continue;
        ++taken;
        reports.push_back(check_er82v(src, spec_instance(spec, i), opts.sample_len, opts.formal_covers));
    }
    {
        // Deleting either triple of the AKB certificate must break the cover.
        LanguageSource akb = make_builtin("AKB");
        const Nfa& nfa = std::get<RegularSource>(akb.kind).automaton;
        GapVerdict verdict = classify(akb, 0);
        const auto& cert =
            std::get<BoundedCertificate>(std::get<BoundedProven>(verdict).certificate);
        Nfa closure = factor_closure(trim(nfa));
        bool all_detected = !cert.triples.empty();
        std::string example;
        for (std::size_t i = 0; i < cert.triples.size(); ++i) {
            std::vector<Triple> pruned = cert.triples;
            pruned.erase(pruned.begin() + static_cast<std::ptrdiff_t>(i));
            CoverCheck check = verify_triple_cover(closure, pruned, CoverMode::Sampled, 12);
            if (check.outcome != CoverOutcome::NotCovered) {
                all_detected = false;
                break;
            }
            if (example.empty()) example = display(*check.counterexample);
        }
        reports.push_back(all_detected
                              ? pass("er82v_negative_control", "builtin AKB, deleted triple",
                                     "every deletion loses a word, e.g. " + example)
                              : fail("er82v_negative_control", "builtin AKB, deleted triple",
                                     "a deleted triple went unnoticed"));
    }
    return reports;
}

std::vector<CheckReport> suite_mh(const SuiteOptions& opts) {
    std::vector<CheckReport> reports;
    DetRng rng(splitmix64(opts.seed ^ 0x6d68u));  // suite tag
    for (std::size_t i = 0; i < opts.mh_cycles; ++i) {
        std::string cycle = random_primitive_cycle(rng);
        reports.push_back(check_mh1938(biinfinite_periodic(cycle),
                                       "bi-infinite cycle \"" + cycle + "\"", cycle.size() + 2));
    }
    for (std::size_t i = 0; i < 10; ++i) {
        std::size_t plen = rng.below(4);
        std::string prefix;
        for (std::size_t j = 0; j < plen; ++j) prefix.push_back(rng.chance(0.5) ? 'a' : 'b');
        std::string cycle = random_primitive_cycle(rng);
        reports.push_back(check_mh1973(eventually_periodic_source(prefix, cycle),
                                       "eventually periodic \"" + prefix + "(" + cycle + ")^w\"",
                                       prefix.size() + 2 * cycle.size() + 2));
    }
    reports.push_back(check_mh1938(make_builtin("AAABBB"), "builtin AAABBB", 20));
    reports.push_back(check_mh1973(make_builtin("FIBONACCI"), "builtin FIBONACCI", 50));
    reports.push_back(check_mh1973(make_builtin("THUEMORSE"), "builtin THUEMORSE", 50));
    {
        // Claiming period 2 for the cycle aab must be rejected.
        BigNat sup = least_period_biinfinite(biinfinite_periodic("aab"), 6);
        bool detected = sup != 2;
        reports.push_back(detected ? pass("mh1938_negative_control", "cycle aab, claimed period 2",
                                          "plateau is " + big_str(sup) + ", not 2")
                                   : fail("mh1938_negative_control", "cycle aab, claimed period 2",
                                          "wrong period went unnoticed"));
    }
    return reports;
}

std::vector<CheckReport> suite_claims(const SuiteOptions& opts) {
    std::vector<CheckReport> reports;
    for (const auto& b : kRegularBuiltins)
        reports.push_back(check_claims_chain(make_builtin(b), "builtin " + b, 8, 8));
    for (const auto& b : kWordBuiltins)
        reports.push_back(check_claims_chain(make_builtin(b), "builtin " + b, 6, 6));
    for (std::uint64_t i = 0; i < opts.claims_specs; ++i) {
        RandomRegularSpec spec = make_random_spec(opts.seed, i);
        reports.push_back(
            check_claims_chain(random_regular_source(spec), spec_instance(spec, i), 8, 8));
    }
    {
        // Claim 1 states the chain shrinks; the reversed inclusion must fail
        // on the finite language {ab}.
        Nfa nfa(3, Alphabet("ab"));
        nfa.add_transition(0, 'a', 1);
        nfa.add_transition(1, 'b', 2);
        nfa.starts = {0};
        nfa.finals = {2};
        std::set<Word> f0 = enumerate_words(factor_dfa(nfa), 1);
        std::set<Word> f1 = enumerate_words(factor_dfa(shift_finals(nfa, 1)), 1);
        bool detected = false;
        std::string witness;
        for (const Word& w : f0)
            if (!f1.count(w)) {
                detected = true;
                witness = display(w);
                break;
            }
        reports.push_back(detected
                              ? pass("claims_chain_negative_control", "finite {ab}, reversed claim 1",
                                     "F_1(L_0) contains \"" + witness + "\" outside F_1(L_1)")
                              : fail("claims_chain_negative_control", "finite {ab}, reversed claim 1",
                                     "reversed inclusion unexpectedly holds"));
    }
    return reports;
}

std::vector<CheckReport> suite_ex1(const SuiteOptions& /*opts*/) {
    std::vector<CheckReport> reports;
    const char* name = "exercise1_eventually_periodic";
    struct Instance {
        LanguageSource src;
        std::string label;
    };
    Morphic ab_to_b;
    ab_to_b.rules.emplace('a', Word("ab"));
    ab_to_b.rules.emplace('b', Word("b"));
    ab_to_b.seed = 'a';
    std::vector<Instance> corpus;
    corpus.push_back({eventually_periodic_source("", "ab"), "periodic (ab)^w"});
    corpus.push_back({eventually_periodic_source("b", "a"), "eventually periodic b a^w"});
    corpus.push_back({eventually_periodic_source("ba", "aab"), "eventually periodic ba (aab)^w"});
    corpus.push_back(
        {LanguageSource{Alphabet("ab"), InfiniteSource{ab_to_b}}, "morphic a->ab, b->b"});
    corpus.push_back({make_builtin("FIBONACCI"), "builtin FIBONACCI"});
    corpus.push_back({make_builtin("THUEMORSE"), "builtin THUEMORSE"});

    const std::size_t N = 12;
    for (const auto& inst : corpus) {
        std::size_t vanish_from = N + 1;
        for (std::size_t l = N + 1; l-- > 0;) {
            if (special_factors(inst.src, l).count() == 0)
                vanish_from = l;
            else
                break;
        }
        if (vanish_from > N) {
            reports.push_back(pass(name, inst.label,
                                   "premise not triggered: special factors persist to n=" +
                                       std::to_string(N)));
            continue;
        }
        const std::string window = materialize_window(inst.src, default_horizon(N)).str();
        auto period = eventual_window_period(window, window.size() / 3);
        reports.push_back(period ? pass(name, inst.label,
                                        "specials vanish from n=" + std::to_string(vanish_from) +
                                            "; eventual period " + std::to_string(*period))
                                 : fail(name, inst.label,
                                        "specials vanish but no eventual period detected"));
    }
    {
        const std::string window = materialize_window(make_builtin("FIBONACCI"), 4096).str();
        bool detected = !eventual_window_period(window, window.size() / 3).has_value();
        reports.push_back(detected
                              ? pass("exercise1_negative_control", "FIBONACCI claimed periodic",
                                     "no attested eventual period in the window")
                              : fail("exercise1_negative_control", "FIBONACCI claimed periodic",
                                     "a spurious period was attested"));
    }
    return reports;
}

std::vector<CheckReport> suite_ex2(const SuiteOptions& opts) {
    std::vector<CheckReport> reports;
    reports.push_back(
        check_exercise2_decomposition(make_builtin("AKB"), "builtin AKB", opts.sample_len));
    reports.push_back(check_exercise2_decomposition(make_builtin("U"), "builtin U", opts.sample_len));
    reports.push_back(
        check_exercise2_decomposition(make_builtin("BAAB"), "builtin BAAB", opts.sample_len));
    Alphabet ab("ab");
    reports.push_back(check_exercise2_decomposition(LanguageSource{ab, RegularSource{b_a_star_nfa()}},
                                                    "b a*", opts.sample_len));
    reports.push_back(check_exercise2_decomposition(finite_source(ab, {"a", "aa", "aaa"}),
                                                    "finite {a,aa,aaa}", opts.sample_len));
    reports.push_back(check_exercise2_decomposition(finite_source(ab, {"ab"}), "finite {ab}",
                                                    opts.sample_len));
    std::size_t taken = 0;
    for (std::uint64_t i = 0; i < opts.claims_specs && taken < 20; ++i) {
        RandomRegularSpec spec = make_random_spec(opts.seed, i);
        LanguageSource src = random_regular_source(spec);
        if (!has_finitely_many_specials(factor_dfa(std::get<RegularSource>(src.kind).automaton)))
            continue;
        ++taken;
        reports.push_back(check_exercise2_decomposition(src, spec_instance(spec, i), opts.sample_len));
    }
    {
        // Removing the only pair of b a* must lose the word b.
        auto pairs = derive_pair_decomposition(language_dfa(b_a_star_nfa()));
        bool detected = pairs && pairs->size() == 1;
        if (detected) {
            const auto& p = (*pairs)[0];
            detected = p[0] == Word("b") && p[1] == Word("a");
        }
        reports.push_back(detected ? pass("exercise2_negative_control", "b a*, deleted pair",
                                          "T' = {(b,a)}; without it the word b is uncovered")
                                   : fail("exercise2_negative_control", "b a*, deleted pair",
                                          "unexpected pair decomposition"));
    }
    return reports;
}

std::vector<CheckReport> suite_ex3(const SuiteOptions& opts) {
    std::vector<CheckReport> reports;
    const char* name = "exercise3_increasing_or_fiatc";
    auto check_profile = [&](const ComplexityProfile& prof) -> std::optional<std::string> {
        bool increasing = true;
        for (std::size_t n = 0; n < prof.N && increasing; ++n)
            increasing = prof.p[n] < prof.p[n + 1];
        if (increasing) return std::nullopt;
        FiatcResult fiatc = is_fiatc(prof);
        if (fiatc.is_fiatc) return std::nullopt;
        for (std::size_t n = 0; n < prof.N; ++n)
            if (prof.p[n] > prof.p[n + 1])
                return "profile decreases at n=" + std::to_string(n);
        return "profile stalls and then moves again";
    };
    auto run_word = [&](const LanguageSource& src, const std::string& label, std::size_t N) {
        ComplexityProfile prof = profile(src, N);
        auto violation = check_profile(prof);
        reports.push_back(violation ? fail(name, label, *violation)
                                    : pass(name, label, "increasing or FIATC to n=" +
                                                            std::to_string(N)));
    };
    run_word(eventually_periodic_source("", "ab"), "periodic (ab)^w", 6);
    run_word(eventually_periodic_source("", "aab"), "periodic (aab)^w", 8);
    run_word(eventually_periodic_source("b", "a"), "eventually periodic b a^w", 6);
    run_word(eventually_periodic_source("ab", "ba"), "eventually periodic ab (ba)^w", 8);

    reports.push_back([&] {
        ComplexityProfile prof = profile(make_builtin("U"), 16);
        auto violation = check_profile(prof);
        return violation ? fail(name, "builtin U", *violation)
                         : pass(name, "builtin U", "strictly increasing to n=16");
    }());

    std::size_t taken = 0;
    for (std::uint64_t i = 0; i < opts.gap_specs && taken < 25; ++i) {
        RandomRegularSpec spec = make_random_spec(opts.seed, i);
        LanguageSource src = random_regular_source(spec);
        if (is_extendable(src) != Extendability::Yes) continue;
        ++taken;
        GapVerdict verdict = classify(src, 0);
        std::size_t N = 16;
        if (const auto* bounded = std::get_if<BoundedProven>(&verdict);
            bounded && bounded->bound <= 64)
            N = bounded->bound.convert_to<std::size_t>() + 2;
        ComplexityProfile prof = profile(src, N);
        auto violation = check_profile(prof);
        reports.push_back(violation ? fail(name, spec_instance(spec, i), *violation)
                                    : pass(name, spec_instance(spec, i),
                                           "increasing or FIATC to n=" + std::to_string(N)));
    }
    {
        ComplexityProfile bad;
        bad.N = 2;
        bad.p = {BigNat(1), BigNat(2), BigNat(1)};
        bad.exact = {true, true, true};
        bool detected = check_profile(bad).has_value();
        reports.push_back(detected ? pass("exercise3_negative_control", "profile [1,2,1]",
                                          "decreasing profile rejected")
                                   : fail("exercise3_negative_control", "profile [1,2,1]",
                                          "decreasing profile accepted"));
    }
    return reports;
}

std::vector<CheckReport> suite_ex4(const SuiteOptions& opts) {
    std::vector<CheckReport> reports;
    const char* name = "exercise4_ps_bounds";
    auto run_instance = [&](const LanguageSource& src, const std::string& label) {
        auto violations = exercise_ps_check(src, 11);
        if (violations.empty()) {
            reports.push_back(pass(name, label, "both bounds hold for n <= 10"));
            return;
        }
        const auto& v = violations.front();
        reports.push_back(fail(name, label,
                               std::string(v.lower_side ? "lower" : "upper") +
                                   " bound fails at n=" + std::to_string(v.n)));
    };
    for (const auto& b : kRegularBuiltins) run_instance(make_builtin(b), "builtin " + b);
    run_instance(eventually_periodic_source("", "aab"), "periodic (aab)^w");
    run_instance(eventually_periodic_source("b", "a"), "eventually periodic b a^w");
    for (std::uint64_t i = 0; i < std::min<std::uint64_t>(opts.gap_specs, 100); ++i) {
        RandomRegularSpec spec = make_random_spec(opts.seed, i);
        run_instance(random_regular_source(spec), spec_instance(spec, i));
    }
    {
        // U is tight: delta(n) = s(n) = 1, so a special count inflated to 2
        // violates the lower bound.
        ComplexityProfile prof = profile(make_builtin("U"), 4);
        BigNat delta = prof.p[4] - prof.p[3];
        bool detected = delta < BigNat(1) + 1;
        reports.push_back(detected ? pass("exercise4_negative_control", "builtin U, s(3)+1",
                                          "inflated special count breaks the tight lower bound")
                                   : fail("exercise4_negative_control", "builtin U, s(3)+1",
                                          "inflated special count went unnoticed"));
    }
    return reports;
}

std::vector<CheckReport> suite_eq1(const SuiteOptions& opts) {
    std::vector<CheckReport> reports;
    const char* name = "eq1_convolution";
    DetRng rng(splitmix64(opts.seed ^ 0x651u));
    auto concat = [](const std::set<Word>& xs, const std::set<Word>& ys) {
        std::set<Word> out;
        for (const Word& x : xs)
            for (const Word& y : ys) out.insert(x + y);
        return out;
    };
    auto run_pair = [&](const LanguageSource& x, const LanguageSource& y, const std::string& label) {
        std::set<Word> xy = concat(std::get<FiniteSource>(x.kind).words,
                                   std::get<FiniteSource>(y.kind).words);
        LanguageSource xy_src{x.alphabet, FiniteSource{std::move(xy)}};
        ComplexityProfile f = profile(x, 10), g = profile(y, 10), h = profile(xy_src, 10);
        ConvolutionResult result = convolution_bound_check(f, g, h, 10);
        if (result.ok) {
            reports.push_back(pass(name, label, "h(n) <= sum f(n-k) g(k) for n <= 10"));
        } else {
            reports.push_back(fail(name, label,
                                   std::string(result.first_violation->monotone_side
                                                   ? "monotone bound"
                                                   : "convolution bound") +
                                       " fails at n=" + std::to_string(result.first_violation->n)));
        }
    };
    for (std::size_t i = 0; i < opts.eq1_pairs; ++i) {
        RandomRegularSpec spec = make_random_spec(splitmix64(opts.seed ^ 0xE001u), i);
        LanguageSource regular = random_regular_source(spec);
        std::vector<Word> truncation = oracle_truncation(regular, 8);
        if (truncation.size() > 300) truncation.resize(300);
        FiniteSource x;
        for (const Word& w : truncation) x.words.insert(w);
        const Alphabet& alphabet = regular.alphabet;
        FiniteSource y;
        std::size_t count = 1 + rng.below(5);
        for (std::size_t j = 0; j < count; ++j) {
            std::size_t len = rng.below(4);
            std::string w;
            for (std::size_t l = 0; l < len; ++l) w.push_back(alphabet.symbol(rng.below(alphabet.size())));
            y.words.insert(Word(std::move(w)));
        }
        std::ostringstream label;
        label << "pair[" << i << "] |X|=" << x.words.size() << " |Y|=" << y.words.size();
        run_pair(LanguageSource{alphabet, std::move(x)}, LanguageSource{alphabet, std::move(y)},
                 label.str());
    }
    Alphabet ab("ab");
    run_pair(finite_source(ab, {"ab", "aab", "b"}), finite_source(ab, {""}), "Y = {empty}: h = f");
    run_pair(finite_source(ab, {}), finite_source(ab, {"a", "b"}), "X empty: h = 0");
    {
        ComplexityProfile f, g, h;
        f.N = g.N = h.N = 1;
        f.p = {BigNat(1), BigNat(1)};
        g.p = {BigNat(1), BigNat(1)};
        h.p = {BigNat(2), BigNat(1)};  // h(0) corrupted above f(0) g(0)
        f.exact = g.exact = h.exact = {true, true};
        bool detected = !convolution_bound_check(f, g, h, 1).ok;
        reports.push_back(detected ? pass("eq1_negative_control", "corrupted h(0)",
                                          "violation detected at n=0")
                                   : fail("eq1_negative_control", "corrupted h(0)",
                                          "corrupted profile went unnoticed"));
    }
    return reports;
}

std::vector<CheckReport> suite_bb(const SuiteOptions& opts) {
    std::vector<CheckReport> reports;
    const char* name = "bb2005_bound";
    auto run_profile = [&](const ComplexityProfile& prof, const std::string& label) {
        auto violations = bb_bound_check(prof);
        if (violations.empty()) {
            reports.push_back(pass(name, label, "no violations"));
        } else {
            reports.push_back(fail(name, label,
                                   "violation at m=" + std::to_string(violations.front().m) +
                                       ", n=" + std::to_string(violations.front().n)));
        }
    };
    for (const auto& b : kRegularBuiltins) run_profile(profile(make_builtin(b), 20), "builtin " + b);
    run_profile(profile(make_builtin("AAABBB"), 20), "builtin AAABBB");
    run_profile(profile(make_builtin("FIBONACCI"), 50), "builtin FIBONACCI");
    run_profile(profile(make_builtin("THUEMORSE"), 50), "builtin THUEMORSE");
    DetRng rng(splitmix64(opts.seed ^ 0xbbu));
    for (std::size_t i = 0; i < 10; ++i) {
        std::string cycle = random_primitive_cycle(rng);
        run_profile(profile(biinfinite_periodic(cycle), cycle.size() + 4),
                    "bi-infinite cycle \"" + cycle + "\"");
    }
    for (std::uint64_t i = 0; i < std::min<std::uint64_t>(opts.gap_specs, 50); ++i) {
        RandomRegularSpec spec = make_random_spec(opts.seed, i);
        run_profile(profile(random_regular_source(spec), 12), spec_instance(spec, i));
    }
    {
        ComplexityProfile bad;
        bad.N = 4;
        bad.p = {BigNat(1), BigNat(2), BigNat(2), BigNat(2), BigNat(5)};
        bad.exact.assign(5, true);
        bool detected = !bb_bound_check(bad).empty();
        reports.push_back(detected ? pass("bb2005_negative_control", "profile [1,2,2,2,5]",
                                          "violation detected at m=2")
                                   : fail("bb2005_negative_control", "profile [1,2,2,2,5]",
                                          "corrupted profile went unnoticed"));
    }
    return reports;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"oracle", "gap", "er82v", "mh",  "claims",
                                                   "ex1",    "ex2", "ex3",   "ex4", "eq1",
                                                   "bb"};
    return names;
}

bool is_suite_name(const std::string& name) {
    if (name == "all") return true;
    const auto& names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<CheckReport> run_suite(const std::string& name, const SuiteOptions& opts) {
    if (name == "oracle") return suite_oracle(opts);
    if (name == "gap") return suite_gap(opts);
    if (name == "er82v") return suite_er82v(opts);
    if (name == "mh") return suite_mh(opts);
    if (name == "claims") return suite_claims(opts);
    if (name == "ex1") return suite_ex1(opts);
    if (name == "ex2") return suite_ex2(opts);
    if (name == "ex3") return suite_ex3(opts);
    if (name == "ex4") return suite_ex4(opts);
    if (name == "eq1") return suite_eq1(opts);
    if (name == "bb") return suite_bb(opts);
    if (name == "all") return run_all_suites(opts);
    throw std::invalid_argument("unknown suite: " + name);
}

std::vector<CheckReport> run_all_suites(const SuiteOptions& opts) {
    std::vector<CheckReport> all;
    for (const auto& name : suite_names()) {
        std::vector<CheckReport> batch = run_suite(name, opts);
        all.insert(all.end(), std::make_move_iterator(batch.begin()),
                   std::make_move_iterator(batch.end()));
    }
    return all;
}

}  // namespace subcomp
