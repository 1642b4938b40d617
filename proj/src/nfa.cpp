#include "subcomp/nfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <string>

namespace subcomp {

void Nfa::add_transition(State from, char symbol, State to) {
    if (from >= state_count || to >= state_count)
        throw std::invalid_argument("transition endpoint out of range");
    if (!alphabet.contains(symbol))
        throw std::invalid_argument("transition symbol not in alphabet");
    transitions.insert(Transition{from, symbol, to});
}

void Nfa::check_invariants() const {
    for (const auto& t : transitions) {
        if (t.from >= state_count || t.to >= state_count)
            throw std::invalid_argument("transition endpoint out of range");
        if (!alphabet.contains(t.symbol))
            throw std::invalid_argument("transition symbol not in alphabet");
    }
    for (State s : starts)
        if (s >= state_count) throw std::invalid_argument("start state out of range");
    for (State s : finals)
        if (s >= state_count) throw std::invalid_argument("final state out of range");
}

std::size_t Dfa::out_degree(State s) const {
    std::size_t d = 0;
    for (std::int32_t t : next[s])
        if (t >= 0) ++d;
    return d;
}

namespace {

Dfa empty_dfa(const Alphabet& alphabet) {
    Dfa d(alphabet);
    d.trim = true;
    return d;
}

// Adjacency indexed by (state, symbol index) -> successor set, in
// deterministic order.
std::vector<std::vector<std::vector<State>>> successor_table(const Nfa& nfa) {
    std::vector<std::vector<std::vector<State>>> table(
        nfa.state_count, std::vector<std::vector<State>>(nfa.alphabet.size()));
    for (const auto& t : nfa.transitions)
        table[t.from][nfa.alphabet.index_of(t.symbol)].push_back(t.to);
    return table;
}

std::set<State> forward_reachable(const Nfa& nfa, const std::set<State>& from) {
    std::set<State> seen = from;
    std::deque<State> queue(from.begin(), from.end());
    std::vector<std::vector<State>> succ(nfa.state_count);
    for (const auto& t : nfa.transitions) succ[t.from].push_back(t.to);
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop_front();
        for (State s : succ[q])
            if (seen.insert(s).second) queue.push_back(s);
    }
    return seen;
}

std::set<State> backward_reachable(const Nfa& nfa, const std::set<State>& from) {
    std::set<State> seen = from;
    std::deque<State> queue(from.begin(), from.end());
    std::vector<std::vector<State>> pred(nfa.state_count);
    for (const auto& t : nfa.transitions) pred[t.to].push_back(t.from);
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop_front();
        for (State s : pred[q])
            if (seen.insert(s).second) queue.push_back(s);
    }
    return seen;
}

Nfa restrict_states(const Nfa& nfa, const std::set<State>& keep) {
    Nfa out(keep.size(), nfa.alphabet);
    std::vector<std::int64_t> remap(nfa.state_count, -1);
    State idx = 0;
    for (State s : keep) remap[s] = idx++;
    for (const auto& t : nfa.transitions)
        if (remap[t.from] >= 0 && remap[t.to] >= 0)
            out.transitions.insert(
                Transition{static_cast<State>(remap[t.from]), t.symbol,
                           static_cast<State>(remap[t.to])});
    for (State s : nfa.starts)
        if (remap[s] >= 0) out.starts.insert(static_cast<State>(remap[s]));
    for (State s : nfa.finals)
        if (remap[s] >= 0) out.finals.insert(static_cast<State>(remap[s]));
    return out;
}

Nfa to_nfa(const Dfa& dfa) {
    Nfa out(dfa.state_count, dfa.alphabet);
    for (State q = 0; q < dfa.state_count; ++q)
        for (std::size_t a = 0; a < dfa.alphabet.size(); ++a)
            if (dfa.next[q][a] >= 0)
                out.transitions.insert(
                    Transition{q, dfa.alphabet.symbol(a), static_cast<State>(dfa.next[q][a])});
    if (dfa.start >= 0) out.starts.insert(static_cast<State>(dfa.start));
    out.finals = dfa.finals;
    return out;
}

Dfa dfa_from_deterministic_nfa(const Nfa& nfa, bool trim_flag) {
    Dfa out(nfa.alphabet);
    out.state_count = nfa.state_count;
    out.next.assign(nfa.state_count, std::vector<std::int32_t>(nfa.alphabet.size(), -1));
    for (const auto& t : nfa.transitions)
        out.next[t.from][nfa.alphabet.index_of(t.symbol)] = static_cast<std::int32_t>(t.to);
    out.start = nfa.starts.empty() ? -1 : static_cast<std::int32_t>(*nfa.starts.begin());
    out.finals = nfa.finals;
    out.trim = trim_flag;
    return out;
}

}  // namespace

Dfa determinize(const Nfa& nfa) {
    if (nfa.starts.empty()) return empty_dfa(nfa.alphabet);
    auto table = successor_table(nfa);

    std::vector<State> start_subset(nfa.starts.begin(), nfa.starts.end());
    std::map<std::vector<State>, State> index;
    std::vector<std::vector<State>> subsets;
    index.emplace(start_subset, 0);
    subsets.push_back(start_subset);

    Dfa out(nfa.alphabet);
    out.next.emplace_back(nfa.alphabet.size(), -1);

    for (std::size_t cur = 0; cur < subsets.size(); ++cur) {
        for (std::size_t a = 0; a < nfa.alphabet.size(); ++a) {
            std::set<State> successor;
            for (State q : subsets[cur])
                for (State s : table[q][a]) successor.insert(s);
            if (successor.empty()) continue;
            std::vector<State> key(successor.begin(), successor.end());
            auto [it, inserted] = index.emplace(key, static_cast<State>(subsets.size()));
            if (inserted) {
                if (subsets.size() >= kDeterminizationCap) throw CapExceededError();
                subsets.push_back(std::move(key));
                out.next.emplace_back(nfa.alphabet.size(), -1);
            }
            out.next[cur][a] = static_cast<std::int32_t>(it->second);
        }
    }

    out.state_count = subsets.size();
    out.start = 0;
    for (std::size_t i = 0; i < subsets.size(); ++i)
        for (State q : subsets[i])
            if (nfa.finals.count(q)) {
                out.finals.insert(static_cast<State>(i));
                break;
            }
    return out;
}

Nfa trim(const Nfa& nfa) {
    auto live = forward_reachable(nfa, nfa.starts);
    auto co = backward_reachable(nfa, nfa.finals);
    std::set<State> keep;
    std::set_intersection(live.begin(), live.end(), co.begin(), co.end(),
                          std::inserter(keep, keep.begin()));
    return restrict_states(nfa, keep);
}

Dfa trim(const Dfa& dfa) {
    if (dfa.start < 0) return empty_dfa(dfa.alphabet);
    Nfa t = trim(to_nfa(dfa));
    if (t.starts.empty()) return empty_dfa(dfa.alphabet);
    return dfa_from_deterministic_nfa(t, true);
}

Dfa minimize(const Dfa& input) {
    Dfa dfa = input.trim ? input : trim(input);
    if (dfa.start < 0) return dfa;

    const std::size_t n = dfa.state_count;
    const std::size_t alpha = dfa.alphabet.size();
    const std::size_t sink = n;  // implicit dead state completing the function

    // Moore refinement over the completed automaton.
    std::vector<std::size_t> cls(n + 1);
    for (State q = 0; q < n; ++q) cls[q] = dfa.is_final(q) ? 1 : 0;
    cls[sink] = 0;
    auto successor = [&](std::size_t q, std::size_t a) -> std::size_t {
        if (q == sink) return sink;
        std::int32_t t = dfa.next[q][a];
        return t < 0 ? sink : static_cast<std::size_t>(t);
    };
    std::size_t prev_count = 1 + (dfa.finals.empty() ? 0 : 1);
    for (;;) {
        std::map<std::vector<std::size_t>, std::size_t> sig_index;
        std::vector<std::size_t> next_cls(n + 1);
        for (std::size_t q = 0; q <= n; ++q) {
            std::vector<std::size_t> sig;
            sig.reserve(alpha + 1);
            sig.push_back(cls[q]);
            for (std::size_t a = 0; a < alpha; ++a) sig.push_back(cls[successor(q, a)]);
            auto [it, ins] = sig_index.emplace(std::move(sig), sig_index.size());
            (void)ins;
            next_cls[q] = it->second;
        }
        std::size_t class_count = sig_index.size();
        cls = std::move(next_cls);
        // Refinement only splits classes, so an unchanged count means the
        // partition is stable (ids may have been renumbered, which is fine).
        if (class_count == prev_count || class_count == n + 1) break;
        prev_count = class_count;
    }

    // Rebuild with BFS numbering from the start class, dropping the sink class.
    std::size_t sink_cls = cls[sink];
    std::map<std::size_t, State> number;
    std::vector<std::size_t> order;
    std::deque<std::size_t> queue;
    std::vector<std::size_t> rep_of_class(n + 2, sink);
    for (std::size_t q = n + 1; q-- > 0;) rep_of_class[cls[q]] = q;  // smallest representative
    std::size_t start_cls = cls[static_cast<std::size_t>(dfa.start)];
    if (start_cls != sink_cls) {
        number.emplace(start_cls, 0);
        order.push_back(start_cls);
        queue.push_back(start_cls);
    }
    while (!queue.empty()) {
        std::size_t c = queue.front();
        queue.pop_front();
        std::size_t rep = rep_of_class[c];
        for (std::size_t a = 0; a < alpha; ++a) {
            std::size_t t = cls[successor(rep, a)];
            if (t == sink_cls || number.count(t)) continue;
            number.emplace(t, static_cast<State>(order.size()));
            order.push_back(t);
            queue.push_back(t);
        }
    }

    Dfa out(dfa.alphabet);
    out.state_count = order.size();
    out.next.assign(order.size(), std::vector<std::int32_t>(alpha, -1));
    for (std::size_t i = 0; i < order.size(); ++i) {
        std::size_t rep = rep_of_class[order[i]];
        for (std::size_t a = 0; a < alpha; ++a) {
            std::size_t t = cls[successor(rep, a)];
            if (t != sink_cls) out.next[i][a] = static_cast<std::int32_t>(number.at(t));
        }
        if (dfa.is_final(static_cast<State>(rep))) out.finals.insert(static_cast<State>(i));
    }
    out.start = order.empty() ? -1 : 0;
    out.trim = true;
    return out;
}

Nfa factor_closure(const Nfa& nfa) {
    Nfa t = trim(nfa);
    t.starts.clear();
    t.finals.clear();
    for (State q = 0; q < t.state_count; ++q) {
        t.starts.insert(q);
        t.finals.insert(q);
    }
    return t;
}

namespace {

std::set<State> relax_finals_once(const Nfa& nfa, const std::set<State>& finals) {
    std::set<State> out;
    for (const auto& t : nfa.transitions)
        if (finals.count(t.to)) out.insert(t.from);
    return out;
}

struct FinalSequence {
    std::vector<std::set<State>> sets;  // sets[k] = finals of L_k, up to first repeat
    std::size_t entry = 0;              // index the repetition maps back to
    std::size_t period = 1;
};

FinalSequence final_set_sequence(const Nfa& nfa) {
    FinalSequence seq;
    std::map<std::set<State>, std::size_t> seen;
    std::set<State> cur = nfa.finals;
    for (;;) {
        auto it = seen.find(cur);
        if (it != seen.end()) {
            seq.entry = it->second;
            seq.period = seq.sets.size() - it->second;
            return seq;
        }
        seen.emplace(cur, seq.sets.size());
        seq.sets.push_back(cur);
        cur = relax_finals_once(nfa, cur);
    }
}

}  // namespace

Nfa shift_finals(const Nfa& nfa, std::size_t k) {
    Nfa out = nfa;
    std::set<State> finals = nfa.finals;
    for (std::size_t i = 0; i < k; ++i) {
        finals = relax_finals_once(nfa, finals);
        if (finals.empty()) break;  // relaxation of the empty set stays empty
    }
    out.finals = std::move(finals);
    return out;
}

LprimeResult stabilize_lprime(const Nfa& nfa) {
    FinalSequence seq = final_set_sequence(nfa);
    // The factor chain Fact(L_0) >= Fact(L_1) >= ... is non-increasing and
    // the underlying final sets repeat from `entry` with period `period`,
    // so the chain is constant from `entry` on.
    Nfa shifted = nfa;
    shifted.finals = seq.sets[seq.entry];
    return LprimeResult{factor_closure(shifted), seq.entry, seq.period};
}

std::vector<BigNat> count_words_reaching(const Dfa& dfa, const std::set<State>& targets,
                                         std::size_t N) {
    std::vector<BigNat> counts(N + 1, BigNat(0));
    if (dfa.start < 0) return counts;
    std::vector<BigNat> paths(dfa.state_count, BigNat(0));
    paths[static_cast<std::size_t>(dfa.start)] = 1;
    for (std::size_t n = 0;; ++n) {
        BigNat total = 0;
        for (State q : targets) total += paths[q];
        counts[n] = std::move(total);
        if (n == N) break;
        std::vector<BigNat> next(dfa.state_count, BigNat(0));
        for (State q = 0; q < dfa.state_count; ++q) {
            if (paths[q] == 0) continue;
            for (std::size_t a = 0; a < dfa.alphabet.size(); ++a)
                if (dfa.next[q][a] >= 0) next[static_cast<std::size_t>(dfa.next[q][a])] += paths[q];
        }
        paths = std::move(next);
    }
    return counts;
}

std::vector<BigNat> count_words_per_length(const Dfa& dfa, std::size_t N) {
    return count_words_reaching(dfa, dfa.finals, N);
}

std::set<Word> enumerate_words(const Dfa& dfa, std::size_t n) {
    std::set<Word> out;
    if (dfa.start < 0) return out;
    std::string buffer;
    buffer.reserve(n);
    auto dfs = [&](auto&& self, State q, std::size_t depth) -> void {
        if (depth == n) {
            if (dfa.is_final(q)) out.insert(Word(buffer));
            return;
        }
        for (std::size_t a = 0; a < dfa.alphabet.size(); ++a) {
            std::int32_t t = dfa.next[q][a];
            if (t < 0) continue;
            buffer.push_back(dfa.alphabet.symbol(a));
            self(self, static_cast<State>(t), depth + 1);
            buffer.pop_back();
        }
    };
    dfs(dfs, static_cast<State>(dfa.start), 0);
    return out;
}

std::set<Word> enumerate_words_up_to(const Nfa& nfa, std::size_t max_len) {
    std::set<Word> out;
    if (nfa.starts.empty()) return out;
    auto table = successor_table(nfa);
    std::string buffer;
    auto is_accepting = [&](const std::vector<State>& live) {
        for (State q : live)
            if (nfa.finals.count(q)) return true;
        return false;
    };
    auto dfs = [&](auto&& self, const std::vector<State>& live) -> void {
        if (is_accepting(live)) out.insert(Word(buffer));
        if (buffer.size() == max_len) return;
        for (std::size_t a = 0; a < nfa.alphabet.size(); ++a) {
            std::set<State> successor;
            for (State q : live)
                for (State s : table[q][a]) successor.insert(s);
            if (successor.empty()) continue;
            buffer.push_back(nfa.alphabet.symbol(a));
            std::vector<State> key(successor.begin(), successor.end());
            self(self, key);
            buffer.pop_back();
        }
    };
    dfs(dfs, std::vector<State>(nfa.starts.begin(), nfa.starts.end()));
    return out;
}

bool accepts(const Nfa& nfa, const Word& w) {
    std::set<State> live = nfa.starts;
    for (std::size_t i = 0; i < w.length() && !live.empty(); ++i) {
        std::set<State> next;
        for (const auto& t : nfa.transitions)
            if (t.symbol == w.at(i) && live.count(t.from)) next.insert(t.to);
        live = std::move(next);
    }
    for (State q : live)
        if (nfa.finals.count(q)) return true;
    return false;
}

bool accepts(const Dfa& dfa, const Word& w) {
    if (dfa.start < 0) return false;
    State q = static_cast<State>(dfa.start);
    for (std::size_t i = 0; i < w.length(); ++i) {
        int a = dfa.alphabet.index_of(w.at(i));
        if (a < 0) return false;
        std::int32_t t = dfa.next[q][static_cast<std::size_t>(a)];
        if (t < 0) return false;
        q = static_cast<State>(t);
    }
    return dfa.is_final(q);
}

Dfa factor_dfa(const Nfa& nfa) { return minimize(determinize(factor_closure(nfa))); }

Dfa language_dfa(const Nfa& nfa) { return minimize(determinize(trim(nfa))); }

Nfa trie_nfa(const std::set<Word>& words, const Alphabet& alphabet) {
    std::vector<std::map<char, State>> children(1);
    std::set<State> finals;
    for (const Word& w : words) {
        State node = 0;
        for (std::size_t i = 0; i < w.length(); ++i) {
            auto [it, inserted] = children[node].emplace(w.at(i), children.size());
            if (inserted) children.emplace_back();
            node = it->second;
        }
        finals.insert(node);
    }
    Nfa nfa(children.size(), alphabet);
    for (State node = 0; node < children.size(); ++node)
        for (const auto& [symbol, child] : children[node]) nfa.add_transition(node, symbol, child);
    nfa.starts = {0};
    nfa.finals = std::move(finals);
    return nfa;
}

}  // namespace subcomp
