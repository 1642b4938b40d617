#include "subcomp/boundedness.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stack>

namespace subcomp {

namespace {

struct SccInfo {
    std::vector<std::size_t> comp;              // state -> component id, topological order
    std::vector<std::vector<State>> members;    // per component, ascending state ids
    std::vector<bool> nontrivial;               // has at least one internal edge
};

SccInfo compute_sccs(const Dfa& dfa) {
    const std::size_t n = dfa.state_count;
    const std::size_t alpha = dfa.alphabet.size();
    SccInfo info;
    info.comp.assign(n, 0);
    if (n == 0) return info;

    // Iterative Tarjan; components pop in reverse topological order.
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<State> stack;
    std::vector<std::vector<State>> raw_components;
    int counter = 0;

    struct Frame {
        State state;
        std::size_t edge;
    };
    for (State root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        std::vector<Frame> frames{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.edge < alpha) {
                std::int32_t t = dfa.next[f.state][f.edge++];
                if (t < 0) continue;
                State s = static_cast<State>(t);
                if (index[s] == -1) {
                    index[s] = low[s] = counter++;
                    stack.push_back(s);
                    on_stack[s] = true;
                    frames.push_back({s, 0});
                } else if (on_stack[s]) {
                    low[f.state] = std::min(low[f.state], index[s]);
                }
            } else {
                if (low[f.state] == index[f.state]) {
                    std::vector<State> comp;
                    for (;;) {
                        State s = stack.back();
                        stack.pop_back();
                        on_stack[s] = false;
                        comp.push_back(s);
                        if (s == f.state) break;
                    }
                    raw_components.push_back(std::move(comp));
                }
                State done = f.state;
                frames.pop_back();
                if (!frames.empty()) low[frames.back().state] = std::min(low[frames.back().state], low[done]);
            }
        }
    }

    std::reverse(raw_components.begin(), raw_components.end());  // topological
    info.members = std::move(raw_components);
    info.nontrivial.assign(info.members.size(), false);
    for (std::size_t c = 0; c < info.members.size(); ++c) {
        std::sort(info.members[c].begin(), info.members[c].end());
        for (State q : info.members[c]) info.comp[q] = c;
    }
    for (std::size_t c = 0; c < info.members.size(); ++c) {
        for (State q : info.members[c]) {
            for (std::size_t a = 0; a < alpha; ++a) {
                std::int32_t t = dfa.next[q][a];
                if (t >= 0 && info.comp[static_cast<State>(t)] == c) {
                    info.nontrivial[c] = true;
                    break;
                }
            }
            if (info.nontrivial[c]) break;
        }
    }
    return info;
}

// Label of a path found by BFS (symbol-index expansion order) from `from`
// to the first state satisfying `goal`. Empty optional if unreachable.
std::optional<Word> bfs_word(const Dfa& dfa, State from, const std::vector<bool>& goal) {
    const std::size_t alpha = dfa.alphabet.size();
    std::vector<std::int64_t> parent(dfa.state_count, -2);  // -2 unseen
    std::vector<char> via(dfa.state_count, 0);
    std::deque<State> queue;
    parent[from] = -1;
    queue.push_back(from);
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop_front();
        if (goal[q]) {
            std::string label;
            for (State cur = q; parent[cur] != -1; cur = static_cast<State>(parent[cur]))
                label.push_back(via[cur]);
            std::reverse(label.begin(), label.end());
            return Word(std::move(label));
        }
        for (std::size_t a = 0; a < alpha; ++a) {
            std::int32_t t = dfa.next[q][a];
            if (t < 0 || parent[static_cast<State>(t)] != -2) continue;
            parent[static_cast<State>(t)] = q;
            via[static_cast<State>(t)] = dfa.alphabet.symbol(a);
            queue.push_back(static_cast<State>(t));
        }
    }
    return std::nullopt;
}

// In a component that is a single simple cycle every state has exactly one
// in-component successor, so the loop label from q is well defined.
Word cycle_label_from(const Dfa& dfa, const SccInfo& scc, State q) {
    std::string label;
    State cur = q;
    do {
        for (std::size_t a = 0; a < dfa.alphabet.size(); ++a) {
            std::int32_t t = dfa.next[cur][a];
            if (t >= 0 && scc.comp[static_cast<State>(t)] == scc.comp[q]) {
                label.push_back(dfa.alphabet.symbol(a));
                cur = static_cast<State>(t);
                break;
            }
        }
    } while (cur != q);
    return Word(std::move(label));
}

// Depth-first enumeration over the acyclic subgraph of trivial-component
// states. Calls on_final(label) at every final state passed and
// on_cycle_entry(entry_state, label_including_entering_symbol) whenever an
// edge leaves into a non-trivial component. Paths cannot repeat states
// (the trivial subgraph has no cycles), so the walk terminates.
template <typename FnFinal, typename FnEntry>
void walk_trivial(const Dfa& dfa, const SccInfo& scc, State from, FnFinal on_final,
                  FnEntry on_cycle_entry) {
    std::string buffer;
    auto dfs = [&](auto&& self, State q) -> void {
        if (dfa.is_final(q)) on_final(Word(buffer));
        for (std::size_t a = 0; a < dfa.alphabet.size(); ++a) {
            std::int32_t t = dfa.next[q][a];
            if (t < 0) continue;
            State s = static_cast<State>(t);
            buffer.push_back(dfa.alphabet.symbol(a));
            if (scc.nontrivial[scc.comp[s]])
                on_cycle_entry(s, Word(buffer));
            else
                self(self, s);
            buffer.pop_back();
        }
    };
    dfs(dfs, from);
}

BigNat certificate_bound(const Dfa& dfa, const SccInfo& scc, const std::vector<Triple>& triples) {
    std::size_t base = 0;
    for (const auto& t : triples) base = std::max(base, t[0].length() + t[2].length());
    std::uint64_t lcm = 1;
    bool overflow = false;
    for (std::size_t c = 0; c < scc.members.size(); ++c) {
        if (!scc.nontrivial[c]) continue;
        lcm = std::lcm(lcm, static_cast<std::uint64_t>(scc.members[c].size()));
        if (lcm > 1'000'000) {
            overflow = true;
            break;
        }
    }
    if (overflow) return BigNat(triples.size());  // still a valid upper bound
    // Counts are eventually periodic with period dividing lcm once n passes
    // every acyclic base length, so this window contains the true maximum.
    auto counts = count_words_per_length(dfa, base + static_cast<std::size_t>(lcm));
    BigNat best = 0;
    for (const auto& c : counts) best = std::max(best, c);
    return best;
}

bool word_matches_power(const Word& middle, const Word& y) {
    if (y.empty()) return middle.empty();
    if (middle.length() % y.length() != 0) return false;
    for (std::size_t i = 0; i < middle.length(); ++i)
        if (middle.at(i) != y.at(i % y.length())) return false;
    return true;
}

}  // namespace

GapCertificate decide_bounded(const Dfa& dfa) {
    if (!dfa.trim) throw std::invalid_argument("decide_bounded requires a trim automaton");
    if (dfa.start < 0) return GapCertificate{BoundedCertificate{{}, BigNat(0)}};

    SccInfo scc = compute_sccs(dfa);
    const std::size_t alpha = dfa.alphabet.size();

    // (i) every non-trivial component must be a single simple cycle.
    for (std::size_t c = 0; c < scc.members.size(); ++c) {
        if (!scc.nontrivial[c]) continue;
        for (State q : scc.members[c]) {
            std::vector<std::size_t> internal;
            for (std::size_t a = 0; a < alpha; ++a) {
                std::int32_t t = dfa.next[q][a];
                if (t >= 0 && scc.comp[static_cast<State>(t)] == c) internal.push_back(a);
            }
            if (internal.size() < 2) continue;
            // Two distinct cycles through q; their labels differ at the
            // first symbol because the automaton is deterministic.
            auto cycle_via = [&](std::size_t a) {
                State t = static_cast<State>(dfa.next[q][a]);
                std::vector<bool> goal(dfa.state_count, false);
                goal[q] = true;
                // Restrict the search to the component by masking the DFA:
                // a BFS over the whole graph could leave the component and
                // never return, so walk members only.
                Dfa masked = dfa;
                for (State s = 0; s < dfa.state_count; ++s)
                    for (std::size_t b = 0; b < alpha; ++b) {
                        std::int32_t u = masked.next[s][b];
                        if (u >= 0 &&
                            (scc.comp[s] != c || scc.comp[static_cast<State>(u)] != c))
                            masked.next[s][b] = -1;
                    }
                Word back = *bfs_word(masked, t, goal);
                return Word(dfa.alphabet.symbol(a)) + back;
            };
            return GapCertificate{
                UnboundedWitness{TwoCyclesWitness{q, cycle_via(internal[0]), cycle_via(internal[1])}}};
        }
    }

    // (ii) no condensation path may meet two non-trivial components.
    const std::size_t comp_count = scc.members.size();
    std::vector<bool> reaches_nontrivial(comp_count, false);
    for (std::size_t c = comp_count; c-- > 0;) {  // reverse topological
        for (State q : scc.members[c]) {
            for (std::size_t a = 0; a < alpha; ++a) {
                std::int32_t t = dfa.next[q][a];
                if (t < 0) continue;
                std::size_t d = scc.comp[static_cast<State>(t)];
                if (d == c) continue;
                if (scc.nontrivial[d] || reaches_nontrivial[d]) reaches_nontrivial[c] = true;
            }
        }
    }
    for (std::size_t c = 0; c < comp_count; ++c) {
        if (!scc.nontrivial[c] || !reaches_nontrivial[c]) continue;
        // First non-trivial component reachable from c, in BFS order.
        std::size_t target = comp_count;
        std::vector<bool> seen(comp_count, false);
        std::deque<std::size_t> queue{c};
        seen[c] = true;
        while (!queue.empty() && target == comp_count) {
            std::size_t cur = queue.front();
            queue.pop_front();
            for (State q : scc.members[cur]) {
                for (std::size_t a = 0; a < alpha && target == comp_count; ++a) {
                    std::int32_t t = dfa.next[q][a];
                    if (t < 0) continue;
                    std::size_t d = scc.comp[static_cast<State>(t)];
                    if (d == cur || seen[d]) continue;
                    if (scc.nontrivial[d]) {
                        target = d;
                        break;
                    }
                    seen[d] = true;
                    queue.push_back(d);
                }
                if (target != comp_count) break;
            }
        }
        State u = scc.members[c][0];
        State v = scc.members[target][0];
        std::vector<bool> goal_u(dfa.state_count, false), goal_v(dfa.state_count, false),
            goal_final(dfa.state_count, false);
        goal_u[u] = true;
        goal_v[v] = true;
        for (State f : dfa.finals) goal_final[f] = true;
        Word to_u = *bfs_word(dfa, static_cast<State>(dfa.start), goal_u);
        Word to_v = *bfs_word(dfa, u, goal_v);
        Word to_final = *bfs_word(dfa, v, goal_final);
        return GapCertificate{UnboundedWitness{
            TwoComponentsWitness{to_u + to_v + to_final, cycle_label_from(dfa, scc, u),
                                 cycle_label_from(dfa, scc, v)}}};
    }

    // Bounded: enumerate the certificate triples.
    std::set<Triple> triples;
    const Word y0(dfa.alphabet.symbol(0));
    std::vector<std::pair<State, Word>> entries;  // (cycle entry state, entry word)

    State start = static_cast<State>(dfa.start);
    if (scc.nontrivial[scc.comp[start]]) {
        entries.emplace_back(start, Word());
    } else {
        walk_trivial(
            dfa, scc, start,
            [&](const Word& w) { triples.insert(Triple{w, y0, Word()}); },
            [&](State e, const Word& x) { entries.emplace_back(e, x); });
    }

    for (const auto& entry : entries) {
        const State e = entry.first;
        const Word& x = entry.second;
        Word y = cycle_label_from(dfa, scc, e);
        std::size_t c = scc.comp[e];
        State f = e;
        for (std::size_t offset = 0;; ++offset) {
            Word arc = y.prefix(offset);
            if (dfa.is_final(f)) triples.insert(Triple{x, y, arc});
            for (std::size_t a = 0; a < alpha; ++a) {
                std::int32_t t = dfa.next[f][a];
                if (t < 0 || scc.comp[static_cast<State>(t)] == c) continue;
                // Exit edges land in trivial components only: condition (ii)
                // already ruled out reaching another cycle.
                if (scc.nontrivial[scc.comp[static_cast<State>(t)]])
                    throw std::logic_error("bounded automaton reached a second cycle");
                Word head = arc + dfa.alphabet.symbol(a);
                walk_trivial(
                    dfa, scc, static_cast<State>(t),
                    [&](const Word& z) { triples.insert(Triple{x, y, head + z}); },
                    [&](State, const Word&) {
                        throw std::logic_error("bounded automaton reached a second cycle");
                    });
            }
            // advance along the cycle
            for (std::size_t a = 0; a < alpha; ++a) {
                std::int32_t t = dfa.next[f][a];
                if (t >= 0 && scc.comp[static_cast<State>(t)] == c) {
                    f = static_cast<State>(t);
                    break;
                }
            }
            if (f == e) break;
        }
    }

    std::vector<Triple> ordered(triples.begin(), triples.end());
    BigNat bound = certificate_bound(dfa, scc, ordered);
    return GapCertificate{BoundedCertificate{std::move(ordered), std::move(bound)}};
}

Nfa cover_automaton(const Alphabet& alphabet, const std::vector<Triple>& triples) {
    std::size_t total = 0;
    for (const auto& t : triples) {
        if (t[1].empty()) throw std::invalid_argument("cover triple with empty cycle word");
        total += t[0].length() + t[1].length() + t[2].length();
    }
    Nfa out(total, alphabet);
    State next_free = 0;
    for (const auto& t : triples) {
        const Word &x = t[0], &y = t[1], &z = t[2];
        State s = next_free;
        out.starts.insert(s);
        for (std::size_t i = 0; i < x.length(); ++i) {
            out.add_transition(s, x.at(i), s + 1);
            ++s;
        }
        State hub = s;
        // y-loop (y is non-empty by the certificate invariant)
        State cur = hub;
        for (std::size_t i = 0; i + 1 < y.length(); ++i) {
            out.add_transition(cur, y.at(i), s + 1);
            cur = ++s;
        }
        out.add_transition(cur, y.at(y.length() - 1), hub);
        for (std::size_t i = 0; i < z.length(); ++i) {
            out.add_transition(i == 0 ? hub : s, z.at(i), s + 1);
            ++s;
        }
        out.finals.insert(z.empty() ? hub : s);
        next_free = s + 1;
    }
    return out;
}

CoverCheck verify_triple_cover(const Nfa& language, const std::vector<Triple>& triples,
                               CoverMode mode, std::size_t sample_max) {
    if (mode == CoverMode::Sampled) {
        for (const Word& w : enumerate_words_up_to(language, sample_max)) {
            bool covered = false;
            for (const auto& t : triples) {
                if (w.length() < t[0].length() + t[2].length()) continue;
                if (!is_prefix(t[0], w) || !is_suffix(t[2], w)) continue;
                Word middle = w.substr(t[0].length(), w.length() - t[0].length() - t[2].length());
                if (word_matches_power(middle, t[1])) {
                    covered = true;
                    break;
                }
            }
            if (!covered) return CoverCheck{CoverOutcome::NotCovered, w};
        }
        return CoverCheck{CoverOutcome::Covered, std::nullopt};
    }

    try {
        Dfa lang = language_dfa(language);
        if (lang.start < 0) return CoverCheck{CoverOutcome::Covered, std::nullopt};
        Dfa cover = determinize(cover_automaton(language.alphabet, triples));
        const std::size_t alpha = lang.alphabet.size();
        const std::int64_t cover_sink = -1;

        // BFS over the product; cover side treats undefined moves as a sink.
        struct Node {
            State lang_state;
            std::int64_t cover_state;
            std::int64_t parent;
            char via;
        };
        std::map<std::pair<State, std::int64_t>, std::size_t> seen;
        std::vector<Node> nodes;
        std::int64_t cover_start = cover.start < 0 ? cover_sink : cover.start;
        nodes.push_back({static_cast<State>(lang.start), cover_start, -1, 0});
        seen.emplace(std::make_pair(nodes[0].lang_state, nodes[0].cover_state), 0);
        for (std::size_t head = 0; head < nodes.size(); ++head) {
            Node node = nodes[head];
            bool cover_final = node.cover_state != cover_sink &&
                               cover.is_final(static_cast<State>(node.cover_state));
            if (lang.is_final(node.lang_state) && !cover_final) {
                std::string label;
                for (std::int64_t cur = static_cast<std::int64_t>(head); nodes[cur].parent != -1;
                     cur = nodes[cur].parent)
                    label.push_back(nodes[cur].via);
                std::reverse(label.begin(), label.end());
                return CoverCheck{CoverOutcome::NotCovered, Word(std::move(label))};
            }
            for (std::size_t a = 0; a < alpha; ++a) {
                std::int32_t lt = lang.next[node.lang_state][a];
                if (lt < 0) continue;  // no word of L continues this way
                std::int64_t ct = cover_sink;
                if (node.cover_state != cover_sink) {
                    std::int32_t c = cover.next[static_cast<State>(node.cover_state)][a];
                    ct = c < 0 ? cover_sink : c;
                }
                auto key = std::make_pair(static_cast<State>(lt), ct);
                if (seen.emplace(key, nodes.size()).second)
                    nodes.push_back({key.first, key.second, static_cast<std::int64_t>(head),
                                     lang.alphabet.symbol(a)});
            }
        }
        return CoverCheck{CoverOutcome::Covered, std::nullopt};
    } catch (const CapExceededError&) {
        return CoverCheck{CoverOutcome::CapExceeded, std::nullopt};
    }
}

bool has_finitely_many_specials(const Dfa& factor_dfa) {
    if (factor_dfa.start < 0) return true;
    SccInfo scc = compute_sccs(factor_dfa);
    // States reachable from a cycle (including cycle states themselves).
    std::vector<bool> tainted(factor_dfa.state_count, false);
    std::deque<State> queue;
    for (State q = 0; q < factor_dfa.state_count; ++q)
        if (scc.nontrivial[scc.comp[q]]) {
            tainted[q] = true;
            queue.push_back(q);
        }
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop_front();
        for (std::size_t a = 0; a < factor_dfa.alphabet.size(); ++a) {
            std::int32_t t = factor_dfa.next[q][a];
            if (t >= 0 && !tainted[static_cast<State>(t)]) {
                tainted[static_cast<State>(t)] = true;
                queue.push_back(static_cast<State>(t));
            }
        }
    }
    for (State q = 0; q < factor_dfa.state_count; ++q)
        if (tainted[q] && factor_dfa.out_degree(q) >= 2) return false;
    return true;
}

std::optional<std::vector<std::array<Word, 2>>> derive_pair_decomposition(const Dfa& dfa) {
    if (!dfa.trim) throw std::invalid_argument("pair decomposition requires a trim automaton");
    std::vector<std::array<Word, 2>> pairs;
    if (dfa.start < 0) return pairs;

    SccInfo scc = compute_sccs(dfa);
    const std::size_t alpha = dfa.alphabet.size();
    for (std::size_t c = 0; c < scc.members.size(); ++c) {
        if (!scc.nontrivial[c]) continue;
        for (State q : scc.members[c]) {
            std::size_t internal = 0;
            for (std::size_t a = 0; a < alpha; ++a) {
                std::int32_t t = dfa.next[q][a];
                if (t < 0) continue;
                if (scc.comp[static_cast<State>(t)] == c)
                    ++internal;
                else
                    return std::nullopt;  // a cycle with an exit edge
            }
            if (internal != 1) return std::nullopt;  // not a simple cycle
        }
    }

    const Word y0(dfa.alphabet.symbol(0));
    std::set<std::array<Word, 2>> collected;
    std::vector<std::pair<State, Word>> entries;
    State start = static_cast<State>(dfa.start);
    if (scc.nontrivial[scc.comp[start]]) {
        entries.emplace_back(start, Word());
    } else {
        walk_trivial(
            dfa, scc, start,
            [&](const Word& w) { collected.insert({w, y0}); },
            [&](State e, const Word& x) { entries.emplace_back(e, x); });
    }
    for (const auto& entry : entries) {
        const State e = entry.first;
        const Word& x = entry.second;
        Word y = cycle_label_from(dfa, scc, e);
        State f = e;
        for (std::size_t offset = 0;; ++offset) {
            // x y^n arc(e,f) rewrites as (x arc(e,f)) rot(y)^n with the cycle
            // label read from f instead of e.
            if (dfa.is_final(f)) collected.insert({x + y.prefix(offset), cycle_label_from(dfa, scc, f)});
            for (std::size_t a = 0; a < alpha; ++a) {
                std::int32_t t = dfa.next[f][a];
                if (t >= 0 && scc.comp[static_cast<State>(t)] == scc.comp[e]) {
                    f = static_cast<State>(t);
                    break;
                }
            }
            if (f == e) break;
        }
    }
    pairs.assign(collected.begin(), collected.end());
    return pairs;
}

}  // namespace subcomp
