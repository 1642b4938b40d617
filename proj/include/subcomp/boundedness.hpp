#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "subcomp/nfa.hpp"

namespace subcomp {

/// (x, y, z) covering the words x y^n z, n ranging over all naturals.
/// Words with no cycle on their accepting path embed as n = 0 instances:
/// they are emitted as (w, y0, empty) with y0 the first alphabet symbol.
using Triple = std::array<Word, 3>;

struct BoundedCertificate {
    std::vector<Triple> triples;
    BigNat bound;  // >= sup over n of the per-length word count
};

/// Some state carries two distinct simple cycles.
struct TwoCyclesWitness {
    State state = 0;
    Word cycle_a;
    Word cycle_b;
};

/// An accepting path threads two disjoint non-trivial strongly connected
/// components.
struct TwoComponentsWitness {
    Word path;
    Word cycle_a;
    Word cycle_b;
};

using UnboundedWitness = std::variant<TwoCyclesWitness, TwoComponentsWitness>;

struct GapCertificate {
    std::variant<BoundedCertificate, UnboundedWitness> value;

    bool bounded() const { return std::holds_alternative<BoundedCertificate>(value); }
    const BoundedCertificate& certificate() const { return std::get<BoundedCertificate>(value); }
    const UnboundedWitness& witness() const { return std::get<UnboundedWitness>(value); }
};

/// Decides whether the number of accepted words per length is bounded.
/// Requires a trim deterministic automaton (throws std::invalid_argument
/// otherwise); the empty automaton yields Bounded with no triples.
///
/// Bounded holds iff every non-trivial strongly connected component of the
/// transition graph is a single simple cycle and no condensation path
/// meets two non-trivial components. On Bounded the triples enumerate
/// entry word, cycle label and exit word of every accepting path shape,
/// states and symbols visited in index order.
GapCertificate decide_bounded(const Dfa& dfa);

enum class CoverOutcome { Covered, NotCovered, CapExceeded };

struct CoverCheck {
    CoverOutcome outcome = CoverOutcome::Covered;
    std::optional<Word> counterexample;
};

enum class CoverMode { Formal, Sampled };

/// Checks L(language) subset of the union of x y^n z over the triples.
/// Formal mode decides inclusion exactly via the determinized complement
/// of the cover (explicit CapExceeded outcome past the subset cap, no
/// silent fallback); sampled mode tests every accepted word up to
/// sample_max by direct length arithmetic and word comparison.
CoverCheck verify_triple_cover(const Nfa& language, const std::vector<Triple>& triples,
                               CoverMode mode, std::size_t sample_max);

/// NFA accepting the union of x y* z over the triples.
Nfa cover_automaton(const Alphabet& alphabet, const std::vector<Triple>& triples);

/// True iff the language of the (trim, factor-closed) DFA has finitely
/// many special factors: no state with out-degree >= 2 lies on a cycle or
/// is reachable from one.
bool has_finitely_many_specials(const Dfa& factor_dfa);

/// Pair decomposition L subset of union x y^n for languages with finitely
/// many special factors. Derived from the same path-shape enumeration as
/// decide_bounded; in-cycle exit words fold into x by rotating the cycle
/// label. Returns nullopt when the automaton's structure rules the
/// decomposition out (a cycle with an exit edge, or unbounded growth).
std::optional<std::vector<std::array<Word, 2>>> derive_pair_decomposition(const Dfa& dfa);

}  // namespace subcomp
