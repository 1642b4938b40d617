#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "subcomp/generator.hpp"
#include "subcomp/nfa.hpp"
#include "subcomp/word.hpp"

namespace subcomp {

struct FiniteSource {
    std::set<Word> words;  // may be empty: the empty language
};

struct RegularSource {
    Nfa automaton;
};

struct InfiniteSource {
    Generator gen;
};

/// Two one-sided generators; the left one is read rightward and then
/// mirrored onto the negative positions.
struct BiInfiniteSource {
    Generator left;
    Generator right;
};

/// Uniform handle on everything a complexity profile is computed over.
struct LanguageSource {
    Alphabet alphabet;
    std::variant<FiniteSource, RegularSource, InfiniteSource, BiInfiniteSource> kind;

    bool is_regular() const { return std::holds_alternative<RegularSource>(kind); }
    bool is_finite() const { return std::holds_alternative<FiniteSource>(kind); }
    bool is_word_source() const {
        return std::holds_alternative<InfiniteSource>(kind) ||
               std::holds_alternative<BiInfiniteSource>(kind);
    }
};

struct FactorEnumeration {
    FactorSet factors;
    bool exact = true;  // false when the result is horizon-limited
};

/// Default materialization horizon for word sources.
inline std::size_t default_horizon(std::size_t n) { return std::max<std::size_t>(64 * n, 4096); }

/// F_n of the source's language. Finite and regular sources are exact;
/// word sources are materialized to `horizon` symbols and flagged exact
/// only when the generator is eventually periodic and the horizon provably
/// shows every factor. Throws std::invalid_argument when horizon < n for a
/// word source.
FactorEnumeration enumerate_factors(const LanguageSource& src, std::size_t n,
                                    std::optional<std::size_t> horizon = std::nullopt);

/// Materialized window of a word source (the whole bi-infinite window for
/// two-sided sources). Exposed for independent sliding-window checks.
Word materialize_window(const LanguageSource& src, std::size_t horizon);

enum class Extendability { Yes, No };

/// Whether every word of the language extends on the right inside the
/// language. Exact for finite and regular sources; languages of infinite
/// and bi-infinite words are extendable by construction.
Extendability is_extendable(const LanguageSource& src);

struct BuiltinInfo {
    std::string name;
    std::string description;
};

/// Catalog of named example languages over {a, b}.
const std::vector<BuiltinInfo>& builtin_catalog();

/// Resolves a catalog name into a concrete source. Throws
/// std::invalid_argument for unknown names.
LanguageSource make_builtin(const std::string& name);

}  // namespace subcomp
