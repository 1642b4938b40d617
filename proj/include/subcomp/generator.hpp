#pragma once

#include <cstdint>
#include <map>
#include <variant>
#include <vector>

#include "subcomp/word.hpp"

namespace subcomp {

/// u = prefix . cycle . cycle . cycle ...
struct EventuallyPeriodic {
    Word prefix;
    Word cycle;  // non-empty
};

/// Fixed point of a non-erasing morphism prolongable on the seed
/// (the image of the seed starts with the seed and has length >= 2),
/// optionally followed by a letter-to-letter coding.
struct Morphic {
    std::map<char, Word> rules;
    char seed = 0;
    std::map<char, char> coding;  // empty means identity
};

/// Characteristic word built by the standard-word recursion
///   s_k = s_{k-1}^{a_k} s_{k-2},  s_{-1} = second symbol, s_0 = first symbol,
/// with partial quotients taken from `directive` and then `repeated_tail`
/// cycled forever. Exact integer construction, no irrational arithmetic.
struct SturmianCF {
    std::vector<std::uint32_t> directive;
    std::vector<std::uint32_t> repeated_tail;  // non-empty, all entries >= 1
};

using Generator = std::variant<EventuallyPeriodic, Morphic, SturmianCF>;

/// Throws std::invalid_argument when the generator violates its invariants
/// (empty cycle, non-prolongable morphism, zero partial quotient, ...).
void validate_generator(const Generator& gen, const Alphabet& alphabet);

/// First `len` symbols of the generated infinite word.
Word expand_prefix(const Generator& gen, std::size_t len, const Alphabet& alphabet);

}  // namespace subcomp
