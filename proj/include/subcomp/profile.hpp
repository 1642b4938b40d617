#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "subcomp/bignat.hpp"
#include "subcomp/boundedness.hpp"
#include "subcomp/source.hpp"

namespace subcomp {

/// p(0..N) with a per-entry exactness flag. Inexact entries are lower
/// bounds obtained from a finite window; no boolean verdict is ever
/// proven from them.
struct ComplexityProfile {
    std::size_t N = 0;
    std::vector<BigNat> p;
    std::vector<bool> exact;

    bool all_exact() const;
};

struct SpecialFactorReport {
    std::size_t n = 0;
    std::set<Word> specials;
    bool exact = true;

    std::size_t count() const { return specials.size(); }
};

/// p(n) = |F_n| for n = 0..N. Regular sources go through the counting
/// dynamic program on the canonical factor DFA; word sources share one
/// materialized window of `horizon` symbols.
ComplexityProfile profile(const LanguageSource& src, std::size_t N,
                          std::optional<std::size_t> horizon = std::nullopt);

/// Words in F_n with at least two one-letter right extensions in F_{n+1},
/// obtained by grouping F_{n+1} under the parent map. A window-edge factor
/// whose extensions fall outside the window counts as non-special and the
/// report is flagged inexact.
SpecialFactorReport special_factors(const LanguageSource& src, std::size_t n,
                                    std::optional<std::size_t> horizon = std::nullopt);

/// Number of length-n special factors, counted on the factor DFA without
/// enumerating words: a factor is special iff its state has out-degree
/// >= 2, so this is a path count into the branching states.
BigNat special_count(const Dfa& factor_automaton, std::size_t n);

struct PlateauCertificate {
    std::size_t m = 0;  // p is constant from m on; proven, not just observed
    BigNat value;
};

struct BoundedProven {
    BigNat bound;
    std::variant<BoundedCertificate, PlateauCertificate> certificate;
};
struct LinearLowerBoundProven {
    UnboundedWitness witness;
};
struct ConsistentWithLinear {
    std::size_t checked_up_to = 0;  // p(n) > n verified for all n <= this
};
struct UndeterminedAtHorizon {
    std::string reason;
};

using GapVerdict =
    std::variant<BoundedProven, LinearLowerBoundProven, ConsistentWithLinear, UndeterminedAtHorizon>;

/// Exact dichotomy for finite and regular sources. For word sources an
/// exact adjacent plateau proves global boundedness (the language of a
/// word is extendable, so p is non-decreasing and one repeat freezes it);
/// otherwise p(n) > n observed up to N yields ConsistentWithLinear.
GapVerdict classify(const LanguageSource& src, std::size_t N,
                    std::optional<std::size_t> horizon = std::nullopt);

struct FiatcResult {
    bool is_fiatc = false;
    std::size_t m = 0;
};

/// Strictly increasing up to m, then constant through the horizon, with
/// the plateau actually witnessed (a profile still strictly increasing at
/// N does not qualify). Throws std::invalid_argument on inexact entries.
FiatcResult is_fiatc(const ComplexityProfile& prof);

/// Plateau value of the profile of a periodic two-sided word = its least
/// period. The window is checked for periodicity by sliding comparison;
/// throws std::runtime_error when no plateau is reached by N.
BigNat least_period_biinfinite(const LanguageSource& src, std::size_t N,
                               std::optional<std::size_t> horizon = std::nullopt);

/// ceil((x+1)/2) * floor((x+1)/2)
BigNat phi(const BigNat& x);

struct BbViolation {
    std::size_t m = 0;
    std::size_t n = 0;
};

/// For every m with p(m) <= m, checks p(n + p(m) + m) <= phi(p(m)) for all
/// n that stay inside the profile. Empty on genuine complexity functions.
std::vector<BbViolation> bb_bound_check(const ComplexityProfile& prof);

struct ConvolutionViolation {
    std::size_t n = 0;
    bool monotone_side = false;  // true: f(n) <= h(n) failed, else the sum bound
};

struct ConvolutionResult {
    bool ok = true;
    std::optional<ConvolutionViolation> first_violation;
};

/// For profiles f, g, h of X, Y and XY: h(n) <= sum_k f(n-k) g(k), plus
/// f(n) <= h(n) whenever Y is non-empty (g(0) = 1).
ConvolutionResult convolution_bound_check(const ComplexityProfile& f, const ComplexityProfile& g,
                                          const ComplexityProfile& h, std::size_t N);

struct PsViolation {
    std::size_t n = 0;
    bool lower_side = false;
};

/// p(n+1) - p(n) <= (alpha-1) s(n) for all n < N; additionally
/// p(n+1) - p(n) >= s(n) when the source is extendable and the involved
/// entries are exact.
std::vector<PsViolation> exercise_ps_check(const LanguageSource& src, std::size_t N,
                                           std::optional<std::size_t> horizon = std::nullopt);

}  // namespace subcomp
