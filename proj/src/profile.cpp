#include "subcomp/profile.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace subcomp {

bool ComplexityProfile::all_exact() const {
    return std::all_of(exact.begin(), exact.end(), [](bool b) { return b; });
}

namespace {

ComplexityProfile profile_from_window(const LanguageSource& src, std::size_t N,
                                      std::size_t horizon) {
    if (horizon < N) throw std::invalid_argument("horizon smaller than requested length");
    ComplexityProfile prof;
    prof.N = N;
    Word window = materialize_window(src, horizon);
    const bool inf = std::holds_alternative<InfiniteSource>(src.kind);
    for (std::size_t n = 0; n <= N; ++n) {
        prof.p.push_back(BigNat(factors_of_word(window, n).size()));
        bool exact;
        if (n == 0) {
            exact = true;
        } else if (inf) {
            const auto& gen = std::get<InfiniteSource>(src.kind).gen;
            const auto* ep = std::get_if<EventuallyPeriodic>(&gen);
            exact = ep && horizon >= ep->prefix.length() + ep->cycle.length() + n;
        } else {
            const auto& bi = std::get<BiInfiniteSource>(src.kind);
            const auto* l = std::get_if<EventuallyPeriodic>(&bi.left);
            const auto* r = std::get_if<EventuallyPeriodic>(&bi.right);
            exact = l && r && horizon >= l->prefix.length() + l->cycle.length() + n &&
                    horizon >= r->prefix.length() + r->cycle.length() + n;
        }
        prof.exact.push_back(exact);
    }
    return prof;
}

}  // namespace

ComplexityProfile profile(const LanguageSource& src, std::size_t N,
                          std::optional<std::size_t> horizon) {
    ComplexityProfile prof;
    prof.N = N;
    if (src.is_finite()) {
        for (std::size_t n = 0; n <= N; ++n) {
            prof.p.push_back(BigNat(enumerate_factors(src, n).factors.size()));
            prof.exact.push_back(true);
        }
        return prof;
    }
    if (src.is_regular()) {
        Dfa dfa = factor_dfa(std::get<RegularSource>(src.kind).automaton);
        prof.p = count_words_per_length(dfa, N);
        prof.exact.assign(N + 1, true);
        return prof;
    }
    return profile_from_window(src, N, horizon.value_or(default_horizon(N)));
}

SpecialFactorReport special_factors(const LanguageSource& src, std::size_t n,
                                    std::optional<std::size_t> horizon) {
    SpecialFactorReport report;
    report.n = n;
    FactorEnumeration above = enumerate_factors(src, n + 1, horizon);
    report.exact = above.exact;
    std::map<Word, std::size_t> children;
    for (const Word& w : above.factors.members) ++children[rho_parent(w)];
    for (const auto& [parent, count] : children)
        if (count >= 2) report.specials.insert(parent);
    return report;
}

BigNat special_count(const Dfa& factor_automaton, std::size_t n) {
    std::set<State> branching;
    for (State q = 0; q < factor_automaton.state_count; ++q)
        if (factor_automaton.out_degree(q) >= 2) branching.insert(q);
    return count_words_reaching(factor_automaton, branching, n).back();
}

GapVerdict classify(const LanguageSource& src, std::size_t N,
                    std::optional<std::size_t> horizon) {
    if (src.is_regular()) {
        GapCertificate cert = decide_bounded(factor_dfa(std::get<RegularSource>(src.kind).automaton));
        if (cert.bounded()) {
            BoundedCertificate c = cert.certificate();
            BigNat bound = c.bound;
            return BoundedProven{std::move(bound), std::move(c)};
        }
        return LinearLowerBoundProven{cert.witness()};
    }
    if (src.is_finite()) {
        const auto& words = std::get<FiniteSource>(src.kind).words;
        std::size_t max_len = 0;
        for (const Word& w : words) max_len = std::max(max_len, w.length());
        ComplexityProfile prof = profile(src, max_len);
        BigNat bound = 0;
        for (const BigNat& v : prof.p) bound = std::max(bound, v);
        BoundedCertificate cert;
        cert.bound = bound;
        const Word y0(src.alphabet.symbol(0));
        for (const Word& w : words) cert.triples.push_back(Triple{w, y0, Word()});
        return BoundedProven{bound, std::move(cert)};
    }

    // Language of an infinite or bi-infinite word: extendable, so p is
    // non-decreasing and one exact repeat p(m) = p(m+1) freezes it forever.
    ComplexityProfile prof = profile(src, N, horizon);
    for (std::size_t m = 0; m + 1 <= N; ++m) {
        if (prof.exact[m] && prof.exact[m + 1] && prof.p[m] == prof.p[m + 1]) {
            BigNat value = prof.p[m];
            return BoundedProven{value, PlateauCertificate{m, value}};
        }
    }
    bool above_diagonal = true;
    for (std::size_t n = 0; n <= N; ++n)
        if (prof.p[n] <= n) {
            above_diagonal = false;
            break;
        }
    if (above_diagonal) return ConsistentWithLinear{N};
    return UndeterminedAtHorizon{
        "no exact plateau found and the windowed profile does not exceed the diagonal"};
}

FiatcResult is_fiatc(const ComplexityProfile& prof) {
    if (!prof.all_exact())
        throw std::invalid_argument("FIATC undecidable on horizon-limited data");
    std::size_t m = 0;
    while (m + 1 <= prof.N && prof.p[m] < prof.p[m + 1]) ++m;
    if (m == prof.N) return FiatcResult{false, 0};  // still increasing at the horizon
    for (std::size_t j = m; j <= prof.N; ++j)
        if (prof.p[j] != prof.p[m]) return FiatcResult{false, 0};
    return FiatcResult{true, m};
}

BigNat least_period_biinfinite(const LanguageSource& src, std::size_t N,
                               std::optional<std::size_t> horizon) {
    if (!std::holds_alternative<BiInfiniteSource>(src.kind))
        throw std::invalid_argument("least period is defined on bi-infinite sources");
    std::size_t h = horizon.value_or(default_horizon(N));
    const std::string window = materialize_window(src, h).str();

    // Sliding self-comparison: the window must itself be periodic, with
    // enough repetitions to attest the period.
    std::size_t q = 1;
    for (; q <= window.size() / 2; ++q) {
        bool periodic = true;
        for (std::size_t i = 0; i + q < window.size(); ++i)
            if (window[i] != window[i + q]) {
                periodic = false;
                break;
            }
        if (periodic) break;
    }
    if (q > window.size() / 2)
        throw std::runtime_error("word is not periodic within the materialized window");

    ComplexityProfile prof = profile(src, N, h);
    for (std::size_t m = 0; m + 1 <= N; ++m)
        if (prof.exact[m] && prof.exact[m + 1] && prof.p[m] == prof.p[m + 1]) return prof.p[m];
    throw std::runtime_error("no plateau within horizon");
}

BigNat phi(const BigNat& x) { return ((x + 2) / 2) * ((x + 1) / 2); }

std::vector<BbViolation> bb_bound_check(const ComplexityProfile& prof) {
    std::vector<BbViolation> violations;
    for (std::size_t m = 0; m <= prof.N; ++m) {
        if (prof.p[m] > m) continue;
        std::size_t offset = static_cast<std::size_t>(prof.p[m]) + m;
        BigNat cap = phi(prof.p[m]);
        for (std::size_t n = 0; n + offset <= prof.N; ++n)
            if (prof.p[n + offset] > cap) violations.push_back(BbViolation{m, n});
    }
    return violations;
}

ConvolutionResult convolution_bound_check(const ComplexityProfile& f, const ComplexityProfile& g,
                                          const ComplexityProfile& h, std::size_t N) {
    if (N > f.N || N > g.N || N > h.N)
        throw std::invalid_argument("convolution check beyond profile horizon");
    bool y_nonempty = g.p[0] == 1;
    for (std::size_t n = 0; n <= N; ++n) {
        BigNat sum = 0;
        for (std::size_t k = 0; k <= n; ++k) sum += f.p[n - k] * g.p[k];
        if (h.p[n] > sum) return ConvolutionResult{false, ConvolutionViolation{n, false}};
        if (y_nonempty && f.p[n] > h.p[n])
            return ConvolutionResult{false, ConvolutionViolation{n, true}};
    }
    return ConvolutionResult{true, std::nullopt};
}

std::vector<PsViolation> exercise_ps_check(const LanguageSource& src, std::size_t N,
                                           std::optional<std::size_t> horizon) {
    std::vector<PsViolation> violations;
    if (N == 0) return violations;
    const BigNat alpha_minus_one(src.alphabet.size() - 1);
    bool extendable = is_extendable(src) == Extendability::Yes;

    if (src.is_regular()) {
        Dfa dfa = factor_dfa(std::get<RegularSource>(src.kind).automaton);
        std::vector<BigNat> p = count_words_per_length(dfa, N);
        std::set<State> branching;
        for (State q = 0; q < dfa.state_count; ++q)
            if (dfa.out_degree(q) >= 2) branching.insert(q);
        std::vector<BigNat> s = count_words_reaching(dfa, branching, N - 1);
        for (std::size_t n = 0; n + 1 <= N; ++n) {
            if (p[n + 1] - p[n] > alpha_minus_one * s[n])
                violations.push_back(PsViolation{n, false});
            if (extendable && p[n + 1] - p[n] < s[n]) violations.push_back(PsViolation{n, true});
        }
        return violations;
    }

    ComplexityProfile prof = profile(src, N, horizon);
    for (std::size_t n = 0; n + 1 <= N; ++n) {
        SpecialFactorReport report = special_factors(src, n, horizon);
        BigNat s(report.count());
        if (prof.p[n + 1] - prof.p[n] > alpha_minus_one * s)
            violations.push_back(PsViolation{n, false});
        // The lower bound needs genuine extendability of the enumerated
        // family; window-edge factors may lack their extensions.
        if (extendable && prof.exact[n] && prof.exact[n + 1] && report.exact &&
            prof.p[n + 1] - prof.p[n] < s)
            violations.push_back(PsViolation{n, true});
    }
    return violations;
}

}  // namespace subcomp
