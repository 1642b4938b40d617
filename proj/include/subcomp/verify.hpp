#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subcomp/profile.hpp"
#include "subcomp/source.hpp"

namespace subcomp {

enum class Outcome { Pass, Fail, Undetermined };

struct CheckReport {
    std::string check;
    std::string instance;
    Outcome outcome = Outcome::Pass;
    std::string details;  // counterexample or certificate summary; never empty on Fail
};

std::string outcome_name(Outcome o);
std::string report_json_line(const CheckReport& report);

/// Reproducible random automaton shape: identical specs build identical
/// automata, bit for bit.
struct RandomRegularSpec {
    std::uint64_t seed = 0;
    std::size_t state_count = 1;     // <= 8
    std::size_t alphabet_size = 1;   // <= 3
    double transition_density = 0.5; // in [0, 1]
    double final_density = 0.5;      // in (0, 1]
};

RandomRegularSpec make_random_spec(std::uint64_t master_seed, std::uint64_t index);
Nfa build_random_nfa(const RandomRegularSpec& spec);
LanguageSource random_regular_source(const RandomRegularSpec& spec);

// ---------------------------------------------------------------------------
// Independent brute-force oracle. Shares no automaton algorithm with the
// main path: its own reachability, its own label enumeration, its own
// sliding windows.

/// Explicit word list of the truncated factor language: every label of
/// length <= max_len of a path through live states. For finite sources the
/// member words themselves. Regular truncation is capped at length 14.
std::vector<Word> oracle_truncation(const LanguageSource& src, std::size_t max_len);

/// Sliding-window factor set of an explicit word list.
FactorSet oracle_factors(const std::vector<Word>& truncation, std::size_t n);
FactorSet oracle_factors(const LanguageSource& src, std::size_t n, std::size_t max_len = 14);

/// Number of distinct length-n factors, stopping early at `cap` distinct
/// words. A return value < cap is the exact count.
std::size_t oracle_factor_count_capped(const Nfa& nfa, std::size_t n, std::size_t cap);

// ---------------------------------------------------------------------------
// Statement-level checks. Every Fail report carries a concrete
// counterexample in `details`.

/// Gap dichotomy on a regular source: the verdict must be exactly one of
/// bounded/linear, cross-checked against the oracle up to length n_max.
CheckReport check_gap_theorem(const LanguageSource& src, const std::string& instance,
                              std::size_t n_max);

/// Round-trip of the triple certificate: sampled cover check, formal cover
/// check under the cap, and boundedness of the cover language itself.
CheckReport check_er82v(const LanguageSource& src, const std::string& instance,
                        std::size_t sample_len, bool formal_mode = true);

/// Two-sided words: periodic ones give first-increasing-then-constant
/// profiles whose plateau is the least period; aperiodic ones climb.
CheckReport check_mh1938(const LanguageSource& src, const std::string& instance, std::size_t N);

/// One-sided words: eventually periodic implies FIATC with the eventual
/// period bounded by the plateau; aperiodic corpus words keep climbing.
CheckReport check_mh1973(const LanguageSource& src, const std::string& instance, std::size_t N);

/// The proof machinery around L_k and L': chain monotonicity, adjusted
/// extendability, boundedness transfer and per-length stabilization.
CheckReport check_claims_chain(const LanguageSource& src, const std::string& instance,
                               std::size_t n_max, std::size_t k_max);

/// Pair decomposition for languages with finitely many special factors;
/// undetermined when the precondition fails (which the report records).
CheckReport check_exercise2_decomposition(const LanguageSource& src, const std::string& instance,
                                          std::size_t sample_len);

// ---------------------------------------------------------------------------
// Suite harness.

struct SuiteOptions {
    std::uint64_t seed = 42;
    std::size_t gap_specs = 200;
    std::size_t oracle_specs = 200;
    std::size_t claims_specs = 100;
    std::size_t mh_cycles = 50;
    std::size_t eq1_pairs = 100;
    std::size_t sample_len = 12;
    bool formal_covers = true;  // run the formal cover check where it fits the cap
};

const std::vector<std::string>& suite_names();  // excludes "all"
bool is_suite_name(const std::string& name);

std::vector<CheckReport> run_suite(const std::string& name, const SuiteOptions& opts);
std::vector<CheckReport> run_all_suites(const SuiteOptions& opts);

}  // namespace subcomp
