#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "subcomp/boundedness.hpp"
#include "subcomp/profile.hpp"
#include "subcomp/source.hpp"

namespace subcomp {

/// Parses the language-spec JSON document:
///   {"alphabet":["a","b"], "source":{"type":...}}
/// Source types: finite, regular, morphic, eventually_periodic,
/// sturmian_cf, bi_infinite, builtin. Throws std::invalid_argument with a
/// human diagnostic on malformed input.
LanguageSource parse_language_source(const nlohmann::json& doc);
LanguageSource load_language_source(const std::string& path);

/// Machine form of a word: the empty word is "".
inline const std::string& word_machine(const Word& w) { return w.str(); }

/// Exact integer as JSON: a number while it fits 64 bits, a decimal
/// string beyond that.
nlohmann::json bignat_json(const BigNat& value);

nlohmann::json certificate_json(const BoundedCertificate& cert);
nlohmann::json witness_json(const UnboundedWitness& witness);
nlohmann::json verdict_json(const GapVerdict& verdict);

}  // namespace subcomp
