#include "subcomp/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace subcomp {

namespace {

using nlohmann::json;

[[noreturn]] void bad_input(const std::string& message) {
    throw std::invalid_argument("language spec: " + message);
}

char parse_symbol(const json& j, const char* what) {
    if (!j.is_string() || j.get<std::string>().size() != 1)
        bad_input(std::string(what) + " must be a single-character string");
    return j.get<std::string>()[0];
}

Word parse_word(const json& j, const Alphabet& alphabet, const char* what) {
    if (!j.is_string()) bad_input(std::string(what) + " must be a string");
    std::string text = j.get<std::string>();
    if (!alphabet.contains_all(text))
        bad_input(std::string(what) + " uses a symbol outside the declared alphabet");
    return Word(std::move(text));
}

Generator parse_generator(const json& j, const Alphabet& alphabet) {
    if (!j.is_object() || !j.contains("type")) bad_input("generator must carry a type");
    std::string type = j.at("type").get<std::string>();
    if (type == "eventually_periodic") {
        EventuallyPeriodic g;
        g.prefix = parse_word(j.value("prefix", json("")), alphabet, "prefix");
        if (!j.contains("cycle")) bad_input("eventually_periodic needs a cycle");
        g.cycle = parse_word(j.at("cycle"), alphabet, "cycle");
        validate_generator(g, alphabet);
        return g;
    }
    if (type == "morphic") {
        Morphic g;
        if (!j.contains("rules") || !j.at("rules").is_object())
            bad_input("morphic needs a rules object");
        for (const auto& [key, value] : j.at("rules").items()) {
            if (key.size() != 1) bad_input("morphism rule keys must be single symbols");
            g.rules.emplace(key[0], parse_word(value, alphabet, "morphism image"));
        }
        if (!j.contains("seed")) bad_input("morphic needs a seed");
        g.seed = parse_symbol(j.at("seed"), "seed");
        if (j.contains("coding")) {
            for (const auto& [key, value] : j.at("coding").items()) {
                if (key.size() != 1) bad_input("coding keys must be single symbols");
                g.coding.emplace(key[0], parse_symbol(value, "coding image"));
            }
        }
        validate_generator(g, alphabet);
        return g;
    }
    if (type == "sturmian_cf") {
        SturmianCF g;
        for (const auto& v : j.value("directive", json::array()))
            g.directive.push_back(v.get<std::uint32_t>());
        if (!j.contains("repeated_tail")) bad_input("sturmian_cf needs a repeated_tail");
        for (const auto& v : j.at("repeated_tail")) g.repeated_tail.push_back(v.get<std::uint32_t>());
        validate_generator(g, alphabet);
        return g;
    }
    bad_input("unknown generator type '" + type + "'");
}

Nfa parse_nfa(const json& j, const Alphabet& alphabet) {
    if (!j.contains("states")) bad_input("regular source needs a state count");
    Nfa nfa(j.at("states").get<std::size_t>(), alphabet);
    for (const auto& s : j.value("start", json::array())) nfa.starts.insert(s.get<State>());
    for (const auto& s : j.value("finals", json::array())) nfa.finals.insert(s.get<State>());
    for (const auto& t : j.value("transitions", json::array())) {
        if (!t.is_array() || t.size() != 3) bad_input("transitions must be [src, symbol, dst]");
        nfa.add_transition(t[0].get<State>(), parse_symbol(t[1], "transition symbol"),
                           t[2].get<State>());
    }
    nfa.check_invariants();
    return nfa;
}

}  // namespace

LanguageSource parse_language_source(const json& doc) {
    if (!doc.is_object()) bad_input("document must be a JSON object");
    if (!doc.contains("source")) bad_input("missing 'source'");
    const json& src = doc.at("source");
    std::string type = src.value("type", "");

    if (type == "builtin") {
        LanguageSource builtin = make_builtin(src.value("name", ""));
        if (doc.contains("alphabet")) {
            std::string declared;
            for (const auto& s : doc.at("alphabet")) declared += parse_symbol(s, "alphabet entry");
            if (Alphabet(declared) != builtin.alphabet)
                bad_input("declared alphabet differs from the builtin's alphabet");
        }
        return builtin;
    }

    if (!doc.contains("alphabet") || !doc.at("alphabet").is_array())
        bad_input("missing 'alphabet' array");
    std::string symbols;
    for (const auto& s : doc.at("alphabet")) symbols += parse_symbol(s, "alphabet entry");
    Alphabet alphabet(symbols);

    if (type == "finite") {
        FiniteSource fin;
        for (const auto& w : src.value("words", json::array()))
            fin.words.insert(parse_word(w, alphabet, "word"));
        return LanguageSource{alphabet, std::move(fin)};
    }
    if (type == "regular") return LanguageSource{alphabet, RegularSource{parse_nfa(src, alphabet)}};
    if (type == "bi_infinite") {
        if (!src.contains("left") || !src.contains("right"))
            bad_input("bi_infinite needs 'left' and 'right' generators");
        return LanguageSource{alphabet,
                              BiInfiniteSource{parse_generator(src.at("left"), alphabet),
                                               parse_generator(src.at("right"), alphabet)}};
    }
    if (type == "morphic" || type == "eventually_periodic" || type == "sturmian_cf")
        return LanguageSource{alphabet, InfiniteSource{parse_generator(src, alphabet)}};
    bad_input("unknown source type '" + type + "'");
}

LanguageSource load_language_source(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
    return parse_language_source(doc);
}

nlohmann::json bignat_json(const BigNat& value) {
    if (value <= BigNat(std::numeric_limits<std::uint64_t>::max()))
        return value.convert_to<std::uint64_t>();
    return value.str();
}

nlohmann::json certificate_json(const BoundedCertificate& cert) {
    json triples = json::array();
    for (const auto& t : cert.triples)
        triples.push_back(json::array({t[0].str(), t[1].str(), t[2].str()}));
    return json{{"verdict", "bounded"}, {"bound", bignat_json(cert.bound)}, {"triples", triples}};
}

nlohmann::json witness_json(const UnboundedWitness& witness) {
    if (const auto* two = std::get_if<TwoCyclesWitness>(&witness))
        return json{{"type", "two_cycles_at_state"},
                    {"state", two->state},
                    {"cycles", json::array({two->cycle_a.str(), two->cycle_b.str()})}};
    const auto& comps = std::get<TwoComponentsWitness>(witness);
    return json{{"type", "path_through_two_components"},
                {"path", comps.path.str()},
                {"cycles", json::array({comps.cycle_a.str(), comps.cycle_b.str()})}};
}

nlohmann::json verdict_json(const GapVerdict& verdict) {
    if (const auto* bounded = std::get_if<BoundedProven>(&verdict)) {
        if (const auto* cert = std::get_if<BoundedCertificate>(&bounded->certificate))
            return certificate_json(*cert);
        const auto& plateau = std::get<PlateauCertificate>(bounded->certificate);
        return json{{"verdict", "bounded"},
                    {"bound", bignat_json(bounded->bound)},
                    {"plateau", plateau.m}};
    }
    if (const auto* linear = std::get_if<LinearLowerBoundProven>(&verdict))
        return json{{"verdict", "unbounded"}, {"witness", witness_json(linear->witness)}};
    if (const auto* consistent = std::get_if<ConsistentWithLinear>(&verdict))
        return json{{"verdict", "consistent_with_linear"},
                    {"checked_up_to", consistent->checked_up_to}};
    const auto& undetermined = std::get<UndeterminedAtHorizon>(verdict);
    return json{{"verdict", "undetermined_at_horizon"}, {"reason", undetermined.reason}};
}

}  // namespace subcomp
