#include "subcomp/generator.hpp"

#include <stdexcept>
#include <string>

namespace subcomp {

namespace {

void validate_morphic(const Morphic& m, const Alphabet& alphabet) {
    if (!alphabet.contains(m.seed))
        throw std::invalid_argument("morphic seed is not an alphabet symbol");
    for (const auto& [sym, image] : m.rules) {
        if (!alphabet.contains(sym))
            throw std::invalid_argument("morphism rule on a non-alphabet symbol");
        if (image.empty())
            throw std::invalid_argument("morphism images must be non-empty");
        if (!alphabet.contains_all(image.str()))
            throw std::invalid_argument("morphism image uses a non-alphabet symbol");
    }
    auto it = m.rules.find(m.seed);
    if (it == m.rules.end() || it->second.length() < 2 || it->second.at(0) != m.seed)
        throw std::invalid_argument(
            "morphism is not prolongable: image of the seed must start with the seed "
            "and have length >= 2");
    for (const auto& [from, to] : m.coding) {
        if (!alphabet.contains(from) || !alphabet.contains(to))
            throw std::invalid_argument("coding uses a non-alphabet symbol");
    }
}

Word expand_eventually_periodic(const EventuallyPeriodic& g, std::size_t len) {
    std::string out;
    out.reserve(len);
    const std::string& pre = g.prefix.str();
    out.append(pre, 0, std::min(len, pre.size()));
    const std::string& cyc = g.cycle.str();
    while (out.size() < len) out.append(cyc, 0, std::min(len - out.size(), cyc.size()));
    return Word(std::move(out));
}

Word expand_morphic(const Morphic& m, std::size_t len) {
    // The seed image starts with the seed and every image is non-empty,
    // so each morphism application strictly extends the fixed-point prefix.
    std::string cur(1, m.seed);
    while (cur.size() < len) {
        std::string next;
        next.reserve(cur.size() * 2);
        for (char c : cur) {
            auto it = m.rules.find(c);
            if (it == m.rules.end())
                throw std::invalid_argument(std::string("morphism has no rule for symbol '") +
                                            c + "'");
            next += it->second.str();
            if (next.size() >= len) break;  // only the prefix is needed
        }
        if (next.size() <= cur.size())
            throw std::invalid_argument("morphism fixed point does not grow");
        cur = std::move(next);
    }
    cur.resize(len);
    if (!m.coding.empty()) {
        for (char& c : cur) {
            auto it = m.coding.find(c);
            if (it != m.coding.end()) c = it->second;
        }
    }
    return Word(std::move(cur));
}

Word expand_sturmian(const SturmianCF& g, std::size_t len, const Alphabet& alphabet) {
    if (alphabet.size() < 2)
        throw std::invalid_argument("sturmian generator needs at least two symbols");
    std::string prev(1, alphabet.symbol(1));  // s_{-1}
    std::string cur(1, alphabet.symbol(0));   // s_0
    std::size_t k = 0;
    while (cur.size() < len) {
        std::uint32_t a = k < g.directive.size()
                              ? g.directive[k]
                              : g.repeated_tail[(k - g.directive.size()) % g.repeated_tail.size()];
        std::string next;
        next.reserve(cur.size() * a + prev.size());
        for (std::uint32_t i = 0; i < a; ++i) next += cur;
        next += prev;
        prev = std::move(cur);
        cur = std::move(next);
        ++k;
    }
    cur.resize(len);
    return Word(std::move(cur));
}

}  // namespace

void validate_generator(const Generator& gen, const Alphabet& alphabet) {
    if (const auto* ep = std::get_if<EventuallyPeriodic>(&gen)) {
        if (ep->cycle.empty())
            throw std::invalid_argument("eventually periodic cycle must be non-empty");
        if (!alphabet.contains_all(ep->prefix.str()) || !alphabet.contains_all(ep->cycle.str()))
            throw std::invalid_argument("generator uses a non-alphabet symbol");
    } else if (const auto* m = std::get_if<Morphic>(&gen)) {
        validate_morphic(*m, alphabet);
    } else {
        const auto& s = std::get<SturmianCF>(gen);
        if (s.repeated_tail.empty())
            throw std::invalid_argument("sturmian repeated tail must be non-empty");
        for (std::uint32_t a : s.directive)
            if (a < 1) throw std::invalid_argument("sturmian partial quotients must be >= 1");
        for (std::uint32_t a : s.repeated_tail)
            if (a < 1) throw std::invalid_argument("sturmian partial quotients must be >= 1");
        if (alphabet.size() < 2)
            throw std::invalid_argument("sturmian generator needs at least two symbols");
    }
}

Word expand_prefix(const Generator& gen, std::size_t len, const Alphabet& alphabet) {
    validate_generator(gen, alphabet);
    if (const auto* ep = std::get_if<EventuallyPeriodic>(&gen))
        return expand_eventually_periodic(*ep, len);
    if (const auto* m = std::get_if<Morphic>(&gen)) return expand_morphic(*m, len);
    return expand_sturmian(std::get<SturmianCF>(gen), len, alphabet);
}

}  // namespace subcomp
