#include "subcomp/word.hpp"

#include <cctype>
#include <stdexcept>

namespace subcomp {

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
    if (symbols_.empty() || symbols_.size() > 64)
        throw std::invalid_argument("alphabet size must be between 1 and 64");
    index_.fill(-1);
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(symbols_[i]);
        if (!std::isprint(c))
            throw std::invalid_argument("alphabet symbols must be printable characters");
        if (index_[c] >= 0)
            throw std::invalid_argument("alphabet symbols must be pairwise distinct");
        index_[c] = static_cast<std::int8_t>(i);
    }
}

bool Alphabet::contains_all(std::string_view text) const {
    for (char c : text)
        if (!contains(c)) return false;
    return true;
}

Word rho_parent(const Word& w) {
    if (w.empty()) throw std::invalid_argument("rho undefined on empty word");
    return w.prefix(w.length() - 1);
}

bool is_prefix(const Word& x, const Word& y) {
    return x.length() <= y.length() && y.str().compare(0, x.length(), x.str()) == 0;
}

bool is_suffix(const Word& x, const Word& y) {
    return x.length() <= y.length() &&
           y.str().compare(y.length() - x.length(), x.length(), x.str()) == 0;
}

bool is_factor(const Word& x, const Word& y) {
    return y.str().find(x.str()) != std::string::npos;
}

FactorSet factors_of_word(const Word& y, std::size_t n) {
    FactorSet out;
    out.length = n;
    if (n > y.length()) return out;
    for (std::size_t i = 0; i + n <= y.length(); ++i)
        out.members.insert(y.substr(i, n));
    return out;
}

std::string display(const Word& w) {
    return w.empty() ? std::string("ε") : w.str();
}

}  // namespace subcomp
