#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>

namespace subcomp {

/// An explicitly declared, ordered set of distinct printable symbols.
/// Alphabets are never inferred from input words: the alphabet size
/// enters quantitative bounds, so it has to be pinned by the caller.
class Alphabet {
public:
    explicit Alphabet(std::string_view symbols);

    std::size_t size() const { return symbols_.size(); }
    char symbol(std::size_t i) const { return symbols_.at(i); }
    const std::string& symbols() const { return symbols_; }

    /// Position of c in the declared order, or -1 if absent.
    int index_of(char c) const { return index_[static_cast<unsigned char>(c)]; }
    bool contains(char c) const { return index_of(c) >= 0; }
    bool contains_all(std::string_view text) const;

    bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

private:
    std::string symbols_;
    std::array<std::int8_t, 256> index_{};
};

/// Immutable finite symbol sequence. Equality is content-based and the
/// total order is length-lexicographic, so sets of words iterate in a
/// reproducible, length-grouped order.
class Word {
public:
    Word() = default;
    explicit Word(std::string text) : text_(std::move(text)) {}
    explicit Word(char symbol) : text_(1, symbol) {}

    std::size_t length() const { return text_.size(); }
    bool empty() const { return text_.empty(); }
    char at(std::size_t i) const { return text_.at(i); }
    const std::string& str() const { return text_; }

    Word prefix(std::size_t n) const { return Word(text_.substr(0, n)); }
    Word suffix(std::size_t n) const { return Word(text_.substr(text_.size() - n)); }
    Word substr(std::size_t pos, std::size_t n) const { return Word(text_.substr(pos, n)); }

    Word operator+(const Word& other) const { return Word(text_ + other.text_); }
    Word operator+(char symbol) const { return Word(text_ + symbol); }

    std::strong_ordering operator<=>(const Word& other) const {
        if (auto c = text_.size() <=> other.text_.size(); c != 0) return c;
        return text_.compare(other.text_) <=> 0;
    }
    bool operator==(const Word& other) const { return text_ == other.text_; }

private:
    std::string text_;
};

/// All factors of one fixed length; set semantics.
struct FactorSet {
    std::size_t length = 0;
    std::set<Word> members;

    std::size_t size() const { return members.size(); }
    bool contains(const Word& w) const { return members.count(w) > 0; }
};

/// Prefix of length |w|-1. Throws std::invalid_argument on the empty word.
Word rho_parent(const Word& w);

bool is_prefix(const Word& x, const Word& y);
bool is_suffix(const Word& x, const Word& y);

/// True iff x occurs as a contiguous block of y. The empty word is a
/// factor of every word.
bool is_factor(const Word& x, const Word& y);

/// All distinct length-n contiguous blocks of y. Empty for n > |y|,
/// {empty word} for n = 0.
FactorSet factors_of_word(const Word& y, std::size_t n);

/// Human rendering: the empty word displays as "ε".
std::string display(const Word& w);

}  // namespace subcomp
