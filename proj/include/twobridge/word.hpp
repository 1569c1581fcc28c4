#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace twobridge {

enum class Generator : std::uint8_t { X, Y };

/// A generator raised to +1 or -1.
struct Letter {
    Generator gen;
    int sign;  // +1 or -1

    Letter(Generator g, int s);

    Letter inverse() const { return Letter(gen, -sign); }
    bool operator==(const Letter&) const = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos);
    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

/// Freely reduced word in the free group on x, y. Construction always reduces.
class Word {
public:
    Word() = default;
    explicit Word(std::span<const Letter> letters);
    Word(std::initializer_list<Letter> letters);

    /// Concatenates without reducing; used for assembling Riley words whose
    /// letter count matters before reduction.
    static Word unreduced(std::vector<Letter> letters);

    const std::vector<Letter>& letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    const Letter& operator[](std::size_t i) const { return letters_[i]; }

    Word inverse() const;
    /// Letter sequence reversed, exponents kept (the "spelled backwards" word).
    Word reversed() const;
    Word pow(int n) const;

    bool operator==(const Word&) const = default;

    friend Word operator*(const Word& a, const Word& b);

private:
    std::vector<Letter> letters_;
};

Word reduce(std::span<const Letter> letters);
Word invert(const Word& w);
Word concat(const Word& a, const Word& b);
int exponent_sum(const Word& w, Generator g);
bool is_reduced(std::span<const Letter> letters);

/// Surface syntax: x, y with optional ^-1 (or ^1), X and Y for inverses,
/// whitespace and parentheses ignored.
Word parse_word(std::string_view text);
/// Canonical output: x, y, X, Y; the empty word prints as "1".
std::string format_word(const Word& w);

inline Letter x_letter(int sign = 1) { return {Generator::X, sign}; }
inline Letter y_letter(int sign = 1) { return {Generator::Y, sign}; }

}  // namespace twobridge
