#include "twobridge/word.hpp"

#include <algorithm>
#include <cctype>

namespace twobridge {

Letter::Letter(Generator g, int s) : gen(g), sign(s) {
    if (s != 1 && s != -1) throw std::invalid_argument("letter exponent must be +1 or -1");
}

ParseError::ParseError(const std::string& msg, std::size_t pos)
    : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}

Word reduce(std::span<const Letter> letters) {
    std::vector<Letter> out;
    out.reserve(letters.size());
    for (const Letter& l : letters) {
        if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign) {
            out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return Word::unreduced(std::move(out));
}

bool is_reduced(std::span<const Letter> letters) {
    for (std::size_t i = 1; i < letters.size(); ++i) {
        if (letters[i].gen == letters[i - 1].gen && letters[i].sign == -letters[i - 1].sign) return false;
    }
    return true;
}

Word::Word(std::span<const Letter> letters) : letters_(reduce(letters).letters_) {}

Word::Word(std::initializer_list<Letter> letters)
    : Word(std::span<const Letter>(letters.begin(), letters.size())) {}

Word Word::unreduced(std::vector<Letter> letters) {
    Word w;
    w.letters_ = std::move(letters);
    return w;
}

Word Word::inverse() const {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
    return unreduced(std::move(out));
}

Word Word::reversed() const {
    std::vector<Letter> out(letters_.rbegin(), letters_.rend());
    return Word(out);
}

Word Word::pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    Word out;
    for (int i = 0; i < n; ++i) out = out * *this;
    return out;
}

Word operator*(const Word& a, const Word& b) {
    // Only the junction can cancel.
    std::size_t k = 0;
    const auto& la = a.letters_;
    const auto& lb = b.letters_;
    while (k < la.size() && k < lb.size() && la[la.size() - 1 - k] == lb[k].inverse()) ++k;
    std::vector<Letter> out;
    out.reserve(la.size() + lb.size() - 2 * k);
    out.insert(out.end(), la.begin(), la.end() - static_cast<std::ptrdiff_t>(k));
    out.insert(out.end(), lb.begin() + static_cast<std::ptrdiff_t>(k), lb.end());
    return Word::unreduced(std::move(out));
}

Word invert(const Word& w) { return w.inverse(); }
Word concat(const Word& a, const Word& b) { return a * b; }

int exponent_sum(const Word& w, Generator g) {
    int s = 0;
    for (const Letter& l : w.letters())
        if (l.gen == g) s += l.sign;
    return s;
}

Word parse_word(std::string_view text) {
    // "1" is how the identity prints.
    const auto first = text.find_first_not_of(" \t\n");
    if (first != std::string_view::npos && text[first] == '1' &&
        text.find_first_not_of(" \t\n", first + 1) == std::string_view::npos)
        return {};
    std::vector<Letter> letters;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '*' || c == '.') {
            ++i;
            continue;
        }
        Generator g;
        int sign = 1;
        switch (c) {
            case 'x': g = Generator::X; break;
            case 'y': g = Generator::Y; break;
            case 'X': g = Generator::X; sign = -1; break;
            case 'Y': g = Generator::Y; sign = -1; break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
        ++i;
        if (i < text.size() && text[i] == '^') {
            const std::size_t caret = i;
            ++i;
            if (i < text.size() && text[i] == '{') ++i;
            int exp_sign = 1;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
                if (text[i] == '-') exp_sign = -1;
                ++i;
            }
            if (i >= text.size() || text[i] != '1') throw ParseError("exponent must be 1 or -1", caret);
            ++i;
            if (i < text.size() && text[i] == '}') ++i;
            sign *= exp_sign;
        }
        letters.emplace_back(g, sign);
    }
    return Word(letters);
}

std::string format_word(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    out.reserve(w.size());
    for (const Letter& l : w.letters()) {
        const char base = l.gen == Generator::X ? 'x' : 'y';
        out.push_back(l.sign > 0 ? base : static_cast<char>(std::toupper(base)));
    }
    return out;
}

}  // namespace twobridge
