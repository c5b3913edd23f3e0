#include "picmod/words.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace picmod {

Word::Word(std::vector<int> ls) : letters(std::move(ls)) {
    for (int l : letters)
        if (l == 0) throw DomainError("Word: letter 0 is not a generator index");
}

Word Word::inverse() const {
    Word w;
    w.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(-*it);
    return w;
}

Word Word::cyclic_shift(std::size_t k) const {
    if (letters.empty()) return *this;
    Word w = *this;
    std::rotate(w.letters.begin(),
                w.letters.begin() + static_cast<std::ptrdiff_t>(k % letters.size()),
                w.letters.end());
    return w;
}

Word Word::repeat(unsigned times) const {
    Word w;
    w.letters.reserve(letters.size() * times);
    for (unsigned i = 0; i < times; ++i)
        w.letters.insert(w.letters.end(), letters.begin(), letters.end());
    return w;
}

Word Word::free_reduced() const {
    std::vector<int> out;
    for (int l : letters) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return Word(std::move(out));
}

Word concat(const Word& a, const Word& b) {
    Word w = a;
    w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
    return w;
}

std::vector<Integer> exponent_sum_vector(const Word& w, std::size_t num_generators) {
    std::vector<Integer> sums(num_generators);
    for (int l : w.letters) {
        std::size_t idx = static_cast<std::size_t>(l > 0 ? l : -l);
        if (idx < 1 || idx > num_generators)
            throw DomainError("exponent_sum_vector: generator index " + std::to_string(l) +
                              " out of range for " + std::to_string(num_generators) +
                              " generators");
        sums[idx - 1] += (l > 0 ? 1 : -1);
    }
    return sums;
}

Word parse_word(const std::string& text) {
    std::vector<int> letters;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        std::size_t pos = 0;
        while (pos < tok.size() && std::isalpha(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos == tok.size())
            throw ParseError("word token '" + tok + "': missing generator index");
        std::size_t caret = tok.find('^', pos);
        std::string idx_part = tok.substr(pos, caret == std::string::npos ? caret : caret - pos);
        long idx = 0, exp = 1;
        try {
            std::size_t used = 0;
            idx = std::stol(idx_part, &used);
            if (used != idx_part.size()) throw std::invalid_argument(idx_part);
            if (caret != std::string::npos) {
                std::string exp_part = tok.substr(caret + 1);
                exp = std::stol(exp_part, &used);
                if (used != exp_part.size()) throw std::invalid_argument(exp_part);
            }
        } catch (const std::exception&) {
            throw ParseError("word token '" + tok + "': cannot parse");
        }
        if (idx < 1) throw ParseError("word token '" + tok + "': index must be >= 1");
        int letter = static_cast<int>(exp >= 0 ? idx : -idx);
        long count = std::labs(exp);
        for (long i = 0; i < count; ++i) letters.push_back(letter);
    }
    return Word(std::move(letters));
}

std::string format_word(const Word& w, const std::string& prefix) {
    std::ostringstream os;
    std::size_t i = 0;
    bool first = true;
    while (i < w.letters.size()) {
        std::size_t j = i;
        while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
        long run = static_cast<long>(j - i);
        int l = w.letters[i];
        if (!first) os << ' ';
        first = false;
        os << prefix << (l > 0 ? l : -l);
        long exp = l > 0 ? run : -run;
        if (exp != 1) os << '^' << exp;
        i = j;
    }
    return os.str();
}

} // namespace picmod
