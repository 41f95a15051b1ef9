#include "mnp/words.hpp"

#include <cctype>

namespace mnp {

Word::Word(std::vector<Letter> letters) {
    for (auto& l : letters) push_back(l.gen, l.exp);
}

Word Word::generator(int gen, Integer exp) {
    Word w;
    w.push_back(gen, exp);
    return w;
}

void Word::push_back(int gen, const Integer& exp) {
    if (exp == 0) return;
    if (!letters_.empty() && letters_.back().gen == gen) {
        letters_.back().exp += exp;
        if (letters_.back().exp == 0) letters_.pop_back();
        return;
    }
    letters_.push_back({gen, exp});
}

Word Word::inverse() const {
    Word r;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.push_back(it->gen, -it->exp);
    return r;
}

Word Word::pow(const Integer& n) const {
    if (n < 0) return inverse().pow(-n);
    if (letters_.size() == 1) return generator(letters_[0].gen, letters_[0].exp * n);
    Word r;
    for (Integer i = 0; i < n; ++i) r = r * *this;
    return r;
}

Word operator*(const Word& a, const Word& b) {
    Word r = a;
    for (const auto& l : b.letters_) r.push_back(l.gen, l.exp);
    return r;
}

Word word_commutator(const Word& x, const Word& y) {
    return x.inverse() * y.inverse() * x * y;
}

std::string generator_name(int gen, int rank) {
    if (rank <= 3) return std::string(1, static_cast<char>('a' + gen));
    return "a" + std::to_string(gen);
}

namespace {

class Parser {
public:
    Parser(std::string_view text, const GroupParams& params) : text_(text), params_(params) {}

    Word parse() {
        skip_ws();
        Word w;
        if (!at_end()) w = expr();
        skip_ws();
        if (!at_end()) fail("unexpected '" + std::string(1, peek()) + "'");
        return w;
    }

private:
    std::string_view text_;
    const GroupParams& params_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool starts_term() const {
        char c = peek();
        return std::isalpha(static_cast<unsigned char>(c)) || c == '(' || c == '[' || c == '1';
    }

    Word expr() {
        skip_ws();
        if (!starts_term()) fail("expected a generator, '(' or '['");
        Word w;
        while (true) {
            skip_ws();
            if (at_end() || !starts_term()) break;
            w = w * term();
        }
        return w;
    }

    Word term() {
        Word a = atom();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            a = a.pow(integer());
        }
        return a;
    }

    Integer integer() {
        std::size_t start = pos_;
        if (peek() == '-' || peek() == '+') ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer exponent");
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        std::string digits(text_.substr(start, pos_ - start));
        if (digits[0] == '+') digits.erase(0, 1);
        return Integer(digits);
    }

    Word atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Word w = expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return w;
        }
        if (c == '[') {
            ++pos_;
            Word w = expr();
            int parts = 1;
            while (true) {
                skip_ws();
                if (peek() == ',') {
                    ++pos_;
                    w = word_commutator(w, expr());
                    ++parts;
                } else {
                    break;
                }
            }
            if (peek() != ']') fail("expected ',' or ']'");
            if (parts < 2) fail("commutator needs at least two entries");
            ++pos_;
            return w;
        }
        if (c == '1') {
            ++pos_;
            return Word();
        }
        return name();
    }

    Word name() {
        std::size_t start = pos_;
        char c = peek();
        if (!std::islower(static_cast<unsigned char>(c))) {
            throw ParseError("unknown generator '" + std::string(1, c) + "'", start);
        }
        ++pos_;
        long index = c - 'a';
        if (c == 'a' && std::isdigit(static_cast<unsigned char>(peek()))) {
            std::size_t dstart = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            std::string digits(text_.substr(dstart, pos_ - dstart));
            if (digits.size() > 9) throw ParseError("generator index too large", start);
            index = std::stol(digits);
        }
        if (index >= params_.rank) {
            throw ParseError("generator '" + std::string(text_.substr(start, pos_ - start)) +
                                 "' has index " + std::to_string(index) + " >= rank " +
                                 std::to_string(params_.rank),
                             start);
        }
        return Word::generator(static_cast<int>(index));
    }
};

}  // namespace

Word parse_word(std::string_view text, const GroupParams& params) {
    return Parser(text, params).parse();
}

std::string print_word(const Word& w, int rank) {
    std::string out;
    for (const auto& l : w.letters()) {
        if (!out.empty()) out += ' ';
        out += generator_name(l.gen, rank);
        if (l.exp != 1) out += "^" + l.exp.get_str();
    }
    return out;
}

Word retract(const Word& w, const std::set<int>& keep) {
    Word r;
    for (const auto& l : w.letters()) {
        if (keep.count(l.gen)) r.push_back(l.gen, l.exp);
    }
    return r;
}

}  // namespace mnp
