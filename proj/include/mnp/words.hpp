#pragma once

#include "mnp/integer.hpp"
#include "mnp/params.hpp"

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace mnp {

struct Letter {
    int gen = 0;
    Integer exp;

    friend bool operator==(const Letter& a, const Letter& b) {
        return a.gen == b.gen && a.exp == b.exp;
    }
};

/// A freely reduced word in the free group on a0 < a1 < ... < a(d-1).
/// Adjacent letters always carry distinct generators and nonzero exponents.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters);

    static Word generator(int gen, Integer exp = 1);

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }

    /// Appends a letter, merging with the last one and cancelling as needed.
    void push_back(int gen, const Integer& exp);

    Word inverse() const;
    Word pow(const Integer& n) const;

    friend Word operator*(const Word& a, const Word& b);
    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<Letter> letters_;
};

/// Left-normed commutator [x1, ..., xn] = [[x1, ..., x(n-1)], xn].
Word word_commutator(const Word& x, const Word& y);

/// Canonical generator name: a, b, c for ranks up to three, a0, a1, ... otherwise.
std::string generator_name(int gen, int rank);

/// Parses the product/power/bracket grammar; brackets and powers are expanded.
Word parse_word(std::string_view text, const GroupParams& params);

std::string print_word(const Word& w, int rank);

/// Deletes every letter outside `keep` and reduces.
Word retract(const Word& w, const std::set<int>& keep);

}  // namespace mnp
