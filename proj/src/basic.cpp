#include "mnp/basic.hpp"

#include "mnp/words.hpp"

#include <algorithm>

namespace mnp {

bool is_basic_shape(const std::vector<int>& seq) {
    if (seq.size() < 2 || seq[0] <= seq[1]) return false;
    return std::is_sorted(seq.begin() + 1, seq.end());
}

std::string print_basic(const BasicCommutator& c, int rank) {
    std::string out = "[";
    for (std::size_t i = 0; i < c.seq.size(); ++i) {
        if (i) out += ',';
        out += generator_name(c.seq[i], rank);
    }
    return out + "]";
}

DerivedVector DerivedVector::unit(BasicCommutator c, Integer coef) {
    DerivedVector v;
    v.add(c, coef);
    return v;
}

Integer DerivedVector::coef(const BasicCommutator& c) const {
    auto it = terms_.find(c);
    return it == terms_.end() ? Integer(0) : it->second;
}

void DerivedVector::add(const BasicCommutator& c, const Integer& coef) {
    if (coef == 0) return;
    auto [it, inserted] = terms_.try_emplace(c, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0) terms_.erase(it);
    }
}

DerivedVector& DerivedVector::operator+=(const DerivedVector& o) {
    for (const auto& [c, v] : o.terms_) add(c, v);
    return *this;
}

DerivedVector& DerivedVector::operator-=(const DerivedVector& o) {
    for (const auto& [c, v] : o.terms_) add(c, -v);
    return *this;
}

DerivedVector& DerivedVector::operator*=(const Integer& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [c, v] : terms_) v *= s;
    return *this;
}

DerivedVector DerivedVector::truncated(int max_weight) const {
    DerivedVector r;
    for (const auto& [c, v] : terms_) {
        if (c.weight() <= max_weight) r.terms_.emplace_hint(r.terms_.end(), c, v);
    }
    return r;
}

int DerivedVector::min_weight() const {
    return terms_.empty() ? 0 : terms_.begin()->first.weight();
}

namespace {

void enumerate_tails(std::vector<int>& seq, int from, int remaining, int rank,
                     std::vector<BasicCommutator>& out) {
    if (remaining == 0) {
        out.push_back({seq});
        return;
    }
    for (int g = from; g < rank; ++g) {
        seq.push_back(g);
        enumerate_tails(seq, g, remaining - 1, rank, out);
        seq.pop_back();
    }
}

// Adds coef * [c1, c2, tail...] where the tail order is irrelevant.
void add_left_normed(DerivedVector& out, int c1, int c2, std::vector<int> tail, const Integer& coef,
                     const GroupParams& params) {
    if (static_cast<int>(tail.size()) + 2 > params.cls || c1 == c2) return;
    if (c1 < c2) {
        add_left_normed(out, c2, c1, std::move(tail), -coef, params);
        return;
    }
    std::sort(tail.begin(), tail.end());
    if (tail.empty() || c2 <= tail.front()) {
        std::vector<int> seq{c1, c2};
        seq.insert(seq.end(), tail.begin(), tail.end());
        out.add({std::move(seq)}, coef);
        return;
    }
    // Jacobi repair: [c1,c2,m,T] = [c2,m,c1,T]^-1 [c1,m,c2,T] with m = min(T) < c2 < c1.
    int m = tail.front();
    std::vector<int> rest(tail.begin() + 1, tail.end());
    std::vector<int> t1 = rest;
    t1.push_back(c1);
    std::vector<int> t2 = rest;
    t2.push_back(c2);
    add_left_normed(out, c2, m, std::move(t1), -coef, params);
    add_left_normed(out, c1, m, std::move(t2), coef, params);
}

}  // namespace

std::vector<BasicCommutator> enumerate_basics(const GroupParams& params, int weight) {
    if (weight < 2 || weight > params.cls) {
        throw DomainError("basic commutator weight " + std::to_string(weight) +
                          " outside [2, " + std::to_string(params.cls) + "]");
    }
    std::vector<BasicCommutator> out;
    std::vector<int> seq;
    for (int b1 = 0; b1 < params.rank; ++b1) {
        for (int b2 = 0; b2 < b1; ++b2) {
            seq = {b1, b2};
            enumerate_tails(seq, b2, weight - 2, params.rank, out);
        }
    }
    return out;
}

Integer basic_count(int rank, int weight) {
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(rank + weight - 2),
                 static_cast<unsigned long>(weight));
    return c * (weight - 1);
}

DerivedVector normalize_left_normed(const std::vector<int>& seq, const GroupParams& params) {
    DerivedVector out;
    if (seq.size() < 2) throw DomainError("left-normed commutator needs at least two entries");
    add_left_normed(out, seq[0], seq[1], std::vector<int>(seq.begin() + 2, seq.end()), 1, params);
    return out;
}

DerivedVector bracket_with_generator(const DerivedVector& t, int gen, const GroupParams& params) {
    DerivedVector out;
    for (const auto& [c, v] : t.terms()) {
        if (c.weight() + 1 > params.cls) continue;
        std::vector<int> tail(c.seq.begin() + 2, c.seq.end());
        tail.push_back(gen);
        add_left_normed(out, c.seq[0], c.seq[1], std::move(tail), v, params);
    }
    return out;
}

DerivedVector conjugate_by_power(const DerivedVector& t, int gen, const Integer& n,
                                 const GroupParams& params) {
    if (n == 0) return t;
    DerivedVector result = t;
    DerivedVector term = t;
    for (unsigned m = 1;; ++m) {
        term = bracket_with_generator(term, gen, params);
        if (term.empty()) break;
        result += term * binomial(n, m);
    }
    return result;
}

DerivedVector geometric_sum(const DerivedVector& t, int gen, const Integer& n,
                            const GroupParams& params) {
    if (n == 0) return {};
    DerivedVector result = t * n;
    DerivedVector term = t;
    for (unsigned m = 2;; ++m) {
        term = bracket_with_generator(term, gen, params);
        if (term.empty()) break;
        result += term * binomial(n, m);
    }
    return result;
}

}  // namespace mnp
