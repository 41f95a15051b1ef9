#pragma once

#include "mnp/integer.hpp"
#include "mnp/params.hpp"

#include <map>
#include <string>
#include <vector>

namespace mnp {

/// Left-normed generator commutator [b1, b2, ..., bw] with b1 > b2 <= b3 <= ... <= bw.
struct BasicCommutator {
    std::vector<int> seq;

    int weight() const { return static_cast<int>(seq.size()); }

    /// Canonical order: weight ascending, then lexicographic.
    friend bool operator<(const BasicCommutator& a, const BasicCommutator& b) {
        if (a.seq.size() != b.seq.size()) return a.seq.size() < b.seq.size();
        return a.seq < b.seq;
    }
    friend bool operator==(const BasicCommutator&, const BasicCommutator&) = default;
};

bool is_basic_shape(const std::vector<int>& seq);

std::string print_basic(const BasicCommutator& c, int rank);

/// Element of the derived subgroup in basic-commutator coordinates.
/// Zero coefficients are never stored.
class DerivedVector {
public:
    using Map = std::map<BasicCommutator, Integer>;

    DerivedVector() = default;
    static DerivedVector unit(BasicCommutator c, Integer coef = 1);

    const Map& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    Integer coef(const BasicCommutator& c) const;

    void add(const BasicCommutator& c, const Integer& coef);
    DerivedVector& operator+=(const DerivedVector& o);
    DerivedVector& operator-=(const DerivedVector& o);
    DerivedVector& operator*=(const Integer& s);

    friend DerivedVector operator+(DerivedVector a, const DerivedVector& b) { return a += b; }
    friend DerivedVector operator-(DerivedVector a, const DerivedVector& b) { return a -= b; }
    friend DerivedVector operator*(DerivedVector a, const Integer& s) { return a *= s; }
    DerivedVector operator-() const { return *this * Integer(-1); }

    /// Drops all terms of weight greater than `max_weight`.
    DerivedVector truncated(int max_weight) const;
    /// Lowest weight present, or 0 when empty.
    int min_weight() const;

    friend bool operator==(const DerivedVector&, const DerivedVector&) = default;
    friend bool operator<(const DerivedVector& a, const DerivedVector& b) { return a.terms_ < b.terms_; }

private:
    Map terms_;
};

/// All basic commutators of weight w in canonical order.
std::vector<BasicCommutator> enumerate_basics(const GroupParams& params, int weight);

/// (w - 1) * C(d + w - 2, w).
Integer basic_count(int rank, int weight);

/// Expands [c1, ..., cw] over basic commutators, dropping weights above the class.
DerivedVector normalize_left_normed(const std::vector<int>& seq, const GroupParams& params);

/// t -> [t, a_gen] on the derived subgroup.
DerivedVector bracket_with_generator(const DerivedVector& t, int gen, const GroupParams& params);

/// t -> t^(a_gen^n), i.e. (1 + D)^n applied to t with D = [., a_gen].
DerivedVector conjugate_by_power(const DerivedVector& t, int gen, const Integer& n,
                                 const GroupParams& params);

/// t -> ((1 + D)^n - 1) / D applied to t; realizes [x^n, y] = S(n) [x, y].
DerivedVector geometric_sum(const DerivedVector& t, int gen, const Integer& n,
                            const GroupParams& params);

}  // namespace mnp
