#pragma once

#include "mnp/integer.hpp"
#include "mnp/params.hpp"
#include "mnp/words.hpp"

#include <map>
#include <string>
#include <vector>

namespace mnp {

/// Integer polynomial in X_0..X_(d-1) with every term of total degree above `cap` discarded.
class TruncPoly {
public:
    using Monomial = std::vector<int>;

    TruncPoly(int nvars, int cap) : nvars_(nvars), cap_(cap) {}
    static TruncPoly constant(int nvars, int cap, const Integer& c);
    static TruncPoly variable(int nvars, int cap, int var);

    int nvars() const { return nvars_; }
    int cap() const { return cap_; }
    const std::map<Monomial, Integer>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Integer constant_term() const;

    void add_term(const Monomial& m, const Integer& c);
    TruncPoly& operator+=(const TruncPoly& o);
    TruncPoly operator-() const;
    /// Product truncated to `result_cap`.
    TruncPoly times(const TruncPoly& o, int result_cap) const;
    /// Inverse of a polynomial with constant term +1 or -1.
    TruncPoly unit_inverse() const;

    std::string to_string() const;

    friend bool operator==(const TruncPoly&, const TruncPoly&) = default;

private:
    int nvars_;
    int cap_;
    std::map<Monomial, Integer> terms_;
};

/// The pair (s, m) standing for [[s, m], [0, 1]]; s truncated at the class,
/// each module coordinate at class - 1.
struct MagnusMatrix {
    TruncPoly scalar;
    std::vector<TruncPoly> module;

    static MagnusMatrix identity(const GroupParams& params);
    static MagnusMatrix generator(const GroupParams& params, int gen);

    bool is_identity() const;
    friend bool operator==(const MagnusMatrix&, const MagnusMatrix&) = default;
};

MagnusMatrix magnus_mul(const MagnusMatrix& x, const MagnusMatrix& y);
MagnusMatrix magnus_inverse(const MagnusMatrix& x);
MagnusMatrix magnus_pow(const MagnusMatrix& x, const Integer& n);
MagnusMatrix magnus_commutator(const MagnusMatrix& x, const MagnusMatrix& y);

MagnusMatrix magnus_of_word(const Word& w, const GroupParams& params);
bool oracle_equal(const Word& w1, const Word& w2, const GroupParams& params);

struct SelfcheckReport {
    bool pass = true;
    int basics_checked = 0;
    int top_commutators_checked = 0;
    int witnesses_checked = 0;
    std::vector<std::string> failures;
};

/// Desk-scale check (d <= 3, k <= 6) that the truncation kills exactly what it should:
/// basic commutators survive, weight k+1 commutators and second-derived words vanish.
SelfcheckReport kernel_selfcheck(const GroupParams& params);

}  // namespace mnp
