#pragma once

#include "mnp/basic.hpp"
#include "mnp/integer.hpp"
#include "mnp/params.hpp"
#include "mnp/words.hpp"

#include <span>
#include <string>
#include <vector>

namespace mnp {

/// Canonical form a0^e0 ... a(d-1)^e(d-1) * prod c^mu(c) of an element of M_k,
/// basic commutators taken in canonical order.
class Element {
public:
    explicit Element(GroupParams params);
    Element(GroupParams params, std::vector<Integer> exp, DerivedVector derived);

    static Element identity(const GroupParams& params) { return Element(params); }
    static Element generator(const GroupParams& params, int gen, const Integer& n = 1);
    /// Element of the derived subgroup; terms of weight above the class are dropped.
    static Element from_derived(const GroupParams& params, const DerivedVector& t);

    const GroupParams& params() const { return params_; }
    const std::vector<Integer>& exp() const { return exp_; }
    const DerivedVector& derived() const { return derived_; }

    bool is_identity() const;
    bool in_derived() const;

    /// Lower-central depth: largest w with the element in gamma_w; class + 1 for the identity.
    int depth() const;

    /// Right multiplication by a_gen^n.
    void mul_generator_power(int gen, const Integer& n);

    friend bool operator==(const Element&, const Element&) = default;
    friend bool operator<(const Element& a, const Element& b);

private:
    GroupParams params_;
    std::vector<Integer> exp_;
    DerivedVector derived_;
};

Element collect(const Word& w, const GroupParams& params);
Element parse_element(std::string_view text, const GroupParams& params);

Element mul(const Element& x, const Element& y);
Element inverse(const Element& x);
Element pow(const Element& x, const Integer& n);
Element commutator(const Element& x, const Element& y);

/// [x1, ..., xn]; throws on an empty list.
Element left_normed(std::span<const Element> xs);
/// [x, _n y].
Element left_normed_rep(const Element& x, int n, const Element& y);

bool equals(const Element& x, const Element& y);

/// Image in M_j.
Element reduce_class(const Element& x, int j);
/// Reinterprets the canonical coordinates of x in a group of larger class.
Element lift_class(const Element& x, int k);

/// Coordinates of the weight-w component over enumerate_basics(params, w).
/// Requires x in gamma_w.
std::vector<Integer> gamma_layer(const Element& x, int w);
/// Weight-w coordinates of a derived vector without the gamma_w precondition.
std::vector<Integer> layer_coordinates(const DerivedVector& t, const GroupParams& params, int w);

/// A word whose collected form is x.
Word to_word(const Element& x);

/// `a^2 b^2 [b,a] [b,a,b]`; the identity prints as `1`.
std::string print_element(const Element& x);

inline Element operator*(const Element& x, const Element& y) { return mul(x, y); }

}  // namespace mnp
