#include "mnp/element.hpp"

#include <algorithm>

namespace mnp {

Element::Element(GroupParams params)
    : params_(params), exp_(static_cast<std::size_t>(params.rank), Integer(0)) {
    validate(params_);
}

Element::Element(GroupParams params, std::vector<Integer> exp, DerivedVector derived)
    : params_(params), exp_(std::move(exp)), derived_(std::move(derived)) {
    validate(params_);
    if (static_cast<int>(exp_.size()) != params_.rank) {
        throw DomainError("exponent vector length does not match rank");
    }
    for (const auto& [c, v] : derived_.terms()) {
        if (!is_basic_shape(c.seq)) throw DomainError("derived term is not a basic commutator");
        for (int g : c.seq) {
            if (g < 0 || g >= params_.rank) throw DomainError("basic commutator letter out of rank");
        }
    }
    derived_ = derived_.truncated(params_.cls);
}

Element Element::generator(const GroupParams& params, int gen, const Integer& n) {
    if (gen < 0 || gen >= params.rank) throw DomainError("generator index out of range");
    Element e(params);
    e.exp_[static_cast<std::size_t>(gen)] = n;
    return e;
}

Element Element::from_derived(const GroupParams& params, const DerivedVector& t) {
    return Element(params, std::vector<Integer>(static_cast<std::size_t>(params.rank), Integer(0)), t);
}

bool Element::is_identity() const { return in_derived() && derived_.empty(); }

bool Element::in_derived() const {
    return std::all_of(exp_.begin(), exp_.end(), [](const Integer& e) { return e == 0; });
}

int Element::depth() const {
    if (!in_derived()) return 1;
    if (derived_.empty()) return params_.cls + 1;
    return derived_.min_weight();
}

void Element::mul_generator_power(int gen, const Integer& n) {
    if (n == 0) return;
    const auto d = params_.rank;
    // (a^e t) a_i^n = a^(e + n e_i) [P, a_i^n] t^(a_i^n) with P = prod_{j>i} a_j^e_j.
    DerivedVector tau;
    if (params_.cls >= 2) {
        for (int j = d - 1; j > gen; --j) {
            const Integer& m = exp_[static_cast<std::size_t>(j)];
            if (m == 0) continue;
            // [a_j^m Q, g] = [a_j^m, g]^Q [Q, g]
            DerivedVector term = DerivedVector::unit({{j, gen}});
            term = geometric_sum(term, j, m, params_);
            term = geometric_sum(term, gen, n, params_);
            for (int q = j + 1; q < d; ++q) {
                term = conjugate_by_power(term, q, exp_[static_cast<std::size_t>(q)], params_);
            }
            tau += term;
        }
    }
    derived_ = conjugate_by_power(derived_, gen, n, params_);
    derived_ += tau;
    exp_[static_cast<std::size_t>(gen)] += n;
}

bool operator<(const Element& a, const Element& b) {
    if (a.params_.rank != b.params_.rank) return a.params_.rank < b.params_.rank;
    if (a.params_.cls != b.params_.cls) return a.params_.cls < b.params_.cls;
    if (a.exp_ != b.exp_) return a.exp_ < b.exp_;
    return a.derived_ < b.derived_;
}

Element collect(const Word& w, const GroupParams& params) {
    Element e(params);
    for (const auto& l : w.letters()) {
        if (l.gen < 0 || l.gen >= params.rank) throw DomainError("word letter outside rank");
        e.mul_generator_power(l.gen, l.exp);
    }
    return e;
}

Element parse_element(std::string_view text, const GroupParams& params) {
    return collect(parse_word(text, params), params);
}

Element mul(const Element& x, const Element& y) {
    require_same(x.params(), y.params());
    Element r = x;
    for (int i = 0; i < x.params().rank; ++i) r.mul_generator_power(i, y.exp()[static_cast<std::size_t>(i)]);
    return Element(r.params(), r.exp(), r.derived() + y.derived());
}

Element inverse(const Element& x) {
    const auto& p = x.params();
    Element r = Element::from_derived(p, -x.derived());
    for (int j = p.rank - 1; j >= 0; --j) r.mul_generator_power(j, -x.exp()[static_cast<std::size_t>(j)]);
    return r;
}

Element pow(const Element& x, const Integer& n) {
    if (x.in_derived()) return Element::from_derived(x.params(), x.derived() * n);
    if (n < 0) return pow(inverse(x), -n);
    Element result = Element::identity(x.params());
    Element base = x;
    Integer e = n;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = mul(result, base);
        e >>= 1;
        if (e > 0) base = mul(base, base);
    }
    return result;
}

Element commutator(const Element& x, const Element& y) {
    require_same(x.params(), y.params());
    return mul(mul(inverse(x), inverse(y)), mul(x, y));
}

Element left_normed(std::span<const Element> xs) {
    if (xs.empty()) throw DomainError("left-normed commutator of an empty list");
    Element r = xs.front();
    for (std::size_t i = 1; i < xs.size(); ++i) r = commutator(r, xs[i]);
    return r;
}

Element left_normed_rep(const Element& x, int n, const Element& y) {
    if (n < 0) throw DomainError("repetition count must be nonnegative");
    Element r = x;
    for (int i = 0; i < n; ++i) r = commutator(r, y);
    return r;
}

bool equals(const Element& x, const Element& y) {
    require_same(x.params(), y.params());
    return x == y;
}

Element reduce_class(const Element& x, int j) {
    if (j < 1 || j > x.params().cls) throw DomainError("reduce_class target out of range");
    GroupParams p{x.params().rank, j};
    return Element(p, x.exp(), x.derived().truncated(j));
}

Element lift_class(const Element& x, int k) {
    if (k < x.params().cls) throw DomainError("lift_class target below current class");
    return Element(GroupParams{x.params().rank, k}, x.exp(), x.derived());
}

std::vector<Integer> layer_coordinates(const DerivedVector& t, const GroupParams& params, int w) {
    auto basis = enumerate_basics(params, w);
    std::vector<Integer> out(basis.size());
    for (const auto& [c, v] : t.terms()) {
        if (c.weight() != w) continue;
        auto it = std::lower_bound(basis.begin(), basis.end(), c);
        out[static_cast<std::size_t>(it - basis.begin())] = v;
    }
    return out;
}

std::vector<Integer> gamma_layer(const Element& x, int w) {
    const auto& p = x.params();
    if (w < 1 || w > p.cls) throw DomainError("layer weight out of range");
    if (w == 1) return x.exp();
    for (int i = 0; i < p.rank; ++i) {
        if (x.exp()[static_cast<std::size_t>(i)] != 0) {
            throw DomainError("element not in gamma_" + std::to_string(w) + ": generator " +
                              generator_name(i, p.rank) + " has exponent " +
                              x.exp()[static_cast<std::size_t>(i)].get_str());
        }
    }
    for (const auto& [c, v] : x.derived().terms()) {
        if (c.weight() < w) {
            throw DomainError("element not in gamma_" + std::to_string(w) + ": " +
                              print_basic(c, p.rank) + " has coefficient " + v.get_str());
        }
    }
    return layer_coordinates(x.derived(), p, w);
}

Word to_word(const Element& x) {
    Word w;
    for (int i = 0; i < x.params().rank; ++i) w.push_back(i, x.exp()[static_cast<std::size_t>(i)]);
    for (const auto& [c, v] : x.derived().terms()) {
        Word cw = Word::generator(c.seq[0]);
        for (std::size_t j = 1; j < c.seq.size(); ++j) cw = word_commutator(cw, Word::generator(c.seq[j]));
        w = w * cw.pow(v);
    }
    return w;
}

std::string print_element(const Element& x) {
    std::string out;
    auto sep = [&out] {
        if (!out.empty()) out += ' ';
    };
    const int d = x.params().rank;
    for (int i = 0; i < d; ++i) {
        const Integer& e = x.exp()[static_cast<std::size_t>(i)];
        if (e == 0) continue;
        sep();
        out += generator_name(i, d);
        if (e != 1) out += "^" + e.get_str();
    }
    for (const auto& [c, v] : x.derived().terms()) {
        sep();
        out += print_basic(c, d);
        if (v != 1) out += "^" + v.get_str();
    }
    return out.empty() ? "1" : out;
}

}  // namespace mnp
