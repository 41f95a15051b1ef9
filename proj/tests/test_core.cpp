#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mnp/element.hpp"
#include "mnp/errors.hpp"
#include "mnp/magnus.hpp"
#include "mnp/sampling.hpp"

using namespace mnp;

namespace {

Element E(const char* text, GroupParams p) { return parse_element(text, p); }

BasicCommutator B(std::vector<int> seq) { return {std::move(seq)}; }

// Exhaustive shape filter over all index sequences.
std::vector<BasicCommutator> brute_basics(int d, int w) {
    std::vector<BasicCommutator> out;
    std::vector<int> seq(w, 0);
    while (true) {
        bool ok = seq[0] > seq[1];
        for (int i = 2; i < w; ++i) ok = ok && seq[i - 1] <= seq[i];
        if (ok) out.push_back({seq});
        int i = w - 1;
        while (i >= 0 && ++seq[i] == d) seq[i--] = 0;
        if (i < 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool magnus_agrees(const Element& x, const Element& y) {
    return oracle_equal(to_word(x), to_word(y), x.params()) == (x == y);
}

}  // namespace

TEST_CASE("basic commutator enumeration") {
    CHECK(enumerate_basics({2, 2}, 2) == std::vector{B({1, 0})});
    CHECK(enumerate_basics({2, 3}, 3) == std::vector{B({1, 0, 0}), B({1, 0, 1})});
    CHECK(enumerate_basics({3, 3}, 3).size() == 8);
    for (int d = 1; d <= 3; ++d) {
        for (int w = 2; w <= 6; ++w) {
            auto list = enumerate_basics({d, 6}, w);
            CHECK(list == brute_basics(d, w));
            CHECK(Integer(static_cast<long>(list.size())) == basic_count(d, w));
        }
    }
    CHECK_THROWS_AS(enumerate_basics({2, 3}, 4), DomainError);
    CHECK_THROWS_AS(enumerate_basics({2, 3}, 1), DomainError);
    CHECK(print_basic(B({1, 0, 1}), 2) == "[b,a,b]");
}

TEST_CASE("normalize_left_normed") {
    GroupParams p{3, 3};
    CHECK(normalize_left_normed({0, 0}, p).empty());
    CHECK(normalize_left_normed({0, 1, 2}, p) == DerivedVector::unit(B({1, 0, 2}), -1));
    DerivedVector cba = normalize_left_normed({2, 1, 0}, p);
    CHECK(cba.terms().size() == 2);
    CHECK(cba.coef(B({2, 0, 1})) == 1);
    CHECK(cba.coef(B({1, 0, 2})) == -1);
    CHECK(normalize_left_normed({1, 0, 0, 0}, p).empty());
}

TEST_CASE("normalize_left_normed agrees with the collector on all sequences") {
    for (GroupParams p : {GroupParams{2, 5}, GroupParams{3, 4}}) {
        for (int w = 2; w <= p.cls; ++w) {
            std::vector<int> seq(w, 0);
            while (true) {
                std::vector<Element> xs;
                for (int g : seq) xs.push_back(Element::generator(p, g));
                CHECK(Element::from_derived(p, normalize_left_normed(seq, p)) == left_normed(xs));
                int i = w - 1;
                while (i >= 0 && ++seq[i] == p.rank) seq[i--] = 0;
                if (i < 0) break;
            }
        }
    }
}

TEST_CASE("collect examples") {
    GroupParams p{2, 3};
    Element id = Element::identity(p);
    CHECK(E("", p) == id);
    Element c = E("a^-1 b^-1 a b", p);
    CHECK(c.exp() == std::vector<Integer>{0, 0});
    CHECK(c.derived() == DerivedVector::unit(B({1, 0}), -1));
    Element sq = E("(a b)^2", p);
    CHECK(sq.exp() == std::vector<Integer>{2, 2});
    CHECK(sq.derived() == DerivedVector::unit(B({1, 0})) + DerivedVector::unit(B({1, 0, 1})));
    CHECK(print_element(sq) == "a^2 b^2 [b,a] [b,a,b]");
    CHECK(print_element(id) == "1");
}

TEST_CASE("multiplication, inverse, commutator") {
    GroupParams p{2, 3};
    Element a = E("a", p), b = E("b", p), x = E("a^2 b^-1 a", p);
    CHECK(mul(x, Element::identity(p)) == x);
    CHECK(mul(a, b).derived().empty());
    CHECK(mul(b, a).exp() == std::vector<Integer>{1, 1});
    CHECK(mul(b, a).derived() == DerivedVector::unit(B({1, 0})));
    CHECK(inverse(Element::identity(p)) == Element::identity(p));
    CHECK(inverse(a).exp() == std::vector<Integer>{-1, 0});
    CHECK(inverse(a).derived().empty());
    GroupParams p2{2, 2};
    Element ab_inv = inverse(E("a b", p2));
    CHECK(ab_inv.exp() == std::vector<Integer>{-1, -1});
    CHECK(ab_inv.derived() == DerivedVector::unit(B({1, 0})));
    CHECK(mul(ab_inv, E("a b", p2)).is_identity());
    CHECK(commutator(x, x).is_identity());
    CHECK(commutator(b, a) == Element::from_derived(p, DerivedVector::unit(B({1, 0}))));
}

TEST_CASE("left-normed commutators") {
    GroupParams p{2, 3};
    Element a = E("a", p), b = E("b", p), x = E("a b^2", p);
    CHECK(left_normed(std::vector{x}) == x);
    CHECK(left_normed_rep(x, 0, a) == x);
    CHECK(left_normed(std::vector{b, a, a}) == left_normed_rep(commutator(b, a), 1, a));
    CHECK(left_normed(std::vector{b, a, a}).derived() == DerivedVector::unit(B({1, 0, 0})));
    CHECK_THROWS(left_normed(std::vector<Element>{}));
}

TEST_CASE("equality and truncation") {
    GroupParams p{2, 3};
    Element x = E("a b^-3 [a,b]", p);
    CHECK(equals(x, x));
    CHECK_FALSE(equals(E("a b", p), E("b a", p)));
    CHECK(E("[b,a,a,a,a]", {2, 4}).is_identity());
    CHECK_FALSE(E("[b,a,a,a,a]", {2, 5}).is_identity());
    CHECK(E("[[b,a],[b,a,a]]", {2, 6}).is_identity());
}

TEST_CASE("reduce_class and gamma_layer") {
    GroupParams p{2, 3};
    Element sq = E("(a b)^2", p);
    CHECK(reduce_class(sq, 3) == sq);
    Element r = reduce_class(sq, 2);
    CHECK(r.exp() == std::vector<Integer>{2, 2});
    CHECK(r.derived() == DerivedVector::unit(B({1, 0})));
    Element ab = reduce_class(sq, 1);
    CHECK(ab.derived().empty());
    CHECK(ab.exp() == sq.exp());
    CHECK(lift_class(r, 3).params().cls == 3);

    CHECK(gamma_layer(Element::identity(p), 3) == std::vector<Integer>{0, 0});
    CHECK(gamma_layer(E("[b,a,a]", p), 3) == std::vector<Integer>{1, 0});
    CHECK(gamma_layer(sq, 1) == std::vector<Integer>{2, 2});
    CHECK_THROWS_AS(gamma_layer(sq, 3), DomainError);

    GroupParams q{3, 3};
    auto basics = enumerate_basics(q, 3);
    auto layer = gamma_layer(E("[c,b,a]", q), 3);
    for (std::size_t i = 0; i < basics.size(); ++i) {
        int expected = basics[i] == B({2, 0, 1}) ? 1 : basics[i] == B({1, 0, 2}) ? -1 : 0;
        CHECK(layer[i] == expected);
    }
}

TEST_CASE("depth") {
    GroupParams p{2, 4};
    CHECK(E("a", p).depth() == 1);
    CHECK(E("[b,a]", p).depth() == 2);
    CHECK(E("[b,a,b] [b,a,a,a]", p).depth() == 3);
    CHECK(Element::identity(p).depth() == 5);
}

TEST_CASE("collector properties checked against the Magnus oracle") {
    Sampler rng(11);
    for (GroupParams p : {GroupParams{2, 4}, GroupParams{3, 3}, GroupParams{3, 5}}) {
        for (int i = 0; i < 60; ++i) {
            Element x = rng.element(p), y = rng.element(p), z = rng.element(p);
            CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
            CHECK(mul(x, inverse(x)).is_identity());
            CHECK(collect(to_word(x), p) == x);
            Element xy = mul(x, y);
            CHECK(oracle_equal(to_word(xy), to_word(x) * to_word(y), p));
            CHECK(magnus_agrees(commutator(x, y), mul(mul(inverse(x), inverse(y)), xy)));
            CHECK(magnus_agrees(mul(x, y), mul(y, x)));
            CHECK(pow(x, 3) == mul(x, mul(x, x)));
            CHECK(pow(x, -2) == inverse(mul(x, x)));
            CHECK(parse_element(print_element(x), p) == x);
        }
    }
}
