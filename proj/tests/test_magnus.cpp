#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mnp/element.hpp"
#include "mnp/magnus.hpp"
#include "mnp/sampling.hpp"

using namespace mnp;

namespace {
Word W(const char* text, GroupParams p) { return parse_word(text, p); }
}  // namespace

TEST_CASE("generator images") {
    GroupParams p{2, 2};
    MagnusMatrix id = magnus_of_word(Word(), p);
    CHECK(id.is_identity());
    CHECK(id == MagnusMatrix::identity(p));
    MagnusMatrix a = magnus_of_word(W("a", p), p);
    TruncPoly one_plus_x = TruncPoly::constant(2, 2, 1);
    one_plus_x += TruncPoly::variable(2, 2, 0);
    CHECK(a.scalar == one_plus_x);
    REQUIRE(a.module.size() == 2);
    CHECK(a.module[0].constant_term() == 1);
    CHECK(a.module[0].terms().size() == 1);
    CHECK(a.module[1].is_zero());
    CHECK(magnus_of_word(W("a a^-1 b", p), p) == magnus_of_word(W("b", p), p));
}

TEST_CASE("truncated polynomial inverse") {
    TruncPoly f = TruncPoly::constant(2, 4, 1);
    f += TruncPoly::variable(2, 4, 0);
    f += TruncPoly::variable(2, 4, 1).times(TruncPoly::variable(2, 4, 1), 4);
    TruncPoly g = f.unit_inverse();
    CHECK(f.times(g, 4) == TruncPoly::constant(2, 4, 1));
    TruncPoly h = -f;
    CHECK(h.times(h.unit_inverse(), 4) == TruncPoly::constant(2, 4, 1));
}

TEST_CASE("oracle equality examples") {
    GroupParams p{2, 3};
    CHECK(oracle_equal(W("a b", p), W("b a [a,b]", p), p));
    CHECK(oracle_equal(W("[b,a]", {2, 1}), Word(), {2, 1}));
    CHECK_FALSE(oracle_equal(W("[b,a]", {2, 2}), Word(), {2, 2}));
    for (int k = 1; k <= 6; ++k) CHECK(oracle_equal(W("[[b,a],[b,a,a]]", {2, k}), Word(), {2, k}));
    CHECK(oracle_equal(W("[b,a,a,a]", p), Word(), p));
    CHECK_FALSE(oracle_equal(W("[b,a,a]", p), Word(), p));
    CHECK_FALSE(magnus_of_word(W("[b,a,a]", p), p).module[0].is_zero());
}

TEST_CASE("matrix group laws") {
    Sampler rng(5);
    GroupParams p{3, 4};
    for (int i = 0; i < 50; ++i) {
        Word x = rng.word(p, 10), y = rng.word(p, 10);
        MagnusMatrix mx = magnus_of_word(x, p), my = magnus_of_word(y, p);
        CHECK(magnus_mul(mx, my) == magnus_of_word(x * y, p));
        CHECK(magnus_mul(mx, magnus_inverse(mx)).is_identity());
        CHECK(magnus_pow(mx, -3) == magnus_of_word(x.pow(-3), p));
        CHECK(magnus_commutator(mx, my) == magnus_of_word(word_commutator(x, y), p));
    }
}

TEST_CASE("kernel self-check") {
    for (int d = 2; d <= 3; ++d) {
        for (int k = 2; k <= 5; ++k) {
            SelfcheckReport r = kernel_selfcheck({d, k});
            CHECK_MESSAGE(r.pass, "d=", d, " k=", k);
            CHECK(r.basics_checked > 0);
        }
    }
    CHECK_THROWS(kernel_selfcheck({4, 3}));
}
