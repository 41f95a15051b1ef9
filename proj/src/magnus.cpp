#include "mnp/magnus.hpp"

#include "mnp/basic.hpp"

#include <functional>
#include <numeric>

namespace mnp {

namespace {

int degree(const TruncPoly::Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

}  // namespace

TruncPoly TruncPoly::constant(int nvars, int cap, const Integer& c) {
    TruncPoly p(nvars, cap);
    p.add_term(Monomial(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

TruncPoly TruncPoly::variable(int nvars, int cap, int var) {
    TruncPoly p(nvars, cap);
    Monomial m(static_cast<std::size_t>(nvars), 0);
    m[static_cast<std::size_t>(var)] = 1;
    p.add_term(m, 1);
    return p;
}

Integer TruncPoly::constant_term() const {
    auto it = terms_.find(Monomial(static_cast<std::size_t>(nvars_), 0));
    return it == terms_.end() ? Integer(0) : it->second;
}

void TruncPoly::add_term(const Monomial& m, const Integer& c) {
    if (c == 0 || degree(m) > cap_) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TruncPoly& TruncPoly::operator+=(const TruncPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

TruncPoly TruncPoly::operator-() const {
    TruncPoly r(nvars_, cap_);
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
    return r;
}

TruncPoly TruncPoly::times(const TruncPoly& o, int result_cap) const {
    TruncPoly r(nvars_, result_cap);
    Monomial prod(static_cast<std::size_t>(nvars_));
    for (const auto& [m1, c1] : terms_) {
        const int d1 = degree(m1);
        if (d1 > result_cap) continue;
        for (const auto& [m2, c2] : o.terms_) {
            if (d1 + degree(m2) > result_cap) continue;
            for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = m1[i] + m2[i];
            r.add_term(prod, c1 * c2);
        }
    }
    return r;
}

TruncPoly TruncPoly::unit_inverse() const {
    const Integer c0 = constant_term();
    if (c0 != 1 && c0 != -1) throw DomainError("polynomial is not a unit in the truncated ring");
    // s = c0 (1 + r)  =>  s^-1 = c0 * sum_n (-r)^n
    TruncPoly neg_r = TruncPoly(nvars_, cap_);
    for (const auto& [m, c] : terms_) {
        if (degree(m) > 0) neg_r.add_term(m, -c * c0);
    }
    TruncPoly result = constant(nvars_, cap_, 1);
    TruncPoly power = constant(nvars_, cap_, 1);
    for (int n = 1; n <= cap_; ++n) {
        power = power.times(neg_r, cap_);
        if (power.is_zero()) break;
        result += power;
    }
    if (c0 == -1) result = -result;
    return result;
}

std::string TruncPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += c.get_str();
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            out += "*X" + std::to_string(i);
            if (m[i] > 1) out += "^" + std::to_string(m[i]);
        }
    }
    return out;
}

MagnusMatrix MagnusMatrix::identity(const GroupParams& params) {
    MagnusMatrix m{TruncPoly::constant(params.rank, params.cls, 1), {}};
    m.module.assign(static_cast<std::size_t>(params.rank), TruncPoly(params.rank, params.cls - 1));
    return m;
}

MagnusMatrix MagnusMatrix::generator(const GroupParams& params, int gen) {
    MagnusMatrix m = identity(params);
    m.scalar += TruncPoly::variable(params.rank, params.cls, gen);
    m.module[static_cast<std::size_t>(gen)] = TruncPoly::constant(params.rank, params.cls - 1, 1);
    return m;
}

bool MagnusMatrix::is_identity() const {
    if (scalar.terms().size() != 1 || scalar.constant_term() != 1) return false;
    for (const auto& p : module) {
        if (!p.is_zero()) return false;
    }
    return true;
}

MagnusMatrix magnus_mul(const MagnusMatrix& x, const MagnusMatrix& y) {
    MagnusMatrix r{x.scalar.times(y.scalar, x.scalar.cap()), {}};
    r.module.reserve(x.module.size());
    for (std::size_t i = 0; i < x.module.size(); ++i) {
        TruncPoly m = x.scalar.times(y.module[i], x.module[i].cap());
        m += x.module[i];
        r.module.push_back(std::move(m));
    }
    return r;
}

MagnusMatrix magnus_inverse(const MagnusMatrix& x) {
    MagnusMatrix r{x.scalar.unit_inverse(), {}};
    r.module.reserve(x.module.size());
    for (const auto& m : x.module) r.module.push_back(-r.scalar.times(m, m.cap()));
    return r;
}

MagnusMatrix magnus_pow(const MagnusMatrix& x, const Integer& n) {
    if (n < 0) return magnus_pow(magnus_inverse(x), -n);
    MagnusMatrix result{TruncPoly::constant(x.scalar.nvars(), x.scalar.cap(), 1), {}};
    for (const auto& m : x.module) result.module.emplace_back(m.nvars(), m.cap());
    MagnusMatrix base = x;
    Integer e = n;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = magnus_mul(result, base);
        e >>= 1;
        if (e > 0) base = magnus_mul(base, base);
    }
    return result;
}

MagnusMatrix magnus_commutator(const MagnusMatrix& x, const MagnusMatrix& y) {
    return magnus_mul(magnus_mul(magnus_inverse(x), magnus_inverse(y)), magnus_mul(x, y));
}

MagnusMatrix magnus_of_word(const Word& w, const GroupParams& params) {
    validate(params);
    MagnusMatrix r = MagnusMatrix::identity(params);
    for (const auto& l : w.letters()) {
        if (l.gen < 0 || l.gen >= params.rank) throw DomainError("word letter outside rank");
        r = magnus_mul(r, magnus_pow(MagnusMatrix::generator(params, l.gen), l.exp));
    }
    return r;
}

bool oracle_equal(const Word& w1, const Word& w2, const GroupParams& params) {
    return magnus_of_word(w1, params) == magnus_of_word(w2, params);
}

SelfcheckReport kernel_selfcheck(const GroupParams& params) {
    validate(params);
    if (params.rank > 3 || params.cls > 6) throw DomainError("kernel self-check is limited to d <= 3, k <= 6");
    SelfcheckReport report;
    const int d = params.rank;

    std::vector<MagnusMatrix> gens;
    for (int i = 0; i < d; ++i) gens.push_back(MagnusMatrix::generator(params, i));

    for (int w = 2; w <= params.cls; ++w) {
        for (const auto& c : enumerate_basics(params, w)) {
            Word cw = Word::generator(c.seq[0]);
            for (std::size_t j = 1; j < c.seq.size(); ++j) cw = word_commutator(cw, Word::generator(c.seq[j]));
            ++report.basics_checked;
            if (magnus_of_word(cw, params).is_identity()) {
                report.pass = false;
                report.failures.push_back("basic commutator " + print_basic(c, d) + " maps to the identity");
            }
        }
    }

    // Every left-normed generator commutator of weight k + 1, by depth-first extension of prefixes.
    std::vector<int> seq;
    std::function<void(const MagnusMatrix&)> extend = [&](const MagnusMatrix& prefix) {
        if (static_cast<int>(seq.size()) == params.cls + 1) {
            ++report.top_commutators_checked;
            if (!prefix.is_identity()) {
                std::string name = "[";
                for (std::size_t i = 0; i < seq.size(); ++i) name += (i ? "," : "") + generator_name(seq[i], d);
                report.pass = false;
                report.failures.push_back("weight-" + std::to_string(params.cls + 1) + " commutator " +
                                          name + "] does not vanish");
            }
            return;
        }
        for (int g = 0; g < d; ++g) {
            seq.push_back(g);
            extend(seq.size() == 1 ? gens[static_cast<std::size_t>(g)]
                                   : magnus_commutator(prefix, gens[static_cast<std::size_t>(g)]));
            seq.pop_back();
        }
    };
    extend(MagnusMatrix::identity(params));

    std::vector<std::string> witnesses = {"[[b,a],[b,a,a]]", "[[b,a],[b,a,b]]", "[[a b,a],[b^2,a^-1]]",
                                          "[[b,a]^2 [b,a,b],[b,a,a]]", "[[b^-1,a^2],(a b)^-1 [a,b] a b]"};
    if (d >= 3) {
        witnesses.insert(witnesses.end(), {"[[c,a],[b,a]]", "[[c,b],[c,a,b]]", "[[a c,b],[b c^-1,a]]",
                                           "[[c,a,b],[b,a,c]]"});
    }
    if (d >= 2) {
        for (const auto& text : witnesses) {
            ++report.witnesses_checked;
            if (!magnus_of_word(parse_word(text, params), params).is_identity()) {
                report.pass = false;
                report.failures.push_back("second-derived witness " + text + " does not vanish");
            }
        }
    }
    return report;
}

}  // namespace mnp
