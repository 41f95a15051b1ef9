#include "mnp/normality.hpp"

#include <numeric>
#include <stdexcept>

namespace mnp {

int DeltaFunction::degree() const { return std::accumulate(values.begin(), values.end(), 0); }

std::vector<int> DeltaFunction::expand() const {
    std::vector<int> seq;
    for (std::size_t j = 0; j < values.size(); ++j) seq.insert(seq.end(), static_cast<std::size_t>(values[j]), static_cast<int>(j));
    return seq;
}

namespace {

void enumerate_deltas_rec(std::vector<int>& cur, std::size_t pos, int remaining, std::vector<DeltaFunction>& out) {
    if (pos + 1 == cur.size()) {
        cur[pos] = remaining;
        out.push_back({cur});
        return;
    }
    for (int v = remaining; v >= 0; --v) {
        cur[pos] = v;
        enumerate_deltas_rec(cur, pos + 1, remaining - v, out);
    }
}

BasicCommutator basic_from(int b1, int b2, const DeltaFunction& delta) {
    std::vector<int> seq{b1, b2};
    auto tail = delta.expand();
    seq.insert(seq.end(), tail.begin(), tail.end());
    if (!is_basic_shape(seq)) throw std::logic_error("rewrite produced a non-basic commutator");
    return {std::move(seq)};
}

// First generator whose block of the certificate multiplier is nonzero.
int witness_block(const InfeasibilityCertificate& cert, std::size_t block, int rank) {
    if (block == 0) return 0;
    for (std::size_t r = 0; r < cert.multiplier.size(); ++r) {
        if (cert.multiplier[r] != 0) return static_cast<int>(r / block);
    }
    return rank - 1;
}

NotGeneralizedInner refuse_non_ia(const AutoSpec& f) {
    const auto& p = f.params;
    for (int i = 0; i < p.rank; ++i) {
        IntVector defect = f.images[static_cast<std::size_t>(i)].exp();
        defect[static_cast<std::size_t>(i)] -= 1;
        for (std::size_t j = 0; j < defect.size(); ++j) {
            if (defect[j] == 0) continue;
            // No unknowns at layer 1: the unit row alone certifies the mismatch.
            IntVector y(defect.size());
            y[j] = 1;
            return {i, 1, defect, {y, 0},
                    "generator image is not congruent to the generator modulo the derived subgroup"};
        }
    }
    throw std::logic_error("refuse_non_ia called on an IA map");
}

SynthesisResult synthesize_at(const AutoSpec& f) {
    const auto& p = f.params;
    if (!is_ia(f)) return refuse_non_ia(f);

    if (p.cls <= 2) {
        InnerSearch s = search_conjugator(f);
        if (!s.conjugator) {
            const auto block = static_cast<std::size_t>(basic_count(p.rank, s.failed_layer).get_ui());
            int w = witness_block(*s.certificate, block, p.rank);
            return NotGeneralizedInner{w, s.failed_layer, s.defects[static_cast<std::size_t>(w)], *s.certificate,
                                       "no conjugating element exists"};
        }
        return GenInnerData(p, {{*s.conjugator, 1}});
    }

    // Induction on the class: match f modulo gamma_k, then fix the top layer.
    const int k = p.cls;
    AutoSpec lower{GroupParams{p.rank, k - 1}, {}};
    for (const auto& img : f.images) lower.images.push_back(reduce_class(img, k - 1));
    SynthesisResult sub = synthesize_at(lower);
    if (std::holds_alternative<NotGeneralizedInner>(sub)) return sub;
    GenInnerData psi = lift_gen_inner(std::get<GenInnerData>(sub), k);

    AutoSpec residual = compose_endo(invert_ia(gen_inner_to_spec(psi)), f);
    std::vector<IntVector> defects;
    for (int j = 0; j < p.rank; ++j) {
        Element delta = mul(inverse(Element::generator(p, j)), residual.images[static_cast<std::size_t>(j)]);
        defects.push_back(gamma_layer(delta, k));
    }

    auto deltas = enumerate_deltas(p.rank, k - 2);
    const auto block = static_cast<std::size_t>(basic_count(p.rank, k).get_ui());
    std::vector<std::pair<int, DeltaFunction>> unknowns;
    std::vector<IntVector> columns;
    for (int i = 0; i < p.rank; ++i) {
        for (const auto& delta : deltas) {
            IntVector col;
            for (int j = 0; j < p.rank; ++j) {
                std::vector<int> seq{j, i};
                auto tail = delta.expand();
                seq.insert(seq.end(), tail.begin(), tail.end());
                auto coords = layer_coordinates(normalize_left_normed(seq, p), p, k);
                col.insert(col.end(), coords.begin(), coords.end());
            }
            unknowns.emplace_back(i, delta);
            columns.push_back(std::move(col));
        }
    }
    IntVector rhs;
    for (const auto& dv : defects) rhs.insert(rhs.end(), dv.begin(), dv.end());
    IntMatrix a = IntMatrix::from_columns(columns, block * static_cast<std::size_t>(p.rank));
    SolveResult sol = integer_solve(a, rhs);
    if (!sol.feasible()) {
        int w = witness_block(*sol.certificate, block, p.rank);
        return NotGeneralizedInner{w, k, defects[static_cast<std::size_t>(w)], *sol.certificate,
                                   "top-layer system has no integral solution"};
    }

    NestedGenInnerData theta{p, {}};
    for (std::size_t c = 0; c < unknowns.size(); ++c) {
        const Integer& eps = sol.solution->particular[c];
        if (eps == 0) continue;
        std::vector<Element> tail{Element::generator(p, unknowns[c].first)};
        for (int g : unknowns[c].second.expand()) tail.push_back(Element::generator(p, g));
        theta.terms.push_back({std::move(tail), eps});
    }
    GenInnerData result = flatten(compose_nested(to_nested(psi), theta));
    if (!(gen_inner_to_spec(result) == f)) throw std::logic_error("synthesized data does not reproduce the automorphism");
    return result;
}

}  // namespace

std::vector<DeltaFunction> enumerate_deltas(int size, int degree) {
    if (size < 1 || degree < 0) throw DomainError("invalid delta domain");
    std::vector<DeltaFunction> out;
    std::vector<int> cur(static_cast<std::size_t>(size), 0);
    enumerate_deltas_rec(cur, 0, degree, out);
    return out;
}

int delta_min(const DeltaFunction& delta) {
    for (std::size_t j = 0; j < delta.values.size(); ++j) {
        if (delta.values[j] < 0) throw DomainError("delta values must be nonnegative");
        if (delta.values[j] != 0) return static_cast<int>(j);
    }
    throw DomainError("delta_min of the null function");
}

DeltaFunction delta_shift(const DeltaFunction& delta, int j, int j_prime) {
    const int size = static_cast<int>(delta.values.size());
    if (j < 0 || j >= size || j_prime < 0 || j_prime >= size) throw DomainError("delta index out of range");
    if (j == j_prime) throw DomainError("delta_shift requires distinct indices");
    if (delta.values[static_cast<std::size_t>(j)] == 0) throw DomainError("delta_shift from a zero position");
    DeltaFunction out = delta;
    --out.values[static_cast<std::size_t>(j)];
    ++out.values[static_cast<std::size_t>(j_prime)];
    return out;
}

Element eval_delta_comm(const Element& x, const Element& y, const DeltaFunction& delta) {
    require_same(x.params(), y.params());
    const auto& p = x.params();
    if (static_cast<int>(delta.values.size()) > p.rank) throw DomainError("delta domain exceeds the rank");
    Element r = commutator(x, y);
    for (std::size_t j = 0; j < delta.values.size(); ++j) {
        if (delta.values[j] < 0) throw DomainError("delta values must be nonnegative");
        r = left_normed_rep(r, delta.values[j], Element::generator(p, static_cast<int>(j)));
    }
    return r;
}

std::vector<Element> lemma31_generators(int a_idx, int b_idx, const Integer& t, const GroupParams& params,
                                        const std::optional<std::set<int>>& subset) {
    validate(params);
    if (a_idx == b_idx) throw DomainError("lemma31_generators requires distinct generators");
    if (a_idx < 0 || b_idx < 0 || a_idx >= params.rank || b_idx >= params.rank) {
        throw DomainError("generator index out of range");
    }
    if (params.cls < 2) throw DomainError("lemma31_generators requires class > 1");
    std::vector<int> letters;
    if (subset) {
        if (!subset->count(a_idx) || !subset->count(b_idx)) throw DomainError("subset must contain a and b");
        for (int g : *subset) {
            if (g < 0 || g >= params.rank) throw DomainError("subset index out of range");
            letters.push_back(g);
        }
    } else {
        for (int g = 0; g < params.rank; ++g) letters.push_back(g);
    }
    const Element base = mul(Element::generator(params, a_idx, t), Element::generator(params, b_idx));
    std::vector<Element> out;
    std::vector<std::size_t> idx(static_cast<std::size_t>(params.cls - 1), 0);
    while (true) {
        Element c = base;
        for (auto i : idx) c = commutator(c, Element::generator(params, letters[i]));
        out.push_back(std::move(c));
        std::size_t pos = idx.size();
        while (pos > 0 && ++idx[pos - 1] == letters.size()) idx[--pos] = 0;
        if (pos == 0) break;
    }
    return out;
}

std::optional<IntVector> closure_membership(const Element& w, const std::vector<Element>& gens) {
    const auto& p = w.params();
    const int k = p.cls;
    if (k < 2) throw DomainError("closure_membership requires class at least 2");
    IntVector target = gamma_layer(w, k);
    std::vector<IntVector> cols;
    for (const auto& g : gens) {
        require_same(p, g.params());
        cols.push_back(gamma_layer(g, k));
    }
    SolveResult sol = integer_solve(IntMatrix::from_columns(cols, target.size()), target);
    if (!sol.feasible()) return std::nullopt;
    return sol.solution->particular;
}

IntVector lemma32_rewrite(const ExponentAssignment& eps, int s, const GroupParams& params) {
    validate(params);
    const int k = params.cls;
    if (k < 2) throw DomainError("lemma32_rewrite requires class at least 2");
    if (s < 0 || s >= params.rank) throw DomainError("index s out of range");
    DerivedVector w;
    for (const auto& [key, e] : eps) {
        const auto& [i, delta] = key;
        if (delta.degree() != k - 2) throw DomainError("delta degree inconsistent with the ambient class");
        if (static_cast<int>(delta.values.size()) > params.rank) throw DomainError("delta domain exceeds the rank");
        if (i < 0 || i >= params.rank) throw DomainError("index i out of range");
        if (i == s || e == 0) continue;
        // m(Delta) for the null function sits above every index.
        const int m = delta.is_zero() ? params.rank : delta_min(delta);
        if (i < s && i <= m) {
            w.add(basic_from(s, i, delta), e);
        } else if (s < i && i <= m) {
            w.add(basic_from(i, s, delta), -e);
        } else if (s <= m && m < i) {
            w.add(basic_from(i, s, delta), -e);
        } else {
            // m < s and m < i: [a_s,a_i,D] = [a_i,a_m,D_(m)^(s)]^-1 [a_s,a_m,D_(m)^(i)]
            w.add(basic_from(i, m, delta_shift(delta, m, s)), -e);
            w.add(basic_from(s, m, delta_shift(delta, m, i)), e);
        }
    }
    return layer_coordinates(w, params, k);
}

RewriteMatrix lemma32_matrix(int s, const GroupParams& params) {
    RewriteMatrix out;
    std::vector<IntVector> cols;
    for (int i = 0; i < params.rank; ++i) {
        if (i == s) continue;
        for (const auto& delta : enumerate_deltas(params.rank, params.cls - 2)) {
            ExponentAssignment unit{{{i, delta}, Integer(1)}};
            cols.push_back(lemma32_rewrite(unit, s, params));
            out.columns.emplace_back(i, delta);
        }
    }
    out.matrix = IntMatrix::from_columns(cols, static_cast<std::size_t>(basic_count(params.rank, params.cls).get_ui()));
    return out;
}

IndependenceCertificate lemma32_independent(int s, const GroupParams& params) {
    if (params.rank < 2) throw DomainError("lemma32_independent requires rank at least 2");
    RewriteMatrix rm = lemma32_matrix(s, params);
    SmithForm snf = smith_normal_form(rm.matrix);
    IndependenceCertificate cert;
    cert.rank = snf.rank;
    cert.columns = rm.matrix.cols();
    cert.injective = snf.rank == rm.matrix.cols();
    cert.invariant_factors = snf.invariant_factors();
    return cert;
}

SynthesisResult synthesize_gen_inner(const AutoSpec& f) {
    validate(f.params);
    if (f.params.rank < 2) throw DomainError("synthesis requires a nonabelian group (rank at least 2)");
    if (static_cast<int>(f.images.size()) != f.params.rank) throw DomainError("one image per generator required");
    if (!abelianization_invertible(f)) throw DomainError("not an automorphism: abelianization matrix is not unimodular");
    return synthesize_at(f);
}

std::optional<std::pair<Element, Element>> poly_multiplicativity_witness(const PolyAutoData& data) {
    const int q = std::min(2, data.params.cls);
    const GroupParams p{data.params.rank, q};
    PolyAutoData reduced{p, {}};
    for (const auto& pr : data.pairs) reduced.pairs.push_back({reduce_class(pr.u, q), pr.eps});
    std::vector<Element> probes;
    for (int i = 0; i < p.rank; ++i) {
        probes.push_back(Element::generator(p, i));
        probes.push_back(Element::generator(p, i, -1));
    }
    for (int i = 0; i < p.rank; ++i) {
        for (int j = 0; j < p.rank; ++j) {
            if (i != j) probes.push_back(mul(Element::generator(p, i), Element::generator(p, j)));
        }
    }
    for (const auto& x : probes) {
        for (const auto& y : probes) {
            if (apply_poly_auto(reduced, mul(x, y)) !=
                mul(apply_poly_auto(reduced, x), apply_poly_auto(reduced, y))) {
                return std::make_pair(x, y);
            }
        }
    }
    return std::nullopt;
}

SynthesisResult poly_to_gen_inner(const PolyAutoData& data) {
    const auto& p = data.params;
    validate(p);
    const Integer eps = epsilon_sum(data);
    if (eps != 1 && eps != -1) {
        throw DomainError("not an automorphism: exponent sum " + eps.get_str() + " is not +-1");
    }
    AutoSpec f{p, {}};
    for (int i = 0; i < p.rank; ++i) f.images.push_back(apply_poly_auto(data, Element::generator(p, i)));
    if (!is_ia(f)) throw DomainError("not an automorphism: polynomial map is not multiplicative (exponent sum -1)");
    AutoSpec inv = invert_ia(f);
    if (!(compose_endo(inv, f) == AutoSpec::identity(p)) || !(compose_endo(f, inv) == AutoSpec::identity(p))) {
        throw DomainError("not an automorphism: inversion failed");
    }
    // The polynomial map must coincide with the endomorphism defined by its generator images.
    std::vector<Element> probes;
    for (int i = 0; i < p.rank; ++i) {
        for (int j = 0; j < p.rank; ++j) {
            const Element ai = Element::generator(p, i);
            const Element aj = Element::generator(p, j);
            probes.push_back(mul(ai, aj));
            probes.push_back(mul(inverse(ai), mul(aj, aj)));
            probes.push_back(commutator(ai, aj));
            for (int l = 0; l < p.rank; ++l) probes.push_back(mul(commutator(ai, aj), Element::generator(p, l, 2)));
        }
    }
    for (const auto& x : probes) {
        if (apply_poly_auto(data, x) != apply_endo(f, x)) {
            throw DomainError("not an automorphism: polynomial map disagrees with its induced endomorphism at " +
                              print_element(x));
        }
    }
    return synthesize_gen_inner(f);
}

}  // namespace mnp
