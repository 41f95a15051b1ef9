#include "mnp/autos.hpp"

#include <map>
#include <stdexcept>

namespace mnp {

namespace {

// Evaluates an endomorphism on canonical forms, memoizing left-normed prefixes
// of basic commutators.
class EndoEvaluator {
public:
    explicit EndoEvaluator(const AutoSpec& f) : f_(f) {}

    Element operator()(const Element& x) {
        require_same(f_.params, x.params());
        Element result = Element::identity(f_.params);
        for (int i = 0; i < f_.params.rank; ++i) {
            const Integer& e = x.exp()[static_cast<std::size_t>(i)];
            if (e != 0) result = mul(result, pow(f_.images[static_cast<std::size_t>(i)], e));
        }
        DerivedVector t;
        for (const auto& [c, v] : x.derived().terms()) t += prefix(c.seq).derived() * v;
        return mul(result, Element::from_derived(f_.params, t));
    }

private:
    const AutoSpec& f_;
    std::map<std::vector<int>, Element> memo_;

    const Element& prefix(const std::vector<int>& seq) {
        auto it = memo_.find(seq);
        if (it != memo_.end()) return it->second;
        Element value = seq.size() == 1
                            ? f_.images[static_cast<std::size_t>(seq[0])]
                            : commutator(prefix(std::vector<int>(seq.begin(), seq.end() - 1)),
                                         f_.images[static_cast<std::size_t>(seq.back())]);
        return memo_.emplace(seq, std::move(value)).first->second;
    }
};

bool trivially_identity(const std::vector<Element>& tail, int cls) {
    int weight = 1;
    for (const auto& v : tail) {
        if (v.is_identity()) return true;
        weight += v.depth();
        if (weight > cls) return true;
    }
    return false;
}

using NestedMap = std::map<std::vector<Element>, Integer>;

void accumulate(NestedMap& acc, std::vector<Element> tail, const Integer& eta, int cls) {
    if (eta == 0 || trivially_identity(tail, cls)) return;
    auto [it, inserted] = acc.try_emplace(std::move(tail), eta);
    if (!inserted) {
        it->second += eta;
        if (it->second == 0) acc.erase(it);
    }
}

NestedGenInnerData from_map(const GroupParams& params, NestedMap&& acc) {
    NestedGenInnerData out{params, {}};
    for (auto& [tail, eta] : acc) out.terms.push_back({tail, eta});
    return out;
}

NestedGenInnerData negated(const NestedGenInnerData& d) {
    NestedGenInnerData out = d;
    for (auto& t : out.terms) t.eta = -t.eta;
    return out;
}

}  // namespace

AutoSpec AutoSpec::identity(const GroupParams& params) {
    AutoSpec f{params, {}};
    for (int i = 0; i < params.rank; ++i) f.images.push_back(Element::generator(params, i));
    return f;
}

AutoSpec AutoSpec::from_images(const GroupParams& params, std::vector<Element> images) {
    validate(params);
    if (static_cast<int>(images.size()) != params.rank) {
        throw DomainError("expected " + std::to_string(params.rank) + " generator images, got " +
                          std::to_string(images.size()));
    }
    for (const auto& e : images) require_same(params, e.params());
    return AutoSpec{params, std::move(images)};
}

GenInnerData::GenInnerData(GroupParams p, std::vector<GenInnerPair> raw) : params(p) {
    // Merged pairs keep the order of first appearance, so the class-2 product prod u_i^lambda_i
    // follows the input order.
    std::map<Element, std::size_t> slot;
    std::vector<GenInnerPair> merged;
    for (auto& pr : raw) {
        require_same(params, pr.u.params());
        // [x, u] is trivial for central u
        if (pr.lambda == 0 || pr.u.depth() >= params.cls) continue;
        auto [it, fresh] = slot.try_emplace(pr.u, merged.size());
        if (fresh)
            merged.push_back(std::move(pr));
        else
            merged[it->second].lambda += pr.lambda;
    }
    for (auto& pr : merged) {
        if (pr.lambda != 0) pairs.push_back(std::move(pr));
    }
}

Element apply_endo(const AutoSpec& f, const Element& x) { return EndoEvaluator(f)(x); }

AutoSpec compose_endo(const AutoSpec& g, const AutoSpec& f) {
    require_same(g.params, f.params);
    EndoEvaluator eval(g);
    AutoSpec out{f.params, {}};
    for (const auto& img : f.images) out.images.push_back(eval(img));
    return out;
}

bool is_ia(const AutoSpec& f) {
    for (int i = 0; i < f.params.rank; ++i) {
        const auto& e = f.images[static_cast<std::size_t>(i)].exp();
        for (int j = 0; j < f.params.rank; ++j) {
            if (e[static_cast<std::size_t>(j)] != (i == j ? 1 : 0)) return false;
        }
    }
    return true;
}

std::vector<std::vector<Integer>> abelianization_matrix(const AutoSpec& f) {
    const auto d = static_cast<std::size_t>(f.params.rank);
    std::vector<std::vector<Integer>> m(d, std::vector<Integer>(d));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) m[j][i] = f.images[i].exp()[j];
    }
    return m;
}

bool abelianization_invertible(const AutoSpec& f) {
    auto rows = abelianization_matrix(f);
    const auto d = rows.size();
    IntMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) m(i, j) = rows[i][j];
    }
    SmithForm snf = smith_normal_form(m);
    if (snf.rank != d) return false;
    for (const auto& f : snf.invariant_factors()) {
        if (f != 1) return false;
    }
    return true;
}

AutoSpec invert_ia(const AutoSpec& f) {
    if (!is_ia(f)) throw DomainError("invert_ia requires an IA endomorphism");
    const auto& p = f.params;
    AutoSpec g = AutoSpec::identity(p);
    // Each correction pushes the defect one step down the lower central series.
    for (int round = 0; round <= p.cls; ++round) {
        AutoSpec h = compose_endo(g, f);
        AutoSpec correction{p, {}};
        bool done = true;
        for (int i = 0; i < p.rank; ++i) {
            Element gen = Element::generator(p, i);
            Element defect = mul(inverse(gen), h.images[static_cast<std::size_t>(i)]);
            if (!defect.is_identity()) done = false;
            correction.images.push_back(mul(gen, inverse(defect)));
        }
        if (done) return g;
        g = compose_endo(correction, g);
    }
    throw std::logic_error("invert_ia did not converge within the class bound");
}

AutoSpec aut_commutator(const AutoSpec& f, const AutoSpec& g) {
    require_same(f.params, g.params);
    if (!is_ia(f) || !is_ia(g)) throw DomainError("aut_commutator requires IA endomorphisms");
    return compose_endo(invert_ia(f), compose_endo(invert_ia(g), compose_endo(f, g)));
}

Element apply_gen_inner(const GenInnerData& data, const Element& x) {
    require_same(data.params, x.params());
    DerivedVector t;
    for (const auto& [u, lambda] : data.pairs) t += commutator(x, u).derived() * lambda;
    return mul(x, Element::from_derived(x.params(), t));
}

AutoSpec gen_inner_to_spec(const GenInnerData& data) {
    AutoSpec f{data.params, {}};
    for (int i = 0; i < data.params.rank; ++i) {
        f.images.push_back(apply_gen_inner(data, Element::generator(data.params, i)));
    }
    return f;
}

Element apply_nested(const NestedGenInnerData& data, const Element& x) {
    require_same(data.params, x.params());
    DerivedVector t;
    for (const auto& term : data.terms) {
        Element c = x;
        for (const auto& v : term.tail) c = commutator(c, v);
        t += c.derived() * term.eta;
    }
    return mul(x, Element::from_derived(x.params(), t));
}

NestedGenInnerData to_nested(const GenInnerData& data) {
    NestedGenInnerData out{data.params, {}};
    for (const auto& [u, lambda] : data.pairs) out.terms.push_back({{u}, lambda});
    return out;
}

GenInnerData flatten(const NestedGenInnerData& nested) {
    std::map<Element, Integer> acc;
    for (const auto& term : nested.terms) {
        if (term.tail.empty()) throw DomainError("nested term with an empty tail");
        // [x, U, z] = prod over (u, c) of ([x,u]^-1 [x,z]^-1 [x,uz])^c
        std::map<Element, Integer> cur{{term.tail[0], Integer(1)}};
        for (std::size_t j = 1; j < term.tail.size(); ++j) {
            const Element& z = term.tail[j];
            std::map<Element, Integer> next;
            for (const auto& [u, c] : cur) {
                next[u] -= c;
                next[z] -= c;
                next[mul(u, z)] += c;
            }
            cur.clear();
            for (auto& [u, c] : next) {
                if (c != 0) cur.emplace(u, c);
            }
        }
        for (const auto& [u, c] : cur) acc[u] += c * term.eta;
    }
    std::vector<GenInnerPair> raw;
    for (auto& [u, c] : acc) raw.push_back({u, c});
    return GenInnerData(nested.params, std::move(raw));
}

NestedGenInnerData compose_nested(const NestedGenInnerData& psi, const NestedGenInnerData& phi) {
    require_same(psi.params, phi.params);
    const int k = psi.params.cls;
    NestedMap acc;
    for (const auto& t : phi.terms) accumulate(acc, t.tail, t.eta, k);
    for (const auto& t : psi.terms) accumulate(acc, t.tail, t.eta, k);
    for (const auto& a : phi.terms) {
        for (const auto& b : psi.terms) {
            std::vector<Element> tail = a.tail;
            tail.insert(tail.end(), b.tail.begin(), b.tail.end());
            accumulate(acc, std::move(tail), a.eta * b.eta, k);
        }
    }
    return from_map(psi.params, std::move(acc));
}

GenInnerData compose_gen_inner(const GenInnerData& psi, const GenInnerData& phi) {
    return flatten(compose_nested(to_nested(psi), to_nested(phi)));
}

GenInnerData invert_gen_inner(const GenInnerData& phi) {
    const auto& p = phi.params;
    NestedGenInnerData psi{p, {}};
    // defect = psi o phi; each round replaces psi by defect^-1 o psi, which
    // roughly doubles the weight of every surviving defect term.
    NestedGenInnerData defect = compose_nested(psi, to_nested(phi));
    for (int round = 0; !defect.terms.empty(); ++round) {
        if (round > p.cls) throw std::logic_error("invert_gen_inner did not converge");
        NestedGenInnerData correction = negated(defect);
        psi = compose_nested(correction, psi);
        defect = compose_nested(correction, defect);
    }
    return flatten(psi);
}

bool gen_inner_equivalent(const GenInnerData& a, const GenInnerData& b) {
    require_same(a.params, b.params);
    return gen_inner_to_spec(a) == gen_inner_to_spec(b);
}

GenInnerData lift_gen_inner(const GenInnerData& data, int k) {
    std::vector<GenInnerPair> raw;
    for (const auto& [u, l] : data.pairs) raw.push_back({lift_class(u, k), l});
    return GenInnerData(GroupParams{data.params.rank, k}, std::move(raw));
}

Element class2_conjugator(const GenInnerData& data) {
    if (data.params.cls > 2) throw DomainError("class2_conjugator requires class at most 2");
    Element u = Element::identity(data.params);
    for (const auto& [v, lambda] : data.pairs) u = mul(u, pow(v, lambda));
    return u;
}

InnerSearch search_conjugator(const AutoSpec& f) {
    if (!is_ia(f)) throw DomainError("is_inner requires an IA automorphism");
    const auto& p = f.params;
    const int d = p.rank;
    std::vector<DerivedVector> target;
    for (int i = 0; i < d; ++i) {
        target.push_back(mul(inverse(Element::generator(p, i)), f.images[static_cast<std::size_t>(i)]).derived());
    }
    Element u = Element::identity(p);
    for (int layer = 1; layer < p.cls; ++layer) {
        // Unknowns are the weight-`layer` coordinates of the next factor v of u;
        // modulo gamma_{layer+2}, [a_i, u v] = [a_i, v] [a_i, u].
        std::vector<Element> unknowns;
        if (layer == 1) {
            for (int j = 0; j < d; ++j) unknowns.push_back(Element::generator(p, j));
        } else {
            for (const auto& c : enumerate_basics(p, layer)) {
                unknowns.push_back(Element::from_derived(p, DerivedVector::unit(c)));
            }
        }
        const auto block = static_cast<std::size_t>(basic_count(d, layer + 1).get_ui());
        std::vector<IntVector> columns;
        for (const auto& v : unknowns) {
            IntVector col;
            for (int i = 0; i < d; ++i) {
                auto coords = layer_coordinates(commutator(Element::generator(p, i), v).derived(), p, layer + 1);
                col.insert(col.end(), coords.begin(), coords.end());
            }
            columns.push_back(std::move(col));
        }
        IntVector rhs;
        std::vector<IntVector> defects;
        for (int i = 0; i < d; ++i) {
            DerivedVector rest = target[static_cast<std::size_t>(i)] -
                                 commutator(Element::generator(p, i), u).derived();
            auto coords = layer_coordinates(rest, p, layer + 1);
            rhs.insert(rhs.end(), coords.begin(), coords.end());
            defects.push_back(std::move(coords));
        }
        IntMatrix a = IntMatrix::from_columns(columns, block * static_cast<std::size_t>(d));
        SolveResult sol = integer_solve(a, rhs);
        if (!sol.feasible()) return {std::nullopt, layer + 1, sol.certificate, std::move(defects)};
        Element v = Element::identity(p);
        for (std::size_t j = 0; j < unknowns.size(); ++j) {
            const Integer& x = sol.solution->particular[j];
            if (x != 0) v = mul(v, pow(unknowns[j], x));
        }
        u = mul(u, v);
    }
    for (int i = 0; i < d; ++i) {
        if (commutator(Element::generator(p, i), u).derived() != target[static_cast<std::size_t>(i)]) {
            throw std::logic_error("conjugator search produced an inconsistent solution");
        }
    }
    return {u, 0, std::nullopt, {}};
}

std::optional<Element> is_inner(const AutoSpec& f) { return search_conjugator(f).conjugator; }

Element apply_poly_auto(const PolyAutoData& data, const Element& x) {
    require_same(data.params, x.params());
    Element r = Element::identity(x.params());
    for (const auto& [u, eps] : data.pairs) {
        require_same(data.params, u.params());
        r = mul(r, mul(mul(inverse(u), pow(x, eps)), u));
    }
    return r;
}

Integer epsilon_sum(const PolyAutoData& data) {
    Integer s = 0;
    for (const auto& pr : data.pairs) s += pr.eps;
    return s;
}

PolyAutoData gen_inner_to_poly(const GenInnerData& data) {
    const auto& p = data.params;
    const Element one = Element::identity(p);
    PolyAutoData out{p, {{one, 1}}};
    for (const auto& [u, lambda] : data.pairs) {
        for (Integer n = 0; n < abs(lambda); ++n) {
            if (lambda > 0) {
                out.pairs.push_back({one, -1});
                out.pairs.push_back({u, 1});
            } else {
                out.pairs.push_back({u, -1});
                out.pairs.push_back({one, 1});
            }
        }
    }
    return out;
}

}  // namespace mnp
