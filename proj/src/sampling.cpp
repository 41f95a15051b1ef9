#include "mnp/sampling.hpp"

namespace mnp {

long Sampler::uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(rng_() % span);
}

Word Sampler::word(const GroupParams& params, int max_length, int max_exp) {
    Word w;
    const long length = uniform(0, max_length);
    for (long i = 0; i < length; ++i) {
        long e = uniform(1, max_exp);
        if (coin()) e = -e;
        w.push_back(static_cast<int>(uniform(0, params.rank - 1)), e);
    }
    return w;
}

Element Sampler::element(const GroupParams& params, int max_length) {
    return collect(word(params, max_length), params);
}

Element Sampler::derived_element(const GroupParams& params) {
    Element t = Element::identity(params);
    const long n = uniform(1, 2);
    for (long i = 0; i < n; ++i) t = mul(t, commutator(element(params, 3), element(params, 3)));
    return t;
}

GenInnerData Sampler::gen_inner(const GroupParams& params, int max_pairs, int max_lambda) {
    std::vector<GenInnerPair> raw;
    const long n = uniform(1, max_pairs);
    for (long i = 0; i < n; ++i) {
        long l = uniform(1, max_lambda);
        if (coin()) l = -l;
        raw.push_back({element(params, 3), l});
    }
    return GenInnerData(params, std::move(raw));
}

NestedGenInnerData Sampler::nested(const GroupParams& params, int max_terms, int max_tail) {
    NestedGenInnerData out{params, {}};
    const long n = uniform(1, max_terms);
    for (long i = 0; i < n; ++i) {
        NestedTerm term;
        const long len = uniform(1, max_tail);
        for (long j = 0; j < len; ++j) term.tail.push_back(element(params, 3));
        long e = uniform(1, 3);
        term.eta = coin() ? e : -e;
        out.terms.push_back(std::move(term));
    }
    return out;
}

AutoSpec Sampler::ia_spec(const GroupParams& params) {
    AutoSpec f{params, {}};
    for (int i = 0; i < params.rank; ++i) {
        Element img = Element::generator(params, i);
        if (coin()) img = mul(img, derived_element(params));
        f.images.push_back(std::move(img));
    }
    return f;
}

}  // namespace mnp
