#include "mnp/verify.hpp"

#include "mnp/json_io.hpp"
#include "mnp/normality.hpp"
#include "mnp/sampling.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace mnp {

bool VerifyReport::pass() const {
    for (const auto& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

std::string VerifyReport::to_text() const {
    std::ostringstream out;
    out << "suite " << suite << " (rank " << params.rank << ", class " << params.cls << ", seed " << seed << ")\n";
    std::size_t passed = 0;
    for (const auto& c : checks) {
        passed += c.pass ? 1 : 0;
        out << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "\n"
            << "        expected: " << c.expected << "\n"
            << "        computed: " << c.computed << "\n";
    }
    out << "result: " << (pass() ? "PASS" : "FAIL") << " (" << passed << "/" << checks.size() << ")\n";
    return out.str();
}

std::string VerifyReport::to_json() const {
    Json checks_json = Json::array();
    for (const auto& c : checks) {
        checks_json.push_back({{"name", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}});
    }
    Json j = {{"suite", suite}, {"rank", params.rank}, {"class", params.cls},
              {"seed", seed},   {"checks", checks_json}, {"pass", pass()}};
    return j.dump(2) + "\n";
}

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> suites = {"section2-ia", "prop14", "thm21", "cor23",
                                                    "lemma31",     "lemma32", "class2"};
    return suites;
}

GroupParams default_suite_params(const std::string& suite) {
    if (suite == "section2-ia") return {3, 5};
    if (suite == "class2") return {2, 2};
    return {2, 3};
}

namespace {

CheckResult equality_check(std::string name, const Element& expected, const Element& computed) {
    return {std::move(name), print_element(expected), print_element(computed), expected == computed};
}

// Runs `trial` `n` times and records "passed/n".
CheckResult count_check(std::string name, int n, const std::function<bool()>& trial) {
    int ok = 0;
    for (int i = 0; i < n; ++i) ok += trial() ? 1 : 0;
    std::string expected = std::to_string(n) + "/" + std::to_string(n);
    return {std::move(name), expected, std::to_string(ok) + "/" + std::to_string(n), ok == n};
}

void require_rank2(const GroupParams& p, const std::string& suite) {
    if (p.rank < 2) throw DomainError("suite " + suite + " requires rank at least 2");
}

std::vector<CheckResult> golden_ia(const GroupParams& p) {
    if (!(p == GroupParams{3, 5})) throw DomainError("suite section2-ia is defined for rank 3, class 5");
    auto e = [&p](const char* text) { return parse_element(text, p); };
    AutoSpec f = AutoSpec::from_images(p, {e("a [a,b]"), e("b"), e("c")});
    AutoSpec g = AutoSpec::from_images(p, {e("a"), e("b [b,c]"), e("c")});
    AutoSpec h = AutoSpec::from_images(p, {e("a"), e("b"), e("c [c,a]")});
    AutoSpec fg = aut_commutator(f, g);
    AutoSpec fh = aut_commutator(f, h);
    std::vector<CheckResult> out;
    out.push_back({"f, g, h are IA", "true", (is_ia(f) && is_ia(g) && is_ia(h)) ? "true" : "false",
                   is_ia(f) && is_ia(g) && is_ia(h)});
    out.push_back(equality_check("[f,g](a) = a[c^-1,b,a]", e("a [c^-1,b,a]"), fg.images[0]));
    out.push_back(equality_check("[f,g](b) = b", e("b"), fg.images[1]));
    out.push_back(equality_check("[f,g](c) = c", e("c"), fg.images[2]));
    out.push_back(equality_check("[f,h](a) = a", e("a"), fh.images[0]));
    out.push_back(equality_check("[f,h](b) = b", e("b"), fh.images[1]));
    out.push_back(equality_check("[f,h](c) = c[a,b^-1,c]", e("c [a,b^-1,c]"), fh.images[2]));
    out.push_back(equality_check("[f,h]o[f,g](c) = c[a,b^-1,c]", e("c [a,b^-1,c]"), compose_endo(fh, fg).images[2]));
    out.push_back(equality_check("[f,g]o[f,h](c) = c[a,b^-1,c][c,b,a,b,c]", e("c [a,b^-1,c] [c,b,a,b,c]"),
                                 compose_endo(fg, fh).images[2]));
    AutoSpec double_comm = aut_commutator(fg, fh);
    bool nontrivial = !(double_comm == AutoSpec::identity(p));
    std::string images;
    for (const auto& x : double_comm.images) images += (images.empty() ? "" : ", ") + print_element(x);
    out.push_back({"[[f,g],[f,h]] is not the identity", "not identity", images, nontrivial});
    return out;
}

std::vector<CheckResult> prop14(const GroupParams& p, Sampler& rng, int n) {
    std::vector<CheckResult> out;
    out.push_back(count_check("closed-form composition equals functional composition", n, [&] {
        GenInnerData phi = rng.gen_inner(p), psi = rng.gen_inner(p);
        return gen_inner_to_spec(compose_gen_inner(psi, phi)) ==
               compose_endo(gen_inner_to_spec(psi), gen_inner_to_spec(phi));
    }));
    out.push_back(count_check("invert(phi) o phi and phi o invert(phi) are the identity", n, [&] {
        GenInnerData phi = rng.gen_inner(p);
        GenInnerData inv = invert_gen_inner(phi);
        const AutoSpec id = AutoSpec::identity(p);
        return gen_inner_to_spec(compose_gen_inner(inv, phi)) == id &&
               gen_inner_to_spec(compose_gen_inner(phi, inv)) == id;
    }));
    out.push_back(count_check("composition is associative", n, [&] {
        GenInnerData a = rng.gen_inner(p, 2), b = rng.gen_inner(p, 2), c = rng.gen_inner(p, 2);
        return gen_inner_equivalent(compose_gen_inner(compose_gen_inner(a, b), c),
                                    compose_gen_inner(a, compose_gen_inner(b, c)));
    }));
    out.push_back(count_check("flattened nested map equals the nested map", n, [&] {
        NestedGenInnerData nested = rng.nested(p);
        GenInnerData flat = flatten(nested);
        for (int i = 0; i < p.rank; ++i) {
            Element x = Element::generator(p, i);
            if (apply_gen_inner(flat, x) != apply_nested(nested, x)) return false;
        }
        return true;
    }));
    return out;
}

std::vector<CheckResult> thm21(const GroupParams& p, Sampler& rng, int n) {
    require_rank2(p, "thm21");
    std::vector<CheckResult> out;
    auto identity_result = synthesize_gen_inner(AutoSpec::identity(p));
    bool empty = std::holds_alternative<GenInnerData>(identity_result) && std::get<GenInnerData>(identity_result).empty();
    out.push_back({"identity synthesizes to empty data", "empty", empty ? "empty" : "non-empty", empty});
    out.push_back(count_check("generalized inner maps given by images are recovered", n, [&] {
        AutoSpec f = gen_inner_to_spec(rng.gen_inner(p));
        auto r = synthesize_gen_inner(f);
        return std::holds_alternative<GenInnerData>(r) && gen_inner_to_spec(std::get<GenInnerData>(r)) == f;
    }));
    if (p.cls >= 3) {
        NestedGenInnerData aa{p, {{{Element::generator(p, 0), Element::generator(p, 0)}, 1}}};
        AutoSpec f = gen_inner_to_spec(flatten(aa));
        auto r = synthesize_gen_inner(f);
        bool ok = std::holds_alternative<GenInnerData>(r) && gen_inner_to_spec(std::get<GenInnerData>(r)) == f;
        out.push_back({"x -> x[x,a,a] is synthesized", "generalized inner", ok ? "generalized inner" : "refused", ok});
    }
    if (p.rank >= 3 && p.cls >= 2) {
        auto e = [&p](const char* text) { return parse_element(text, p); };
        std::vector<Element> images{e("a [a,b]")};
        for (int i = 1; i < p.rank; ++i) images.push_back(Element::generator(p, i));
        AutoSpec f = AutoSpec::from_images(p, images);
        auto r = synthesize_gen_inner(f);
        std::string computed = "generalized inner";
        bool ok = false;
        if (auto* refusal = std::get_if<NotGeneralizedInner>(&r)) {
            computed = "refused at layer " + std::to_string(refusal->layer) + ", generator " +
                       generator_name(refusal->witness_generator, p.rank);
            ok = true;
        }
        out.push_back({"f(a) = a[a,b], f(b) = b, f(c) = c is refused", "refused", computed, ok});
    }
    return out;
}

std::vector<CheckResult> cor23(const GroupParams& p, Sampler& rng, int n) {
    std::vector<CheckResult> out;
    out.push_back(count_check("double commutator of generalized inner maps is the identity", n, [&] {
        AutoSpec f1 = gen_inner_to_spec(rng.gen_inner(p, 2)), f2 = gen_inner_to_spec(rng.gen_inner(p, 2));
        AutoSpec f3 = gen_inner_to_spec(rng.gen_inner(p, 2)), f4 = gen_inner_to_spec(rng.gen_inner(p, 2));
        return aut_commutator(aut_commutator(f1, f2), aut_commutator(f3, f4)) == AutoSpec::identity(p);
    }));
    return out;
}

std::vector<CheckResult> closure_checks(const GroupParams& p) {
    require_rank2(p, "lemma31");
    if (p.cls < 2) throw DomainError("suite lemma31 requires class at least 2");
    std::vector<CheckResult> out;
    const int k = p.cls;
    const Element a = Element::generator(p, 0);
    const Element b = Element::generator(p, 1);
    int total = 0, ok = 0;
    for (int t = -2; t <= 3; ++t) {
        const Element atb = mul(Element::generator(p, 0, t), b);
        // Tails of length k - 1 with a^t b at position `pos`, other entries over generators.
        for (int pos = 0; pos < k - 1; ++pos) {
            std::vector<int> idx(static_cast<std::size_t>(k - 2), 0);
            while (true) {
                auto build = [&](const Element& slot) {
                    std::vector<Element> xs{atb};
                    std::size_t q = 0;
                    for (int j = 0; j < k - 1; ++j) {
                        xs.push_back(j == pos ? slot : Element::generator(p, idx[q++]));
                    }
                    return left_normed(xs);
                };
                Element lhs = build(atb);
                Element rhs = mul(pow(build(a), t), build(b));
                ++total;
                ok += lhs == rhs ? 1 : 0;
                std::size_t q = idx.size();
                while (q > 0 && ++idx[q - 1] == p.rank) idx[--q] = 0;
                if (q == 0) break;
            }
        }
    }
    out.push_back({"[a^t b,..,a^t b,..] = [a^t b,..,a,..]^t [a^t b,..,b,..] for t in -2..3",
                   std::to_string(total) + "/" + std::to_string(total),
                   std::to_string(ok) + "/" + std::to_string(total), ok == total});

    std::vector<Element> bgens = lemma31_generators(0, 1, 0, p);
    std::vector<Element> chain{b};
    for (int j = 1; j < k; ++j) chain.push_back(a);
    auto member = closure_membership(left_normed(chain), bgens);
    out.push_back({"[b,a,...,a] lies in the normal closure of b", "member", member ? "member" : "none",
                   member.has_value()});
    if (p.rank >= 3) {
        std::vector<Element> cchain{Element::generator(p, 2)};
        for (int j = 1; j < k; ++j) cchain.push_back(a);
        auto none = closure_membership(left_normed(cchain), bgens);
        out.push_back({"[c,a,...,a] does not lie in the normal closure of b", "none", none ? "member" : "none",
                       !none.has_value()});
    }
    return out;
}

std::vector<CheckResult> rewrite_checks(const GroupParams& p, Sampler& rng, int n) {
    require_rank2(p, "lemma32");
    if (p.cls < 3) throw DomainError("suite lemma32 requires class at least 3");
    std::vector<CheckResult> out;
    for (int s = 0; s < p.rank; ++s) {
        auto cert = lemma32_independent(s, p);
        out.push_back({"independence for s = " + std::to_string(s), "rank " + std::to_string(cert.columns),
                       "rank " + std::to_string(cert.rank), cert.injective});
    }
    auto deltas = enumerate_deltas(p.rank, p.cls - 2);
    out.push_back(count_check("symbolic rewrite equals direct collection", n, [&] {
        const int s = static_cast<int>(rng.uniform(0, p.rank - 1));
        ExponentAssignment eps;
        Element direct = Element::identity(p);
        for (int i = 0; i < p.rank; ++i) {
            for (const auto& delta : deltas) {
                if (!rng.coin()) continue;
                Integer e = rng.uniform(-3, 3);
                eps[{i, delta}] = e;
                direct = mul(direct, pow(eval_delta_comm(Element::generator(p, s), Element::generator(p, i), delta), e));
            }
        }
        return lemma32_rewrite(eps, s, p) == gamma_layer(direct, p.cls);
    }));
    return out;
}

std::vector<CheckResult> class2(const GroupParams& p, Sampler& rng, int n) {
    if (p.cls != 2) throw DomainError("suite class2 requires class 2");
    std::vector<CheckResult> out;
    out.push_back(count_check("generalized inner map is conjugation by prod u_i^lambda_i", n, [&] {
        GenInnerData data = rng.gen_inner(p);
        Element u = class2_conjugator(data);
        for (int i = 0; i < p.rank; ++i) {
            Element x = Element::generator(p, i);
            if (apply_gen_inner(data, x) != mul(mul(inverse(u), x), u)) return false;
        }
        return true;
    }));
    // The class-3 separation example lives in rank 2, class 3 regardless of the suite parameters.
    const GroupParams q{2, 3};
    NestedGenInnerData aa{q, {{{Element::generator(q, 0), Element::generator(q, 0)}, 1}}};
    GenInnerData flat = flatten(aa);
    bool same = true;
    for (int i = 0; i < q.rank; ++i) {
        Element x = Element::generator(q, i);
        same = same && apply_gen_inner(flat, x) == apply_nested(aa, x);
    }
    std::string data_text;
    for (const auto& [u, l] : flat.pairs) data_text += "(" + print_element(u) + ", " + l.get_str() + ") ";
    out.push_back({"x -> x[x,a,a] flattens to generalized inner data (rank 2, class 3)", "extensionally equal",
                   data_text + (same ? "extensionally equal" : "differs"), same});
    auto inner = is_inner(gen_inner_to_spec(flat));
    out.push_back({"x -> x[x,a,a] is not inner (rank 2, class 3)", "none",
                   inner ? print_element(*inner) : "none", !inner.has_value()});
    return out;
}

}  // namespace

VerifyReport verify_paper(const std::string& suite, const VerifyConfig& config) {
    VerifyReport report;
    report.suite = suite;
    report.params = config.params ? *config.params : default_suite_params(suite);
    report.seed = config.seed;
    validate(report.params);
    Sampler rng(config.seed);
    const auto& p = report.params;
    const int n = config.samples;
    if (suite == "section2-ia") {
        report.checks = golden_ia(p);
    } else if (suite == "prop14") {
        report.checks = prop14(p, rng, n);
    } else if (suite == "thm21") {
        report.checks = thm21(p, rng, n);
    } else if (suite == "cor23") {
        report.checks = cor23(p, rng, n);
    } else if (suite == "lemma31") {
        report.checks = closure_checks(p);
    } else if (suite == "lemma32") {
        report.checks = rewrite_checks(p, rng, n);
    } else if (suite == "class2") {
        report.checks = class2(p, rng, n);
    } else {
        throw DomainError("unknown suite '" + suite + "'");
    }
    return report;
}

}  // namespace mnp
