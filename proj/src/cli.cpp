#include "mnp/cli.hpp"

#include "mnp/json_io.hpp"
#include "mnp/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

namespace mnp {

namespace {

struct Options {
    std::optional<int> rank;
    std::optional<int> cls;
    bool json = false;
    std::uint64_t seed = 1;
    int samples = 20;
    std::string suite;
    std::vector<std::string> inputs;
};

class Session {
public:
    Session(const Options& opts, std::istream& in, std::ostream& out) : opts_(opts), in_(in), out_(out) {}

    int run(const std::string& command);

private:
    std::optional<GroupParams> explicit_params() const {
        if (!opts_.rank && !opts_.cls) return std::nullopt;
        GroupParams p{opts_.rank.value_or(2), opts_.cls.value_or(3)};
        validate(p);
        return p;
    }
    GroupParams params() const { return explicit_params().value_or(GroupParams{2, 3}); }

    std::string read_source(const std::string& arg) {
        if (arg == "-") {
            if (stdin_used_) throw ParseError("stdin ('-') can be used for only one input");
            stdin_used_ = true;
            std::ostringstream buf;
            buf << in_.rdbuf();
            return buf.str();
        }
        std::error_code ec;
        if (!arg.empty() && arg.front() != '{' && std::filesystem::is_regular_file(arg, ec)) {
            std::ifstream file(arg);
            std::ostringstream buf;
            buf << file.rdbuf();
            return buf.str();
        }
        return arg;
    }

    static bool looks_like_json(const std::string& text) {
        auto pos = text.find_first_not_of(" \t\r\n");
        return pos != std::string::npos && text[pos] == '{';
    }

    static Json parse_json(const std::string& text) {
        try {
            return Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
        }
    }

    Element read_element(const std::string& arg) {
        std::string text = read_source(arg);
        if (looks_like_json(text)) return element_from_json(parse_json(text), explicit_params());
        while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
        return parse_element(text, params());
    }

    using AnyMap = std::variant<AutoSpec, GenInnerData, PolyAutoData>;

    AnyMap read_map(const std::string& arg) {
        std::string text = read_source(arg);
        if (!looks_like_json(text)) throw ParseError("expected a JSON map object");
        Json j = parse_json(text);
        auto params = explicit_params();
        if (j.contains("images")) return auto_spec_from_json(j, params);
        if (j.contains("pairs")) {
            const Json& pairs = j.at("pairs");
            bool poly = !pairs.empty() && pairs.front().contains("epsilon");
            if (poly) return poly_auto_from_json(j, params);
            return gen_inner_from_json(j, params);
        }
        throw ParseError("map JSON needs \"images\" or \"pairs\"");
    }

    static AutoSpec as_spec(const AnyMap& m) {
        if (auto* f = std::get_if<AutoSpec>(&m)) return *f;
        if (auto* g = std::get_if<GenInnerData>(&m)) return gen_inner_to_spec(*g);
        const auto& p = std::get<PolyAutoData>(m);
        AutoSpec f = AutoSpec::identity(p.params);
        for (int i = 0; i < p.params.rank; ++i) f.images[i] = apply_poly_auto(p, Element::generator(p.params, i));
        return f;
    }

    void emit(const Element& x) {
        if (opts_.json)
            out_ << element_to_json(x).dump() << "\n";
        else
            out_ << print_element(x) << "\n";
    }

    void emit(const AutoSpec& f) {
        if (opts_.json) {
            out_ << auto_spec_to_json(f).dump() << "\n";
            return;
        }
        for (int i = 0; i < f.params.rank; ++i)
            out_ << generator_name(i, f.params.rank) << " -> " << print_element(f.images[i]) << "\n";
    }

    void emit(const GenInnerData& g) {
        if (opts_.json) {
            out_ << gen_inner_to_json(g).dump() << "\n";
            return;
        }
        if (g.empty()) out_ << "identity\n";
        for (const auto& [u, lambda] : g.pairs) out_ << "(" << print_element(u) << ", " << lambda.get_str() << ")\n";
    }

    void need_inputs(std::size_t n, const char* usage) const {
        if (opts_.inputs.size() != n) throw CLI::ValidationError(std::string("usage: ") + usage);
    }

    int nf();
    int eq();
    int apply();
    int compose();
    int invert();
    int is_inner_cmd();
    int synthesize();
    int selftest();
    int verify();

    const Options& opts_;
    std::istream& in_;
    std::ostream& out_;
    bool stdin_used_ = false;
};

int Session::nf() {
    need_inputs(1, "nf <word|element-json|->");
    emit(read_element(opts_.inputs[0]));
    return kOk;
}

int Session::eq() {
    need_inputs(2, "eq <x> <y>");
    Element x = read_element(opts_.inputs[0]);
    Element y = read_element(opts_.inputs[1]);
    require_same(x.params(), y.params());
    bool same = x == y;
    if (opts_.json)
        out_ << Json{{"equal", same}}.dump() << "\n";
    else
        out_ << (same ? "equal" : "not equal") << "\n";
    return kOk;
}

int Session::apply() {
    need_inputs(2, "apply <map> <element>");
    AnyMap m = read_map(opts_.inputs[0]);
    AutoSpec f = as_spec(m);
    Element x = [&] {
        std::string text = read_source(opts_.inputs[1]);
        if (looks_like_json(text)) return element_from_json(parse_json(text), f.params);
        while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
        return parse_element(text, f.params);
    }();
    require_same(f.params, x.params());
    if (auto* g = std::get_if<GenInnerData>(&m))
        emit(apply_gen_inner(*g, x));
    else
        emit(apply_endo(f, x));
    return kOk;
}

int Session::compose() {
    need_inputs(2, "compose <outer-map> <inner-map>");
    AnyMap outer = read_map(opts_.inputs[0]);
    AnyMap inner = read_map(opts_.inputs[1]);
    auto* go = std::get_if<GenInnerData>(&outer);
    auto* gi = std::get_if<GenInnerData>(&inner);
    if (go && gi) {
        require_same(go->params, gi->params);
        emit(compose_gen_inner(*go, *gi));
        return kOk;
    }
    AutoSpec f = as_spec(outer), g = as_spec(inner);
    require_same(f.params, g.params);
    emit(compose_endo(f, g));
    return kOk;
}

int Session::invert() {
    need_inputs(1, "invert <map>");
    AnyMap m = read_map(opts_.inputs[0]);
    if (auto* g = std::get_if<GenInnerData>(&m)) {
        emit(invert_gen_inner(*g));
        return kOk;
    }
    AutoSpec f = as_spec(m);
    if (!is_ia(f)) throw DomainError("invert: only IA maps are supported for image specs (abelianization is not the identity)");
    emit(invert_ia(f));
    return kOk;
}

int Session::is_inner_cmd() {
    need_inputs(1, "is-inner <map>");
    AutoSpec f = as_spec(read_map(opts_.inputs[0]));
    if (!is_ia(f)) {
        if (opts_.json)
            out_ << Json{{"inner", false}, {"reason", "not IA"}}.dump() << "\n";
        else
            out_ << "not inner (not IA)\n";
        return kOk;
    }
    InnerSearch s = search_conjugator(f);
    if (opts_.json) {
        Json j = {{"inner", s.conjugator.has_value()}};
        if (s.conjugator)
            j["conjugator"] = element_to_json(*s.conjugator);
        else
            j["failed_layer"] = s.failed_layer;
        out_ << j.dump() << "\n";
    } else if (s.conjugator) {
        out_ << "inner: conjugation by " << print_element(*s.conjugator) << "\n";
    } else {
        out_ << "not inner (no conjugator at weight " << s.failed_layer << ")\n";
    }
    return kOk;
}

int Session::synthesize() {
    need_inputs(1, "synthesize <map>");
    AnyMap m = read_map(opts_.inputs[0]);
    SynthesisResult r = std::holds_alternative<PolyAutoData>(m) ? poly_to_gen_inner(std::get<PolyAutoData>(m))
                                                                 : synthesize_gen_inner(as_spec(m));
    if (auto* g = std::get_if<GenInnerData>(&r))
        out_ << gen_inner_to_json(*g).dump() << "\n";
    else
        out_ << refusal_to_json(std::get<NotGeneralizedInner>(r)).dump() << "\n";
    return kOk;
}

int Session::selftest() {
    need_inputs(0, "oracle-selftest [--rank d --class k]");
    SelfcheckReport r = kernel_selfcheck(params());
    if (opts_.json) {
        out_ << selfcheck_to_json(r).dump() << "\n";
    } else {
        out_ << (r.pass ? "PASS" : "FAIL") << " rank " << params().rank << " class " << params().cls << ": "
             << r.basics_checked << " basics, " << r.top_commutators_checked << " top commutators, "
             << r.witnesses_checked << " metabelian witnesses\n";
        for (const auto& f : r.failures) out_ << "  " << f << "\n";
    }
    return r.pass ? kOk : kVerification;
}

int Session::verify() {
    std::string suite = opts_.suite;
    if (suite.empty() && opts_.inputs.size() == 1) suite = opts_.inputs[0];
    if (suite.empty() || opts_.inputs.size() > 1) throw CLI::ValidationError("usage: verify-paper --suite <name>");
    const auto& known = verify_suites();
    if (std::find(known.begin(), known.end(), suite) == known.end())
        throw CLI::ValidationError("unknown suite '" + suite + "'");
    VerifyConfig config;
    config.params = explicit_params();
    if (config.params && !opts_.rank) config.params->rank = default_suite_params(suite).rank;
    if (config.params && !opts_.cls) config.params->cls = default_suite_params(suite).cls;
    config.seed = opts_.seed;
    config.samples = opts_.samples;
    VerifyReport report = verify_paper(suite, config);
    out_ << (opts_.json ? report.to_json() : report.to_text());
    return report.pass() ? kOk : kVerification;
}

int Session::run(const std::string& command) {
    if (command == "nf") return nf();
    if (command == "eq") return eq();
    if (command == "apply") return apply();
    if (command == "compose") return compose();
    if (command == "invert") return invert();
    if (command == "is-inner") return is_inner_cmd();
    if (command == "synthesize") return synthesize();
    if (command == "oracle-selftest") return selftest();
    return verify();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options opts;
    CLI::App app{"Free metabelian nilpotent groups: normal forms, automorphisms, normality"};
    app.name("mnp");
    app.require_subcommand(1);
    app.allow_extras();
    app.add_option("--rank", opts.rank, "number of generators d")->check(CLI::PositiveNumber);
    app.add_option("--class", opts.cls, "nilpotency class k")->check(CLI::PositiveNumber);
    app.add_flag("--json", opts.json, "JSON output");
    app.add_option("--seed", opts.seed, "random seed");
    app.add_option("--samples", opts.samples, "samples per property check")->check(CLI::PositiveNumber);

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"nf", "normal form of a word or element"},
        {"eq", "decide equality of two elements"},
        {"apply", "apply a map (images, gen-inner or polynomial data) to an element"},
        {"compose", "compose two maps (first argument applied last)"},
        {"invert", "invert generalized inner data or an IA map"},
        {"is-inner", "decide whether a map is an inner automorphism"},
        {"synthesize", "synthesize generalized inner data or a refusal certificate (JSON)"},
        {"oracle-selftest", "check the Magnus oracle kernel for the given rank and class"},
        {"verify-paper", "run a named verification suite"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->fallthrough();
        // Inputs are taken as raw extras: CLI11 would split bracketed words like "[b,a]" into vectors.
        sub->allow_extras();
        sub->footer("inputs: words, JSON, file paths, or '-' for stdin");
        if (name == "verify-paper") {
            std::string names;
            for (const auto& s : verify_suites()) names += (names.empty() ? "" : ", ") + s;
            sub->add_option("--suite", opts.suite, "one of: " + names);
        }
    }

    // CLI11 drops empty arguments; the empty word is the identity.
    std::vector<std::string> reversed;
    for (auto it = args.rbegin(); it != args.rend(); ++it) reversed.push_back(it->empty() ? "1" : *it);
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run 'mnp --help' for usage\n";
        return kUsage;
    }

    CLI::App* chosen = app.get_subcommands().front();
    std::string command = chosen->get_name();
    opts.inputs = chosen->remaining();
    if (opts.inputs.empty()) opts.inputs = app.remaining();
    for (const auto& a : opts.inputs) {
        if (a.size() > 2 && a.starts_with("--")) {
            err << "error: unknown option " << a << "\n";
            return kUsage;
        }
    }
    Session session(opts, in, out);
    try {
        return session.run(command);
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const Json::exception& e) {
        err << "parse error: malformed JSON input: " << e.what() << "\n";
        return kParse;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return kDomain;
    }
}

}  // namespace mnp
