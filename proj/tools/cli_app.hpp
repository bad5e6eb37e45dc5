#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bredon/bredon.hpp"
#include "bredon/finite_oracle.hpp"
#include "bredon/fox_calculus.hpp"
#include "bredon/hempel.hpp"
#include "bredon/json.hpp"
#include "bredon/presentation.hpp"

namespace bredon::cli {

using json::Json;

struct Input {
    std::string inline_text;
    std::string path;

    std::string read() const {
        if (!inline_text.empty() && !path.empty())
            throw usage_error("usage", "use either --in or --file, not both");
        if (!path.empty()) {
            std::ifstream f(path);
            if (!f)
                throw usage_error("io-error", "cannot read '" + path + "'");
            std::ostringstream ss;
            ss << f.rdbuf();
            return ss.str();
        }
        if (inline_text.empty())
            throw usage_error("usage", "an input is required (--in or --file)");
        return inline_text;
    }
};

struct Options {
    Input input;
    std::string format = "json";
    bool assert_aspherical = false;
    std::string h0_interpretation = "bredon";
    std::vector<std::string> torsion;
    std::size_t relator = 0;
    std::int64_t n = 0;
    std::string ha, hb;
    int degree = 0;
};

inline Json with_schema(Json payload) {
    Json out{{"schema", json::kSchema}};
    for (auto& [k, v] : payload.items())
        out[k] = v;
    return out;
}

/// Reads the presentation and applies "--torsion <rel>=<order>" declarations.
inline Presentation load_presentation(const Options& o) {
    Presentation p = parse_presentation(o.input.read());
    if (o.torsion.empty())
        return p;
    std::vector<DeclaredTorsion> declared = p.declared_torsion();
    for (const std::string& entry : o.torsion) {
        const auto eq = entry.find('=');
        DeclaredTorsion d;
        try {
            if (eq == std::string::npos)
                throw std::invalid_argument(entry);
            std::size_t used = 0;
            d.relator = std::stoul(entry.substr(0, eq), &used);
            if (used != eq)
                throw std::invalid_argument(entry);
            d.order = std::stoll(entry.substr(eq + 1), &used);
            if (used != entry.size() - eq - 1)
                throw std::invalid_argument(entry);
        } catch (const std::exception&) {
            throw usage_error("usage", "--torsion expects <rel>=<order>, got '" + entry + "'");
        }
        declared.push_back(d);
    }
    return Presentation(p.alphabet(), p.relators(), std::move(declared));
}

inline std::string group_line(const char* label, const AbelianGroupInvariants& g) {
    return std::string(label) + " = " + g.to_string() + "\n";
}

inline void emit(std::ostream& out, const Options& o, const Json& payload, const std::string& text) {
    if (o.format == "json")
        out << with_schema(payload).dump() << "\n";
    else
        out << text;
}

inline std::string bredon_text(const BredonResult& b) {
    std::string t = group_line("H0", b.h0) + group_line("H1", b.h1);
    t += b.h2 ? group_line("H2", *b.h2) : std::string("H2 = H2(B_G;Z), not computed\n");
    t += "higher: " + to_string(b.higher) + "\n";
    t += "aspherical source: " + to_string(b.source) + "\n";
    for (const auto& n : b.notes)
        t += "note: " + n + "\n";
    return t;
}

inline void run_parse(const Options& o, std::ostream& out) {
    const Presentation p = load_presentation(o);
    emit(out, o, json::presentation(p), p.to_string() + "\n");
}

inline void run_fox(const Options& o, std::ostream& out) {
    const Presentation p = load_presentation(o);
    Json rel = Json::array();
    std::string text;
    for (const Word& r : p.relators()) {
        Json derivs = Json::object();
        Json sums = Json::array();
        for (std::size_t i = 0; i < p.alphabet()->size(); ++i) {
            const auto& name = p.alphabet()->names()[i];
            const FreeRingElement d = fox_derivative(r, GeneratorId{i});
            derivs[name] = d.to_string();
            sums.push_back(json::integer(augment(d)));
            text += "d(" + r.to_string() + ")/d" + name + " = " + d.to_string() + "\n";
        }
        rel.push_back(Json{{"relator", r.to_string()}, {"derivatives", derivs}, {"augmented", sums}});
    }
    emit(out, o, Json{{"relators", rel}}, text);
}

inline void run_root(const Options& o, std::ostream& out) {
    const Presentation p = load_presentation(o);
    if (o.relator >= p.relators().size())
        throw usage_error("usage", "--relator " + std::to_string(o.relator) + " is out of range");
    const RootResult rr = root(p.relators()[o.relator]);
    emit(out, o, Json{{"root", rr.root.to_string()}, {"log", rr.log}},
         "root = " + rr.root.to_string() + "\nlog = " + std::to_string(rr.log) + "\n");
}

inline void run_snf(const Options& o, std::ostream& out) {
    Json in;
    try {
        in = Json::parse(o.input.read());
    } catch (const nlohmann::json::exception& e) {
        throw usage_error("invalid-json", e.what());
    }
    const IntMatrix m = json::parse_matrix(in);
    const auto diag = smith_diagonal(m);
    Json d = Json::array();
    std::size_t r = 0;
    std::string text = "D =";
    for (const Integer& v : diag) {
        d.push_back(json::integer(v));
        text += " " + v.get_str();
        r += v != 0 ? 1 : 0;
    }
    emit(out, o, Json{{"D", d}, {"rank", r}}, text + "\nrank = " + std::to_string(r) + "\n");
}

struct HempelInput {
    Presentation presentation;
    HempelContext ctx;
    Word r;
};

/// Presentation of the form <x, y, z.. | [x,y]u, r>.
inline HempelInput load_hempel(const Options& o) {
    Presentation p = load_presentation(o);
    if (p.relators().size() != 2)
        throw domain_error("not-hempel-form",
                           "not a Hempel-form presentation: expected exactly two relators [x,y]u, r");
    HempelContext ctx = HempelContext::from_surface_relator(p.relators()[0]);
    Word r = p.relators()[1];
    return {std::move(p), std::move(ctx), std::move(r)};
}

inline void run_hempel_check(const Options& o, std::ostream& out) {
    const auto [p, ctx, r] = load_hempel(o);
    const HempelReport rep = check_hempel(r, ctx);
    std::string text;
    auto line = [&](const char* name, bool ok, const std::string& detail) {
        text += std::string(name) + ": " + (ok ? "yes" : "no") + " (" + detail + ")\n";
    };
    line("H1", rep.h1, rep.h1_detail);
    line("H2", rep.h2, rep.h2_detail);
    line("H3", rep.h3, rep.h3_detail);
    line("H4", rep.h4, rep.h4_detail);
    if (rep.nu)
        text += "nu = " + std::to_string(*rep.nu) + "\n";
    text += std::string("Hempel relator: ") + (rep.passes() ? "yes" : "no") + "\n";
    emit(out, o, json::hempel_report(rep, ctx), text);
}

inline void run_hnn(const Options& o, std::ostream& out) {
    const auto [p, ctx, r] = load_hempel(o);
    const HnnPresentation h = build_hnn(r, ctx);
    Json payload = json::hnn(h);
    const bool roundtrip = hnn_roundtrip_check(h, p);
    payload["roundtrip"] = roundtrip;
    std::string text = h.full().to_string() + "\n";
    emit(out, o, payload, text);
}

inline H0Interpretation interpretation(const Options& o) {
    if (o.h0_interpretation == "bredon")
        return H0Interpretation::BredonH0;
    return H0Interpretation::LiteralRcG;
}

inline void run_bredon(const Options& o, std::ostream& out) {
    const Presentation p = load_presentation(o);
    const BredonResult b = bredon_full(p, {o.assert_aspherical});
    emit(out, o, json::bredon(b), bredon_text(b));
}

inline void run_ktheory(const Options& o, std::ostream& out) {
    const Presentation p = load_presentation(o);
    const BredonResult b = bredon_full(p, {o.assert_aspherical});
    const KTheoryResult k = ktheory(b, interpretation(o));
    emit(out, o, json::ktheory(b, k),
         bredon_text(b) + group_line("K0", k.k0) + group_line("K1", k.k1) +
             "h0 interpretation: " + to_string(k.h0_interpretation) + "\n");
}

inline void run_oracle(const Options& o, std::ostream& out) {
    const CyclicResolutionReport rep = cyclic_resolution_report(o.n);
    const auto homology = bredon_homology_oracle(o.n);
    auto a = Alphabet::make({"x"});
    const BredonResult b = bredon_full(Presentation(a, {Word::generator(a, GeneratorId{0}, o.n)}));
    const bool matches = b.h2 && homology[0] == b.h0 && homology[1] == b.h1 && homology[2] == *b.h2;
    Json h = Json::array();
    for (const auto& g : homology)
        h.push_back(json::group(g));
    Json payload{{"n", o.n},
                 {"characters", character_count(o.n)},
                 {"relation_module", json::exactness(rep.relation_module)},
                 {"subdivided", json::exactness(rep.subdivided)},
                 {"bredon_homology", h},
                 {"matches_pipeline", matches},
                 {"pass", rep.exact() && matches}};
    std::string text;
    for (const auto* r : {&rep.relation_module, &rep.subdivided}) {
        text += r->complex + ": " + (r->exact() ? "exact" : "NOT exact") + "\n";
        for (const auto& s : r->stages)
            text += "  " + s.module + ": dim " + std::to_string(s.dimension) + ", ker " +
                    std::to_string(s.kernel_rank) + ", im " + std::to_string(s.image_rank) +
                    (s.exact ? "" : "  <-- fails") + "\n";
    }
    for (std::size_t i = 0; i < homology.size(); ++i)
        text += "H" + std::to_string(i) + " = " + homology[i].to_string() + "\n";
    text += std::string("pipeline agreement: ") + (matches ? "yes" : "no") + "\n";
    text += std::string(rep.exact() && matches ? "PASS" : "FAIL") + "\n";
    emit(out, o, payload, text);
    if (!(rep.exact() && matches))
        throw domain_error("oracle-failed", "finite oracle check failed for n = " + std::to_string(o.n));
}

inline std::vector<AbelianGroupInvariants> parse_group_list(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw usage_error("invalid-json", e.what());
    }
    if (!j.is_array())
        throw usage_error("invalid-json", "expected a JSON array of groups indexed by degree");
    std::vector<AbelianGroupInvariants> out;
    for (const auto& g : j)
        out.push_back(json::parse_group(g));
    return out;
}

inline void run_combinator(const Options& o, std::ostream& out) {
    const auto ha = parse_group_list(o.ha);
    const auto hb = parse_group_list(o.hb);
    const AbelianGroupInvariants g = one_relator_product_homology(ha, hb, o.degree);
    emit(out, o, Json{{"degree", o.degree}, {"H", json::group(g)}},
         "H" + std::to_string(o.degree) + " = " + g.to_string() + "\n");
}

/// Exit status: 0 success, 1 domain error, 2 usage or parse error.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bredon homology and K-groups of finitely presented groups"};
    app.require_subcommand(1, 1);
    Options o;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("--in", o.input.inline_text, "input given inline");
        sub->add_option("--file", o.input.path, "input file");
        sub->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };
    auto add_torsion = [&](CLI::App* sub) {
        sub->add_option("--torsion", o.torsion, "declared torsion <rel>=<order> (repeatable)");
    };

    auto* parse = app.add_subcommand("parse", "parse and print a presentation");
    add_input(parse);
    add_torsion(parse);
    auto* fox = app.add_subcommand("fox", "Fox derivatives of every relator");
    add_input(fox);
    auto* rootc = app.add_subcommand("root", "root and logarithm of a relator");
    add_input(rootc);
    rootc->add_option("--relator", o.relator, "relator index (default 0)");
    auto* snf = app.add_subcommand("snf", "Smith normal form of a JSON matrix");
    add_input(snf);
    auto* hc = app.add_subcommand("hempel-check", "check the Hempel conditions for <..|[x,y]u, r>");
    add_input(hc);
    auto* hnn = app.add_subcommand("hnn", "HNN decomposition of a Hempel presentation");
    add_input(hnn);
    auto* bredon = app.add_subcommand("bredon", "Bredon homology H0, H1, H2");
    add_input(bredon);
    add_torsion(bredon);
    bredon->add_flag("--assert-aspherical", o.assert_aspherical, "treat the presentation as aspherical");
    auto* kt = app.add_subcommand("ktheory", "K-groups K0, K1 of the proper classifying space");
    add_input(kt);
    add_torsion(kt);
    kt->add_flag("--assert-aspherical", o.assert_aspherical, "treat the presentation as aspherical");
    kt->add_option("--h0-interpretation", o.h0_interpretation, "degree-0 term of K0")
        ->check(CLI::IsMember({"bredon", "literal"}));
    auto* oracle = app.add_subcommand("oracle", "brute-force check over <x | x^n>");
    oracle->add_option("--n", o.n, "cyclic order")->required()->check(CLI::Range(2, 4096));
    oracle->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    auto* comb = app.add_subcommand("combinator", "H_i of a one-relator product, i > 2");
    comb->add_option("--ha", o.ha, "JSON list of H_i(A) by degree")->required();
    comb->add_option("--hb", o.hb, "JSON list of H_i(B) by degree")->required();
    comb->add_option("--degree", o.degree, "degree i > 2")->required();
    comb->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error[usage]: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*parse) run_parse(o, out);
        else if (*fox) run_fox(o, out);
        else if (*rootc) run_root(o, out);
        else if (*snf) run_snf(o, out);
        else if (*hc) run_hempel_check(o, out);
        else if (*hnn) run_hnn(o, out);
        else if (*bredon) run_bredon(o, out);
        else if (*kt) run_ktheory(o, out);
        else if (*oracle) run_oracle(o, out);
        else if (*comb) run_combinator(o, out);
    } catch (const Error& e) {
        err << "error[" << e.code() << "]: " << e.what() << "\n";
        return e.kind() == ErrorKind::Usage ? 2 : 1;
    }
    return 0;
}

} // namespace bredon::cli
