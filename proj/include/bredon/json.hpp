#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bredon/bredon.hpp"
#include "bredon/finite_oracle.hpp"
#include "bredon/hempel.hpp"
#include "bredon/int_linalg.hpp"
#include "bredon/presentation.hpp"

namespace bredon::json {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "bredon-toolkit/1";

/// Integers that fit a machine word are emitted as numbers, larger ones as
/// decimal strings.
inline Json integer(const Integer& v) {
    if (v.fits_slong_p())
        return v.get_si();
    return v.get_str();
}

inline Integer to_integer(const Json& j) {
    if (j.is_number_integer())
        return Integer(j.get<long>());
    if (j.is_string()) {
        Integer v;
        if (v.set_str(j.get<std::string>(), 10) != 0)
            throw usage_error("invalid-json", "not an integer: " + j.dump());
        return v;
    }
    throw usage_error("invalid-json", "not an integer: " + j.dump());
}

inline Json group(const AbelianGroupInvariants& g) {
    Json t = Json::array();
    for (const Integer& d : g.torsion)
        t.push_back(integer(d));
    return Json{{"rank", g.rank}, {"torsion", t}};
}

/// Accepts {"rank": r, "torsion": [...]} with torsion in any order; the result
/// is renormalized to invariant factors.
inline AbelianGroupInvariants parse_group(const Json& j) {
    if (!j.is_object() || !j.contains("rank") || !j["rank"].is_number_unsigned())
        throw usage_error("invalid-json", "expected {\"rank\": r, \"torsion\": [...]}");
    std::vector<Integer> orders;
    if (j.contains("torsion")) {
        if (!j["torsion"].is_array())
            throw usage_error("invalid-json", "torsion must be an array");
        for (const auto& d : j["torsion"]) {
            Integer v = to_integer(d);
            if (v < 1)
                throw usage_error("invalid-json", "torsion orders must be positive");
            orders.push_back(v);
        }
    }
    AbelianGroupInvariants g = from_cyclic_orders(orders);
    g.rank += j["rank"].get<std::size_t>();
    return g;
}

inline IntMatrix parse_matrix(const Json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries") ||
        !j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned() || !j["entries"].is_array())
        throw usage_error("invalid-json", "expected {\"rows\": m, \"cols\": n, \"entries\": [...]}");
    std::vector<Integer> entries;
    for (const auto& e : j["entries"])
        entries.push_back(to_integer(e));
    return IntMatrix(j["rows"].get<std::size_t>(), j["cols"].get<std::size_t>(), std::move(entries));
}

inline Json matrix(const IntMatrix& m) {
    Json e = Json::array();
    for (const Integer& v : m.entries())
        e.push_back(integer(v));
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", e}};
}

inline Json presentation(const Presentation& p) {
    Json rel = Json::array();
    for (const Word& r : p.relators())
        rel.push_back(r.to_string());
    Json declared = Json::array();
    for (const DeclaredTorsion& d : p.declared_torsion())
        declared.push_back(Json{{"relator", d.relator}, {"order", d.order}});
    return Json{{"generators", p.alphabet()->names()},
                {"relators", rel},
                {"torsion_mode",
                 p.torsion_mode() == TorsionMode::Declared ? "DECLARED" : "DERIVE_FROM_ROOTS"},
                {"declared_torsion", declared},
                {"text", p.to_string()}};
}

inline Json expression(const X1Expression& e, const HempelContext& ctx) {
    Json letters = Json::array();
    for (const auto& l : e.letters()) {
        const GeneratorId g = l.base == BasisLetter::Base::X ? ctx.x() : ctx.z()[l.slot];
        letters.push_back(Json{{"generator", ctx.alphabet()->name(g)}, {"level", l.level}, {"sign", l.sign}});
    }
    return Json{{"text", e.to_string(ctx)}, {"letters", letters}};
}

inline Json hempel_report(const HempelReport& r, const HempelContext& ctx) {
    auto condition = [](bool ok, const std::string& detail) {
        return Json{{"holds", ok}, {"detail", detail}};
    };
    Json out{{"hempel", r.passes()},
             {"H1", condition(r.h1, r.h1_detail)},
             {"H2", condition(r.h2, r.h2_detail)},
             {"H3", condition(r.h3, r.h3_detail)},
             {"H4", condition(r.h4, r.h4_detail)},
             {"nu", r.nu ? Json(*r.nu) : Json(nullptr)}};
    out["expression"] = r.expression ? expression(*r.expression, ctx) : Json(nullptr);
    return out;
}

inline Json hnn(const HnnPresentation& h) {
    Json conj = Json::array();
    for (const Word& w : h.conjugation_relators)
        conj.push_back(w.to_string());
    return Json{{"nu", h.nu},
                {"base", presentation(h.base)},
                {"stable_letter", h.alphabet->name(h.stable_letter)},
                {"conjugation_relators", conj},
                {"magnus", Json{{"lower_side", h.magnus.lower_side},
                                {"upper_side", h.magnus.upper_side},
                                {"holds", h.magnus.holds()}}},
                {"presentation", presentation(h.full())}};
}

inline Json torsion(const std::vector<TorsionDatum>& data) {
    Json out = Json::array();
    for (const TorsionDatum& t : data)
        out.push_back(Json{{"relator", t.relator_index}, {"root", t.root.to_string()}, {"order", t.order}});
    return out;
}

inline Json bredon(const BredonResult& b) {
    return Json{{"H0", group(b.h0)},
                {"H1", group(b.h1)},
                {"H2", b.h2 ? group(*b.h2) : Json(nullptr)},
                {"higher", to_string(b.higher)},
                {"aspherical_source", to_string(b.source)},
                {"torsion_data", torsion(b.torsion)},
                {"notes", b.notes}};
}

inline Json ktheory(const BredonResult& b, const KTheoryResult& k) {
    Json out = bredon(b);
    out["K0"] = group(k.k0);
    out["K1"] = group(k.k1);
    out["h0_interpretation"] = to_string(k.h0_interpretation);
    return out;
}

inline Json exactness(const ExactnessReport& r) {
    Json stages = Json::array();
    for (const StageReport& s : r.stages)
        stages.push_back(Json{{"module", s.module},
                              {"dimension", s.dimension},
                              {"kernel_rank", s.kernel_rank},
                              {"image_rank", s.image_rank},
                              {"composite_zero", s.composite_zero},
                              {"image_saturated", s.image_saturated},
                              {"exact", s.exact}});
    return Json{{"complex", r.complex}, {"exact", r.exact()}, {"stages", stages}};
}

} // namespace bredon::json
