#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bredon/finite_oracle.hpp"
#include "bredon/free_group.hpp"
#include "bredon/hempel.hpp"
#include "bredon/int_linalg.hpp"
#include "bredon/presentation.hpp"

namespace bredon {

/// G_r for one relator: the image of <root r>, of the given order. Order 1
/// marks a relator contributing no torsion.
struct TorsionDatum {
    std::size_t relator_index = 0;
    Word root;
    std::int64_t order = 1;
};

inline std::vector<TorsionDatum> torsion_data(const Presentation& p) {
    std::vector<TorsionDatum> out;
    for (std::size_t i = 0; i < p.relators().size(); ++i) {
        const RootResult rr = root(p.relators()[i]);
        std::int64_t order = 1;
        if (p.torsion_mode() == TorsionMode::DeriveFromRoots) {
            order = static_cast<std::int64_t>(rr.log);
        } else {
            for (const DeclaredTorsion& d : p.declared_torsion())
                if (d.relator == i)
                    order = d.order;
        }
        out.push_back({i, rr.root, order});
    }
    return out;
}

/// Product of R_C(G_r) over the non-trivial G_r; each R_C(Z/n) is Z^n as an
/// abelian group. Z when there is no torsion.
inline AbelianGroupInvariants bredon_h0(std::span<const TorsionDatum> data) {
    std::size_t rank = 0;
    for (const TorsionDatum& t : data)
        if (t.order > 1)
            rank += static_cast<std::size_t>(t.order);
    return AbelianGroupInvariants::free(rank == 0 ? 1 : rank);
}

/// (G / Tor G)_ab: abelianization of the root presentation, or of the
/// presentation with declared torsion generators killed.
inline AbelianGroupInvariants bredon_h1(const Presentation& p) {
    const Presentation quotient = p.torsion_mode() == TorsionMode::DeriveFromRoots
                                      ? root_presentation(p)
                                      : kill_torsion_presentation(p);
    return cokernel_invariants(exponent_matrix(quotient));
}

enum class AsphericalSource { None, Free, OneRelator, Hempel, UserAsserted };

inline std::string to_string(AsphericalSource s) {
    switch (s) {
    case AsphericalSource::None: return "none";
    case AsphericalSource::Free: return "free";
    case AsphericalSource::OneRelator: return "one-relator";
    case AsphericalSource::Hempel: return "hempel";
    case AsphericalSource::UserAsserted: return "user-asserted";
    }
    return "none";
}

/// True when the presentation is <x, y, z.. | [x,y]u, r> with r a Hempel relator.
inline bool is_hempel_presentation(const Presentation& p) {
    if (p.relators().size() != 2)
        return false;
    try {
        const auto ctx = HempelContext::from_surface_relator(p.relators()[0]);
        return check_hempel(p.relators()[1], ctx).passes();
    } catch (const Error&) {
        return false;
    }
}

/// One relator: Lyndon's identity theorem. Two relators: a verified Hempel
/// pair. Anything else only on explicit assertion.
inline AsphericalSource asphericity(const Presentation& p, bool user_asserted) {
    if (p.relators().empty())
        return AsphericalSource::Free;
    if (p.relators().size() == 1)
        return AsphericalSource::OneRelator;
    if (is_hempel_presentation(p))
        return AsphericalSource::Hempel;
    return user_asserted ? AsphericalSource::UserAsserted : AsphericalSource::None;
}

/// H_2 = kernel of the exponent-sum matrix (free abelian); nullopt when the
/// presentation is not known to be aspherical.
inline std::optional<AbelianGroupInvariants> bredon_h2(const Presentation& p,
                                                       AsphericalSource source) {
    if (source == AsphericalSource::None)
        return std::nullopt;
    return AbelianGroupInvariants::free(kernel_rank(exponent_matrix(p)));
}

enum class HigherHomology { AllZero, EqualsHBG };

inline std::string to_string(HigherHomology h) {
    return h == HigherHomology::AllZero ? "ALL_ZERO" : "EQUALS_H_BG";
}

struct BredonOptions {
    bool assert_aspherical = false;
};

struct BredonResult {
    AbelianGroupInvariants h0;
    AbelianGroupInvariants h1;
    std::optional<AbelianGroupInvariants> h2;
    HigherHomology higher = HigherHomology::EqualsHBG;
    AsphericalSource source = AsphericalSource::None;
    std::vector<TorsionDatum> torsion;
    std::vector<std::string> notes;
    std::optional<Integer> finite_cyclic_order; // |G| when G is visibly finite cyclic
};

inline constexpr const char* kHigherCaveat = "H_i = H_i(B_G;Z) for i >= 2, not computed";

inline BredonResult bredon_full(const Presentation& p, const BredonOptions& options = {}) {
    BredonResult out;
    out.torsion = torsion_data(p);
    out.h0 = bredon_h0(out.torsion);
    out.h1 = bredon_h1(p);
    out.source = asphericity(p, options.assert_aspherical);
    out.h2 = bredon_h2(p, out.source);
    out.higher = out.h2 ? HigherHomology::AllZero : HigherHomology::EqualsHBG;

    if (!out.h2)
        out.notes.push_back(kHigherCaveat);
    if (out.source == AsphericalSource::UserAsserted)
        out.notes.push_back("asphericity asserted by the user, not verified");
    if (out.source == AsphericalSource::None && p.torsion_mode() == TorsionMode::DeriveFromRoots)
        out.notes.push_back("asphericity not established; H0 and H1 assume the relator roots "
                            "give the maximal finite subgroups");
    for (std::size_t i = 0; i < out.torsion.size(); ++i)
        for (std::size_t j = i + 1; j < out.torsion.size(); ++j) {
            const auto& a = out.torsion[i];
            const auto& b = out.torsion[j];
            if (a.order > 1 && b.order > 1 &&
                (are_conjugate(a.root, b.root) || are_conjugate(a.root, invert(b.root))))
                out.notes.push_back("roots of relators " + std::to_string(i) + " and " +
                                    std::to_string(j) +
                                    " are conjugate in the free group; their finite subgroups "
                                    "may be counted twice");
        }

    if (p.alphabet()->size() == 1) {
        Integer g = 0;
        for (const Word& r : p.relators())
            g = gcd(g, Integer(static_cast<long>(exponent_sum(r, GeneratorId{0}))));
        if (g != 0)
            out.finite_cyclic_order = g;
    }
    return out;
}

/// Degree i > 2 of a one-relator product of A and B: H_i(A) + H_i(B).
inline AbelianGroupInvariants one_relator_product_homology(std::span<const AbelianGroupInvariants> ha,
                                                           std::span<const AbelianGroupInvariants> hb,
                                                           int degree) {
    if (degree <= 2)
        throw domain_error("invalid-degree",
                           "the one-relator product formula applies in degrees above 2");
    const auto at = [degree](std::span<const AbelianGroupInvariants> h) {
        const auto i = static_cast<std::size_t>(degree);
        return i < h.size() ? h[i] : AbelianGroupInvariants{};
    };
    return direct_sum(at(ha), at(hb));
}

enum class H0Interpretation { BredonH0, LiteralRcG };

inline std::string to_string(H0Interpretation i) {
    return i == H0Interpretation::BredonH0 ? "BREDON_H0" : "LITERAL_RC_G";
}

struct KTheoryResult {
    AbelianGroupInvariants k0;
    AbelianGroupInvariants k1;
    H0Interpretation h0_interpretation = H0Interpretation::BredonH0;
};

/// K_0 = (degree-0 term) + H_2 and K_1 = H_1 for a model of dimension at
/// most 2. The literal representation-ring reading is only computable when G
/// is finite cyclic, where R_C(G) = Z^|G|.
inline KTheoryResult ktheory(const BredonResult& b,
                             H0Interpretation interpretation = H0Interpretation::BredonH0) {
    if (b.higher != HigherHomology::AllZero || !b.h2)
        throw domain_error("not-two-dimensional",
                           "K-groups need a model of dimension at most 2 (aspherical presentation)");
    AbelianGroupInvariants degree0 = b.h0;
    if (interpretation == H0Interpretation::LiteralRcG) {
        if (!b.finite_cyclic_order)
            throw domain_error("literal-rc-not-computable",
                               "R_C(G) is only computed here for finite cyclic G");
        degree0 = AbelianGroupInvariants::free(
            static_cast<std::size_t>(character_count(b.finite_cyclic_order->get_si())));
    }
    return {direct_sum(degree0, *b.h2), b.h1, interpretation};
}

} // namespace bredon
