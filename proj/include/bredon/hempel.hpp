#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bredon/free_group.hpp"
#include "bredon/presentation.hpp"

namespace bredon {

/// Surface-type data for <x, y, z_1..z_d | [x,y] u>: the alphabet is exactly
/// {x, y} plus the z generators, and u is a word in the z generators.
class HempelContext {
public:
    HempelContext(AlphabetPtr alphabet, GeneratorId x, GeneratorId y, std::vector<GeneratorId> z,
                  Word u)
        : alphabet_(std::move(alphabet)), x_(x), y_(y), z_(std::move(z)), u_(std::move(u)) {
        if (z_.empty())
            throw domain_error("not-hempel-form", "not a Hempel-form presentation: need d >= 1");
        std::vector<GeneratorId> all = z_;
        all.push_back(x_);
        all.push_back(y_);
        std::sort(all.begin(), all.end());
        if (std::adjacent_find(all.begin(), all.end()) != all.end() ||
            all.size() != alphabet_->size() || all.back().index >= alphabet_->size())
            throw domain_error("not-hempel-form",
                               "not a Hempel-form presentation: generators must be x, y, z_1..z_d");
        if (!same_alphabet(u_.alphabet(), alphabet_))
            throw usage_error("alphabet-mismatch", "u uses a different alphabet");
        const GeneratorId xy[] = {x_, y_};
        if (involves(u_, xy))
            throw domain_error("not-hempel-form",
                               "not a Hempel-form presentation: u must be a word in z_1..z_d");
    }

    /// Alphabet (x, y, z1, ..., zd) with u given as text over it.
    static HempelContext standard(std::size_t d, std::string_view u_text) {
        std::vector<std::string> names = {"x", "y"};
        std::vector<GeneratorId> z;
        for (std::size_t j = 1; j <= d; ++j) {
            names.push_back("z" + std::to_string(j));
            z.push_back(GeneratorId{j + 1});
        }
        auto alphabet = Alphabet::make(names);
        Word u = u_text.empty() ? Word(alphabet) : parse_word(alphabet, u_text);
        return HempelContext(alphabet, GeneratorId{0}, GeneratorId{1}, std::move(z), std::move(u));
    }

    /// Recognizes a relator of the shape x y x^-1 y^-1 u with u free of x, y;
    /// the remaining generators, in alphabet order, are z_1..z_d.
    static HempelContext from_surface_relator(const Word& w) {
        const auto& alphabet = w.alphabet();
        auto fail = [](const std::string& why) {
            return domain_error("not-hempel-form", "not a Hempel-form presentation: " + why);
        };
        if (w.size() < 4)
            throw fail("first relator is not of the form [x,y]u");
        const Letter a = w[0], b = w[1];
        if (a.sign != 1 || b.sign != 1 || a.gen == b.gen || w[2] != a.inverse() ||
            w[3] != b.inverse())
            throw fail("first relator is not of the form [x,y]u");
        std::vector<GeneratorId> z;
        for (std::size_t i = 0; i < alphabet->size(); ++i)
            if (i != a.gen && i != b.gen)
                z.push_back(GeneratorId{i});
        Word u(alphabet, w.letters().subspan(4));
        const GeneratorId xy[] = {GeneratorId{a.gen}, GeneratorId{b.gen}};
        if (involves(u, xy))
            throw fail("u involves x or y");
        return HempelContext(alphabet, xy[0], xy[1], std::move(z), std::move(u));
    }

    const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
    GeneratorId x() const noexcept { return x_; }
    GeneratorId y() const noexcept { return y_; }
    const std::vector<GeneratorId>& z() const noexcept { return z_; }
    std::size_t d() const noexcept { return z_.size(); }
    const Word& u() const noexcept { return u_; }

    Word surface_relator() const {
        const Word x = Word::generator(alphabet_, x_);
        const Word y = Word::generator(alphabet_, y_);
        return x * y * invert(x) * invert(y) * u_;
    }

    /// Position j (0-based) of a z generator, if g is one.
    std::optional<std::size_t> z_slot(std::size_t gen) const {
        for (std::size_t j = 0; j < z_.size(); ++j)
            if (z_[j].index == gen)
                return j;
        return std::nullopt;
    }

private:
    AlphabetPtr alphabet_;
    GeneratorId x_, y_;
    std::vector<GeneratorId> z_;
    Word u_;
};

/// Letter y^level b^sign y^-level of the free basis {y^i x, y^i z_j : i in Z}
/// of the normal closure of x, z_1..z_d.
struct BasisLetter {
    enum class Base { X, Z };
    Base base = Base::X;
    std::size_t slot = 0; // z index j (0-based); 0 for X
    std::int64_t level = 0;
    int sign = 1;

    BasisLetter inverse() const { return {base, slot, level, -sign}; }
    bool cancels(const BasisLetter& o) const {
        return base == o.base && slot == o.slot && level == o.level && sign == -o.sign;
    }
    friend bool operator==(const BasisLetter&, const BasisLetter&) = default;
};

/// Freely reduced word in the conjugate basis.
class X1Expression {
public:
    X1Expression() = default;
    explicit X1Expression(const std::vector<BasisLetter>& letters) {
        for (const auto& l : letters)
            push(l);
    }

    void push(const BasisLetter& l) {
        if (!letters_.empty() && letters_.back().cancels(l))
            letters_.pop_back();
        else
            letters_.push_back(l);
    }

    const std::vector<BasisLetter>& letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    X1Expression inverse() const {
        X1Expression out;
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
            out.letters_.push_back(it->inverse());
        return out;
    }

    friend X1Expression operator*(X1Expression a, const X1Expression& b) {
        for (const auto& l : b.letters_)
            a.push(l);
        return a;
    }

    bool is_cyclically_reduced() const {
        return letters_.size() < 2 || !letters_.front().cancels(letters_.back());
    }

    X1Expression cyclic_core() const {
        std::size_t lo = 0, hi = letters_.size();
        while (hi - lo >= 2 && letters_[lo].cancels(letters_[hi - 1])) {
            ++lo;
            --hi;
        }
        X1Expression out;
        out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(lo),
                            letters_.begin() + static_cast<std::ptrdiff_t>(hi));
        return out;
    }

    /// "x@1*z1@0^-1": generator name, then the conjugating y-exponent.
    std::string to_string(const HempelContext& ctx) const {
        if (letters_.empty())
            return "1";
        std::string out;
        for (const auto& l : letters_) {
            if (!out.empty())
                out += '*';
            const GeneratorId g = l.base == BasisLetter::Base::X ? ctx.x() : ctx.z()[l.slot];
            out += ctx.alphabet()->name(g) + "@" + std::to_string(l.level);
            if (l.sign < 0)
                out += "^-1";
        }
        return out;
    }

    friend bool operator==(const X1Expression&, const X1Expression&) = default;

private:
    std::vector<BasisLetter> letters_;
};

/// Expresses r (with zero y-exponent) in the conjugate basis by tracking the
/// running y-exponent of the prefix.
inline X1Expression rewrite_in_normal_closure_basis(const Word& r, const HempelContext& ctx) {
    if (!same_alphabet(r.alphabet(), ctx.alphabet()))
        throw usage_error("alphabet-mismatch", "relator and context use different alphabets");
    if (exponent_sum(r, ctx.y()) != 0)
        throw domain_error("not-in-kernel",
                           "relator has non-zero exponent sum in " +
                               ctx.alphabet()->name(ctx.y()) +
                               ", so it is not in the normal closure of the other generators");
    X1Expression out;
    std::int64_t level = 0;
    for (const Letter& l : r.letters()) {
        if (l.gen == ctx.y().index) {
            level += l.sign;
        } else if (l.gen == ctx.x().index) {
            out.push({BasisLetter::Base::X, 0, level, l.sign});
        } else {
            out.push({BasisLetter::Base::Z, *ctx.z_slot(l.gen), level, l.sign});
        }
    }
    return out;
}

/// (^0 u)^-1 * (^1 x) in the conjugate basis.
inline X1Expression amalgamating_element(const HempelContext& ctx) {
    X1Expression out = rewrite_in_normal_closure_basis(ctx.u(), ctx).inverse();
    out.push({BasisLetter::Base::X, 0, 1, 1});
    return out;
}

/// In a free group, r is conjugate into <c> iff the cyclic core of r is a
/// rotation of (core c)^k for k = +-|core r| / |core c|.
inline bool conjugate_into_cyclic(const X1Expression& r, const X1Expression& c) {
    const X1Expression rc = r.cyclic_core();
    const X1Expression cc = c.cyclic_core();
    if (rc.empty())
        return true;
    if (cc.empty() || rc.size() % cc.size() != 0)
        return false;
    const std::size_t k = rc.size() / cc.size();
    for (const X1Expression& base : {cc, cc.inverse()}) {
        X1Expression p;
        for (std::size_t i = 0; i < k; ++i)
            p = p * base;
        if (is_rotation<BasisLetter>(p.letters(), rc.letters()))
            return true;
    }
    return false;
}

struct HempelReport {
    bool h1 = false, h2 = false, h3 = false, h4 = false;
    std::string h1_detail, h2_detail, h3_detail, h4_detail;
    std::optional<std::int64_t> nu;
    std::optional<X1Expression> expression;

    bool passes() const { return h1 && h2 && h3 && h4; }
};

inline HempelReport check_hempel(const Word& r, const HempelContext& ctx) {
    HempelReport report;
    try {
        report.expression = rewrite_in_normal_closure_basis(r, ctx);
    } catch (const Error& e) {
        if (e.code() != "not-in-kernel")
            throw;
        report.h1_detail = e.what();
        report.h2_detail = report.h3_detail = report.h4_detail = "not evaluated: (H1) fails";
        return report;
    }
    const X1Expression& expr = *report.expression;

    bool levels_ok = true;
    std::int64_t max_z = 0;
    bool level_zero_z = false;
    for (const auto& l : expr.letters()) {
        if (l.base == BasisLetter::Base::X) {
            if (l.level != 1) {
                levels_ok = false;
                report.h1_detail = "x occurs conjugated by y^" + std::to_string(l.level);
            }
        } else {
            if (l.level < 0) {
                levels_ok = false;
                report.h1_detail = "a z generator occurs conjugated by y^" + std::to_string(l.level);
            }
            max_z = std::max(max_z, l.level);
            level_zero_z = level_zero_z || l.level == 0;
        }
    }
    report.h1 = levels_ok;
    if (report.h1) {
        report.h1_detail = "relator lies in the subgroup generated by x@1 and z_j@i, i >= 0";
        report.nu = max_z;
    }

    report.h2 = !conjugate_into_cyclic(expr, amalgamating_element(ctx));
    report.h2_detail = report.h2 ? "not conjugate into <(u@0)^-1 * x@1>"
                                 : "conjugate into <(u@0)^-1 * x@1>";

    report.h3 = expr.is_cyclically_reduced();
    report.h3_detail = report.h3 ? "cyclically reduced in the conjugate basis"
                                 : "not cyclically reduced in the conjugate basis";

    report.h4 = level_zero_z;
    report.h4_detail = report.h4 ? "involves some z_j@0" : "involves no z_j@0";
    return report;
}

/// Both associated subgroups of the HNN extension are Magnus subgroups of the
/// one-relator base group: the base relator is not a word in either
/// generating set alone.
struct MagnusCertificate {
    bool lower_side = false; // base relator involves some z_{j,nu}: <x, Z[0,nu-1]> is Magnus
    bool upper_side = false; // relator involves some z_j@0: <x@1, Z[1,nu]> is Magnus
    bool holds() const { return lower_side && upper_side; }
};

/// HNN decomposition of a Hempel group: base group <x, z_{j,i} (0<=i<=nu) | r'>,
/// stable letter y, relators y x y^-1 = u_0 x and y z_{j,i-1} y^-1 = z_{j,i}.
struct HnnPresentation {
    Presentation base;
    AlphabetPtr alphabet; // x, y, then z_{j,i} ordered by j, then i
    GeneratorId stable_letter;
    std::vector<Word> conjugation_relators;
    std::int64_t nu = 0;
    MagnusCertificate magnus;

    Word base_relator() const {
        return map_word(base.relators().front(), alphabet, [&](GeneratorId g) {
            return Word::generator(alphabet, alphabet->at(base.alphabet()->name(g)));
        });
    }

    Presentation full() const {
        std::vector<Word> relators = {base_relator()};
        relators.insert(relators.end(), conjugation_relators.begin(), conjugation_relators.end());
        return Presentation(alphabet, std::move(relators));
    }
};

inline std::string hnn_generator_name(std::size_t j, std::int64_t i) {
    return "z" + std::to_string(j + 1) + "_" + std::to_string(i);
}

inline HnnPresentation build_hnn(const Word& r, const HempelContext& ctx) {
    const HempelReport report = check_hempel(r, ctx);
    if (!report.passes())
        throw domain_error("hempel-precondition", "relator is not a Hempel relator");
    const std::int64_t nu = *report.nu;
    const std::size_t d = ctx.d();
    const std::string x_name = ctx.alphabet()->name(ctx.x());
    const std::string y_name = ctx.alphabet()->name(ctx.y());

    std::vector<std::string> base_names = {x_name};
    for (std::size_t j = 0; j < d; ++j)
        for (std::int64_t i = 0; i <= nu; ++i)
            base_names.push_back(hnn_generator_name(j, i));
    std::vector<std::string> full_names = base_names;
    full_names.insert(full_names.begin() + 1, y_name);
    if (std::find(base_names.begin() + 1, base_names.end(), x_name) != base_names.end() ||
        std::find(base_names.begin(), base_names.end(), y_name) != base_names.end())
        throw domain_error("name-collision", "x or y collides with a generated z_{j,i} name");
    auto base_alphabet = Alphabet::make(base_names);
    auto full_alphabet = Alphabet::make(full_names);

    auto z_gen = [&](const AlphabetPtr& a, std::size_t j, std::int64_t i) {
        return Word::generator(a, a->at(hnn_generator_name(j, i)));
    };
    auto u0 = [&](const AlphabetPtr& a) {
        return map_word(ctx.u(), a, [&](GeneratorId g) { return z_gen(a, *ctx.z_slot(g.index), 0); });
    };

    // x@1 = u@0 * x; z_j@i = z_{j,i}.
    const Word bx = Word::generator(base_alphabet, GeneratorId{0});
    const Word x_at_one = u0(base_alphabet) * bx;
    Word rewritten(base_alphabet);
    for (const auto& l : report.expression->letters()) {
        const Word piece =
            l.base == BasisLetter::Base::X ? x_at_one : z_gen(base_alphabet, l.slot, l.level);
        rewritten = rewritten * (l.sign > 0 ? piece : invert(piece));
    }

    HnnPresentation h{Presentation(base_alphabet, {rewritten}), full_alphabet,
                      full_alphabet->at(y_name), {}, nu, {}};

    const Word x = Word::generator(full_alphabet, full_alphabet->at(x_name));
    const Word y = Word::generator(full_alphabet, h.stable_letter);
    h.conjugation_relators.push_back(y * x * invert(y) * invert(u0(full_alphabet) * x));
    for (std::size_t j = 0; j < d; ++j)
        for (std::int64_t i = 1; i <= nu; ++i)
            h.conjugation_relators.push_back(y * z_gen(full_alphabet, j, i - 1) * invert(y) *
                                             invert(z_gen(full_alphabet, j, i)));

    const Word core = cyclic_reduce(rewritten).core;
    std::vector<GeneratorId> top;
    for (std::size_t j = 0; j < d; ++j)
        top.push_back(base_alphabet->at(hnn_generator_name(j, nu)));
    h.magnus.lower_side = involves(core, top);
    const auto core_expr = report.expression->cyclic_core();
    h.magnus.upper_side =
        std::any_of(core_expr.letters().begin(), core_expr.letters().end(), [](const auto& l) {
            return l.base == BasisLetter::Base::Z && l.level == 0;
        });
    return h;
}

/// Substitutes z_{j,i} -> y^i z_j y^-i (and y x y^-1 -> u x on the original
/// relator) and checks that the HNN relators collapse to the original
/// presentation: conjugation relators become trivial or a conjugate of
/// ([x,y]u)^{+-1}, and the base relator matches r up to conjugation and
/// inversion.
inline bool hnn_roundtrip_check(const HnnPresentation& h, const Presentation& original) {
    if (original.relators().size() != 2)
        return false;
    std::optional<HempelContext> ctx;
    try {
        ctx = HempelContext::from_surface_relator(original.relators()[0]);
    } catch (const Error&) {
        return false;
    }
    const AlphabetPtr& target = original.alphabet();
    const Word& w = original.relators()[0];
    const Word& r = original.relators()[1];
    const Word y = Word::generator(target, ctx->y());

    std::vector<std::optional<Word>> images(h.alphabet->size());
    for (std::size_t g = 0; g < h.alphabet->size(); ++g) {
        const std::string& name = h.alphabet->names()[g];
        if (name == target->name(ctx->x()) || name == target->name(ctx->y())) {
            images[g] = Word::generator(target, target->at(name));
            continue;
        }
        const auto underscore = name.find('_');
        if (name.size() < 4 || name[0] != 'z' || underscore == std::string::npos)
            return false;
        std::size_t j = 0;
        std::int64_t i = 0;
        const char* s = name.data();
        auto rj = std::from_chars(s + 1, s + underscore, j);
        auto ri = std::from_chars(s + underscore + 1, s + name.size(), i);
        if (rj.ec != std::errc() || ri.ec != std::errc() || j < 1 || j > ctx->d() || i < 0)
            return false;
        const Word zj = Word::generator(target, ctx->z()[j - 1]);
        images[g] = power(y, i) * zj * power(y, -i);
    }
    auto substitute = [&](const Word& word) {
        return map_word(word, target, [&](GeneratorId g) { return *images[g.index]; });
    };
    auto matches = [](const Word& a, const Word& b) {
        return are_conjugate(a, b) || are_conjugate(a, invert(b));
    };

    if (h.conjugation_relators.size() != 1 + ctx->d() * static_cast<std::size_t>(h.nu))
        return false;
    if (!matches(substitute(h.conjugation_relators.front()), w))
        return false;
    for (std::size_t k = 1; k < h.conjugation_relators.size(); ++k)
        if (!substitute(h.conjugation_relators[k]).is_identity())
            return false;

    X1Expression expr;
    try {
        expr = rewrite_in_normal_closure_basis(r, *ctx);
    } catch (const Error&) {
        return false;
    }
    const Word x = Word::generator(target, ctx->x());
    Word expected(target);
    for (const auto& l : expr.letters()) {
        const Word piece = l.base == BasisLetter::Base::X
                               ? power(y, l.level - 1) * ctx->u() * x * power(y, 1 - l.level)
                               : power(y, l.level) * Word::generator(target, ctx->z()[l.slot]) *
                                     power(y, -l.level);
        expected = expected * (l.sign > 0 ? piece : invert(piece));
    }
    return matches(substitute(h.base_relator()), expected);
}

} // namespace bredon
