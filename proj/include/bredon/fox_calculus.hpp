#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "bredon/free_group.hpp"

namespace bredon {

using Integer = mpz_class;

/// Element of the integral group ring of a free group: a finite integer
/// combination of reduced words, zero coefficients never stored.
class FreeRingElement {
public:
    using Terms = std::map<Word, Integer, ShortLex>;

    explicit FreeRingElement(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

    explicit FreeRingElement(const Word& w, Integer coefficient = 1) : alphabet_(w.alphabet()) {
        add_term(w, coefficient);
    }

    static FreeRingElement one(AlphabetPtr alphabet) {
        return FreeRingElement(Word(std::move(alphabet)));
    }

    const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Integer coefficient(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    void add_term(const Word& w, const Integer& coefficient) {
        if (!same_alphabet(alphabet_, w.alphabet()))
            throw usage_error("alphabet-mismatch", "ring element and word use different alphabets");
        if (coefficient == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(w, coefficient);
        if (!inserted) {
            it->second += coefficient;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    FreeRingElement& operator+=(const FreeRingElement& other) {
        for (const auto& [w, c] : other.terms_)
            add_term(w, c);
        return *this;
    }

    FreeRingElement& operator-=(const FreeRingElement& other) {
        for (const auto& [w, c] : other.terms_)
            add_term(w, -c);
        return *this;
    }

    friend FreeRingElement operator+(FreeRingElement a, const FreeRingElement& b) { return a += b; }
    friend FreeRingElement operator-(FreeRingElement a, const FreeRingElement& b) { return a -= b; }

    friend FreeRingElement operator-(const FreeRingElement& a) {
        FreeRingElement out(a.alphabet_);
        for (const auto& [w, c] : a.terms_)
            out.terms_.emplace(w, -c);
        return out;
    }

    friend FreeRingElement operator*(const FreeRingElement& a, const FreeRingElement& b) {
        FreeRingElement out(a.alphabet_);
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_)
                out.add_term(wa * wb, ca * cb);
        return out;
    }

    /// Left multiplication by a group element.
    friend FreeRingElement operator*(const Word& g, const FreeRingElement& e) {
        FreeRingElement out(e.alphabet_);
        for (const auto& [w, c] : e.terms_)
            out.add_term(g * w, c);
        return out;
    }

    friend bool operator==(const FreeRingElement& a, const FreeRingElement& b) {
        return a.terms_ == b.terms_;
    }

    /// "1 - x*y*x^-1", "3*x + y^2"; zero prints as "0".
    std::string to_string() const {
        if (terms_.empty())
            return "0";
        std::string out;
        for (const auto& [w, c] : terms_) {
            const bool negative = c < 0;
            const Integer magnitude = abs(c);
            if (out.empty())
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            if (w.is_identity()) {
                out += magnitude.get_str();
            } else {
                if (magnitude != 1)
                    out += magnitude.get_str() + "*";
                out += w.to_string();
            }
        }
        return out;
    }

private:
    AlphabetPtr alphabet_;
    Terms terms_;
};

/// Fox derivative with respect to generator g, evaluated left to right with
/// a running prefix: d(ux)/dx picks up u, d(ux^-1)/dx picks up -ux^-1.
inline FreeRingElement fox_derivative(const Word& w, GeneratorId g) {
    const auto& alphabet = w.alphabet();
    if (g.index >= alphabet->size())
        throw usage_error("unknown-generator",
                          "generator index " + std::to_string(g.index) + " out of range");
    FreeRingElement out(alphabet);
    Word prefix(alphabet);
    for (const Letter& l : w.letters()) {
        const Letter step[1] = {l};
        if (l.sign > 0) {
            if (l.gen == g.index)
                out.add_term(prefix, 1);
            prefix = prefix * Word(alphabet, step);
        } else {
            prefix = prefix * Word(alphabet, step);
            if (l.gen == g.index)
                out.add_term(prefix, -1);
        }
    }
    return out;
}

inline std::vector<FreeRingElement> total_derivative(const Word& w) {
    std::vector<FreeRingElement> out;
    out.reserve(w.alphabet()->size());
    for (std::size_t i = 0; i < w.alphabet()->size(); ++i)
        out.push_back(fox_derivative(w, GeneratorId{i}));
    return out;
}

/// Augmentation: every word goes to 1.
inline Integer augment(const FreeRingElement& e) {
    Integer sum = 0;
    for (const auto& [w, c] : e.terms())
        sum += c;
    return sum;
}

/// Checks sum_i (dw/dx_i)(x_i - 1) == w - 1 in the free group ring.
inline bool fundamental_identity_check(const Word& w) {
    const auto& alphabet = w.alphabet();
    FreeRingElement lhs(alphabet);
    const FreeRingElement one = FreeRingElement::one(alphabet);
    for (std::size_t i = 0; i < alphabet->size(); ++i) {
        const FreeRingElement xi_minus_one =
            FreeRingElement(Word::generator(alphabet, GeneratorId{i})) - one;
        lhs += fox_derivative(w, GeneratorId{i}) * xi_minus_one;
    }
    return lhs == FreeRingElement(w) - one;
}

} // namespace bredon
