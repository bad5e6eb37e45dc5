#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bredon/error.hpp"

namespace bredon {

struct GeneratorId {
    std::size_t index = 0;
    friend auto operator<=>(const GeneratorId&, const GeneratorId&) = default;
};

inline bool is_identifier(std::string_view s) {
    auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); };
    auto digit = [](char c) { return c >= '0' && c <= '9'; };
    if (s.empty() || !alpha(s.front()))
        return false;
    return std::all_of(s.begin() + 1, s.end(),
                       [&](char c) { return alpha(c) || digit(c) || c == '_'; });
}

/// Ordered, duplicate-free list of generator names. Generators are compared
/// by index only; names are for display and parsing.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (!is_identifier(names_[i]))
                throw usage_error("invalid-generator-name",
                                  "invalid generator name '" + names_[i] + "'");
            if (!lookup_.emplace(names_[i], i).second)
                throw usage_error("duplicate-generator",
                                  "duplicate generator '" + names_[i] + "'");
        }
    }

    static std::shared_ptr<const Alphabet> make(std::vector<std::string> names) {
        return std::make_shared<const Alphabet>(std::move(names));
    }

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(GeneratorId g) const { return names_.at(g.index); }
    const std::vector<std::string>& names() const noexcept { return names_; }

    std::optional<GeneratorId> find(std::string_view name) const {
        auto it = lookup_.find(std::string(name));
        if (it == lookup_.end())
            return std::nullopt;
        return GeneratorId{it->second};
    }

    GeneratorId at(std::string_view name) const {
        if (auto g = find(name))
            return *g;
        throw usage_error("unknown-generator", "unknown generator '" + std::string(name) + "'");
    }

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> lookup_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

inline bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
    return a == b || (a && b && *a == *b);
}

/// A generator or its inverse. Ordered by (generator index, sign).
struct Letter {
    std::size_t gen = 0;
    int sign = 1;

    Letter inverse() const noexcept { return {gen, -sign}; }
    bool cancels(const Letter& other) const noexcept {
        return gen == other.gen && sign == -other.sign;
    }
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Freely reduced word over a fixed alphabet. The reduction happens on
/// construction, so an unreduced Word cannot be observed.
class Word {
public:
    explicit Word(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

    Word(AlphabetPtr alphabet, std::span<const Letter> letters) : alphabet_(std::move(alphabet)) {
        letters_.reserve(letters.size());
        for (const Letter& l : letters)
            push(l);
    }

    static Word generator(AlphabetPtr alphabet, GeneratorId g, std::int64_t power = 1) {
        if (g.index >= alphabet->size())
            throw usage_error("unknown-generator",
                              "generator index " + std::to_string(g.index) + " out of range");
        Word w(std::move(alphabet));
        const int sign = power < 0 ? -1 : 1;
        for (std::int64_t k = 0; k < (power < 0 ? -power : power); ++k)
            w.letters_.push_back({g.index, sign});
        return w;
    }

    const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
    std::span<const Letter> letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool is_identity() const noexcept { return letters_.empty(); }
    const Letter& operator[](std::size_t i) const { return letters_[i]; }

    /// Canonical text: runs of one letter are folded into powers, e.g. "x^2*y^-1".
    /// The identity prints as "1".
    std::string to_string() const {
        if (letters_.empty())
            return "1";
        std::string out;
        for (std::size_t i = 0; i < letters_.size();) {
            std::size_t j = i;
            while (j < letters_.size() && letters_[j] == letters_[i])
                ++j;
            const auto run = static_cast<std::int64_t>(j - i) * letters_[i].sign;
            if (!out.empty())
                out += '*';
            out += alphabet_->name(GeneratorId{letters_[i].gen});
            if (run != 1)
                out += '^' + std::to_string(run);
            i = j;
        }
        return out;
    }

    friend bool operator==(const Word& a, const Word& b) {
        return a.letters_ == b.letters_ && same_alphabet(a.alphabet_, b.alphabet_);
    }

    /// Shortlex: length first, then lexicographic by (index, sign).
    friend bool shortlex_less(const Word& a, const Word& b) {
        if (a.letters_.size() != b.letters_.size())
            return a.letters_.size() < b.letters_.size();
        return a.letters_ < b.letters_;
    }

private:
    friend Word multiply(const Word&, const Word&);
    friend Word invert(const Word&);

    void push(const Letter& l) {
        if (l.gen >= alphabet_->size())
            throw usage_error("unknown-generator",
                              "generator index " + std::to_string(l.gen) + " out of range");
        if (l.sign != 1 && l.sign != -1)
            throw usage_error("invalid-letter", "letter sign must be +1 or -1");
        if (!letters_.empty() && letters_.back().cancels(l))
            letters_.pop_back();
        else
            letters_.push_back(l);
    }

    AlphabetPtr alphabet_;
    std::vector<Letter> letters_;
};

struct ShortLex {
    bool operator()(const Word& a, const Word& b) const { return shortlex_less(a, b); }
};

inline Word multiply(const Word& a, const Word& b) {
    if (!same_alphabet(a.alphabet(), b.alphabet()))
        throw usage_error("alphabet-mismatch", "cannot multiply words over different alphabets");
    Word out = a;
    out.letters_.reserve(a.size() + b.size());
    for (const Letter& l : b.letters_)
        out.push(l);
    return out;
}

inline Word operator*(const Word& a, const Word& b) { return multiply(a, b); }

inline Word invert(const Word& w) {
    Word out(w.alphabet());
    out.letters_.reserve(w.size());
    for (auto it = w.letters_.rbegin(); it != w.letters_.rend(); ++it)
        out.letters_.push_back(it->inverse());
    return out;
}

inline Word power(const Word& w, std::int64_t k) {
    const Word base = k < 0 ? invert(w) : w;
    std::vector<Letter> letters;
    const auto count = static_cast<std::size_t>(k < 0 ? -k : k);
    letters.reserve(count * base.size());
    for (std::size_t i = 0; i < count; ++i)
        letters.insert(letters.end(), base.letters().begin(), base.letters().end());
    return Word(w.alphabet(), letters);
}

/// w = conjugator * core * conjugator^-1 with core cyclically reduced.
struct CyclicDecomposition {
    Word conjugator;
    Word core;
};

inline CyclicDecomposition cyclic_reduce(const Word& w) {
    auto letters = w.letters();
    std::size_t lo = 0;
    std::size_t hi = letters.size();
    while (hi - lo >= 2 && letters[lo].cancels(letters[hi - 1])) {
        ++lo;
        --hi;
    }
    return {Word(w.alphabet(), letters.subspan(0, lo)),
            Word(w.alphabet(), letters.subspan(lo, hi - lo))};
}

inline bool is_cyclically_reduced(const Word& w) {
    return w.size() < 2 || !w[0].cancels(w[w.size() - 1]);
}

struct RootResult {
    Word root;
    std::size_t log = 1;
};

/// Generator of the maximal cyclic subgroup containing w for which w is a
/// positive power, together with that power.
inline RootResult root(const Word& w) {
    if (w.is_identity())
        throw domain_error("root-of-identity", "root is undefined for the identity element");
    auto [conjugator, core] = cyclic_reduce(w);
    auto c = core.letters();
    const std::size_t n = c.size();

    // Failure function; the smallest period of c is n - fail[n].
    std::vector<std::size_t> fail(n + 1, 0);
    for (std::size_t i = 1, k = 0; i < n; ++i) {
        while (k > 0 && c[i] != c[k])
            k = fail[k];
        if (c[i] == c[k])
            ++k;
        fail[i + 1] = k;
    }
    std::size_t period = n - fail[n];
    if (n % period != 0)
        period = n;

    Word period_word(w.alphabet(), c.subspan(0, period));
    return {conjugator * period_word * invert(conjugator), n / period};
}

inline std::int64_t exponent_sum(const Word& w, GeneratorId g) {
    if (g.index >= w.alphabet()->size())
        throw usage_error("unknown-generator",
                          "generator index " + std::to_string(g.index) + " out of range");
    std::int64_t sum = 0;
    for (const Letter& l : w.letters())
        if (l.gen == g.index)
            sum += l.sign;
    return sum;
}

inline bool involves(const Word& w, std::span<const GeneratorId> gens) {
    return std::any_of(w.letters().begin(), w.letters().end(), [&](const Letter& l) {
        return std::any_of(gens.begin(), gens.end(),
                           [&](GeneratorId g) { return g.index == l.gen; });
    });
}

/// True iff the letter sequence b is a cyclic rotation of a.
template <typename T>
bool is_rotation(std::span<const T> a, std::span<const T> b) {
    if (a.size() != b.size())
        return false;
    if (a.empty())
        return true;
    for (std::size_t shift = 0; shift < a.size(); ++shift) {
        bool match = true;
        for (std::size_t i = 0; i < a.size() && match; ++i)
            match = a[(i + shift) % a.size()] == b[i];
        if (match)
            return true;
    }
    return false;
}

/// Applies the homomorphism defined by images of the generators.
template <typename ImageFn>
Word map_word(const Word& w, const AlphabetPtr& target, ImageFn&& image_of) {
    Word out(target);
    for (const Letter& l : w.letters()) {
        const Word image = image_of(GeneratorId{l.gen});
        out = out * (l.sign > 0 ? image : invert(image));
    }
    return out;
}

/// Conjugacy in the free group: cyclic cores agree up to rotation.
inline bool are_conjugate(const Word& a, const Word& b) {
    const Word ca = cyclic_reduce(a).core;
    const Word cb = cyclic_reduce(b).core;
    return is_rotation(ca.letters(), cb.letters());
}

} // namespace bredon
