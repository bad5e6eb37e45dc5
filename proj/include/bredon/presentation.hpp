#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "bredon/free_group.hpp"
#include "bredon/int_linalg.hpp"

namespace bredon {

enum class TorsionMode { DeriveFromRoots, Declared };

/// Torsion declared for one relator (NEC-style inputs): the image of the
/// relator's generator has the given order.
struct DeclaredTorsion {
    std::size_t relator = 0;
    std::int64_t order = 0;
    friend bool operator==(const DeclaredTorsion&, const DeclaredTorsion&) = default;
};

/// Finite presentation <X | R>. Relators are non-trivial reduced words kept in
/// input order (duplicates included). The torsion mode is DECLARED exactly when
/// a torsion declaration is present.
class Presentation {
public:
    Presentation(AlphabetPtr alphabet, std::vector<Word> relators,
                 std::vector<DeclaredTorsion> declared = {})
        : alphabet_(std::move(alphabet)), relators_(std::move(relators)),
          declared_(std::move(declared)) {
        for (std::size_t i = 0; i < relators_.size(); ++i) {
            if (!same_alphabet(alphabet_, relators_[i].alphabet()))
                throw usage_error("alphabet-mismatch",
                                  "relator " + std::to_string(i) + " uses a different alphabet");
            if (relators_[i].is_identity())
                throw domain_error("degenerate-relator",
                                   "relator " + std::to_string(i) + " reduces to the identity");
        }
        std::set<std::size_t> seen;
        for (const DeclaredTorsion& d : declared_) {
            if (d.relator >= relators_.size())
                throw usage_error("invalid-torsion-declaration",
                                  "torsion declaration refers to missing relator " +
                                      std::to_string(d.relator));
            if (d.order < 2)
                throw usage_error("invalid-torsion-declaration",
                                  "declared torsion order must be at least 2");
            if (!seen.insert(d.relator).second)
                throw usage_error("invalid-torsion-declaration",
                                  "relator " + std::to_string(d.relator) + " declared twice");
        }
    }

    const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
    const std::vector<Word>& relators() const noexcept { return relators_; }
    const std::vector<DeclaredTorsion>& declared_torsion() const noexcept { return declared_; }
    TorsionMode torsion_mode() const noexcept {
        return declared_.empty() ? TorsionMode::DeriveFromRoots : TorsionMode::Declared;
    }

    /// Canonical text accepted back by parse_presentation.
    std::string to_string() const {
        std::string out = "<";
        for (std::size_t i = 0; i < alphabet_->size(); ++i)
            out += (i ? ", " : "") + alphabet_->names()[i];
        out += " |";
        for (std::size_t i = 0; i < relators_.size(); ++i)
            out += (i ? ", " : " ") + relators_[i].to_string();
        out += " >";
        for (const DeclaredTorsion& d : declared_)
            out += "\n!torsion rel=" + std::to_string(d.relator) + " order=" + std::to_string(d.order);
        return out;
    }

    friend bool operator==(const Presentation& a, const Presentation& b) {
        return same_alphabet(a.alphabet_, b.alphabet_) && a.relators_ == b.relators_ &&
               a.declared_ == b.declared_;
    }

private:
    AlphabetPtr alphabet_;
    std::vector<Word> relators_;
    std::vector<DeclaredTorsion> declared_;
};

namespace detail {

class PresentationParser {
public:
    explicit PresentationParser(std::string_view text) : text_(text) {}

    Presentation parse() {
        std::string body;
        std::vector<DeclaredTorsion> declared;
        split_directives(body, declared);
        text_ = body;
        pos_ = 0;

        expect('<');
        std::vector<std::string> names;
        names.push_back(identifier());
        while (peek() == ',') {
            ++pos_;
            names.push_back(identifier());
        }
        const std::size_t gens_end = pos_;
        try {
            alphabet_ = Alphabet::make(names);
        } catch (const Error& e) {
            pos_ = gens_end;
            fail(e.code(), e.what());
        }
        expect('|');
        std::vector<Word> relators;
        std::vector<std::size_t> starts;
        if (peek() != '>') {
            starts.push_back(pos_);
            relators.push_back(word());
            while (peek() == ',') {
                ++pos_;
                starts.push_back(pos_);
                relators.push_back(word());
            }
        }
        expect('>');
        if (peek() != '\0')
            fail("syntax-error", "unexpected text after '>'");
        for (std::size_t i = 0; i < relators.size(); ++i)
            if (relators[i].is_identity()) {
                pos_ = starts[i];
                skip_ws();
                auto [line, col] = location();
                throw domain_error("degenerate-relator",
                                   "relator " + std::to_string(i) + " at line " +
                                       std::to_string(line) + ", column " + std::to_string(col) +
                                       " reduces to the identity");
            }
        return Presentation(alphabet_, std::move(relators), std::move(declared));
    }

private:
    void split_directives(std::string& body, std::vector<DeclaredTorsion>& declared) {
        std::size_t line_no = 0;
        std::istringstream in{std::string(text_)};
        std::string line;
        bool first = true;
        while (std::getline(in, line)) {
            ++line_no;
            if (!first)
                body += '\n';
            first = false;
            const auto start = line.find_first_not_of(" \t\r");
            if (start != std::string::npos && line[start] == '#') {
                body += std::string(line.size(), ' ');
                continue;
            }
            if (start != std::string::npos && line[start] == '!') {
                declared.push_back(directive(line.substr(start), line_no));
                body += std::string(line.size(), ' ');
                continue;
            }
            body += line;
        }
    }

    static DeclaredTorsion directive(const std::string& line, std::size_t line_no) {
        std::istringstream in(line);
        std::string head, rel, order, extra;
        in >> head >> rel >> order;
        auto bad = [&]() {
            return usage_error("syntax-error",
                               "line " + std::to_string(line_no) +
                                   ": expected '!torsion rel=<index> order=<n>'");
        };
        if (head != "!torsion" || rel.rfind("rel=", 0) != 0 || order.rfind("order=", 0) != 0 ||
            (in >> extra))
            throw bad();
        DeclaredTorsion d;
        if (!parse_number(rel.substr(4), d.relator) || !parse_number(order.substr(6), d.order))
            throw bad();
        return d;
    }

    template <typename T>
    static bool parse_number(std::string_view s, T& out) {
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        return ec == std::errc() && ptr == s.data() + s.size();
    }

    std::pair<std::size_t, std::size_t> location() const {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        return {line, col};
    }

    [[noreturn]] void fail(const std::string& code, const std::string& message) const {
        auto [line, col] = location();
        throw usage_error(code, "line " + std::to_string(line) + ", column " + std::to_string(col) +
                                    ": " + message);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c) {
        if (peek() != c)
            fail("syntax-error", std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string identifier() {
        skip_ws();
        const std::size_t start = pos_;
        if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
        }
        if (start == pos_)
            fail("syntax-error", "expected identifier");
        return std::string(text_.substr(start, pos_ - start));
    }

    static bool starts_factor(char c) {
        return c == '(' || c == '[' || std::isalpha(static_cast<unsigned char>(c));
    }

    Word word() {
        Word w = term();
        for (;;) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                w = w * term();
            } else if (starts_factor(c)) {
                w = w * term();
            } else {
                return w;
            }
        }
    }

    Word term() {
        Word base = factor();
        if (peek() != '^')
            return base;
        ++pos_;
        skip_ws();
        const std::size_t start = pos_;
        if (pos_ < text_.size() && text_[pos_] == '-')
            ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        std::int64_t exponent = 0;
        const auto digits = text_.substr(start, pos_ - start);
        if (digits.empty() || digits == "-")
            fail("syntax-error", "expected integer exponent");
        if (!parse_number(digits, exponent) || exponent > kMaxExponent || exponent < -kMaxExponent)
            fail("exponent-too-large", "exponent out of range");
        return power(base, exponent);
    }

    Word factor() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Word w = word();
            expect(')');
            return w;
        }
        if (c == '[') {
            ++pos_;
            Word a = word();
            expect(',');
            Word b = word();
            expect(']');
            return a * b * invert(a) * invert(b);
        }
        const std::size_t start = (skip_ws(), pos_);
        const std::string name = identifier();
        auto g = alphabet_->find(name);
        if (!g) {
            pos_ = start;
            fail("unknown-generator", "unknown generator '" + name + "'");
        }
        return Word::generator(alphabet_, *g);
    }

    static constexpr std::int64_t kMaxExponent = 1'000'000;

    std::string_view text_;
    std::size_t pos_ = 0;
    AlphabetPtr alphabet_;
};

} // namespace detail

/// Grammar:
///   presentation := '<' gens '|' relators '>'
///   word := term (('*' | WS) term)*,  term := factor ('^' sint)?
///   factor := ident | '(' word ')' | '[' word ',' word ']'
/// plus optional directive lines "!torsion rel=<index> order=<n>" and '#'
/// comment lines.
inline Presentation parse_presentation(std::string_view text) {
    return detail::PresentationParser(text).parse();
}

/// Parses a single word over an existing alphabet.
inline Word parse_word(const AlphabetPtr& alphabet, std::string_view text) {
    std::string names;
    for (std::size_t i = 0; i < alphabet->size(); ++i)
        names += (i ? "," : "") + alphabet->names()[i];
    const Presentation p = parse_presentation("<" + names + " | " + std::string(text) + ">");
    if (p.relators().size() != 1)
        throw usage_error("syntax-error", "expected a single word");
    return Word(alphabet, p.relators().front().letters());
}

/// Entry (r, i) is the exponent sum of generator i in relator r, i.e. the
/// augmentation of the Fox derivative d r / d x_i.
inline IntMatrix exponent_matrix(const Presentation& p) {
    IntMatrix m(p.relators().size(), p.alphabet()->size());
    for (std::size_t r = 0; r < p.relators().size(); ++r)
        for (std::size_t i = 0; i < p.alphabet()->size(); ++i)
            m(r, i) = static_cast<long>(exponent_sum(p.relators()[r], GeneratorId{i}));
    return m;
}

/// Replaces every relator by its root.
inline Presentation root_presentation(const Presentation& p) {
    if (p.torsion_mode() != TorsionMode::DeriveFromRoots)
        throw domain_error("wrong-torsion-mode",
                           "root presentation requires derive-from-roots torsion mode");
    std::vector<Word> roots;
    roots.reserve(p.relators().size());
    for (const Word& r : p.relators())
        roots.push_back(root(r).root);
    return Presentation(p.alphabet(), std::move(roots));
}

/// If relator r is c^k for a single generator c (k != 0), returns c.
inline std::optional<Word> single_generator_base(const Word& r) {
    if (r.is_identity())
        return std::nullopt;
    const Letter first = r[0];
    for (const Letter& l : r.letters())
        if (l != first)
            return std::nullopt;
    return Word::generator(r.alphabet(), GeneratorId{first.gen});
}

/// Presents G/Tor(G) for declared torsion: each declared relator c^k becomes c.
inline Presentation kill_torsion_presentation(const Presentation& p) {
    std::vector<Word> relators = p.relators();
    for (const DeclaredTorsion& d : p.declared_torsion()) {
        auto base = single_generator_base(relators[d.relator]);
        if (!base)
            throw domain_error("malformed-torsion",
                               "declared torsion relator " + std::to_string(d.relator) + " (" +
                                   relators[d.relator].to_string() +
                                   ") is not a power of a single generator");
        relators[d.relator] = *base;
    }
    return Presentation(p.alphabet(), std::move(relators));
}

} // namespace bredon
