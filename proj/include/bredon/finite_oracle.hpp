#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "bredon/fox_calculus.hpp"
#include "bredon/int_linalg.hpp"

namespace bredon {

// Brute-force checks over the finite cyclic quotients <x | x^n>. Matrices act
// on column vectors; Z[Z/n] is identified with Z^n through the basis
// 1, x, ..., x^{n-1}, and x acts by the cyclic shift e_k -> e_{k+1}.

inline IntMatrix cyclic_shift(std::int64_t n, std::int64_t k) {
    IntMatrix p(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    const std::int64_t s = ((k % n) + n) % n;
    for (std::int64_t col = 0; col < n; ++col)
        p(static_cast<std::size_t>((col + s) % n), static_cast<std::size_t>(col)) = 1;
    return p;
}

/// Regular-representation block of e under x |-> (shift)^gen_image.
inline IntMatrix embed(const FreeRingElement& e, std::int64_t n, std::int64_t gen_image = 1) {
    if (e.alphabet()->size() != 1)
        throw usage_error("oracle-single-generator",
                          "the finite oracle handles one-generator ring elements only");
    if (n < 1)
        throw usage_error("invalid-order", "cyclic order must be positive");
    IntMatrix out(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (const auto& [w, c] : e.terms()) {
        const std::int64_t k = exponent_sum(w, GeneratorId{0}) * gen_image;
        const IntMatrix p = cyclic_shift(n, k);
        for (std::size_t i = 0; i < out.entries().size(); ++i)
            out(i / out.cols(), i % out.cols()) += c * p.entries()[i];
    }
    return out;
}

/// Number of irreducible complex characters of Z/n. Characters are enumerated
/// as exponent tuples: chi_k(x^m) = w^{k m}, w a primitive n-th root of unity.
inline std::int64_t character_count(std::int64_t n) {
    if (n < 1)
        throw usage_error("invalid-order", "cyclic order must be positive");
    std::set<std::vector<std::int64_t>> characters;
    for (std::int64_t k = 0; k < n; ++k) {
        std::vector<std::int64_t> values(static_cast<std::size_t>(n));
        for (std::int64_t m = 0; m < n; ++m)
            values[static_cast<std::size_t>(m)] = (k * m) % n;
        bool homomorphism = true;
        for (std::int64_t a = 0; a < n && homomorphism; ++a)
            for (std::int64_t b = 0; b < n && homomorphism; ++b)
                homomorphism = values[static_cast<std::size_t>((a + b) % n)] ==
                               (values[static_cast<std::size_t>(a)] +
                                values[static_cast<std::size_t>(b)]) % n;
        if (homomorphism)
            characters.insert(std::move(values));
    }
    return static_cast<std::int64_t>(characters.size());
}

/// Multiplicity of every irreducible character of Z/n in the regular
/// character: (1/n) sum_g chi_reg(g) conj(chi(g)). Only g = 1 has a non-zero
/// regular character value (n), where every chi is 1.
inline std::vector<std::int64_t> regular_multiplicities(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t k = 0; k < n; ++k) {
        std::int64_t sum = 0;
        for (std::int64_t m = 0; m < n; ++m) {
            const std::int64_t reg = m == 0 ? n : 0;
            const std::int64_t phase = (n - (k * m) % n) % n; // exponent of conj(chi_k(x^m))
            if (reg != 0 && phase == 0)
                sum += reg;
        }
        out.push_back(sum / n);
    }
    return out;
}

/// One map d: C_k -> C_{k-1} of an integer chain complex, as a matrix acting on
/// column vectors.
struct ChainMap {
    std::string name;
    IntMatrix matrix;
};

struct StageReport {
    std::string module;
    std::size_t dimension = 0;
    std::size_t kernel_rank = 0;      // of the outgoing map
    std::size_t image_rank = 0;       // of the incoming map
    bool composite_zero = true;
    bool image_saturated = true;      // coker(incoming) torsion-free
    bool exact = false;
};

struct ExactnessReport {
    std::string complex;
    std::vector<StageReport> stages;
    bool exact() const {
        for (const auto& s : stages)
            if (!s.exact)
                return false;
        return true;
    }
};

/// maps[0]: C_top -> ..., maps.back(): C_1 -> C_0. Checks exactness of
/// 0 -> C_top -> ... -> C_0 -> 0 at every module.
inline ExactnessReport check_exact(std::string name, const std::vector<ChainMap>& maps,
                                   const std::vector<std::string>& modules) {
    ExactnessReport report{std::move(name), {}};
    for (std::size_t k = 0; k <= maps.size(); ++k) {
        StageReport s;
        s.module = modules[k];
        const IntMatrix* incoming = k == 0 ? nullptr : &maps[k - 1].matrix;
        const IntMatrix* outgoing = k == maps.size() ? nullptr : &maps[k].matrix;
        s.dimension = outgoing ? outgoing->cols() : incoming->rows();
        s.kernel_rank = outgoing ? s.dimension - rank(*outgoing) : s.dimension;
        s.image_rank = incoming ? rank(*incoming) : 0;
        if (incoming && outgoing)
            s.composite_zero = ((*outgoing) * (*incoming)).is_zero();
        if (incoming)
            s.image_saturated = cokernel_invariants(incoming->transposed()).torsion.empty();
        s.exact = s.composite_zero && s.image_saturated && s.kernel_rank == s.image_rank;
        report.stages.push_back(s);
    }
    return report;
}

namespace detail {

inline IntMatrix stack_blocks(const std::vector<std::vector<IntMatrix>>& blocks) {
    std::size_t rows = 0, cols = 0;
    for (const auto& b : blocks.front())
        cols += b.cols();
    for (const auto& row : blocks)
        rows += row.front().rows();
    IntMatrix out(rows, cols);
    std::size_t r0 = 0;
    for (const auto& row : blocks) {
        std::size_t c0 = 0;
        for (const auto& b : row) {
            for (std::size_t i = 0; i < b.rows(); ++i)
                for (std::size_t j = 0; j < b.cols(); ++j)
                    out(r0 + i, c0 + j) = b(i, j);
            c0 += b.cols();
        }
        r0 += row.front().rows();
    }
    return out;
}

inline IntMatrix ones(std::size_t rows, std::size_t cols) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = 1;
    return m;
}

inline IntMatrix negated(IntMatrix m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        m.negate_row(i);
    return m;
}

} // namespace detail

/// Relation-module sequence for <x | x^n>:
///   0 -> Z[G/G_r] --theta--> ZG --(x-1)--> ZG --aug--> Z -> 0
/// with G = G_r = Z/n and theta(1) = the image of theta_element.
inline ExactnessReport relation_module_sequence(std::int64_t n, const FreeRingElement& theta_element) {
    const auto& a = theta_element.alphabet();
    const std::size_t N = static_cast<std::size_t>(n);
    const FreeRingElement x(Word::generator(a, GeneratorId{0}));
    const IntMatrix theta_block = embed(theta_element, n);
    IntMatrix theta(N, 1);
    for (std::size_t i = 0; i < N; ++i)
        theta(i, 0) = theta_block(i, 0);
    const IntMatrix boundary = embed(x - FreeRingElement::one(a), n);
    return check_exact("relation-module", {{"theta", theta}, {"boundary", boundary},
                                           {"augmentation", detail::ones(1, N)}},
                       {"Z[G/G_r]", "ZG^|X|", "ZG", "Z"});
}

/// Cellular chains of the subdivided Cayley complex of <x | x^n>:
///   0 -> ZG -> ZG^2 -> ZG + Z[G/G_r] -> Z -> 0
/// 2-cell beta |-> (d root/dx) e_x + (root - 1) f; e_x |-> (x - 1) v;
/// f |-> c - v; augmentation on v and c.
inline ExactnessReport subdivided_complex(std::int64_t n) {
    auto a = Alphabet::make({"x"});
    const std::size_t N = static_cast<std::size_t>(n);
    const Word r = Word::generator(a, GeneratorId{0}, n);
    const Word rt = root(r).root;
    const FreeRingElement one = FreeRingElement::one(a);
    const IntMatrix d2 = detail::stack_blocks(
        {{embed(fox_derivative(rt, GeneratorId{0}), n)}, {embed(FreeRingElement(rt) - one, n)}});
    const IntMatrix x_minus_one = embed(FreeRingElement(Word::generator(a, GeneratorId{0})) - one, n);
    const IntMatrix d1 = detail::stack_blocks(
        {{x_minus_one, detail::negated(IntMatrix::identity(N))},
         {IntMatrix(1, N), detail::ones(1, N)}});
    return check_exact("subdivided-cayley", {{"d2", d2}, {"d1", d1}, {"augmentation", detail::ones(1, N + 1)}},
                       {"ZG^|R|", "ZG^(|R|+|X|)", "ZG+Z[G/G_r]", "Z"});
}

struct CyclicResolutionReport {
    std::int64_t n = 0;
    ExactnessReport relation_module;
    ExactnessReport subdivided;
    bool exact() const { return relation_module.exact() && subdivided.exact(); }
};

inline FreeRingElement norm_element(const AlphabetPtr& a, std::int64_t n) {
    FreeRingElement out(a);
    for (std::int64_t k = 0; k < n; ++k)
        out.add_term(Word::generator(a, GeneratorId{0}, k), 1);
    return out;
}

/// Exactness of both complexes for <x | x^n>; theta is induced by the Fox
/// derivative of x^n, i.e. 1 + x + ... + x^{n-1}.
inline CyclicResolutionReport cyclic_resolution_report(std::int64_t n) {
    if (n < 2)
        throw usage_error("invalid-order", "cyclic resolution check needs n >= 2");
    auto a = Alphabet::make({"x"});
    const FreeRingElement theta = fox_derivative(Word::generator(a, GeneratorId{0}, n), GeneratorId{0});
    return {n, relation_module_sequence(n, theta), subdivided_complex(n)};
}

inline bool verify_cyclic_resolution(std::int64_t n) { return cyclic_resolution_report(n).exact(); }

/// Homology H_0..H_top of an integer chain complex given by maps
/// d_top, ..., d_1 (column-vector convention).
inline std::vector<AbelianGroupInvariants> chain_homology(const std::vector<IntMatrix>& maps,
                                                          std::size_t dim0) {
    // maps[k] : C_{k+1} -> C_k after reversing to ascending order
    std::vector<IntMatrix> d(maps.rbegin(), maps.rend());
    std::vector<AbelianGroupInvariants> out;
    for (std::size_t k = 0; k <= d.size(); ++k) {
        const std::size_t dim = k == 0 ? dim0 : d[k - 1].cols();
        const std::size_t out_rank = k == 0 ? 0 : rank(d[k - 1]);
        AbelianGroupInvariants h;
        if (k < d.size()) {
            const AbelianGroupInvariants coker = cokernel_invariants(d[k].transposed());
            h.torsion = coker.torsion;
            h.rank = dim - out_rank - rank(d[k]);
        } else {
            h.rank = dim - out_rank;
        }
        out.push_back(h);
    }
    return out;
}

/// Bredon chains of the subdivided complex of <x | x^n> with complex
/// representation ring coefficients: free orbits contribute Z, the singular
/// 0-cell orbit G/G_r contributes R_C(Z/n) = Z^{#characters}, and the spoke f
/// induces the regular representation. Returns H_0, H_1, H_2.
inline std::vector<AbelianGroupInvariants> bredon_homology_oracle(std::int64_t n) {
    const std::int64_t chars = character_count(n);
    const auto reg = regular_multiplicities(n);
    auto a = Alphabet::make({"x"});
    const Word r = Word::generator(a, GeneratorId{0}, n);
    const Word rt = root(r).root;
    const FreeRingElement one = FreeRingElement::one(a);
    // Free orbits tensor down via augmentation.
    IntMatrix d2(2, 1);
    d2(0, 0) = augment(fox_derivative(rt, GeneratorId{0}));
    d2(1, 0) = augment(FreeRingElement(rt) - one);
    IntMatrix d1(1 + static_cast<std::size_t>(chars), 2);
    d1(0, 0) = augment(FreeRingElement(Word::generator(a, GeneratorId{0})) - one);
    d1(0, 1) = -1;
    for (std::int64_t k = 0; k < chars; ++k)
        d1(1 + static_cast<std::size_t>(k), 1) = reg[static_cast<std::size_t>(k)];
    return chain_homology({d2, d1}, d1.rows());
}

} // namespace bredon
