#pragma once

#include "homsuper/algebra.hpp"
#include "homsuper/document.hpp"

#include <algorithm>
#include <filesystem>
#include <random>
#include <tuple>
#include <vector>

namespace support {

using homsuper::HomSuperalgebra;
using homsuper::Scalar;

struct Entry {
    std::size_t i, j, k;  // 1-based
    Scalar c;
};

inline HomSuperalgebra make_algebra(std::size_t even, std::size_t odd, const std::vector<Entry>& entries,
                                    std::vector<Scalar> diag = {}) {
    const homsuper::SuperSpace s(even, odd);
    homsuper::BilinearOp p(s);
    for (const auto& e : entries)
        p.set(e.i - 1, e.j - 1, e.k - 1, e.c);
    homsuper::EvenMap alpha = diag.empty() ? homsuper::EvenMap::identity(s) : homsuper::EvenMap::diagonal(s, diag);
    return HomSuperalgebra(std::move(p), std::move(alpha));
}

// a*a = b on (2|0).
inline HomSuperalgebra a2_b() { return make_algebra(2, 0, {{1, 1, 2, 1}}); }
// f*f = e on (1|1).
inline HomSuperalgebra ff_e() { return make_algebra(1, 1, {{2, 2, 1, 1}}); }

/// Graded algebra with coefficients in [-range, range] on parity-allowed
/// positions and alpha the identity or a diagonal endomorphism. Positions
/// that would break multiplicativity are cleared.
inline HomSuperalgebra random_multiplicative(std::mt19937& rng, std::size_t max_even, std::size_t max_odd,
                                             int range = 2) {
    std::uniform_int_distribution<std::size_t> de(0, max_even), dodd(0, max_odd);
    std::size_t e = 0, o = 0;
    while (e + o == 0) {
        e = de(rng);
        o = dodd(rng);
    }
    const homsuper::SuperSpace s(e, o);
    const std::size_t n = s.dim();
    std::uniform_int_distribution<int> coeff(-range, range);
    std::vector<Scalar> diag;
    if (std::bernoulli_distribution(0.5)(rng))
        for (std::size_t i = 0; i < n; ++i)
            diag.emplace_back(coeff(rng));
    homsuper::BilinearOp p(s);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (s.parity(i) + s.parity(j) != s.parity(k))
                    continue;
                if (!diag.empty() && diag[k] != diag[i] * diag[j])
                    continue;
                p.set(i, j, k, coeff(rng));
            }
    homsuper::EvenMap alpha = diag.empty() ? homsuper::EvenMap::identity(s) : homsuper::EvenMap::diagonal(s, diag);
    return HomSuperalgebra(std::move(p), std::move(alpha));
}

inline std::filesystem::path corpus_dir() { return HOMSUPER_CORPUS_DIR; }

inline std::vector<std::filesystem::path> corpus_files() {
    std::vector<std::filesystem::path> out;
    for (const auto& entry : std::filesystem::directory_iterator(corpus_dir()))
        if (entry.path().extension() == ".json")
            out.push_back(entry.path());
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<homsuper::AlgebraDocument> corpus() {
    std::vector<homsuper::AlgebraDocument> out;
    for (const auto& p : corpus_files())
        out.push_back(homsuper::load_document(p));
    return out;
}

/// Plain binary algebras of the corpus (no ternary product).
inline std::vector<homsuper::AlgebraDocument> binary_corpus() {
    auto all = corpus();
    std::erase_if(all, [](const auto& d) { return d.algebra.ternary().has_value(); });
    return all;
}

} // namespace support
