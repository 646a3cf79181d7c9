#ifndef GHULL_VERIFY_HPP
#define GHULL_VERIFY_HPP

/**
 * @file verify.hpp
 * @brief Randomized property suites with independent brute-force oracles.
 *
 * The oracles here deliberately avoid the linear-algebra routes they check:
 * the annihilator oracle walks every vector of GF(q)^n and evaluates the
 * s-Galois form directly; the hull oracle enumerates codeword pairs. Suites
 * are deterministic in the seed (per-case generators are seeded seed + index,
 * so results do not depend on execution order).
 */

#include <cstdint>
#include <random>

#include "ghull/serialize.hpp"

namespace ghull {

/// Deterministic bounded draw (avoids std::uniform_int_distribution, whose
/// output is implementation-defined).
struct Rng {
    std::mt19937_64 engine;

    explicit Rng(std::uint64_t seed) : engine(seed) {}
    std::uint64_t below(std::uint64_t n) { return engine() % n; }
};

/// Random [n, <=k_rows] code; resamples until the span is nonzero.
LinearCode random_code(Rng& rng, const FieldPtr& f, std::size_t n, std::size_t k_rows);

/// The set {x in GF(q)^n : [c, x]_s = 0 for all c in C} by direct enumeration
/// of all q^n vectors (the form is linear in c, so generator rows stand in for
/// all codewords). Returns the canonical basis; `count_out` gets |set|.
Subspace bruteforce_galois_annihilator(const LinearCode& c, unsigned s, std::uint64_t* count_out = nullptr);

/// dim {c in C : [c', c]_s = 0 for all c' in C} by enumerating C x C pairs.
std::size_t bruteforce_hull_dim(const LinearCode& c, unsigned s);

struct SuiteResult {
    std::string suite;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::vector<std::string> failure_notes;    // human summaries, first few
    std::vector<json> failure_artifacts;       // replayable descriptions
    double seconds = 0.0;

    bool passed() const noexcept { return failures == 0; }
};

/// Lemma-route dual == brute-force annihilator, all s, fields {2,3,4,9}, n <= 8.
SuiteResult verify_duality(std::uint64_t seed, std::size_t cases);

/// LCD certificate <=> trivial hull, plus decomposition soundness
/// (H (+) D = C, D certified LCD, dim H = dim Hull_s(C), H cap D = 0).
SuiteResult verify_decomposition(std::uint64_t seed, std::size_t cases);

/// Matrix-product hull factorization vs direct hull, bit-exact, on the
/// diag-gram configurations; includes the non-diagonal refusal path.
SuiteResult verify_mp_hull(std::uint64_t seed, std::size_t cases);

/// Gabidulin hull-dimension formula and MDS distance, exhaustive over
/// (q, m) in {(2,3), (3,3)}, all k, all s.
SuiteResult verify_gabidulin_hull();

}  // namespace ghull

#endif
