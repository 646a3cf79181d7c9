#ifndef GHULL_CONSTRUCTIONS_HPP
#define GHULL_CONSTRUCTIONS_HPP

/**
 * @file constructions.hpp
 * @brief Concrete code families: cyclic and negacyclic codes from root sets,
 *        Gabidulin codes over self-dual bases, and matrix-product codes.
 */

#include <optional>
#include <vector>

#include "ghull/linear_code.hpp"

namespace ghull {

// ---------------------------------------------------------------- extensions

/// GF(q) sitting inside GF(q^degree), with the canonical embedding.
struct ExtensionTower {
    FieldPtr base;
    FieldPtr top;
    SubfieldEmbedding emb;
    unsigned degree;
};

ExtensionTower make_extension(FieldPtr base, unsigned degree);

/// Converts a Galois index expressed in powers of q = |base| into this
/// framework's prime-power index on the top field: sigma -> sigma * m_base.
unsigned galois_index_from_qpower(const ExtensionTower& t, unsigned s_qpower);

// ---------------------------------------------- cyclic / negacyclic from roots

struct RootSetOptions {
    bool strict_closure = true;  ///< reject defining sets not closed under *q
    std::optional<std::uint64_t> root_power;  ///< root = primitive^power override
};

struct RootSetCode {
    enum class Kind { cyclic, negacyclic };

    Kind kind;
    LinearCode code;
    FieldPtr splitting_field;
    rep_t root = 0;                 // element of the splitting field
    std::uint64_t root_order = 0;   // n (cyclic) or 2n (negacyclic)
    std::vector<std::uint64_t> requested_exponents;
    std::vector<std::uint64_t> closed_exponents;
    bool closure_enlarged = false;  // permissive mode widened the request
    std::vector<rep_t> gen_poly;    // over the base field, low degree first, monic
    std::uint64_t bch_lower_bound = 1;
};

/// [n, n - deg g] cyclic code with g(x) = prod_{i in closure} (x - root^i),
/// root of order n in the minimal splitting field. Exponents are taken mod n.
RootSetCode cyclic_code(FieldPtr f, std::uint64_t n, std::vector<std::uint64_t> exponents,
                        const RootSetOptions& opt = {});

/// Negacyclic variant: root of order 2n, all exponents odd mod 2n, closure
/// taken mod 2n; the generator polynomial divides x^n + 1.
RootSetCode negacyclic_code(FieldPtr f, std::uint64_t n, std::vector<std::uint64_t> odd_exponents,
                            const RootSetOptions& opt = {});

// ------------------------------------------------------------------ Gabidulin

struct GabidulinSpec {
    ExtensionTower tower;       // code length = tower.degree, alphabet = tower.top
    std::vector<rep_t> basis;   // basis of top over base, as top-field reps
    unsigned k = 0;
    bool self_dual = false;     // trace Gram equals the identity (verified)
};

/// Validates independence over the base field and the self-dual property.
GabidulinSpec make_gabidulin_spec(ExtensionTower tower, std::vector<rep_t> basis, unsigned k);

/// Moore-matrix generator rows (g_j^(q^i))_{i<k}; MDS with d = m-k+1, attached
/// here as a structural lower bound (tests confirm exactness by enumeration).
LinearCode gabidulin_code(const GabidulinSpec& spec);

/// Deterministic backtracking search for a basis with Tr(g_i g_j) = delta_ij.
/// Returns nullopt when none exists (exhaustive, so this is a proof at this
/// size); SearchBudgetExceeded for fields beyond 2^14 elements.
std::optional<std::vector<rep_t>> find_self_dual_basis(const ExtensionTower& t);

/// Hull dimension of G_k(g) over a self-dual basis, s in q-powers:
/// min{m-k, s} for 0 <= s <= k, min{m-s, k} for k+1 <= s <= m-1.
unsigned gabidulin_hull_dim_formula(unsigned m, unsigned k, unsigned s);

// -------------------------------------------------------------- matrix product

struct MatrixProductSpec {
    Matrix A;                              // l x t, full row rank
    std::vector<LinearCode> constituents;  // l codes, same length and field
    unsigned s = 0;
    Matrix gram;                           // A (A^(p^(m-s)))^T for square A, else 0x0
    bool gram_is_diagonal_invertible = false;
    std::vector<rep_t> lambdas;            // diagonal entries when applicable
};

MatrixProductSpec make_matrix_product_spec(Matrix a, std::vector<LinearCode> constituents, unsigned s);

struct MatrixProductBuild {
    LinearCode code;  // structural bound min_i d_i d(U_A(i)) attached
    std::vector<DistanceReport> constituent_distances;
    std::vector<std::uint64_t> row_code_distances;  // d(U_A(i)), exact
    std::uint64_t distance_bound = 1;
};

/// [C_1,...,C_l]A of length n*t and dimension sum k_i.
MatrixProductBuild matrix_product_code(const MatrixProductSpec& spec, std::uint64_t distance_budget);

/// Euclidean dual via both the kernel method and [C_1^perp,...](A^-1)^T; the
/// two routes must agree (InternalInvariantViolation otherwise).
LinearCode matrix_product_dual(const MatrixProductSpec& spec);

/// Hull via Theorem-style factorization [Hull_s(C_1),...,Hull_s(C_l)]A.
/// Requires the gram to be invertible diagonal (GramNotDiagonal otherwise);
/// callers may still compute the hull directly on the product code.
LinearCode matrix_product_hull(const MatrixProductSpec& spec);

}  // namespace ghull

#endif
