#ifndef GHULL_LINEAR_CODE_HPP
#define GHULL_LINEAR_CODE_HPP

/**
 * @file linear_code.hpp
 * @brief Linear codes over GF(q), their s-Galois duals, hulls and the
 *        constructive hull decomposition C = Hull_s(C) (+) D.
 *
 * The s-Galois form on GF(p^m)^n is [x,y]_s = sum_i x_i y_i^(p^s); s = 0 is
 * the Euclidean inner product and s = m/2 (m even) the Hermitian one. The
 * s-Galois dual is computed through the generator-matrix route: C^{perp_s}
 * equals the Euclidean dual of the code generated by G^(p^(m-s)).
 *
 * Codes are immutable values and always store the canonical RREF generator,
 * so equal codes compare bit-equal.
 */

#include <cstdint>
#include <optional>
#include <utility>

#include "ghull/matrix.hpp"

namespace ghull {

struct DistanceReport {
    enum class Exactness { exact, lower_bound };
    enum class Method { exhaustive_messages, exhaustive_codewords, structural_bound };

    std::uint64_t value = 0;
    Exactness exactness = Exactness::lower_bound;
    Method method = Method::structural_bound;
    std::uint64_t work_used = 0;

    bool exact() const noexcept { return exactness == Exactness::exact; }
};

class LinearCode;
struct HullDecomposition;

class LinearCode {
  public:
    /// Canonicalizes an arbitrary spanning set: k = rank(rows), dependent rows
    /// dropped. Throws ZeroCode when the span is trivial.
    static LinearCode from_generator(const Matrix& rows);

    /// Degenerate zero-dimensional handle; legal only as a hull/complement
    /// result. Everything except dimension queries rejects it.
    static LinearCode zero_code(FieldPtr f, std::size_t n);

    const FieldPtr& field() const noexcept { return gen_.field(); }
    std::size_t length() const noexcept { return gen_.cols(); }
    std::size_t dim() const noexcept { return gen_.rows(); }
    bool is_zero() const noexcept { return gen_.rows() == 0; }
    const Matrix& generator() const noexcept { return gen_; }

    /// The structural lower bound attached by a construction, if any.
    std::optional<std::uint64_t> structural_distance_lb() const noexcept { return structural_lb_; }
    LinearCode with_structural_lb(std::uint64_t lb) const;

    LinearCode galois_dual(unsigned s) const;  ///< SOutOfRange unless 0 <= s < m
    LinearCode hull(unsigned s) const;
    /// Lemma-style LCD certificate: verdict plus the k x k matrix G (G^(p^(m-s)))^T.
    std::pair<bool, Matrix> is_galois_lcd(unsigned s) const;

    /// Constructive decomposition: extends the hull basis to a basis of C by
    /// greedily appending canonical generator rows that grow the rank, then
    /// certifies D. A singular certificate is an internal bug and raises
    /// InternalInvariantViolation.
    HullDecomposition hull_decompose(unsigned s) const;

    /// Exact distance when affordable within `budget` work units, otherwise a
    /// lower bound (the attached structural bound, else 1). Never throws on
    /// budget overrun.
    DistanceReport min_distance(std::uint64_t budget) const;

    bool contains(std::span<const rep_t> word) const;

    friend bool operator==(const LinearCode& a, const LinearCode& b) { return a.gen_ == b.gen_; }

  private:
    explicit LinearCode(Matrix canonical_gen) : gen_(std::move(canonical_gen)) {}

    Matrix gen_;  // k x n, canonical RREF, full row rank
    std::optional<std::uint64_t> structural_lb_;
};

/// Certified constructive decomposition C = Hull_s(C) (+) D.
struct HullDecomposition {
    LinearCode hull;        ///< H = Hull_s(C), possibly the zero handle
    LinearCode complement;  ///< D with C = H (+) D, s-Galois LCD (zero handle when H = C)
    unsigned s = 0;
    Matrix certificate;  ///< G_D (G_D^(p^(m-s)))^T
    bool certificate_nonsingular = false;
};

/// [x,y]_s = sum_i x_i y_i^(p^s); LengthMismatch unless |x| == |y|.
rep_t galois_form(const FiniteField& f, std::span<const rep_t> x, std::span<const rep_t> y, unsigned s);

/// True iff d meets the Singleton bound n-k+1; RequiresExactDistance unless
/// the report is exact.
bool is_mds(const LinearCode& c, const DistanceReport& d);

}  // namespace ghull

#endif
