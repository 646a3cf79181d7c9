#ifndef GHULL_FINITE_FIELD_HPP
#define GHULL_FINITE_FIELD_HPP

/**
 * @file finite_field.hpp
 * @brief Exact arithmetic in GF(p^m) with runtime-chosen p and m.
 *
 * A FiniteField owns a monic irreducible modulus polynomial over GF(p) and
 * performs all arithmetic in the polynomial basis. Elements are passed around
 * as packed representatives (`rep_t`): the base-p digit string of the
 * coefficient vector, low degree first, so reps always lie in [0, q).
 *
 * Fields are immutable once created and safe to share across threads. Lookup
 * tables (exp/log, and a full addition table for small odd-characteristic
 * fields) are built eagerly inside create(), never mutated afterwards.
 *
 * When no modulus is supplied, create() picks the lexicographically smallest
 * monic irreducible of degree m, comparing coefficient tuples low degree
 * first. This makes every downstream artifact reproducible byte for byte.
 */

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "ghull/errors.hpp"

namespace ghull {

/// Packed element representative: base-p digits of the coefficient vector, value < q.
using rep_t = std::uint64_t;

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

class FiniteField {
  public:
    /// Builds GF(p^m). Throws NotPrime / DegreeMismatch / ReducibleModulus.
    /// Without an explicit modulus the deterministic lexicographically-smallest
    /// monic irreducible is chosen (for m = 1 this is the polynomial x).
    static FieldPtr create(std::uint64_t p, unsigned m,
                           std::optional<std::vector<std::uint64_t>> modulus = std::nullopt);

    std::uint64_t p() const noexcept { return p_; }
    unsigned m() const noexcept { return m_; }
    std::uint64_t q() const noexcept { return q_; }

    /// Modulus coefficients, low degree first, length m+1, monic.
    const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }

    /// A fixed generator of the multiplicative group (first rep in numeric order).
    rep_t primitive_element() const noexcept { return primitive_; }

    bool same(const FiniteField& other) const noexcept {
        return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
    }

    // -- arithmetic on packed reps (add/sub/mul inline: they dominate the
    //    exhaustive enumeration loops) --------------------------------------------

    rep_t add(rep_t a, rep_t b) const {
        if (char2_) return a ^ b;
        if (has_add_tab_) return add_tab_[a * q_ + b];
        return add_generic(a, b);
    }
    rep_t sub(rep_t a, rep_t b) const {
        if (char2_) return a ^ b;
        return add(a, neg(b));
    }
    rep_t neg(rep_t a) const;
    rep_t mul(rep_t a, rep_t b) const {
        if (has_exp_log_) {
            if (a == 0 || b == 0) return 0;
            return exp_[log_[a] + log_[b]];
        }
        return mul_generic(a, b);
    }
    rep_t inv(rep_t a) const;  ///< throws DivisionByZero on 0
    rep_t pow(rep_t a, std::uint64_t e) const;
    rep_t frobenius(rep_t a, std::uint64_t t) const;  ///< a^(p^t); t is reduced mod m
    std::uint64_t element_order(rep_t a) const;       ///< throws DivisionByZero on 0

    // -- conversions ---------------------------------------------------------------

    /// Coefficient vector of a rep, low degree first, length m.
    std::vector<std::uint64_t> coeffs(rep_t a) const;
    rep_t from_coeffs(std::span<const std::uint64_t> c) const;  ///< entries reduced mod p
    /// Embeds a signed integer via the prime subfield (e.g. -1 -> p-1).
    rep_t from_int(std::int64_t v) const;

    FiniteField(const FiniteField&) = delete;
    FiniteField& operator=(const FiniteField&) = delete;

  private:
    FiniteField() = default;

    std::uint64_t p_ = 0;
    unsigned m_ = 0;
    std::uint64_t q_ = 0;
    std::vector<std::uint64_t> modulus_;
    rep_t primitive_ = 0;

    // tables (built once in create(), q-dependent)
    bool char2_ = false;
    std::vector<std::uint32_t> log_;      // q entries, log_[0] unused
    std::vector<std::uint32_t> exp_;      // 2(q-1) entries for wrap-free lookup
    std::vector<std::uint32_t> add_tab_;  // q*q entries when small and p odd
    bool has_exp_log_ = false;
    bool has_add_tab_ = false;

    rep_t add_generic(rep_t a, rep_t b) const;
    rep_t mul_generic(rep_t a, rep_t b) const;
};

/// Scalar element value carrying its owning field; arithmetic across distinct
/// fields throws FieldMismatch. Matrices store bare reps instead; this wrapper
/// exists for scalar-level work where the safety check matters.
class Elem {
  public:
    Elem() = default;
    Elem(FieldPtr f, rep_t v) : f_(std::move(f)), v_(v) {}

    const FieldPtr& field() const noexcept { return f_; }
    rep_t rep() const noexcept { return v_; }

    friend Elem operator+(const Elem& a, const Elem& b) { return {a.checked(b), a.f_->add(a.v_, b.v_)}; }
    friend Elem operator-(const Elem& a, const Elem& b) { return {a.checked(b), a.f_->sub(a.v_, b.v_)}; }
    friend Elem operator*(const Elem& a, const Elem& b) { return {a.checked(b), a.f_->mul(a.v_, b.v_)}; }
    friend Elem operator/(const Elem& a, const Elem& b) { return {a.checked(b), a.f_->mul(a.v_, b.f_->inv(b.v_))}; }
    Elem operator-() const { return {f_, f_->neg(v_)}; }
    Elem pow(std::uint64_t e) const { return {f_, f_->pow(v_, e)}; }
    Elem frobenius(std::uint64_t t) const { return {f_, f_->frobenius(v_, t)}; }

    friend bool operator==(const Elem& a, const Elem& b) {
        a.checked(b);
        return a.v_ == b.v_;
    }

  private:
    FieldPtr checked(const Elem& other) const {
        if (!f_ || !other.f_ || !f_->same(*other.f_))
            raise(Errc::FieldMismatch, "elements belong to different fields");
        return f_;
    }

    FieldPtr f_;
    rep_t v_ = 0;
};

/// Ring homomorphism GF(p^a) -> GF(p^m) for a | m, fixed by choosing the first
/// root (in rep order) of the subfield modulus inside the top field.
class SubfieldEmbedding {
  public:
    SubfieldEmbedding(FieldPtr sub, FieldPtr sup);  ///< throws NotASubfield

    const FieldPtr& sub() const noexcept { return sub_; }
    const FieldPtr& sup() const noexcept { return sup_; }
    rep_t image_of_generator() const noexcept { return image_gen_; }

    rep_t embed(rep_t x_sub) const;
    bool in_image(rep_t x_sup) const;
    /// Inverse of embed() on the image; throws FieldMismatch when x is outside it.
    rep_t project(rep_t x_sup) const;

    /// Relative trace sum_{i} x^(|sub|^i), returned as an element of sub.
    rep_t trace(rep_t x_sup) const;

  private:
    FieldPtr sub_, sup_;
    rep_t image_gen_ = 0;
    // GF(p)-linear data for project(): column i = coeffs of embed(x^i), plus
    // a precomputed row-reduced solve of the resulting (m_sup x m_sub) system.
    std::vector<std::uint64_t> fwd_;      // m_sup * m_sub, column major
    std::vector<std::uint64_t> solve_;    // row-reduced augmented data
    std::vector<std::size_t> pivot_rows_;
};

namespace fieldpoly {
// Polynomials over GF(p) as plain coefficient vectors (low degree first), used
// by modulus search; exposed for tests.
bool is_irreducible(const std::vector<std::uint64_t>& f, std::uint64_t p);
std::vector<std::uint64_t> lex_smallest_irreducible(std::uint64_t p, unsigned m);
}  // namespace fieldpoly

bool is_prime_u64(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace ghull

#endif
