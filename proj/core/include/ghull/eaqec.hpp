#ifndef GHULL_EAQEC_HPP
#define GHULL_EAQEC_HPP

/**
 * @file eaqec.hpp
 * @brief EAQEC parameter synthesis from classical codes and from the closed
 *        parameter families of the hull-decomposition construction.
 *
 * An EAQEC code is handled purely as a parameter 4-tuple [[n, k, d; c]]_q.
 * Both pipelines here (LCD route and hull-decomposition route) emit
 * maximal-entanglement rows, i.e. c = n - k always holds for their output.
 */

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ghull/linear_code.hpp"

namespace ghull {

/// Field order as a (p, m) label; large family fields (e.g. 2^100) are never
/// materialized, the label is all that is needed.
struct QLabel {
    std::uint64_t p = 0;
    std::uint64_t m = 1;

    friend bool operator==(const QLabel&, const QLabel&) = default;
};

struct EaqecParams {
    std::uint64_t n = 0;
    std::uint64_t k = 0;  // logical dimension
    std::uint64_t d = 0;
    bool d_is_lower_bound = true;
    std::uint64_t c = 0;  // ebits
    QLabel q;
    bool degenerate = false;  // k == 0 rows are kept but flagged
    std::string provenance;

    friend bool operator==(const EaqecParams&, const EaqecParams&) = default;
};

/// Maximal entanglement: c = n - k.
bool classify_me(const EaqecParams& p);

/// [[n, k, d; n-k]]_q from an s-Galois LCD code; NotLCD when the certificate
/// is singular.
EaqecParams eaqec_from_lcd(const LinearCode& c, unsigned s, const DistanceReport& d);

/// Theorem-style pipeline: hull_decompose, then [[n, k-h, d'; n-k+h]]_q where
/// d' is d(C) as a certified lower bound, upgraded to the exact d(D) when the
/// complement budget suffices.
EaqecParams eaqec_from_hull_decomposition(const LinearCode& c, unsigned s, const DistanceReport& c_dist,
                                          std::uint64_t complement_budget = 0);

// ----------------------------------------------------------- parameter families

struct FamilyRow {
    std::string family;  // "cor4.1", "cor4.2", "cor4.3", "thm5.2", "thm5.3"
    std::vector<std::pair<std::string, std::uint64_t>> inputs;
    EaqecParams out;  // d_is_lower_bound is always true for family rows
};

/// Shared row arithmetic of the ME families: [[N, k-h, >= N-k+1; N-k+h]]_q.
EaqecParams me_family_row(QLabel q, std::uint64_t n, std::uint64_t k, std::uint64_t h);

/// n = r(q-1)/(p^s-1); rows for lengths n, n+1, n+2.
std::array<FamilyRow, 3> family_cor41(std::uint64_t p, unsigned m, unsigned s, std::uint64_t r, std::uint64_t k,
                                      std::uint64_t h);

/// n = r(q-1)/gcd(x1, q-1); rows for lengths n, n+1, n+2.
std::array<FamilyRow, 3> family_cor42(std::uint64_t p, unsigned m, unsigned s, std::uint64_t x1, std::uint64_t x2,
                                      std::uint64_t r, std::uint64_t k, std::uint64_t h);

/// n = t*p^(a*w); rows for lengths n, n+1.
std::array<FamilyRow, 2> family_cor43(std::uint64_t p, unsigned m, unsigned s, std::uint64_t a, std::uint64_t t,
                                      std::uint64_t w, std::uint64_t k, std::uint64_t h);

enum class CharCase { odd, even };

/// Core arithmetic shared by family_thm52_53 and the table reproduction
/// harness (which needs it even for hypothesis-violating printed rows).
/// Throws only BranchAmbiguous.
struct Thm52Arithmetic {
    std::uint64_t a = 0;
    std::uint64_t d = 0;
    std::uint64_t n = 0;     // 2m
    std::uint64_t klog = 0;  // k1 + k2 - a
    std::uint64_t c = 0;     // 2m - (k1 + k2) + a
    unsigned branch = 0;
};
Thm52Arithmetic thm52_53_arithmetic(unsigned m, unsigned k1, unsigned k2, unsigned s_qpower, CharCase char_case);

/// Gabidulin pair family: [[2m, k-a, >= d; 2m-k+a]] with k = k1+k2, the hull
/// contribution `a` chosen by the (s, k1, k2) branch, and d = min{2(m-k1+1),
/// m-k2+1} (odd case) or min{m-k1+1, m-k2+1} (even case). BranchAmbiguous when
/// s matches no stated branch.
FamilyRow family_thm52_53(std::uint64_t q_base, unsigned m, unsigned k1, unsigned k2, unsigned s_qpower,
                          CharCase char_case);

}  // namespace ghull

#endif
