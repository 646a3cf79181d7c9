#include "ghull/eaqec.hpp"

#include <algorithm>
#include <numeric>

namespace ghull {

bool classify_me(const EaqecParams& p) { return p.c == p.n - p.k; }

EaqecParams eaqec_from_lcd(const LinearCode& c, unsigned s, const DistanceReport& d) {
    auto [lcd, cert] = c.is_galois_lcd(s);
    if (!lcd) raise(Errc::NotLCD, "code has a nontrivial s-Galois hull");
    EaqecParams out;
    out.n = c.length();
    out.k = c.dim();
    out.d = d.value;
    out.d_is_lower_bound = !d.exact();
    out.c = c.length() - c.dim();
    out.q = QLabel{c.field()->p(), c.field()->m()};
    return out;
}

EaqecParams eaqec_from_hull_decomposition(const LinearCode& c, unsigned s, const DistanceReport& c_dist,
                                          std::uint64_t complement_budget) {
    const auto dec = c.hull_decompose(s);
    const std::uint64_t h = dec.hull.dim();

    EaqecParams out;
    out.n = c.length();
    out.k = c.dim() - h;
    out.c = c.length() - c.dim() + h;
    out.q = QLabel{c.field()->p(), c.field()->m()};
    out.degenerate = out.k == 0;

    // d(C) certifies a lower bound since D is a subcode of C; the complement's
    // own exact distance is better when affordable
    out.d = c_dist.value;
    out.d_is_lower_bound = true;
    if (!dec.complement.is_zero() && complement_budget > 0) {
        const auto dd = dec.complement.min_distance(complement_budget);
        if (dd.exact()) {
            out.d = dd.value;
            out.d_is_lower_bound = false;
        }
    }
    // h = 0 means D = C, so an exact d(C) is already the exact answer
    if (out.d_is_lower_bound && h == 0 && c_dist.exact()) out.d_is_lower_bound = false;
    return out;
}

EaqecParams me_family_row(QLabel q, std::uint64_t n, std::uint64_t k, std::uint64_t h) {
    EaqecParams out;
    out.n = n;
    out.k = k - h;
    out.d = n - k + 1;
    out.d_is_lower_bound = true;
    out.c = n - k + h;
    out.q = q;
    out.degenerate = out.k == 0;
    return out;
}

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t e, const char* what) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (r > (std::uint64_t(1) << 62) / base) raise(Errc::PreconditionViolated, std::string(what) + " overflows");
        r *= base;
    }
    return r;
}

void require(bool ok, const std::string& failed_condition) {
    if (!ok) raise(Errc::PreconditionViolated, failed_condition);
}

std::vector<std::pair<std::string, std::uint64_t>> family_inputs(
    std::initializer_list<std::pair<const char*, std::uint64_t>> kv) {
    std::vector<std::pair<std::string, std::uint64_t>> out;
    for (const auto& [k, v] : kv) out.emplace_back(k, v);
    return out;
}

}  // namespace

std::array<FamilyRow, 3> family_cor41(std::uint64_t p, unsigned m, unsigned s, std::uint64_t r, std::uint64_t k,
                                      std::uint64_t h) {
    require(is_prime_u64(p) && p % 2 == 1, "p must be an odd prime");
    require(s >= 1 && 2 * s <= m && m % (2 * s) == 0, "2s | m");
    const std::uint64_t q = checked_pow(p, m, "q = p^m");
    const std::uint64_t ps = checked_pow(p, s, "p^s");
    require(r >= 1 && r <= ps - 1, "1 <= r <= p^s - 1");
    const std::uint64_t n = r * ((q - 1) / (ps - 1));
    require(k >= 1 && k <= (ps + n) / (ps + 1), "1 <= k <= floor((p^s + n)/(p^s + 1))");
    require(h <= k - 1, "0 <= h <= k - 1");

    const QLabel ql{p, m};
    const auto in = family_inputs({{"p", p}, {"m", m}, {"s", s}, {"r", r}, {"k", k}, {"h", h}});
    return {FamilyRow{"cor4.1", in, me_family_row(ql, n, k, h)},
            FamilyRow{"cor4.1", in, me_family_row(ql, n + 1, k, h)},
            FamilyRow{"cor4.1", in, me_family_row(ql, n + 2, k, h)}};
}

std::array<FamilyRow, 3> family_cor42(std::uint64_t p, unsigned m, unsigned s, std::uint64_t x1, std::uint64_t x2,
                                      std::uint64_t r, std::uint64_t k, std::uint64_t h) {
    require(is_prime_u64(p) && p % 2 == 1, "p must be an odd prime");
    require(s >= 1 && 2 * s <= m && m % (2 * s) == 0, "2s | m");
    const std::uint64_t q = checked_pow(p, m, "q = p^m");
    const std::uint64_t ps = checked_pow(p, s, "p^s");
    require(x1 >= 1 && x2 >= 1, "x1, x2 positive");
    const unsigned __int128 lcm12 = (unsigned __int128)x1 / std::gcd(x1, x2) * x2;
    require(lcm12 % (q - 1) == 0, "(q-1) | lcm(x1, x2)");
    require(x1 % ((q - 1) / (ps - 1)) == 0, "((q-1)/(p^s-1)) | x1");
    const std::uint64_t g = std::gcd(x1, q - 1);
    require(r >= 1 && r <= (q - 1) / g, "1 <= r <= (q-1)/gcd(x1, q-1)");
    const std::uint64_t n = r * ((q - 1) / g);
    require(k >= 1 && k <= (ps + n) / (ps + 1), "1 <= k <= floor((p^s + n)/(p^s + 1))");
    require(h <= k - 1, "0 <= h <= k - 1");

    const QLabel ql{p, m};
    const auto in =
        family_inputs({{"p", p}, {"m", m}, {"s", s}, {"x1", x1}, {"x2", x2}, {"r", r}, {"k", k}, {"h", h}});
    return {FamilyRow{"cor4.2", in, me_family_row(ql, n, k, h)},
            FamilyRow{"cor4.2", in, me_family_row(ql, n + 1, k, h)},
            FamilyRow{"cor4.2", in, me_family_row(ql, n + 2, k, h)}};
}

std::array<FamilyRow, 2> family_cor43(std::uint64_t p, unsigned m, unsigned s, std::uint64_t a, std::uint64_t t,
                                      std::uint64_t w, std::uint64_t k, std::uint64_t h) {
    require(is_prime_u64(p) && p % 2 == 1, "p must be an odd prime");
    require(s >= 1 && 2 * s <= m && m % (2 * s) == 0, "2s | m");
    require(a >= 1 && s % a == 0, "a | s");
    const std::uint64_t ps = checked_pow(p, s, "p^s");
    const std::uint64_t pa = checked_pow(p, a, "p^a");
    require(t >= 1 && t <= pa, "1 <= t <= p^a");
    require(w >= 1 && w <= m / a - 1, "1 <= w <= m/a - 1");
    const std::uint64_t n = t * checked_pow(p, a * w, "p^(a*w)");
    require(k >= 1 && k <= (ps + n - 1) / (ps + 1), "1 <= k <= floor((p^s + n - 1)/(p^s + 1))");
    require(h <= k - 1, "0 <= h <= k - 1");

    const QLabel ql{p, m};
    const auto in =
        family_inputs({{"p", p}, {"m", m}, {"s", s}, {"a", a}, {"t", t}, {"w", w}, {"k", k}, {"h", h}});
    return {FamilyRow{"cor4.3", in, me_family_row(ql, n, k, h)},
            FamilyRow{"cor4.3", in, me_family_row(ql, n + 1, k, h)}};
}

Thm52Arithmetic thm52_53_arithmetic(unsigned m, unsigned k1, unsigned k2, unsigned s, CharCase char_case) {
    require(k1 >= 1 && k1 <= m && k2 >= 1 && k2 <= m, "1 <= k1, k2 <= m");
    require(s < m, "0 <= s <= m - 1");

    // branch selection follows the statement literally; a (k1 < s <= k2)-style
    // gap with k1 != k2 matches nothing and is reported, not guessed
    Thm52Arithmetic out;
    if (s <= std::min(k1, k2)) {
        out.a = std::min<std::uint64_t>(m - k1, s) + std::min<std::uint64_t>(m - k2, s);
        out.branch = 1;
    } else if (s <= k1 && s >= k2 + 1) {
        out.a = std::min<std::uint64_t>(m - k1, s) + std::min<std::uint64_t>(m - s, k2);
        out.branch = 2;
    } else if (s >= std::max(k1, k2) + 1) {
        out.a = std::min<std::uint64_t>(m - s, k1) + std::min<std::uint64_t>(m - s, k2);
        out.branch = 3;
    } else {
        raise(Errc::BranchAmbiguous, "s = " + std::to_string(s) + " with (k1, k2) = (" + std::to_string(k1) + ", " +
                                         std::to_string(k2) + ") matches no stated branch");
    }

    const std::uint64_t k = std::uint64_t(k1) + k2;
    out.d = char_case == CharCase::odd ? std::min<std::uint64_t>(2 * (std::uint64_t(m) - k1 + 1), m - k2 + 1)
                                       : std::min<std::uint64_t>(m - k1 + 1, m - k2 + 1);
    out.n = 2 * std::uint64_t(m);
    out.klog = k - out.a;
    out.c = 2 * std::uint64_t(m) - k + out.a;
    return out;
}

FamilyRow family_thm52_53(std::uint64_t q_base, unsigned m, unsigned k1, unsigned k2, unsigned s, CharCase char_case) {
    // decompose q_base as a prime power
    auto fs = prime_factors(q_base);
    require(q_base >= 2 && fs.size() == 1, "q must be a prime power");
    const std::uint64_t p = fs[0];
    std::uint64_t j = 0, t = q_base;
    while (t > 1) {
        t /= p;
        ++j;
    }

    if (char_case == CharCase::odd) {
        require(p % 2 == 1, "odd case needs an odd prime power q");
        require(m % 2 == 1, "odd case needs odd m (self-dual basis criterion)");
    } else {
        require(q_base == 2, "even case is stated over the base field GF(2)");
    }

    const auto arith = thm52_53_arithmetic(m, k1, k2, s, char_case);

    FamilyRow row;
    row.family = char_case == CharCase::odd ? "thm5.2" : "thm5.3";
    row.inputs = family_inputs({{"q", q_base}, {"m", m}, {"k1", k1}, {"k2", k2}, {"s", s}});
    row.out.n = arith.n;
    row.out.k = arith.klog;
    row.out.d = arith.d;
    row.out.d_is_lower_bound = true;
    row.out.c = arith.c;
    row.out.q = QLabel{p, j * m};
    row.out.degenerate = row.out.k == 0;
    return row;
}

}  // namespace ghull
