#include "ghull/finite_field.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

namespace ghull {

const char* errc_name(Errc c) noexcept {
    switch (c) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::ReducibleModulus: return "ReducibleModulus";
        case Errc::DegreeMismatch: return "DegreeMismatch";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::NotASubfield: return "NotASubfield";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::AmbientMismatch: return "AmbientMismatch";
        case Errc::NotSquare: return "NotSquare";
        case Errc::Singular: return "Singular";
        case Errc::SOutOfRange: return "SOutOfRange";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::ZeroCode: return "ZeroCode";
        case Errc::RequiresExactDistance: return "RequiresExactDistance";
        case Errc::NotLCD: return "NotLCD";
        case Errc::InternalInvariantViolation: return "InternalInvariantViolation";
        case Errc::RootOrderMismatch: return "RootOrderMismatch";
        case Errc::EvenExponent: return "EvenExponent";
        case Errc::NotClosedUnderFrobenius: return "NotClosedUnderFrobenius";
        case Errc::CoefficientsNotInBaseField: return "CoefficientsNotInBaseField";
        case Errc::NotABasis: return "NotABasis";
        case Errc::SearchBudgetExceeded: return "SearchBudgetExceeded";
        case Errc::NotFRR: return "NotFRR";
        case Errc::GramNotDiagonal: return "GramNotDiagonal";
        case Errc::PreconditionViolated: return "PreconditionViolated";
        case Errc::BranchAmbiguous: return "BranchAmbiguous";
        case Errc::RecipeInvalid: return "RecipeInvalid";
        case Errc::CatalogCorrupt: return "CatalogCorrupt";
    }
    return "UnknownError";
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod_u64(u64 a, u64 b, u64 mod) { return static_cast<u64>((u128)a * b % mod); }

u64 powmod_u64(u64 a, u64 e, u64 mod) {
    u64 r = 1 % mod;
    a %= mod;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, mod);
        a = mulmod_u64(a, a, mod);
        e >>= 1;
    }
    return r;
}

bool miller_rabin(u64 n, u64 a) {
    if (n % a == 0) return n == a;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    u64 x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

u64 pollard_rho(u64 n) {
    if ((n & 1) == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (mulmod_u64(x, x, n) + c) % n;
            y = (mulmod_u64(y, y, n) + c) % n;
            y = (mulmod_u64(y, y, n) + c) % n;
            u64 diff = x > y ? x - y : y - x;
            if (diff == 0) { d = n; break; }
            d = std::gcd(diff, n);
        }
        if (d != n) return d;
    }
}

// GF(p)[x] helpers on plain coefficient vectors, low degree first, trimmed.
using Poly = std::vector<u64>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, u64 p) {
    if (a.empty() || b.empty()) return {};
    std::vector<u64> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + mulmod_u64(a[i], b[j], p)) % p;
    }
    // reduce by monic f
    const std::size_t m = f.size() - 1;
    for (std::size_t d = prod.size(); d-- > m;) {
        u64 c = prod[d];
        if (!c) continue;
        prod[d] = 0;
        for (std::size_t i = 0; i < m; ++i) {
            u64 sub = mulmod_u64(c, f[i], p);
            prod[d - m + i] = (prod[d - m + i] + p - sub % p) % p;
        }
    }
    prod.resize(std::min(prod.size(), m));
    trim(prod);
    return prod;
}

Poly poly_powmod_xq(const Poly& base, u64 p, u64 e, const Poly& f) {
    // base^(p^e) mod f by repeated p-th powering
    Poly r = base;
    for (u64 i = 0; i < e; ++i) {
        Poly acc = {1};
        Poly b = r;
        u64 exp = p;
        while (exp) {
            if (exp & 1) acc = poly_mulmod(acc, b, f, p);
            b = poly_mulmod(b, b, f, p);
            exp >>= 1;
        }
        r = acc;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        u64 lead_inv = powmod_u64(b.back(), p - 2, p);
        while (a.size() >= b.size()) {
            u64 c = mulmod_u64(a.back(), lead_inv, p);
            if (c) {
                std::size_t off = a.size() - b.size();
                for (std::size_t i = 0; i < b.size(); ++i)
                    a[off + i] = (a[off + i] + p - mulmod_u64(c, b[i], p)) % p;
            }
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

}  // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 w : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == w) return true;
        if (!miller_rabin(n, w)) return false;
    }
    return true;
}

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> fs;
    for (u64 d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    std::vector<u64> stack;
    if (n > 1) stack.push_back(n);
    while (!stack.empty()) {
        u64 v = stack.back();
        stack.pop_back();
        if (v == 1) continue;
        if (is_prime_u64(v)) {
            if (std::find(fs.begin(), fs.end(), v) == fs.end()) fs.push_back(v);
            continue;
        }
        u64 d = pollard_rho(v);
        stack.push_back(d);
        stack.push_back(v / d);
    }
    std::sort(fs.begin(), fs.end());
    return fs;
}

namespace fieldpoly {

bool is_irreducible(const std::vector<u64>& f, u64 p) {
    // Rabin: f (monic, degree m) is irreducible iff x^(p^m) = x mod f and
    // gcd(x^(p^(m/r)) - x, f) = 1 for every prime r | m.
    const std::size_t m = f.size() - 1;
    if (m == 0) return false;
    if (m == 1) return true;
    Poly x = {0, 1};
    Poly xqm = poly_powmod_xq(x, p, m, f);
    if (xqm != x) return false;
    for (u64 r : prime_factors(m)) {
        Poly g = poly_powmod_xq(x, p, m / r, f);
        // g - x
        if (g.size() < 2) g.resize(2, 0);
        g[1] = (g[1] + p - 1) % p;
        trim(g);
        Poly d = poly_gcd(f, g, p);
        if (d.size() != 1) return false;
    }
    return true;
}

std::vector<u64> lex_smallest_irreducible(u64 p, unsigned m) {
    if (m == 1) return {0, 1};
    // iterate coefficient tuples (c0,...,c_{m-1}) in lexicographic order,
    // c0 compared first
    std::vector<u64> c(m, 0);
    for (;;) {
        std::vector<u64> f(c);
        f.push_back(1);
        if (is_irreducible(f, p)) return f;
        // odometer with c[m-1] fastest
        std::size_t i = m;
        while (i-- > 0) {
            if (++c[i] < p) break;
            c[i] = 0;
            if (i == 0) raise(Errc::ReducibleModulus, "no irreducible polynomial found");
        }
    }
}

}  // namespace fieldpoly

FieldPtr FiniteField::create(u64 p, unsigned m, std::optional<std::vector<u64>> modulus) {
    if (!is_prime_u64(p)) raise(Errc::NotPrime, "p = " + std::to_string(p));
    if (m < 1) raise(Errc::DegreeMismatch, "extension degree must be >= 1");

    u64 q = 1;
    for (unsigned i = 0; i < m; ++i) {
        if (q > (u64(1) << 62) / p) raise(Errc::DegreeMismatch, "field too large: p^m exceeds 2^62");
        q *= p;
    }

    std::vector<u64> mod;
    if (modulus) {
        mod = *modulus;
        if (mod.size() != m + 1) raise(Errc::DegreeMismatch, "modulus degree must equal m");
        for (auto& c : mod) c %= p;
        if (mod.back() != 1) raise(Errc::DegreeMismatch, "modulus must be monic");
        if (!fieldpoly::is_irreducible(mod, p)) raise(Errc::ReducibleModulus, "supplied modulus factors over GF(p)");
    } else {
        mod = fieldpoly::lex_smallest_irreducible(p, m);
    }

    auto f = std::shared_ptr<FiniteField>(new FiniteField());
    f->p_ = p;
    f->m_ = m;
    f->q_ = q;
    f->modulus_ = std::move(mod);
    f->char2_ = (p == 2);

    if (q <= 65536) {
        // exp/log tables off the first primitive element found below; build
        // them from generic arithmetic, then switch the fast paths on.
        f->exp_.assign(2 * (q - 1), 0);
        f->log_.assign(q, 0);
    }
    if (q <= 2048 && p != 2 && m > 1) f->add_tab_.assign(q * q, 0);

    // primitive element: first rep in numeric order with full order
    auto factors = prime_factors(q - 1);
    rep_t prim = 0;
    for (rep_t g = 1; g < q; ++g) {
        if (q == 2) { prim = 1; break; }
        bool ok = g != 0;
        for (u64 r : ok ? factors : std::vector<u64>{}) {
            rep_t t = 1, b = g;
            u64 e = (q - 1) / r;
            while (e) {
                if (e & 1) t = f->mul_generic(t, b);
                b = f->mul_generic(b, b);
                e >>= 1;
            }
            if (t == 1) { ok = false; break; }
        }
        if (ok) { prim = g; break; }
    }
    if (prim == 0 && q > 2) raise(Errc::InternalInvariantViolation, "no primitive element found");
    f->primitive_ = prim;

    if (!f->exp_.empty()) {
        rep_t x = 1;
        for (u64 i = 0; i < q - 1; ++i) {
            f->exp_[i] = static_cast<std::uint32_t>(x);
            f->exp_[i + (q - 1)] = static_cast<std::uint32_t>(x);
            f->log_[x] = static_cast<std::uint32_t>(i);
            x = f->mul_generic(x, prim);
        }
        f->has_exp_log_ = true;
    }
    if (!f->add_tab_.empty()) {
        for (rep_t a = 0; a < q; ++a)
            for (rep_t b = 0; b <= a; ++b) {
                rep_t s = f->add_generic(a, b);
                f->add_tab_[a * q + b] = static_cast<std::uint32_t>(s);
                f->add_tab_[b * q + a] = static_cast<std::uint32_t>(s);
            }
        f->has_add_tab_ = true;
    }
    return f;
}

rep_t FiniteField::add_generic(rep_t a, rep_t b) const {
    if (m_ == 1) {
        rep_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    rep_t out = 0, mult = 1;
    for (unsigned i = 0; i < m_; ++i) {
        rep_t da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        rep_t s = da + db;
        if (s >= p_) s -= p_;
        out += s * mult;
        mult *= p_;
    }
    return out;
}

rep_t FiniteField::neg(rep_t a) const {
    if (char2_) return a;
    if (m_ == 1) return a == 0 ? 0 : p_ - a;
    rep_t out = 0, mult = 1;
    for (unsigned i = 0; i < m_; ++i) {
        rep_t d = a % p_;
        a /= p_;
        out += (d == 0 ? 0 : p_ - d) * mult;
        mult *= p_;
    }
    return out;
}

rep_t FiniteField::mul_generic(rep_t a, rep_t b) const {
    if (a == 0 || b == 0) return 0;
    if (m_ == 1) return mulmod_u64(a, b, p_);
    u64 da[64], db[64], prod[127];
    for (unsigned i = 0; i < m_; ++i) {
        da[i] = a % p_;
        a /= p_;
        db[i] = b % p_;
        b /= p_;
    }
    std::memset(prod, 0, sizeof(u64) * (2 * m_ - 1));
    for (unsigned i = 0; i < m_; ++i) {
        if (!da[i]) continue;
        for (unsigned j = 0; j < m_; ++j)
            prod[i + j] = (prod[i + j] + mulmod_u64(da[i], db[j], p_)) % p_;
    }
    for (unsigned d = 2 * m_ - 2; d >= m_; --d) {
        u64 c = prod[d];
        if (c) {
            prod[d] = 0;
            for (unsigned i = 0; i < m_; ++i)
                prod[d - m_ + i] = (prod[d - m_ + i] + p_ - mulmod_u64(c, modulus_[i], p_) % p_) % p_;
        }
        if (d == m_) break;
    }
    rep_t out = 0, mult = 1;
    for (unsigned i = 0; i < m_; ++i) {
        out += prod[i] * mult;
        mult *= p_;
    }
    return out;
}

rep_t FiniteField::inv(rep_t a) const {
    if (a == 0) raise(Errc::DivisionByZero, "inverse of zero");
    if (has_exp_log_) {
        u64 l = log_[a];
        return exp_[(q_ - 1) - l];
    }
    return pow(a, q_ - 2);
}

rep_t FiniteField::pow(rep_t a, u64 e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    if (has_exp_log_) {
        u64 l = mulmod_u64(log_[a], e % (q_ - 1), q_ - 1);
        return exp_[l];
    }
    rep_t r = 1, b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

rep_t FiniteField::frobenius(rep_t a, u64 t) const {
    t %= m_;
    if (t == 0 || a == 0) return a;
    u64 e = 1;
    for (u64 i = 0; i < t; ++i) e *= p_;  // p^t < q, cannot overflow
    return pow(a, e);
}

u64 FiniteField::element_order(rep_t a) const {
    if (a == 0) raise(Errc::DivisionByZero, "order of zero");
    u64 o = q_ - 1;
    for (u64 r : prime_factors(q_ - 1))
        while (o % r == 0 && pow(a, o / r) == 1) o /= r;
    return o;
}

std::vector<u64> FiniteField::coeffs(rep_t a) const {
    std::vector<u64> c(m_);
    for (unsigned i = 0; i < m_; ++i) {
        c[i] = a % p_;
        a /= p_;
    }
    return c;
}

rep_t FiniteField::from_coeffs(std::span<const u64> c) const {
    if (c.size() > m_) raise(Errc::DegreeMismatch, "too many coefficients for this field");
    rep_t out = 0, mult = 1;
    for (unsigned i = 0; i < m_; ++i) {
        out += (i < c.size() ? c[i] % p_ : 0) * mult;
        mult *= p_;
    }
    return out;
}

rep_t FiniteField::from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return static_cast<rep_t>(r);
}

// ---------------------------------------------------------------------------

SubfieldEmbedding::SubfieldEmbedding(FieldPtr sub, FieldPtr sup) : sub_(std::move(sub)), sup_(std::move(sup)) {
    if (sub_->p() != sup_->p() || sup_->m() % sub_->m() != 0)
        raise(Errc::NotASubfield, "GF(" + std::to_string(sub_->p()) + "^" + std::to_string(sub_->m()) +
                                      ") does not embed in GF(" + std::to_string(sup_->p()) + "^" +
                                      std::to_string(sup_->m()) + ")");

    const u64 p = sub_->p();
    const unsigned a = sub_->m(), msup = sup_->m();

    if (sub_->same(*sup_)) {
        image_gen_ = a == 1 ? 0 : static_cast<rep_t>(p);  // the class of x itself
    } else {
        // first root of the subfield modulus inside sup, in rep order
        const auto& f = sub_->modulus();
        rep_t found = 0;
        bool ok = false;
        for (rep_t z = 0; z < sup_->q(); ++z) {
            rep_t acc = 0, zp = 1;
            for (unsigned i = 0; i <= a; ++i) {
                acc = sup_->add(acc, sup_->mul(sup_->from_int(static_cast<std::int64_t>(f[i])), zp));
                zp = sup_->mul(zp, z);
            }
            if (acc == 0) {
                found = z;
                ok = true;
                break;
            }
        }
        if (!ok) raise(Errc::InternalInvariantViolation, "subfield modulus has no root in top field");
        image_gen_ = found;
    }

    // forward GF(p)-matrix: column i = coeffs of image_gen^i
    fwd_.assign(static_cast<std::size_t>(msup) * a, 0);
    rep_t power = 1;
    for (unsigned i = 0; i < a; ++i) {
        auto c = sup_->coeffs(power);
        for (unsigned r = 0; r < msup; ++r) fwd_[static_cast<std::size_t>(r) * a + i] = c[r];
        power = sup_->mul(power, image_gen_);
    }
}

rep_t SubfieldEmbedding::embed(rep_t x_sub) const {
    auto c = sub_->coeffs(x_sub);
    const unsigned a = sub_->m(), msup = sup_->m();
    const u64 p = sub_->p();
    std::vector<u64> out(msup, 0);
    for (unsigned r = 0; r < msup; ++r) {
        u64 acc = 0;
        for (unsigned i = 0; i < a; ++i) acc = (acc + fwd_[static_cast<std::size_t>(r) * a + i] * c[i]) % p;
        out[r] = acc;
    }
    return sup_->from_coeffs(out);
}

namespace {
// solve fwd * c = y over GF(p); returns false when inconsistent
bool solve_gfp(const std::vector<u64>& fwd, unsigned rows, unsigned cols, u64 p, const std::vector<u64>& y,
               std::vector<u64>& c_out) {
    std::vector<u64> aug(static_cast<std::size_t>(rows) * (cols + 1));
    for (unsigned r = 0; r < rows; ++r) {
        for (unsigned j = 0; j < cols; ++j) aug[static_cast<std::size_t>(r) * (cols + 1) + j] = fwd[static_cast<std::size_t>(r) * cols + j];
        aug[static_cast<std::size_t>(r) * (cols + 1) + cols] = y[r];
    }
    auto at = [&](unsigned r, unsigned j) -> u64& { return aug[static_cast<std::size_t>(r) * (cols + 1) + j]; };
    unsigned rank = 0;
    std::vector<int> pivot_col(rows, -1);
    for (unsigned col = 0; col < cols && rank < rows; ++col) {
        unsigned piv = rank;
        while (piv < rows && at(piv, col) == 0) ++piv;
        if (piv == rows) continue;
        for (unsigned j = 0; j <= cols; ++j) std::swap(at(rank, j), at(piv, j));
        u64 iv = powmod_u64(at(rank, col), p - 2, p);
        for (unsigned j = col; j <= cols; ++j) at(rank, j) = mulmod_u64(at(rank, j), iv, p);
        for (unsigned r = 0; r < rows; ++r) {
            if (r == rank || at(r, col) == 0) continue;
            u64 f = at(r, col);
            for (unsigned j = col; j <= cols; ++j) at(r, j) = (at(r, j) + p - mulmod_u64(f, at(rank, j), p)) % p;
        }
        pivot_col[rank] = static_cast<int>(col);
        ++rank;
    }
    for (unsigned r = rank; r < rows; ++r)
        if (at(r, cols) != 0) return false;
    c_out.assign(cols, 0);
    for (unsigned r = 0; r < rank; ++r) c_out[static_cast<unsigned>(pivot_col[r])] = at(r, cols);
    return true;
}
}  // namespace

bool SubfieldEmbedding::in_image(rep_t x_sup) const {
    std::vector<u64> c;
    return solve_gfp(fwd_, sup_->m(), sub_->m(), sub_->p(), sup_->coeffs(x_sup), c);
}

rep_t SubfieldEmbedding::project(rep_t x_sup) const {
    std::vector<u64> c;
    if (!solve_gfp(fwd_, sup_->m(), sub_->m(), sub_->p(), sup_->coeffs(x_sup), c))
        raise(Errc::FieldMismatch, "element does not lie in the embedded subfield");
    return sub_->from_coeffs(c);
}

rep_t SubfieldEmbedding::trace(rep_t x_sup) const {
    const unsigned steps = sup_->m() / sub_->m();
    rep_t acc = 0;
    for (unsigned i = 0; i < steps; ++i) acc = sup_->add(acc, sup_->frobenius(x_sup, static_cast<u64>(i) * sub_->m()));
    return project(acc);
}

}  // namespace ghull
