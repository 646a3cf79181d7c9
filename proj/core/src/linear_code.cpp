#include "ghull/linear_code.hpp"

#include <algorithm>
#include <string>

namespace ghull {

LinearCode LinearCode::from_generator(const Matrix& rows) {
    auto rr = rref(rows);
    if (rr.rank == 0) raise(Errc::ZeroCode, "generator spans only the zero vector");
    return LinearCode(rr.r.submatrix_rows(0, rr.rank));
}

LinearCode LinearCode::zero_code(FieldPtr f, std::size_t n) { return LinearCode(Matrix(std::move(f), 0, n)); }

LinearCode LinearCode::with_structural_lb(std::uint64_t lb) const {
    LinearCode c = *this;
    c.structural_lb_ = lb;
    return c;
}

namespace {
void reject_zero(const LinearCode& c, const char* op) {
    if (c.is_zero()) raise(Errc::ZeroCode, std::string(op) + " is undefined for the zero code handle");
}
void check_s(const LinearCode& c, unsigned s) {
    if (s >= c.field()->m())
        raise(Errc::SOutOfRange, "s = " + std::to_string(s) + " not in [0, m) with m = " + std::to_string(c.field()->m()));
}
}  // namespace

LinearCode LinearCode::galois_dual(unsigned s) const {
    reject_zero(*this, "galois_dual");
    check_s(*this, s);
    const unsigned m = field()->m();
    // Lemma route: C^{perp_s} = (C^(p^(m-s)))^perp
    const Matrix g_frob = gen_.entrywise_frobenius((m - s) % m);
    const Matrix ker = kernel_basis(g_frob);
    if (ker.rows() == 0) return zero_code(field(), length());
    LinearCode dual(ker);  // kernel_basis is already canonical RREF with full row rank
    if (dual.dim() + dim() != length())
        raise(Errc::InternalInvariantViolation, "dim C + dim C^perp_s != n");
    return dual;
}

LinearCode LinearCode::hull(unsigned s) const {
    reject_zero(*this, "hull");
    check_s(*this, s);
    const LinearCode dual = galois_dual(s);
    if (dual.is_zero()) return zero_code(field(), length());
    const Subspace h = Subspace::span_of(gen_).intersect(Subspace::span_of(dual.gen_));
    if (h.dim() == 0) return zero_code(field(), length());
    return LinearCode(h.basis());
}

std::pair<bool, Matrix> LinearCode::is_galois_lcd(unsigned s) const {
    reject_zero(*this, "is_galois_lcd");
    check_s(*this, s);
    const unsigned m = field()->m();
    const Matrix cert = gen_ * gen_.entrywise_frobenius((m - s) % m).transpose();
    return {is_nonsingular(cert), cert};
}

HullDecomposition LinearCode::hull_decompose(unsigned s) const {
    reject_zero(*this, "hull_decompose");
    check_s(*this, s);
    const LinearCode h = hull(s);
    const std::size_t hd = h.dim();
    const unsigned m = field()->m();

    // extend the hull basis by canonical generator rows, in row order
    Matrix basis = h.gen_;
    std::vector<std::size_t> appended;
    std::size_t cur_rank = hd;
    for (std::size_t i = 0; i < dim() && cur_rank < dim(); ++i) {
        Matrix trial(field(), 1, length());
        for (std::size_t j = 0; j < length(); ++j) trial.set(0, j, gen_.get(i, j));
        Matrix cand = basis.vstack(trial);
        if (rank_of(cand) > cur_rank) {
            basis = std::move(cand);
            appended.push_back(i);
            ++cur_rank;
        }
    }
    if (cur_rank != dim())
        raise(Errc::InternalInvariantViolation, "hull basis did not extend to a basis of C");

    HullDecomposition out{h, zero_code(field(), length()), s, Matrix(field(), 0, 0), true};
    if (!appended.empty()) {
        Matrix gd(field(), appended.size(), length());
        for (std::size_t r = 0; r < appended.size(); ++r)
            for (std::size_t j = 0; j < length(); ++j) gd.set(r, j, gen_.get(appended[r], j));
        out.complement = from_generator(gd);
        out.certificate = gd * gd.entrywise_frobenius((m - s) % m).transpose();
        out.certificate_nonsingular = is_nonsingular(out.certificate);
        if (!out.certificate_nonsingular)
            raise(Errc::InternalInvariantViolation, "complement certificate is singular (Theorem 3.1 violated)");
        if (out.complement.dim() + hd != dim())
            raise(Errc::InternalInvariantViolation, "dim Hull + dim D != dim C");
    }
    return out;
}

rep_t galois_form(const FiniteField& f, std::span<const rep_t> x, std::span<const rep_t> y, unsigned s) {
    if (x.size() != y.size()) raise(Errc::LengthMismatch, "form arguments differ in length");
    rep_t acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) acc = f.add(acc, f.mul(x[i], f.frobenius(y[i], s)));
    return acc;
}

bool LinearCode::contains(std::span<const rep_t> word) const {
    if (word.size() != length()) raise(Errc::LengthMismatch, "word length != code length");
    return Subspace::span_of(gen_).contains(word);
}

namespace {

// message-side exhaustive search: walk GF(q)^k with an odometer, updating the
// codeword incrementally from precomputed (row scaled by rep-step delta) tables
std::uint64_t enumerate_messages(const Matrix& gen, std::uint64_t qk) {
    const FiniteField& F = *gen.field();
    const std::size_t k = gen.rows(), n = gen.cols();
    const std::uint64_t q = F.q();

    // dtab[i][v] = (elem(v+1 mod q) - elem(v)) * row_i, flattened
    std::vector<rep_t> dtab(k * q * n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::uint64_t v = 0; v < q; ++v) {
            const rep_t delta = F.sub(v + 1 < q ? v + 1 : 0, v);
            for (std::size_t j = 0; j < n; ++j)
                dtab[(i * q + v) * n + j] = F.mul(delta, gen.get(i, j));
        }

    std::vector<std::uint64_t> digits(k, 0);
    std::vector<rep_t> cw(n, 0);
    std::size_t wt = 0;
    std::size_t best = n + 1;
    for (std::uint64_t step = 1; step < qk; ++step) {
        std::size_t i = 0;
        for (;;) {
            const std::uint64_t old = digits[i];
            const rep_t* dv = &dtab[(i * q + old) * n];
            for (std::size_t j = 0; j < n; ++j) {
                const rep_t before = cw[j];
                const rep_t after = F.add(before, dv[j]);
                cw[j] = after;
                wt += (after != 0) - (before != 0);
            }
            if (old + 1 < q) {
                digits[i] = old + 1;
                break;
            }
            digits[i] = 0;
            ++i;  // carry
        }
        if (wt < best) best = wt;
    }
    return best;
}

// check-side exhaustive search: the distance is the smallest support size S
// whose parity-check columns are dependent; subsets are visited in
// lexicographic order per weight
std::optional<std::uint64_t> enumerate_supports(const Matrix& parity, std::size_t n, std::uint64_t budget,
                                                std::uint64_t& work) {
    const FiniteField& F = *parity.field();
    const std::size_t pr = parity.rows();
    std::vector<std::size_t> idx;
    std::vector<rep_t> cols;  // pr x w column-major scratch

    for (std::size_t w = 1; w <= n; ++w) {
        idx.assign(w, 0);
        for (std::size_t i = 0; i < w; ++i) idx[i] = i;
        for (;;) {
            if (++work > budget) return std::nullopt;
            // rank of the pr x w submatrix
            cols.assign(pr * w, 0);
            for (std::size_t c = 0; c < w; ++c)
                for (std::size_t r = 0; r < pr; ++r) cols[r * w + c] = parity.get(r, idx[c]);
            std::size_t rank = 0;
            for (std::size_t c = 0; c < w && rank < pr; ++c) {
                std::size_t piv = rank;
                while (piv < pr && cols[piv * w + c] == 0) ++piv;
                if (piv == pr) continue;
                for (std::size_t j = 0; j < w; ++j) std::swap(cols[rank * w + j], cols[piv * w + j]);
                const rep_t iv = F.inv(cols[rank * w + c]);
                for (std::size_t j = c; j < w; ++j) cols[rank * w + j] = F.mul(iv, cols[rank * w + j]);
                for (std::size_t r = 0; r < pr; ++r) {
                    if (r == rank) continue;
                    const rep_t f = cols[r * w + c];
                    if (!f) continue;
                    for (std::size_t j = c; j < w; ++j)
                        cols[r * w + j] = F.sub(cols[r * w + j], F.mul(f, cols[rank * w + j]));
                }
                ++rank;
            }
            if (rank < w) return w;  // dependent columns: codeword of weight w exists

            // next w-subset
            std::size_t i = w;
            while (i-- > 0) {
                if (idx[i] + (w - i) < n) {
                    ++idx[i];
                    for (std::size_t j = i + 1; j < w; ++j) idx[j] = idx[j - 1] + 1;
                    break;
                }
                if (i == 0) goto next_weight;
            }
        }
    next_weight:;
    }
    return std::nullopt;  // unreachable for a nonzero code
}

}  // namespace

DistanceReport LinearCode::min_distance(std::uint64_t budget) const {
    reject_zero(*this, "min_distance");
    if (budget == 0) raise(Errc::PreconditionViolated, "distance budget must be positive");

    const std::uint64_t q = field()->q();
    std::uint64_t qk = 1;
    bool overflow = false;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (qk > budget / q + 1) { overflow = true; break; }
        qk *= q;
    }

    if (!overflow && qk <= budget) {
        DistanceReport rep;
        rep.value = enumerate_messages(gen_, qk);
        rep.exactness = DistanceReport::Exactness::exact;
        rep.method = DistanceReport::Method::exhaustive_messages;
        rep.work_used = qk;
        return rep;
    }

    // parity-check side: cheap when n - k (and hence d) is small
    const Matrix parity = kernel_basis(gen_);  // Euclidean dual generator
    std::uint64_t work = 0;
    if (auto d = enumerate_supports(parity, length(), budget, work)) {
        DistanceReport rep;
        rep.value = *d;
        rep.exactness = DistanceReport::Exactness::exact;
        rep.method = DistanceReport::Method::exhaustive_codewords;
        rep.work_used = work;
        return rep;
    }

    DistanceReport rep;
    rep.value = structural_lb_.value_or(1);
    rep.exactness = DistanceReport::Exactness::lower_bound;
    rep.method = DistanceReport::Method::structural_bound;
    rep.work_used = work;
    return rep;
}

bool is_mds(const LinearCode& c, const DistanceReport& d) {
    if (!d.exact()) raise(Errc::RequiresExactDistance, "MDS test needs an exact distance");
    return d.value == c.length() - c.dim() + 1;
}

}  // namespace ghull
