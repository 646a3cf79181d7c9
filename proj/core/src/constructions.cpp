#include "ghull/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace ghull {

namespace {

std::uint64_t mul_order_mod(std::uint64_t a, std::uint64_t n) {
    // multiplicative order of a modulo n, gcd(a, n) = 1
    std::uint64_t o = 1, x = a % n;
    while (x != 1 % n) {
        x = (unsigned __int128)x * a % n;
        ++o;
        if (o > n) raise(Errc::InternalInvariantViolation, "order computation diverged");
    }
    return o;
}

}  // namespace

ExtensionTower make_extension(FieldPtr base, unsigned degree) {
    if (degree < 1) raise(Errc::DegreeMismatch, "extension degree must be >= 1");
    FieldPtr top = degree == 1 ? base : FiniteField::create(base->p(), base->m() * degree);
    SubfieldEmbedding emb(base, top);
    return ExtensionTower{std::move(base), std::move(top), std::move(emb), degree};
}

unsigned galois_index_from_qpower(const ExtensionTower& t, unsigned s_qpower) {
    return static_cast<unsigned>((static_cast<std::uint64_t>(s_qpower) * t.base->m()) % t.top->m());
}

// -------------------------------------------------------------- root-set codes

namespace {

struct RootSetPrep {
    FieldPtr split;
    std::unique_ptr<SubfieldEmbedding> emb;
    rep_t root;
    std::vector<std::uint64_t> closed;
    bool enlarged;
};

std::vector<std::uint64_t> close_under_mul(const std::vector<std::uint64_t>& exps, std::uint64_t q,
                                           std::uint64_t modulus) {
    std::set<std::uint64_t> s(exps.begin(), exps.end());
    for (;;) {
        std::set<std::uint64_t> next = s;
        for (std::uint64_t e : s) next.insert((unsigned __int128)e * q % modulus);
        if (next == s) break;
        s.swap(next);
    }
    return {s.begin(), s.end()};
}

// longest circular run of consecutive residues (step `step`) inside `set`,
// within the residue cycle of size `cycle`
std::uint64_t longest_run(const std::vector<std::uint64_t>& set, std::uint64_t first, std::uint64_t step,
                          std::uint64_t cycle, std::uint64_t modulus) {
    if (set.empty()) return 0;
    std::set<std::uint64_t> s(set.begin(), set.end());
    if (s.size() >= cycle) return cycle;
    std::uint64_t best = 0;
    for (std::uint64_t start = 0; start < cycle; ++start) {
        std::uint64_t e = (first + (unsigned __int128)start * step) % modulus;
        if (s.count(e)) continue;
        // walk forward from the gap
        std::uint64_t run = 0, probe = start;
        for (std::uint64_t i = 0; i < cycle; ++i) {
            probe = (probe + 1) % cycle;
            std::uint64_t pe = (first + (unsigned __int128)probe * step) % modulus;
            if (s.count(pe)) {
                ++run;
                best = std::max(best, run);
            } else {
                run = 0;
            }
        }
        break;  // one full sweep from any gap suffices
    }
    return best;
}

RootSetPrep prepare_roots(const FieldPtr& f, std::vector<std::uint64_t> exponents, std::uint64_t root_order,
                          std::uint64_t closure_modulus, const RootSetOptions& opt, const char* kind) {
    const std::uint64_t q = f->q();
    if (std::gcd(root_order, q) != 1)
        raise(Errc::PreconditionViolated, std::string(kind) + " length requires gcd(n, q) = 1");

    for (auto& e : exponents) e %= closure_modulus;
    std::sort(exponents.begin(), exponents.end());
    exponents.erase(std::unique(exponents.begin(), exponents.end()), exponents.end());

    auto closed = close_under_mul(exponents, q, closure_modulus);
    const bool enlarged = closed.size() != exponents.size();
    if (enlarged && opt.strict_closure)
        raise(Errc::NotClosedUnderFrobenius,
              std::string(kind) + " defining set is not closed under multiplication by q = " + std::to_string(q) +
                  " mod " + std::to_string(closure_modulus));

    const std::uint64_t e_deg = mul_order_mod(q % root_order == 0 ? 1 : q, root_order);
    RootSetPrep prep;
    prep.split = e_deg == 1 ? f : FiniteField::create(f->p(), f->m() * static_cast<unsigned>(e_deg));
    prep.emb = std::make_unique<SubfieldEmbedding>(f, prep.split);
    prep.closed = std::move(closed);
    prep.enlarged = enlarged;

    const std::uint64_t qe_minus_1 = prep.split->q() - 1;
    if (qe_minus_1 % root_order != 0)
        raise(Errc::InternalInvariantViolation, "splitting field misses the required root of unity");
    if (opt.root_power) {
        prep.root = prep.split->pow(prep.split->primitive_element(), *opt.root_power);
        if (prep.split->element_order(prep.root) != root_order)
            raise(Errc::RootOrderMismatch, "designated root has order " +
                                               std::to_string(prep.split->element_order(prep.root)) + ", need " +
                                               std::to_string(root_order));
    } else {
        prep.root = prep.split->pow(prep.split->primitive_element(), qe_minus_1 / root_order);
    }
    return prep;
}

RootSetCode finish_root_code(RootSetCode::Kind kind, const FieldPtr& f, std::uint64_t n, RootSetPrep prep,
                             std::vector<std::uint64_t> requested, std::uint64_t bch_lb) {
    const FiniteField& S = *prep.split;

    // g(x) = prod (x - root^i), coefficients in the splitting field
    std::vector<rep_t> g = {1};
    for (std::uint64_t e : prep.closed) {
        const rep_t r = S.pow(prep.root, e);
        std::vector<rep_t> next(g.size() + 1, 0);
        for (std::size_t d = 0; d < g.size(); ++d) {
            next[d + 1] = S.add(next[d + 1], g[d]);
            next[d] = S.sub(next[d], S.mul(g[d], r));
        }
        g = std::move(next);
    }

    std::vector<rep_t> g_base(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!prep.emb->in_image(g[i]))
            raise(Errc::CoefficientsNotInBaseField,
                  "generator polynomial coefficient " + std::to_string(i) + " lies outside GF(q)");
        g_base[i] = prep.emb->project(g[i]);
    }

    const std::uint64_t deg = g.size() - 1;
    if (deg >= n)
        raise(Errc::ZeroCode, "defining set leaves no information positions (deg g = n)");

    Matrix rows(f, static_cast<std::size_t>(n - deg), static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < n - deg; ++j)
        for (std::size_t d = 0; d <= deg; ++d) rows.set(j, j + d, g_base[d]);

    RootSetCode out{kind,
                    LinearCode::from_generator(rows).with_structural_lb(bch_lb),
                    prep.split,
                    prep.root,
                    0,
                    std::move(requested),
                    std::move(prep.closed),
                    prep.enlarged,
                    std::move(g_base),
                    bch_lb};
    return out;
}

}  // namespace

RootSetCode cyclic_code(FieldPtr f, std::uint64_t n, std::vector<std::uint64_t> exponents,
                        const RootSetOptions& opt) {
    if (n < 1) raise(Errc::PreconditionViolated, "length must be positive");
    if (std::gcd(n, f->q()) != 1) raise(Errc::PreconditionViolated, "cyclic codes need gcd(n, q) = 1");
    auto requested = exponents;
    auto prep = prepare_roots(f, std::move(exponents), n, n, opt, "cyclic");
    const std::uint64_t run = longest_run(prep.closed, 0, 1, n, n);
    auto out = finish_root_code(RootSetCode::Kind::cyclic, f, n, std::move(prep), std::move(requested), run + 1);
    out.root_order = n;
    return out;
}

RootSetCode negacyclic_code(FieldPtr f, std::uint64_t n, std::vector<std::uint64_t> odd_exponents,
                            const RootSetOptions& opt) {
    if (n < 1) raise(Errc::PreconditionViolated, "length must be positive");
    if (std::gcd(2 * n, f->q()) != 1) raise(Errc::PreconditionViolated, "negacyclic codes need gcd(2n, q) = 1");
    for (std::uint64_t e : odd_exponents)
        if (e % 2 == 0)
            raise(Errc::EvenExponent, "negacyclic defining sets contain odd exponents only, got " + std::to_string(e));
    auto requested = odd_exponents;
    auto prep = prepare_roots(f, std::move(odd_exponents), 2 * n, 2 * n, opt, "negacyclic");
    // odd residues 1, 3, ..., 2n-1 form the root cycle; runs step by 2
    const std::uint64_t run = longest_run(prep.closed, 1, 2, n, 2 * n);
    auto out = finish_root_code(RootSetCode::Kind::negacyclic, f, n, std::move(prep), std::move(requested), run + 1);
    out.root_order = 2 * n;
    return out;
}

// ------------------------------------------------------------------ Gabidulin

GabidulinSpec make_gabidulin_spec(ExtensionTower tower, std::vector<rep_t> basis, unsigned k) {
    const unsigned deg = tower.degree;
    if (basis.size() != deg) raise(Errc::NotABasis, "basis must have exactly m elements");
    if (k < 1 || k > deg) raise(Errc::PreconditionViolated, "need 1 <= k <= m");

    // independence over the base field, checked over the prime field
    const FiniteField& T = *tower.top;
    const unsigned a = tower.base->m();
    const unsigned dim = T.m();
    FieldPtr prime = FiniteField::create(T.p(), 1);
    Matrix coords(prime, dim, dim);
    for (unsigned i = 0; i < deg; ++i)
        for (unsigned t = 0; t < a; ++t) {
            const rep_t base_elem = tower.base->pow(static_cast<rep_t>(tower.base->m() == 1 ? 1 : tower.base->p()), t);
            const rep_t prod = T.mul(tower.emb.embed(base_elem), basis[i]);
            const auto c = T.coeffs(prod);
            for (unsigned r = 0; r < dim; ++r) coords.set(r, i * a + t, c[r]);
        }
    if (!is_nonsingular(coords)) raise(Errc::NotABasis, "elements are dependent over the base field");

    bool self_dual = true;
    for (unsigned i = 0; i < deg && self_dual; ++i)
        for (unsigned j = 0; j <= i && self_dual; ++j) {
            const rep_t tr = tower.emb.trace(T.mul(basis[i], basis[j]));
            if (tr != (i == j ? 1u : 0u)) self_dual = false;
        }
    return GabidulinSpec{std::move(tower), std::move(basis), k, self_dual};
}

LinearCode gabidulin_code(const GabidulinSpec& spec) {
    const FiniteField& T = *spec.tower.top;
    const unsigned m = spec.tower.degree, a = spec.tower.base->m();
    Matrix g(spec.tower.top, spec.k, m);
    for (unsigned i = 0; i < spec.k; ++i)
        for (unsigned j = 0; j < m; ++j) g.set(i, j, T.frobenius(spec.basis[j], static_cast<std::uint64_t>(i) * a));
    auto code = LinearCode::from_generator(g);
    if (code.dim() != spec.k) raise(Errc::InternalInvariantViolation, "Moore matrix lost rank");
    return code.with_structural_lb(m - spec.k + 1);
}

std::optional<std::vector<rep_t>> find_self_dual_basis(const ExtensionTower& t) {
    const FiniteField& T = *t.top;
    const std::uint64_t qt = T.q();
    if (qt > (1u << 14)) raise(Errc::SearchBudgetExceeded, "field too large for self-dual basis search");

    // trace of every element, precomputed as base-field reps
    std::vector<rep_t> tr(qt);
    for (rep_t x = 0; x < qt; ++x) tr[x] = t.emb.trace(x);

    const unsigned m = t.degree;
    std::vector<rep_t> chosen;
    chosen.reserve(m);

    // deterministic depth-first search; element order fixes the result
    auto feasible = [&](rep_t x) {
        if (tr[T.mul(x, x)] != 1) return false;
        for (rep_t h : chosen)
            if (tr[T.mul(x, h)] != 0) return false;
        return true;
    };
    std::vector<rep_t> stack_pos;  // next candidate to try at each depth
    stack_pos.push_back(0);
    while (!stack_pos.empty()) {
        rep_t cand = stack_pos.back();
        bool advanced = false;
        for (; cand < qt; ++cand) {
            if (!feasible(cand)) continue;
            stack_pos.back() = cand + 1;
            chosen.push_back(cand);
            if (chosen.size() == m) return chosen;
            stack_pos.push_back(cand + 1);  // orthonormal sets are unordered; enforce ascending order
            advanced = true;
            break;
        }
        if (!advanced) {
            stack_pos.pop_back();
            if (!chosen.empty()) chosen.pop_back();
        }
    }
    return std::nullopt;
}

unsigned gabidulin_hull_dim_formula(unsigned m, unsigned k, unsigned s) {
    if (k < 1 || k > m || s >= m) raise(Errc::PreconditionViolated, "need 1 <= k <= m and 0 <= s <= m-1");
    if (s <= k) return std::min(m - k, s);
    return std::min(m - s, k);
}

// -------------------------------------------------------------- matrix product

MatrixProductSpec make_matrix_product_spec(Matrix a, std::vector<LinearCode> constituents, unsigned s) {
    if (constituents.empty()) raise(Errc::LengthMismatch, "need at least one constituent");
    if (a.rows() != constituents.size())
        raise(Errc::LengthMismatch, "A has " + std::to_string(a.rows()) + " rows but " +
                                        std::to_string(constituents.size()) + " constituents given");
    if (a.rows() > a.cols()) raise(Errc::NotFRR, "A must have at least as many columns as rows");
    const FieldPtr f = a.field();  // by value: `a` is moved below
    if (s >= f->m()) raise(Errc::SOutOfRange, "s out of range for the field");
    std::size_t n = constituents[0].length();
    for (const auto& c : constituents) {
        if (!c.field()->same(*f)) raise(Errc::FieldMismatch, "constituents and A live over different fields");
        if (c.length() != n) raise(Errc::LengthMismatch, "constituents differ in length");
        if (c.is_zero()) raise(Errc::ZeroCode, "constituents must be nonzero codes");
    }
    if (rank_of(a) != a.rows()) raise(Errc::NotFRR, "A is not full row rank");

    MatrixProductSpec spec{std::move(a), std::move(constituents), s, Matrix(f, 0, 0), false, {}};
    if (spec.A.rows() == spec.A.cols()) {
        const unsigned m = f->m();
        spec.gram = spec.A * spec.A.entrywise_frobenius((m - s) % m).transpose();
        bool diag_ok = true;
        for (std::size_t i = 0; i < spec.gram.rows() && diag_ok; ++i)
            for (std::size_t j = 0; j < spec.gram.cols() && diag_ok; ++j) {
                if (i == j && spec.gram.get(i, j) == 0) diag_ok = false;
                if (i != j && spec.gram.get(i, j) != 0) diag_ok = false;
            }
        spec.gram_is_diagonal_invertible = diag_ok;
        if (diag_ok)
            for (std::size_t i = 0; i < spec.gram.rows(); ++i) spec.lambdas.push_back(spec.gram.get(i, i));
    }
    return spec;
}

namespace {

// block generator of [D_1,...,D_l]A from per-constituent generators; rows with
// zero-dimensional D_i simply contribute nothing
Matrix mp_generator(const Matrix& a, const std::vector<const Matrix*>& gens, const FieldPtr& f, std::size_t n) {
    const std::size_t l = a.rows(), t = a.cols();
    std::size_t total = 0;
    for (const auto* g : gens) total += g->rows();
    Matrix big(f, total, n * t);
    std::size_t row0 = 0;
    for (std::size_t i = 0; i < l; ++i) {
        const Matrix& gi = *gens[i];
        for (std::size_t r = 0; r < gi.rows(); ++r) {
            for (std::size_t bj = 0; bj < t; ++bj) {
                const rep_t aij = a.get(i, bj);
                if (!aij) continue;
                for (std::size_t c = 0; c < n; ++c) big.set(row0 + r, bj * n + c, f->mul(aij, gi.get(r, c)));
            }
        }
        row0 += gi.rows();
    }
    return big;
}

}  // namespace

MatrixProductBuild matrix_product_code(const MatrixProductSpec& spec, std::uint64_t distance_budget) {
    const FieldPtr& f = spec.A.field();
    const std::size_t n = spec.constituents[0].length();

    std::vector<const Matrix*> gens;
    std::size_t ksum = 0;
    for (const auto& c : spec.constituents) {
        gens.push_back(&c.generator());
        ksum += c.dim();
    }
    auto code = LinearCode::from_generator(mp_generator(spec.A, gens, f, n));
    if (code.dim() != ksum)
        raise(Errc::InternalInvariantViolation, "matrix-product dimension != sum of constituent dimensions");

    MatrixProductBuild out{std::move(code), {}, {}, 0};
    std::uint64_t bound = UINT64_MAX;
    for (std::size_t i = 0; i < spec.constituents.size(); ++i) {
        out.constituent_distances.push_back(spec.constituents[i].min_distance(distance_budget));
        auto row_code = LinearCode::from_generator(spec.A.submatrix_rows(0, i + 1));
        auto dr = row_code.min_distance(distance_budget);
        if (!dr.exact()) raise(Errc::InternalInvariantViolation, "row-span code of A too large to enumerate");
        out.row_code_distances.push_back(dr.value);
        bound = std::min(bound, out.constituent_distances[i].value * dr.value);
    }
    out.distance_bound = bound;
    out.code = out.code.with_structural_lb(bound);
    return out;
}

LinearCode matrix_product_dual(const MatrixProductSpec& spec) {
    if (spec.A.rows() != spec.A.cols()) raise(Errc::NotSquare, "dual formula needs a square A");
    const Matrix b = inverse(spec.A).transpose();  // Singular propagates
    const FieldPtr& f = spec.A.field();
    const std::size_t n = spec.constituents[0].length();

    // formula route: [C_1^perp,...,C_l^perp](A^-1)^T
    std::vector<LinearCode> duals;
    duals.reserve(spec.constituents.size());
    std::vector<const Matrix*> gens;
    for (const auto& c : spec.constituents) {
        duals.push_back(c.galois_dual(0));
        gens.push_back(&duals.back().generator());
    }
    std::size_t total = 0;
    for (const auto* g : gens) total += g->rows();
    const FieldPtr& field = f;
    LinearCode formula_route = total == 0 ? LinearCode::zero_code(field, n * spec.A.cols())
                                          : LinearCode::from_generator(mp_generator(b, gens, f, n));

    // kernel route on the product code itself
    std::vector<const Matrix*> cgens;
    for (const auto& c : spec.constituents) cgens.push_back(&c.generator());
    const Matrix prod_gen = mp_generator(spec.A, cgens, f, n);
    const Matrix ker = kernel_basis(prod_gen);
    LinearCode kernel_route =
        ker.rows() == 0 ? LinearCode::zero_code(field, n * spec.A.cols()) : LinearCode::from_generator(ker);

    if (!(formula_route == kernel_route))
        raise(Errc::InternalInvariantViolation, "dual formula route disagrees with kernel route");
    return kernel_route;
}

LinearCode matrix_product_hull(const MatrixProductSpec& spec) {
    if (spec.A.rows() != spec.A.cols()) raise(Errc::NotSquare, "hull factorization needs a square A");
    if (!spec.gram_is_diagonal_invertible)
        raise(Errc::GramNotDiagonal, "A (A^(p^(m-s)))^T is not invertible diagonal; compute the hull directly instead");

    const FieldPtr& f = spec.A.field();
    const std::size_t n = spec.constituents[0].length();
    std::vector<LinearCode> hulls;
    hulls.reserve(spec.constituents.size());
    std::vector<const Matrix*> gens;
    std::size_t total = 0;
    for (const auto& c : spec.constituents) {
        hulls.push_back(c.hull(spec.s));
        gens.push_back(&hulls.back().generator());
        total += hulls.back().dim();
    }
    if (total == 0) return LinearCode::zero_code(f, n * spec.A.cols());
    return LinearCode::from_generator(mp_generator(spec.A, gens, f, n));
}

}  // namespace ghull
