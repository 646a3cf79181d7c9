#include "ghull/verify.hpp"

#include <chrono>

namespace ghull {

LinearCode random_code(Rng& rng, const FieldPtr& f, std::size_t n, std::size_t k_rows) {
    for (;;) {
        Matrix m(f, k_rows, n);
        for (std::size_t i = 0; i < k_rows; ++i)
            for (std::size_t j = 0; j < n; ++j) m.set(i, j, rng.below(f->q()));
        try {
            return LinearCode::from_generator(m);
        } catch (const Error& e) {
            if (e.code() != Errc::ZeroCode) throw;  // resample all-zero draws
        }
    }
}

Subspace bruteforce_galois_annihilator(const LinearCode& c, unsigned s, std::uint64_t* count_out) {
    const FiniteField& F = *c.field();
    const std::size_t n = c.length(), k = c.dim();
    const std::uint64_t q = F.q();
    const Matrix& g = c.generator();

    // gd[(j*n + i)*q + v] = g_{j,i} * (frob(v+1 mod q, s) - frob(v, s)):
    // incremental update of the running forms under one-digit odometer steps
    std::vector<rep_t> gd(k * n * q);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < n; ++i)
            for (std::uint64_t v = 0; v < q; ++v) {
                const rep_t fd = F.sub(F.frobenius(v + 1 < q ? v + 1 : 0, s), F.frobenius(v, s));
                gd[(j * n + i) * q + v] = F.mul(g.get(j, i), fd);
            }

    std::vector<std::uint64_t> x(n, 0);
    std::vector<rep_t> sums(k, 0);
    std::size_t nonzero_sums = 0;

    // incremental RREF accumulator for the hit set
    Matrix basis(c.field(), 0, n);
    std::uint64_t hits = 1;  // the zero vector always pairs to zero
    std::uint64_t qn = 1;
    for (std::size_t i = 0; i < n; ++i) qn *= q;

    auto absorb = [&](const std::vector<std::uint64_t>& vec) {
        std::vector<rep_t> w(vec.begin(), vec.end());
        for (std::size_t r = 0; r < basis.rows(); ++r) {
            std::size_t lead = 0;
            while (lead < n && basis.get(r, lead) == 0) ++lead;
            if (lead == n || w[lead] == 0) continue;
            const rep_t cfac = w[lead];
            for (std::size_t j2 = lead; j2 < n; ++j2) w[j2] = F.sub(w[j2], F.mul(cfac, basis.get(r, j2)));
        }
        bool zero = true;
        for (rep_t v : w)
            if (v) { zero = false; break; }
        if (zero) return;
        Matrix nb(c.field(), basis.rows() + 1, n);
        for (std::size_t r = 0; r < basis.rows(); ++r)
            for (std::size_t j2 = 0; j2 < n; ++j2) nb.set(r, j2, basis.get(r, j2));
        for (std::size_t j2 = 0; j2 < n; ++j2) nb.set(basis.rows(), j2, w[j2]);
        basis = rref(nb).r;
    };

    for (std::uint64_t step = 1; step < qn; ++step) {
        std::size_t i = 0;
        for (;;) {
            const std::uint64_t old = x[i];
            for (std::size_t j = 0; j < k; ++j) {
                const rep_t before = sums[j];
                const rep_t after = F.add(before, gd[(j * n + i) * q + old]);
                sums[j] = after;
                nonzero_sums += (after != 0) - (before != 0);
            }
            if (old + 1 < q) {
                x[i] = old + 1;
                break;
            }
            x[i] = 0;
            ++i;
        }
        if (nonzero_sums == 0) {
            ++hits;
            absorb(x);
        }
    }
    if (count_out) *count_out = hits;
    return Subspace::span_of(basis);
}

std::size_t bruteforce_hull_dim(const LinearCode& c, unsigned s) {
    const FiniteField& F = *c.field();
    const std::size_t n = c.length(), k = c.dim();
    const std::uint64_t q = F.q();
    const Matrix& g = c.generator();

    std::uint64_t qk = 1;
    for (std::size_t i = 0; i < k; ++i) qk *= q;

    // materialize all codewords (the corpus keeps q^k small)
    std::vector<rep_t> words(qk * n, 0);
    std::vector<std::uint64_t> digits(k, 0);
    for (std::uint64_t idx = 1; idx < qk; ++idx) {
        std::size_t i = 0;
        while (digits[i] + 1 == q) digits[i++] = 0;
        ++digits[i];
        rep_t* w = &words[idx * n];
        for (std::size_t j = 0; j < n; ++j) {
            rep_t acc = 0;
            for (std::size_t r = 0; r < k; ++r) acc = F.add(acc, F.mul(digits[r], g.get(r, j)));
            w[j] = acc;
        }
    }

    std::uint64_t members = 0;
    for (std::uint64_t a = 0; a < qk; ++a) {
        const rep_t* wa = &words[a * n];
        bool in_hull = true;
        for (std::uint64_t b = 0; b < qk && in_hull; ++b) {
            const rep_t* wb = &words[b * n];
            rep_t acc = 0;
            for (std::size_t j = 0; j < n; ++j) acc = F.add(acc, F.mul(wb[j], F.frobenius(wa[j], s)));
            if (acc != 0) in_hull = false;
        }
        if (in_hull) ++members;
    }
    std::size_t dim = 0;
    std::uint64_t power = 1;
    while (power < members) {
        power *= q;
        ++dim;
    }
    if (power != members) raise(Errc::InternalInvariantViolation, "hull member count is not a power of q");
    return dim;
}

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

struct FieldPool {
    std::vector<FieldPtr> fields;

    FieldPool() {
        fields.push_back(FiniteField::create(2, 1));
        fields.push_back(FiniteField::create(3, 1));
        fields.push_back(FiniteField::create(2, 2));
        fields.push_back(FiniteField::create(3, 2));
    }
};

json describe_code(const LinearCode& c, unsigned s) {
    json j;
    j["recipe"] = json{{"kind", "explicit"}, {"field", field_to_json(*c.field())}};
    json gen;
    gen["rows"] = c.generator().rows();
    gen["cols"] = c.generator().cols();
    json entries = json::array();
    for (std::size_t r = 0; r < c.generator().rows(); ++r) {
        json row = json::array();
        for (std::size_t cc = 0; cc < c.generator().cols(); ++cc)
            row.push_back(c.field()->coeffs(c.generator().get(r, cc)));
        entries.push_back(std::move(row));
    }
    gen["entries"] = std::move(entries);
    j["recipe"]["generator"] = std::move(gen);
    j["s"] = s;
    return j;
}

}  // namespace

SuiteResult verify_duality(std::uint64_t seed, std::size_t cases) {
    Timer timer;
    SuiteResult res;
    res.suite = "duality";
    FieldPool pool;

    for (std::size_t idx = 0; idx < cases; ++idx) {
        Rng rng(seed + idx);
        const FieldPtr& f = pool.fields[idx % pool.fields.size()];
        const std::size_t n = 1 + rng.below(8);
        const LinearCode c = random_code(rng, f, n, 1 + rng.below(n));
        ++res.cases;

        for (unsigned s = 0; s < f->m(); ++s) {
            std::uint64_t count = 0;
            const Subspace oracle = bruteforce_galois_annihilator(c, s, &count);
            const LinearCode dual = c.galois_dual(s);
            const Subspace lemma_route =
                dual.is_zero() ? Subspace::zero(f, n) : Subspace::span_of(dual.generator());

            std::uint64_t expect_count = 1;
            for (std::size_t i = 0; i < oracle.dim(); ++i) expect_count *= f->q();

            if (!(oracle == lemma_route) || count != expect_count) {
                ++res.failures;
                if (res.failure_notes.size() < 8) {
                    res.failure_notes.push_back("annihilator mismatch at case " + std::to_string(idx) +
                                                ", s=" + std::to_string(s));
                    res.failure_artifacts.push_back(describe_code(c, s));
                }
            }
        }
    }
    res.seconds = timer.seconds();
    return res;
}

SuiteResult verify_decomposition(std::uint64_t seed, std::size_t cases) {
    Timer timer;
    SuiteResult res;
    res.suite = "decomposition";
    FieldPool pool;

    for (std::size_t idx = 0; idx < cases; ++idx) {
        Rng rng(seed + idx);
        const FieldPtr& f = pool.fields[idx % pool.fields.size()];
        const std::size_t n = 1 + rng.below(8);
        const LinearCode c = random_code(rng, f, n, 1 + rng.below(n));
        const unsigned s = static_cast<unsigned>(rng.below(f->m()));
        ++res.cases;

        auto fail = [&](const std::string& why) {
            ++res.failures;
            if (res.failure_notes.size() < 8) {
                res.failure_notes.push_back(why + " at case " + std::to_string(idx));
                res.failure_artifacts.push_back(describe_code(c, s));
            }
        };

        try {
            const LinearCode h = c.hull(s);
            const auto [lcd, cert] = c.is_galois_lcd(s);
            if (lcd != (h.dim() == 0)) {
                fail("LCD certificate disagrees with hull dimension");
                continue;
            }

            const auto dec = c.hull_decompose(s);
            if (dec.hull.dim() != h.dim()) {
                fail("decomposition hull dimension mismatch");
                continue;
            }
            if (dec.hull.dim() + dec.complement.dim() != c.dim()) {
                fail("dim H + dim D != k");
                continue;
            }
            // H + D spans C with full rank (so H cap D = 0)
            Matrix stacked = dec.hull.generator().vstack(dec.complement.generator());
            if (rank_of(stacked) != c.dim()) {
                fail("H + D does not span C");
                continue;
            }
            for (std::size_t r = 0; r < stacked.rows(); ++r)
                if (!c.contains(stacked.row(r))) {
                    fail("decomposition basis row escapes C");
                    break;
                }
            if (!dec.complement.is_zero()) {
                const auto [dlcd, dcert] = dec.complement.is_galois_lcd(s);
                if (!dlcd) fail("complement is not LCD");
            }
        } catch (const Error& e) {
            fail(std::string("exception: ") + e.what());
        }
    }
    res.seconds = timer.seconds();
    return res;
}

SuiteResult verify_mp_hull(std::uint64_t seed, std::size_t cases) {
    Timer timer;
    SuiteResult res;
    res.suite = "mp_hull";

    const FieldPtr f3 = FiniteField::create(3, 1);
    const FieldPtr f9 = FiniteField::create(3, 2);
    const FieldPtr f4 = FiniteField::create(2, 2);

    for (std::size_t idx = 0; idx < cases; ++idx) {
        Rng rng(seed + idx);
        FieldPtr f;
        bool identity_a = false;
        switch (idx % 3) {
            case 0: f = f3; break;
            case 1: f = f9; break;
            default:
                f = f4;
                identity_a = true;
                break;
        }
        const std::size_t n = 2 + rng.below(4);
        const LinearCode c1 = random_code(rng, f, n, 1 + rng.below(n));
        const LinearCode c2 = random_code(rng, f, n, 1 + rng.below(n));
        const unsigned s = static_cast<unsigned>(rng.below(f->m()));
        ++res.cases;

        Matrix a = identity_a ? Matrix::identity(f, 2)
                              : Matrix::from_rows(f, {{1, 1}, {1, f->from_int(-1)}});

        auto fail = [&](const std::string& why) {
            ++res.failures;
            if (res.failure_notes.size() < 8) {
                res.failure_notes.push_back(why + " at case " + std::to_string(idx));
                json art;
                art["c1"] = describe_code(c1, s);
                art["c2"] = describe_code(c2, s);
                art["identity_A"] = identity_a;
                res.failure_artifacts.push_back(std::move(art));
            }
        };

        try {
            auto spec = make_matrix_product_spec(a, {c1, c2}, s);
            if (!spec.gram_is_diagonal_invertible) {
                fail("gram unexpectedly not diagonal");
                continue;
            }
            const LinearCode formula = matrix_product_hull(spec);
            const auto built = matrix_product_code(spec, 1 << 16);
            const LinearCode direct = built.code.hull(s);
            if (!(formula == direct)) fail("formula hull != direct hull");
        } catch (const Error& e) {
            fail(std::string("exception: ") + e.what());
        }
    }

    // refusal path: a gram that is not diagonal must be rejected, not guessed
    {
        ++res.cases;
        Rng rng(seed + 900001);
        const LinearCode c1 = random_code(rng, f3, 3, 1);
        const LinearCode c2 = random_code(rng, f3, 3, 2);
        Matrix bad = Matrix::from_rows(f3, {{1, 1}, {0, 1}});
        auto spec = make_matrix_product_spec(bad, {c1, c2}, 0);
        bool refused = false;
        if (!spec.gram_is_diagonal_invertible) {
            try {
                matrix_product_hull(spec);
            } catch (const Error& e) {
                refused = e.code() == Errc::GramNotDiagonal;
            }
        }
        if (!refused) {
            ++res.failures;
            res.failure_notes.push_back("non-diagonal gram was not refused");
        }
    }
    res.seconds = timer.seconds();
    return res;
}

SuiteResult verify_gabidulin_hull() {
    Timer timer;
    SuiteResult res;
    res.suite = "gabidulin_hull";

    // (2,3) and (3,3) are the acceptance pair; (2,4) (q even) and (3,5)
    // (both odd) also admit self-dual bases and are cheap
    for (const auto& [p, m] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 3}, {3, 3}, {2, 4}, {3, 5}}) {
        const auto tower = make_extension(FiniteField::create(p, 1), m);
        const auto basis = find_self_dual_basis(tower);
        if (!basis) {
            ++res.failures;
            res.failure_notes.push_back("no self-dual basis found for (" + std::to_string(p) + ", " +
                                        std::to_string(m) + ")");
            continue;
        }
        for (unsigned k = 1; k <= m; ++k) {
            const auto spec = make_gabidulin_spec(tower, *basis, k);
            const LinearCode code = gabidulin_code(spec);
            for (unsigned s = 0; s < m; ++s) {
                ++res.cases;
                const unsigned s_prime = galois_index_from_qpower(tower, s);
                const std::size_t got = code.hull(s_prime).dim();
                const unsigned want = gabidulin_hull_dim_formula(m, k, s);
                if (got != want) {
                    ++res.failures;
                    res.failure_notes.push_back("hull dim (q=" + std::to_string(p) + ", m=" + std::to_string(m) +
                                                ", k=" + std::to_string(k) + ", s=" + std::to_string(s) + "): got " +
                                                std::to_string(got) + ", formula " + std::to_string(want));
                }
            }
            ++res.cases;
            const auto d = code.min_distance(std::uint64_t(1) << 22);
            if (!d.exact() || d.value != m - k + 1) {
                ++res.failures;
                res.failure_notes.push_back("Gabidulin distance (q=" + std::to_string(p) + ", k=" + std::to_string(k) +
                                            ") is not the MDS value");
            }
        }
    }
    res.seconds = timer.seconds();
    return res;
}

}  // namespace ghull
