#include "ghull/matrix.hpp"

#include <string>

namespace ghull {

void Matrix::check_same_field(const Matrix& other) const {
    if (!f_->same(*other.f_)) raise(Errc::FieldMismatch, "matrices over different fields");
}

Matrix Matrix::identity(FieldPtr f, std::size_t n) {
    Matrix m(std::move(f), n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::from_rows(FieldPtr f, const std::vector<std::vector<rep_t>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    Matrix m(std::move(f), r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) raise(Errc::LengthMismatch, "ragged row list");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    check_same_field(rhs);
    if (cols_ != rhs.rows_)
        raise(Errc::LengthMismatch, "matrix product dimension mismatch: " + std::to_string(cols_) + " vs " +
                                        std::to_string(rhs.rows_));
    const FiniteField& F = *f_;
    Matrix out(f_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            rep_t v = get(i, k);
            if (!v) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.set(i, j, F.add(out.get(i, j), F.mul(v, rhs.get(k, j))));
        }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(f_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.set(j, i, get(i, j));
    return out;
}

Matrix Matrix::entrywise_frobenius(std::uint64_t t) const {
    Matrix out(f_, rows_, cols_);
    for (std::size_t i = 0; i < rows_ * cols_; ++i) out.a_[i] = f_->frobenius(a_[i], t);
    return out;
}

Matrix Matrix::vstack(const Matrix& below) const {
    check_same_field(below);
    if (cols_ != below.cols_) raise(Errc::LengthMismatch, "vstack column mismatch");
    Matrix out(f_, rows_ + below.rows_, cols_);
    std::copy(a_.begin(), a_.end(), out.a_.begin());
    std::copy(below.a_.begin(), below.a_.end(), out.a_.begin() + static_cast<std::ptrdiff_t>(a_.size()));
    return out;
}

Matrix Matrix::submatrix_rows(std::size_t first, std::size_t count) const {
    Matrix out(f_, count, cols_);
    std::copy(a_.begin() + static_cast<std::ptrdiff_t>(first * cols_),
              a_.begin() + static_cast<std::ptrdiff_t>((first + count) * cols_), out.a_.begin());
    return out;
}

RrefResult rref(const Matrix& a) {
    const FiniteField& F = *a.field();
    Matrix r = a;
    const std::size_t nr = r.rows(), nc = r.cols();
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < nc && rank < nr; ++col) {
        std::size_t piv = rank;
        while (piv < nr && r.get(piv, col) == 0) ++piv;
        if (piv == nr) continue;
        if (piv != rank)
            for (std::size_t j = 0; j < nc; ++j) {
                rep_t t = r.get(rank, j);
                r.set(rank, j, r.get(piv, j));
                r.set(piv, j, t);
            }
        rep_t iv = F.inv(r.get(rank, col));
        for (std::size_t j = col; j < nc; ++j) r.set(rank, j, F.mul(iv, r.get(rank, j)));
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == rank) continue;
            rep_t f = r.get(i, col);
            if (!f) continue;
            for (std::size_t j = col; j < nc; ++j) r.set(i, j, F.sub(r.get(i, j), F.mul(f, r.get(rank, j))));
        }
        pivots.push_back(col);
        ++rank;
    }
    return {std::move(r), rank, std::move(pivots)};
}

std::size_t rank_of(const Matrix& a) { return rref(a).rank; }

Matrix kernel_basis(const Matrix& a) {
    const FiniteField& F = *a.field();
    auto rr = rref(a);
    const std::size_t n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : rr.pivots) is_pivot[c] = true;

    Matrix ker(a.field(), n - rr.rank, n);
    std::size_t kr = 0;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        ker.set(kr, free_col, 1);
        for (std::size_t prow = 0; prow < rr.rank; ++prow)
            ker.set(kr, rr.pivots[prow], F.neg(rr.r.get(prow, free_col)));
        ++kr;
    }
    return rref(ker).r;  // canonical form
}

bool is_nonsingular(const Matrix& a) {
    if (a.rows() != a.cols()) raise(Errc::NotSquare, "nonsingularity needs a square matrix");
    return rank_of(a) == a.rows();
}

Matrix inverse(const Matrix& a) {
    if (a.rows() != a.cols()) raise(Errc::NotSquare, "inverse needs a square matrix");
    const std::size_t n = a.rows();
    Matrix aug(a.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.set(i, j, a.get(i, j));
        aug.set(i, n + i, 1);
    }
    auto rr = rref(aug);
    if (rr.rank < n || rr.pivots[n - 1] >= n) raise(Errc::Singular, "matrix is singular");
    Matrix out(a.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.set(i, j, rr.r.get(i, n + j));
    return out;
}

Subspace Subspace::span_of(const Matrix& rows) {
    auto rr = rref(rows);
    return Subspace(rr.r.submatrix_rows(0, rr.rank));
}

Subspace Subspace::zero(FieldPtr f, std::size_t ambient) { return Subspace(Matrix(std::move(f), 0, ambient)); }

Subspace Subspace::intersect(const Subspace& other) const {
    if (!field()->same(*other.field()) || ambient() != other.ambient())
        raise(Errc::AmbientMismatch, "subspaces live in different ambient spaces");
    // x in U cap V iff x = a U = b V; solve a U - b V = 0 via the left kernel
    // of the stacked basis, then map the a-part back through U.
    const Matrix stacked = basis_.vstack(other.basis_);
    const Matrix left_ker = kernel_basis(stacked.transpose());  // rows (a | b)
    if (left_ker.rows() == 0) return Subspace::zero(field(), ambient());
    Matrix a_part(field(), left_ker.rows(), dim());  // the a-coefficients
    for (std::size_t i = 0; i < left_ker.rows(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) a_part.set(i, j, left_ker.get(i, j));
    return Subspace::span_of(a_part * basis_);
}

Subspace Subspace::sum(const Subspace& other) const {
    if (!field()->same(*other.field()) || ambient() != other.ambient())
        raise(Errc::AmbientMismatch, "subspaces live in different ambient spaces");
    return Subspace::span_of(basis_.vstack(other.basis_));
}

bool Subspace::contains(std::span<const rep_t> v) const {
    if (v.size() != ambient()) raise(Errc::AmbientMismatch, "vector length != ambient dimension");
    // reduce v against the RREF basis
    const FiniteField& F = *field();
    std::vector<rep_t> w(v.begin(), v.end());
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        // leading column of row i
        std::size_t lead = 0;
        while (lead < ambient() && basis_.get(i, lead) == 0) ++lead;
        if (lead == ambient()) continue;
        rep_t c = w[lead];
        if (!c) continue;
        for (std::size_t j = lead; j < ambient(); ++j) w[j] = F.sub(w[j], F.mul(c, basis_.get(i, j)));
    }
    for (rep_t x : w)
        if (x) return false;
    return true;
}

}  // namespace ghull
