#include "hilbcm/matrix.hpp"

#include <utility>

#include "hilbcm/errors.hpp"

namespace hilbcm {

namespace {

std::size_t bit_size(const Rational& q) {
    return mpz_sizeinbase(q.get_num().get_mpz_t(), 2) +
           mpz_sizeinbase(q.get_den().get_mpz_t(), 2);
}

// Row echelon reduction in place; returns pivot (row, col) pairs.
// Within each column the structurally simplest nonzero entry (fewest
// bits) is chosen as pivot to limit coefficient growth.
std::vector<std::pair<std::size_t, std::size_t>> echelonize(std::vector<std::vector<Rational>>& a) {
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    if (a.empty()) return pivots;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = rows;
        std::size_t best_bits = 0;
        for (std::size_t i = r; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            const std::size_t bits = bit_size(a[i][c]);
            if (best == rows || bits < best_bits) {
                best = i;
                best_bits = bits;
            }
        }
        if (best == rows) continue;
        std::swap(a[r], a[best]);
        const Rational inv = 1 / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.emplace_back(r, c);
        ++r;
    }
    return pivots;
}

std::vector<std::vector<Rational>> to_rows(const Matrix& m) {
    std::vector<std::vector<Rational>> rows(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
    return rows;
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::column(const std::vector<Rational>& v) {
    Matrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
    return m;
}

Matrix Matrix::diagonal(const std::vector<Rational>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw PreconditionError("matrix size mismatch in addition");
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] + o.entries_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw PreconditionError("matrix size mismatch in subtraction");
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] - o.entries_[i];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw PreconditionError("matrix size mismatch in product");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

Matrix Matrix::operator*(const Rational& s) const {
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] * s;
    return r;
}

Matrix Matrix::operator-() const { return *this * Rational(-1); }

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Rational Matrix::trace() const {
    if (rows_ != cols_) throw PreconditionError("trace of a non-square matrix");
    Rational t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& e : entries_)
        if (e != 0) return false;
    return true;
}

std::vector<Rational> Matrix::col_vector(std::size_t c) const {
    std::vector<Rational> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, c);
    return v;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw PreconditionError("matrix/vector size mismatch");
    std::vector<Rational> r(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0) r[i] += at(i, j) * v[j];
    return r;
}

Matrix Matrix::hstack(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) return Matrix();
    std::size_t cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != blocks[0].rows()) throw PreconditionError("hstack row mismatch");
        cols += b.cols();
    }
    Matrix r(blocks[0].rows(), cols);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, off + j) = b.at(i, j);
        off += b.cols();
    }
    return r;
}

Matrix Matrix::vstack(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) return Matrix();
    std::size_t rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != blocks[0].cols()) throw PreconditionError("vstack column mismatch");
        rows += b.rows();
    }
    Matrix r(rows, blocks[0].cols());
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) r.at(off + i, j) = b.at(i, j);
        off += b.rows();
    }
    return r;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix mat_pow(const Matrix& m, std::size_t k) {
    if (m.rows() != m.cols()) throw PreconditionError("power of a non-square matrix");
    Matrix r = Matrix::identity(m.rows());
    Matrix base = m;
    while (k > 0) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

std::size_t mat_rank(const Matrix& m) {
    auto rows = to_rows(m);
    return echelonize(rows).size();
}

std::vector<std::vector<Rational>> mat_kernel(const Matrix& m) {
    auto rows = to_rows(m);
    const auto pivots = echelonize(rows);
    std::vector<bool> is_pivot(m.cols(), false);
    for (const auto& [r, c] : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_c = 0; free_c < m.cols(); ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[free_c] = 1;
        for (const auto& [r, c] : pivots) v[c] = -rows[r][free_c];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> mat_solve(const Matrix& m, const std::vector<Rational>& rhs) {
    if (rhs.size() != m.rows()) throw PreconditionError("solve rhs size mismatch");
    std::vector<std::vector<Rational>> aug(m.rows(), std::vector<Rational>(m.cols() + 1));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug[i][j] = m.at(i, j);
        aug[i][m.cols()] = rhs[i];
    }
    const auto pivots = echelonize(aug);
    for (const auto& [r, c] : pivots)
        if (c == m.cols()) return std::nullopt;  // inconsistent
    std::vector<Rational> x(m.cols(), Rational(0));
    for (const auto& [r, c] : pivots) x[c] = aug[r][m.cols()];
    return x;
}

std::optional<Matrix> mat_inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw PreconditionError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m.at(i, j);
        aug[i][n + i] = 1;
    }
    const auto pivots = echelonize(aug);
    if (pivots.size() < n || pivots.back().second >= n) return std::nullopt;
    Matrix inv(n, n);
    for (const auto& [r, c] : pivots)
        for (std::size_t j = 0; j < n; ++j) inv.at(c, j) = aug[r][n + j];
    return inv;
}

std::vector<Rational> char_poly(const Matrix& m) {
    if (m.rows() != m.cols()) throw PreconditionError("char poly of a non-square matrix");
    const std::size_t n = m.rows();
    // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr M_1,
    // M_{k+1} = A (M_k + c_{n-k} Id), c_{n-k-1} = -tr(M_{k+1})/(k+1).
    std::vector<Rational> coeff(n + 1, Rational(0));
    coeff[n] = 1;
    Matrix mk = m;
    Rational ck = -mk.trace();
    if (n >= 1) coeff[n - 1] = ck;
    for (std::size_t k = 2; k <= n; ++k) {
        mk = m * (mk + Matrix::identity(n) * ck);
        ck = -mk.trace() / Rational(static_cast<long>(k));
        coeff[n - k] = ck;
    }
    return coeff;
}

IncrementalSpan::InsertResult IncrementalSpan::insert(const std::vector<Rational>& v) {
    if (v.size() != ambient_) throw PreconditionError("span vector dimension mismatch");
    std::vector<Rational> w = v;
    std::vector<Rational> rep(accepted_.size(), Rational(0));
    for (std::size_t k = 0; k < echelon_.size(); ++k) {
        const Rational f = w[pivots_[k]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j) w[j] -= f * echelon_[k][j];
        for (std::size_t m = 0; m < rep.size(); ++m) rep[m] += f * mix_[k][m];
    }
    std::size_t piv = ambient_;
    for (std::size_t j = 0; j < ambient_; ++j)
        if (w[j] != 0) {
            piv = j;
            break;
        }
    if (piv == ambient_) return {false, std::move(rep)};

    // New direction: normalize the residual as a fresh echelon row. Its
    // expression over the accepted originals is v - sum rep_m a_m.
    accepted_.push_back(v);
    std::vector<Rational> mix_row(accepted_.size(), Rational(0));
    for (std::size_t m = 0; m + 1 < accepted_.size(); ++m) mix_row[m] = -rep[m];
    mix_row.back() = 1;
    const Rational inv = 1 / w[piv];
    for (auto& e : w) e *= inv;
    for (auto& e : mix_row) e *= inv;

    // Keep reduced form: eliminate the new pivot from older rows.
    for (std::size_t k = 0; k < echelon_.size(); ++k) {
        const Rational f = echelon_[k][piv];
        if (f == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j) echelon_[k][j] -= f * w[j];
        mix_[k].resize(accepted_.size(), Rational(0));
        for (std::size_t m = 0; m < accepted_.size(); ++m) mix_[k][m] -= f * mix_row[m];
    }
    for (auto& row : mix_) row.resize(accepted_.size(), Rational(0));
    echelon_.push_back(std::move(w));
    mix_.push_back(std::move(mix_row));
    pivots_.push_back(piv);
    return {true, std::nullopt};
}

std::optional<std::vector<Rational>> IncrementalSpan::coordinates(
    const std::vector<Rational>& v) const {
    if (v.size() != ambient_) throw PreconditionError("span vector dimension mismatch");
    std::vector<Rational> w = v;
    std::vector<Rational> rep(accepted_.size(), Rational(0));
    for (std::size_t k = 0; k < echelon_.size(); ++k) {
        const Rational f = w[pivots_[k]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j) w[j] -= f * echelon_[k][j];
        for (std::size_t m = 0; m < rep.size(); ++m) rep[m] += f * mix_[k][m];
    }
    for (const auto& e : w)
        if (e != 0) return std::nullopt;
    return rep;
}

}  // namespace hilbcm
