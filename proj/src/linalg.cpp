#include "actorkit/linalg.hpp"

#include <algorithm>

namespace actorkit {

Vec vec_zero(const Field& f, std::size_t n) { return Vec(n, f.zero()); }

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw Error("vector length mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw Error("vector length mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
    Vec r = v;
    for (auto& x : r) x *= c;
    return r;
}

bool vec_is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), a_(rows * cols, f.zero()) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
}

Matrix Matrix::from_rows(const Field& f, std::size_t cols, const std::vector<Vec>& rows) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw Error("row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_columns(const Field& f, std::size_t rows, const std::vector<Vec>& cols) {
    Matrix m(f, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw Error("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Vec Matrix::row(std::size_t i) const {
    return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

Vec Matrix::column(std::size_t j) const {
    Vec v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
    return v;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw Error("matrix-vector dimension mismatch");
    Vec r = vec_zero(field_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

Matrix Matrix::transpose() const {
    Matrix m(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix composition dimension mismatch");
    Matrix r(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b.at(k, j).is_zero()) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

Matrix operator*(const Scalar& c, Matrix m) {
    for (std::size_t i = 0; i < m.rows_; ++i)
        for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) *= c;
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || !(a.field_ == b.field_)) return false;
    return a.a_ == b.a_;
}

Vec Matrix::flatten() const { return a_; }

Matrix Matrix::unflatten(const Field& f, std::size_t rows, std::size_t cols, const Vec& v,
                         std::size_t offset) {
    if (offset + rows * cols > v.size()) throw Error("unflatten out of range");
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows * cols; ++i) m.a_[i] = v[offset + i];
    return m;
}

RowReducer::RowReducer(const Field& f, std::size_t cols) : field_(f), cols_(cols) {}

bool RowReducer::insert(Vec row) {
    if (row.size() != cols_) throw Error("row length mismatch");
    row = reduce(std::move(row));
    std::size_t lead = 0;
    while (lead < cols_ && row[lead].is_zero()) ++lead;
    if (lead == cols_) return false;
    Scalar inv = row[lead].inverse();
    for (std::size_t j = lead; j < cols_; ++j) row[j] *= inv;
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, lead);
    rows_.insert(rows_.begin() + pos, std::move(row));
    return true;
}

void RowReducer::insert_rows(const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) insert(m.row(i));
}

Vec RowReducer::reduce(Vec v) const {
    if (v.size() != cols_) throw Error("row length mismatch");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& c = v[pivots_[r]];
        if (c.is_zero()) continue;
        Scalar f = c;  // pivot entries are 1
        const Vec& base = rows_[r];
        for (std::size_t j = pivots_[r]; j < cols_; ++j)
            if (!base[j].is_zero()) v[j] -= f * base[j];
    }
    return v;
}

std::vector<Vec> RowReducer::rref_rows() const {
    std::vector<Vec> out = rows_;
    // Eliminate each pivot column from the rows above it.
    for (std::size_t r = out.size(); r-- > 0;) {
        for (std::size_t s = 0; s < r; ++s) {
            Scalar c = out[s][pivots_[r]];
            if (c.is_zero()) continue;
            for (std::size_t j = pivots_[r]; j < cols_; ++j)
                if (!out[r][j].is_zero()) out[s][j] -= c * out[r][j];
        }
    }
    return out;
}

Subspace::Subspace(const Field& f, std::size_t ambient) : field_(f), ambient_(ambient) {}

Subspace Subspace::span(const Field& f, std::size_t ambient, const std::vector<Vec>& vectors) {
    RowReducer red(f, ambient);
    for (const auto& v : vectors) red.insert(v);
    return from_reducer(red);
}

Subspace Subspace::from_reducer(const RowReducer& r) {
    Subspace s(r.field(), r.cols());
    s.basis_ = r.rref_rows();
    s.pivots_ = r.pivots();
    return s;
}

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient_) throw Error("ambient dimension mismatch");
    Vec res = v;
    for (std::size_t r = 0; r < basis_.size(); ++r) {
        const Scalar& c = res[pivots_[r]];
        if (c.is_zero()) continue;
        Scalar f = c;
        for (std::size_t j = pivots_[r]; j < ambient_; ++j)
            if (!basis_[r][j].is_zero()) res[j] -= f * basis_[r][j];
    }
    return vec_is_zero(res);
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    if (v.size() != ambient_) throw Error("ambient dimension mismatch");
    Vec res = v;
    Vec coords = vec_zero(field_, basis_.size());
    for (std::size_t r = 0; r < basis_.size(); ++r) {
        Scalar c = res[pivots_[r]];
        if (c.is_zero()) continue;
        coords[r] = c;
        for (std::size_t j = pivots_[r]; j < ambient_; ++j)
            if (!basis_[r][j].is_zero()) res[j] -= c * basis_[r][j];
    }
    if (!vec_is_zero(res)) return std::nullopt;
    return coords;
}

bool operator==(const Subspace& a, const Subspace& b) {
    return a.field_ == b.field_ && a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
}

Subspace nullspace_basis(const Matrix& m) {
    RowReducer red(m.field(), m.cols());
    red.insert_rows(m);
    return kernel_from_reducer(red);
}

Subspace kernel_from_reducer(const RowReducer& red) {
    const Field& f = red.field();
    std::size_t n = red.cols();
    std::vector<Vec> rref = red.rref_rows();
    const auto& pivots = red.pivots();
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<Vec> kernel;
    for (std::size_t j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        Vec v = vec_zero(f, n);
        v[j] = f.one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rref[r][j];
        kernel.push_back(std::move(v));
    }
    return Subspace::span(f, n, kernel);
}

bool subspace_membership(const Subspace& s, const Vec& v) { return s.contains(v); }

std::optional<Vec> solve_linear(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw Error("right-hand side length mismatch");
    const Field& f = m.field();
    std::size_t n = m.cols();
    RowReducer red(f, n + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Vec row = m.row(i);
        row.push_back(b[i]);
        red.insert(std::move(row));
    }
    std::vector<Vec> rref = red.rref_rows();
    const auto& pivots = red.pivots();
    Vec x = vec_zero(f, n);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == n) return std::nullopt;  // pivot in the augmented column
        x[pivots[r]] = rref[r][n];
    }
    return x;
}

std::size_t rank(const Matrix& m) {
    RowReducer red(m.field(), m.cols());
    red.insert_rows(m);
    return red.rank();
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error("inverse of a non-square matrix");
    const Field& f = m.field();
    std::size_t n = m.rows();
    // Row-reduce [m | I]; m invertible iff the left block reduces to I.
    RowReducer red(f, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec row = m.row(i);
        Vec aug = vec_zero(f, n);
        aug[i] = f.one();
        row.insert(row.end(), aug.begin(), aug.end());
        red.insert(std::move(row));
    }
    if (red.rank() < n) return std::nullopt;
    std::vector<Vec> rref = red.rref_rows();
    const auto& pivots = red.pivots();
    for (std::size_t r = 0; r < n; ++r)
        if (pivots[r] != r) return std::nullopt;
    Matrix inv(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = rref[i][n + j];
    return inv;
}

}  // namespace actorkit
