#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "actorkit/field.hpp"

namespace actorkit {

using Vec = std::vector<Scalar>;

Vec vec_zero(const Field& f, std::size_t n);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& v);
bool vec_is_zero(const Vec& v);

/// Dense matrix over an exact Field. Row-major storage.
class Matrix {
public:
    Matrix(const Field& f, std::size_t rows, std::size_t cols);

    static Matrix identity(const Field& f, std::size_t n);
    static Matrix from_rows(const Field& f, std::size_t cols, const std::vector<Vec>& rows);
    static Matrix from_columns(const Field& f, std::size_t rows, const std::vector<Vec>& cols);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec column(std::size_t j) const;

    /// Matrix applied to a column vector.
    Vec apply(const Vec& v) const;

    Matrix transpose() const;
    bool is_zero() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& c, Matrix m);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    /// Flatten row-major into a vector of length rows*cols.
    Vec flatten() const;
    static Matrix unflatten(const Field& f, std::size_t rows, std::size_t cols, const Vec& v,
                            std::size_t offset = 0);

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

/// Incremental row-echelon reducer. Rows are kept with unit leading entries
/// and strictly increasing pivot columns; full back-elimination happens in
/// rref_rows(). Used for rank, span canonicalization and kernel extraction.
class RowReducer {
public:
    RowReducer(const Field& f, std::size_t cols);

    /// Reduces the row against the current basis and inserts the residual if
    /// nonzero. Returns true when the rank grew.
    bool insert(Vec row);

    void insert_rows(const Matrix& m);

    /// Residual of v after reduction (zero iff v lies in the row span).
    Vec reduce(Vec v) const;

    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    /// Fully back-eliminated rows, sorted by pivot column (canonical RREF).
    std::vector<Vec> rref_rows() const;

    const std::vector<std::size_t>& pivots() const { return pivots_; }

private:
    Field field_;
    std::size_t cols_;
    std::vector<Vec> rows_;            // echelon rows, unit pivots
    std::vector<std::size_t> pivots_;  // pivot column of each row, ascending
};

/// A linear subspace of F^n carried by its canonical RREF basis; two
/// subspaces are equal iff their basis grids are identical.
class Subspace {
public:
    /// The zero subspace of F^ambient.
    Subspace(const Field& f, std::size_t ambient);

    /// Row span of the given vectors, canonicalized.
    static Subspace span(const Field& f, std::size_t ambient, const std::vector<Vec>& vectors);

    static Subspace from_reducer(const RowReducer& r);

    const Field& field() const { return field_; }
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }

    bool contains(const Vec& v) const;

    /// Coordinates of v in the RREF basis, or nullopt when v is outside.
    std::optional<Vec> coordinates(const Vec& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b);
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    Field field_;
    std::size_t ambient_;
    std::vector<Vec> basis_;           // RREF rows
    std::vector<std::size_t> pivots_;
};

/// Full solution space of m v = 0, canonical; dim = cols - rank(m).
Subspace nullspace_basis(const Matrix& m);

/// Kernel of the linear map whose constraint rows were fed to the reducer.
Subspace kernel_from_reducer(const RowReducer& r);

/// True iff v lies in the span of s. Throws on ambient dimension mismatch.
bool subspace_membership(const Subspace& s, const Vec& v);

/// Some solution of m x = b, or nullopt when the system is inconsistent.
std::optional<Vec> solve_linear(const Matrix& m, const Vec& b);

std::size_t rank(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

}  // namespace actorkit
