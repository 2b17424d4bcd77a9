#include "actorkit/algebra.hpp"

namespace actorkit {

Algebra::Algebra(std::string name, const Field& f, std::size_t dim,
                 std::vector<std::string> basis_names, std::vector<ProductTable> products)
    : name_(std::move(name)), field_(f), dim_(dim), basis_names_(std::move(basis_names)),
      products_(std::move(products)) {
    if (products_.empty() || products_.size() > 2)
        throw Error("an algebra carries one or two products, got " +
                    std::to_string(products_.size()));
    if (basis_names_.empty()) {
        for (std::size_t i = 0; i < dim_; ++i) basis_names_.push_back("e" + std::to_string(i));
    }
    if (basis_names_.size() != dim_) throw Error("basis name count differs from dimension");
    for (const auto& p : products_) {
        if (p.c.size() != dim_ * dim_ * dim_)
            throw Error("structure tensor of '" + p.name + "' has wrong shape");
        for (const auto& s : p.c)
            if (!(s.field() == field_)) throw Error("structure constant in the wrong field");
    }
}

Element Algebra::basis_element(std::size_t i) const {
    if (i >= dim_) throw Error("basis index out of range");
    Element e = zero_element();
    e[i] = field_.one();
    return e;
}

void Algebra::check_element(const Element& u) const {
    if (u.size() != dim_) throw Error("element length differs from algebra dimension");
    for (const auto& s : u)
        if (!(s.field() == field_)) throw Error("element in the wrong field");
}

void Algebra::check_product_index(std::size_t r) const {
    if (r >= products_.size()) throw Error("product index out of range");
}

Element Algebra::multiply(const Element& u, const Element& v, std::size_t r) const {
    check_element(u);
    check_element(v);
    check_product_index(r);
    Element out = zero_element();
    for (std::size_t i = 0; i < dim_; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (v[j].is_zero()) continue;
            Scalar uv = u[i] * v[j];
            for (std::size_t k = 0; k < dim_; ++k) {
                const Scalar& c = sc(r, i, j, k);
                if (!c.is_zero()) out[k] += uv * c;
            }
        }
    }
    return out;
}

Matrix Algebra::left_mult(const Element& u, std::size_t r) const {
    check_element(u);
    check_product_index(r);
    Matrix m(field_, dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k) {
                const Scalar& c = sc(r, i, j, k);
                if (!c.is_zero()) m.at(k, j) += u[i] * c;
            }
    }
    return m;
}

Matrix Algebra::right_mult(const Element& u, std::size_t r) const {
    check_element(u);
    check_product_index(r);
    Matrix m(field_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        if (u[j].is_zero()) continue;
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t k = 0; k < dim_; ++k) {
                const Scalar& c = sc(r, i, j, k);
                if (!c.is_zero()) m.at(k, i) += u[j] * c;
            }
    }
    return m;
}

Algebra Algebra::with_single_product(std::size_t r) const {
    check_product_index(r);
    return Algebra(name_ + "." + products_[r].name, field_, dim_, basis_names_, {products_[r]});
}

bool operator==(const Algebra& a, const Algebra& b) {
    if (!(a.field_ == b.field_) || a.dim_ != b.dim_ || a.products_.size() != b.products_.size())
        return false;
    for (std::size_t r = 0; r < a.products_.size(); ++r)
        if (a.products_[r].c != b.products_[r].c) return false;
    return true;
}

std::optional<Element> find_unit(const Algebra& a) {
    const Field& f = a.field();
    std::size_t n = a.dim();
    // Unknown e with e b_j = b_j and b_j e = b_j for every j.
    Matrix m(f, 2 * n * n, n);
    Vec rhs = vec_zero(f, 2 * n * n);
    std::size_t row = 0;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t c = 0; c < n; ++c) {
            for (std::size_t i = 0; i < n; ++i) m.at(row, i) = a.sc(0, i, j, c);
            rhs[row] = (j == c) ? f.one() : f.zero();
            ++row;
        }
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t c = 0; c < n; ++c) {
            for (std::size_t i = 0; i < n; ++i) m.at(row, i) = a.sc(0, j, i, c);
            rhs[row] = (j == c) ? f.one() : f.zero();
            ++row;
        }
    auto sol = solve_linear(m, rhs);
    if (!sol) return std::nullopt;
    if (n > 0 && nullspace_basis(m).dim() != 0)
        throw Error("unit system is underdetermined; units must be unique");
    return sol;
}

Subspace annihilator(const Algebra& a) {
    const Field& f = a.field();
    std::size_t n = a.dim();
    RowReducer red(f, n);
    for (std::size_t r = 0; r < a.num_products(); ++r)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t c = 0; c < n; ++c) {
                Vec left(n, f.zero()), right(n, f.zero());
                for (std::size_t i = 0; i < n; ++i) {
                    left[i] = a.sc(r, i, j, c);   // z b_j = 0
                    right[i] = a.sc(r, j, i, c);  // b_j z = 0
                }
                red.insert(std::move(left));
                red.insert(std::move(right));
            }
    return kernel_from_reducer(red);
}

Subspace product_subspace(const Algebra& a, std::size_t r) {
    std::size_t n = a.dim();
    std::vector<Vec> span;
    span.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            span.push_back(a.multiply(a.basis_element(i), a.basis_element(j), r));
    return Subspace::span(a.field(), n, span);
}

bool is_perfect(const Algebra& a, std::size_t r) {
    return product_subspace(a, r).dim() == a.dim();
}

Algebra unitize(const Algebra& a) {
    const Field& f = a.field();
    std::size_t n = a.dim();
    std::size_t m = n + 1;
    std::vector<std::string> names;
    names.push_back("1");
    for (const auto& s : a.basis_names()) names.push_back(s);

    std::vector<ProductTable> prods;
    for (std::size_t r = 0; r < a.num_products(); ++r) {
        ProductTable t{a.product_name(r), std::vector<Scalar>(m * m * m, f.zero())};
        auto set = [&](std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
            t.c[(i * m + j) * m + k] = v;
        };
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) set(i + 1, j + 1, k + 1, a.sc(r, i, j, k));
        if (r == 0) {
            // (a,x)(a',x') = (aa', xx' + a x' + a' x)
            set(0, 0, 0, f.one());
            for (std::size_t i = 0; i < n; ++i) {
                set(0, i + 1, i + 1, f.one());
                set(i + 1, 0, i + 1, f.one());
            }
        }
        // The bracket of a two-product algebra gets no unit cross terms:
        // [(a,x),(a',x')] = [x,x'].
        prods.push_back(std::move(t));
    }
    return Algebra("unitize(" + a.name() + ")", f, m, std::move(names), std::move(prods));
}

Subspace lie_center(const Algebra& a, std::size_t bracket_index) {
    const Field& f = a.field();
    std::size_t n = a.dim();
    if (bracket_index >= a.num_products()) throw Error("product index out of range");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Scalar s = a.sc(bracket_index, i, j, k) + a.sc(bracket_index, j, i, k);
                if (!s.is_zero() || (i == j && !a.sc(bracket_index, i, i, k).is_zero()))
                    throw Error("lie_center requires an alternating product: [" +
                                a.basis_names()[i] + "," + a.basis_names()[j] + "] violates it");
            }
    RowReducer red(f, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t c = 0; c < n; ++c) {
            Vec row(n, f.zero());
            for (std::size_t i = 0; i < n; ++i) row[i] = a.sc(bracket_index, i, j, c);
            red.insert(std::move(row));
        }
    return kernel_from_reducer(red);
}

std::optional<Algebra> induced_subalgebra(const Algebra& a, const Subspace& s, std::string name) {
    const Field& f = a.field();
    if (s.ambient_dim() != a.dim()) throw Error("subspace ambient dimension mismatch");
    std::size_t m = s.dim();
    std::vector<ProductTable> prods;
    for (std::size_t r = 0; r < a.num_products(); ++r) {
        ProductTable t{a.product_name(r), std::vector<Scalar>(m * m * m, f.zero())};
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                Element w = a.multiply(s.basis()[i], s.basis()[j], r);
                auto coords = s.coordinates(w);
                if (!coords) return std::nullopt;  // not closed under product r
                for (std::size_t k = 0; k < m; ++k) t.c[(i * m + j) * m + k] = (*coords)[k];
            }
        prods.push_back(std::move(t));
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m; ++i) names.push_back("z" + std::to_string(i));
    return Algebra(std::move(name), f, m, std::move(names), std::move(prods));
}

Algebra change_of_basis(const Algebra& a, const Matrix& p, std::string name) {
    std::size_t n = a.dim();
    if (p.rows() != n || p.cols() != n) throw Error("change of basis matrix must be n x n");
    auto pinv = inverse(p);
    if (!pinv) throw Error("change of basis matrix is singular");
    std::vector<ProductTable> prods;
    for (std::size_t r = 0; r < a.num_products(); ++r) {
        ProductTable t{a.product_name(r), std::vector<Scalar>(n * n * n, a.field().zero())};
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Element w = a.multiply(p.column(i), p.column(j), r);
                Element y = pinv->apply(w);
                for (std::size_t k = 0; k < n; ++k) t.c[(i * n + j) * n + k] = y[k];
            }
        prods.push_back(std::move(t));
    }
    return Algebra(std::move(name), a.field(), n, {}, std::move(prods));
}

}  // namespace actorkit
