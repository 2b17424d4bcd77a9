#pragma once

#include <optional>
#include <string>
#include <vector>

#include "actorkit/linalg.hpp"

namespace actorkit {

/// Coordinates of an algebra element relative to the basis.
using Element = Vec;

/// One bilinear product given by structure constants c[i][j][k]:
/// b_i * b_j = sum_k c[i][j][k] b_k.
struct ProductTable {
    std::string name;
    std::vector<Scalar> c;  // n*n*n, index (i*n + j)*n + k
};

/// Finite-dimensional algebra over an exact field with one or two bilinear
/// products. Immutable after construction.
class Algebra {
public:
    Algebra(std::string name, const Field& f, std::size_t dim,
            std::vector<std::string> basis_names, std::vector<ProductTable> products);

    const std::string& name() const { return name_; }
    const Field& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return basis_names_; }
    std::size_t num_products() const { return products_.size(); }
    const std::string& product_name(std::size_t r) const { return products_.at(r).name; }
    const std::vector<ProductTable>& products() const { return products_; }

    /// Structure constant c^k_{ij} of product r.
    const Scalar& sc(std::size_t r, std::size_t i, std::size_t j, std::size_t k) const {
        return products_[r].c[(i * dim_ + j) * dim_ + k];
    }

    Element zero_element() const { return vec_zero(field_, dim_); }
    Element basis_element(std::size_t i) const;

    /// Bilinear product of two elements: sum_{i,j} u_i v_j c^._{ij}.
    Element multiply(const Element& u, const Element& v, std::size_t r = 0) const;

    /// Matrix of x -> u *_r x.
    Matrix left_mult(const Element& u, std::size_t r = 0) const;
    /// Matrix of x -> x *_r u.
    Matrix right_mult(const Element& u, std::size_t r = 0) const;

    /// Algebra with the same space but only product r.
    Algebra with_single_product(std::size_t r) const;

    friend bool operator==(const Algebra& a, const Algebra& b);
    friend bool operator!=(const Algebra& a, const Algebra& b) { return !(a == b); }

private:
    std::string name_;
    Field field_;
    std::size_t dim_;
    std::vector<std::string> basis_names_;
    std::vector<ProductTable> products_;

    void check_element(const Element& u) const;
    void check_product_index(std::size_t r) const;
};

/// The unit element e (e b_i = b_i e = b_i for all i, product 0) if one
/// exists. Units are unique when they exist; uniqueness is asserted.
std::optional<Element> find_unit(const Algebra& a);

/// Ann(X) = {z : z x = x z = 0 for all x}, over every product.
Subspace annihilator(const Algebra& a);

/// Span of all products b_i *_r b_j.
Subspace product_subspace(const Algebra& a, std::size_t r = 0);

/// True iff X^2 = X for product r.
bool is_perfect(const Algebra& a, std::size_t r = 0);

/// The algebra F + X on dim+1 generators with product
/// (a,x)(a',x') = (aa', xx' + a x' + a' x), unit (1,0) at index 0.
/// A second product, when present, extends componentwise on the X part.
Algebra unitize(const Algebra& a);

/// {z : [z, b_i] = 0 for all i} for the (alternating) product at
/// bracket_index. Throws when the product is not alternating on the basis.
Subspace lie_center(const Algebra& a, std::size_t bracket_index);

/// The algebra induced on a subspace closed under every product of a, or
/// nullopt when the subspace is not closed.
std::optional<Algebra> induced_subalgebra(const Algebra& a, const Subspace& s, std::string name);

/// Structure constants rewritten in the basis given by the columns of p
/// (columns are the new basis vectors in old coordinates). p must be
/// invertible.
Algebra change_of_basis(const Algebra& a, const Matrix& p, std::string name);

}  // namespace actorkit
