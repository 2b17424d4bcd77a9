#include "actorkit/builders.hpp"

namespace actorkit {
namespace builders {

namespace {

ProductTable zero_table(const Field& f, std::size_t n, std::string name) {
    return ProductTable{std::move(name), std::vector<Scalar>(n * n * n, f.zero())};
}

void set(ProductTable& t, std::size_t n, std::size_t i, std::size_t j, std::size_t k,
         const Scalar& v) {
    t.c[(i * n + j) * n + k] = v;
}

}  // namespace

Algebra field_algebra(const Field& f) {
    ProductTable t = zero_table(f, 1, "mul");
    set(t, 1, 0, 0, 0, f.one());
    return Algebra("F", f, 1, {"1"}, {std::move(t)});
}

Algebra abelian(const Field& f, std::size_t n) {
    return Algebra("abelian" + std::to_string(n), f, n, {}, {zero_table(f, n, "mul")});
}

Algebra idempotent_line(const Field& f) {
    ProductTable t = zero_table(f, 1, "mul");
    set(t, 1, 0, 0, 0, f.one());
    return Algebra("idempotent_line", f, 1, {"b"}, {std::move(t)});
}

Algebra nilpotent_line(const Field& f) {
    return Algebra("nilpotent_line", f, 1, {"b"}, {zero_table(f, 1, "mul")});
}

Algebra dual_numbers(const Field& f) {
    ProductTable t = zero_table(f, 2, "mul");
    set(t, 2, 0, 0, 0, f.one());
    set(t, 2, 0, 1, 1, f.one());
    set(t, 2, 1, 0, 1, f.one());
    return Algebra("dual_numbers", f, 2, {"1", "x"}, {std::move(t)});
}

Algebra product_of_fields(const Field& f) {
    ProductTable t = zero_table(f, 2, "mul");
    set(t, 2, 0, 0, 0, f.one());
    set(t, 2, 1, 1, 1, f.one());
    return Algebra("FxF", f, 2, {"e1", "e2"}, {std::move(t)});
}

Algebra truncated_polynomial_ideal(const Field& f) {
    ProductTable t = zero_table(f, 2, "mul");
    set(t, 2, 0, 0, 1, f.one());  // x * x = x^2, everything else dies in (x^3)
    return Algebra("x_ideal_mod_x3", f, 2, {"x", "x2"}, {std::move(t)});
}

Algebra matrix2(const Field& f) {
    // Basis E11, E12, E21, E22; E_ab E_cd = delta_bc E_ad.
    ProductTable t = zero_table(f, 4, "mul");
    auto idx = [](std::size_t a, std::size_t b) { return 2 * a + b; };
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t c = 0; c < 2; ++c)
                for (std::size_t d = 0; d < 2; ++d)
                    if (b == c) set(t, 4, idx(a, b), idx(c, d), idx(a, d), f.one());
    return Algebra("M2", f, 4, {"E11", "E12", "E21", "E22"}, {std::move(t)});
}

Algebra lie2_nonabelian(const Field& f) {
    ProductTable t = zero_table(f, 2, "bracket");
    set(t, 2, 0, 1, 1, f.one());
    set(t, 2, 1, 0, 1, -f.one());
    return Algebra("lie2", f, 2, {"e1", "e2"}, {std::move(t)});
}

ConjugatedAlgebra cayley_dickson_base(const Field& f) {
    return ConjugatedAlgebra{field_algebra(f), Matrix::identity(f, 1)};
}

ConjugatedAlgebra cayley_dickson_double(const ConjugatedAlgebra& in) {
    const Algebra& a = in.algebra;
    const Field& f = a.field();
    std::size_t n = a.dim();
    std::size_t m = 2 * n;
    ProductTable t = zero_table(f, m, "mul");

    auto put = [&](std::size_t i, std::size_t j, bool hi, const Element& w, bool negate) {
        for (std::size_t k = 0; k < n; ++k) {
            Scalar v = negate ? -w[k] : w[k];
            if (!v.is_zero()) t.c[(i * m + j) * m + (hi ? n + k : k)] += v;
        }
    };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Element bi = a.basis_element(i), bj = a.basis_element(j);
            Element cbi = in.conjugation.apply(bi), cbj = in.conjugation.apply(bj);
            // (b_i,0)(b_j,0) = (b_i b_j, 0)
            put(i, j, false, a.multiply(bi, bj), false);
            // (b_i,0)(0,b_j) = (0, b_j b_i)
            put(i, n + j, true, a.multiply(bj, bi), false);
            // (0,b_i)(b_j,0) = (0, b_i conj(b_j))
            put(n + i, j, true, a.multiply(bi, cbj), false);
            // (0,b_i)(0,b_j) = (-conj(b_j) b_i, 0)
            put(n + i, n + j, false, a.multiply(cbj, bi), true);
        }

    Matrix conj(f, m, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) conj.at(i, j) = in.conjugation.at(i, j);
    for (std::size_t i = 0; i < n; ++i) conj.at(n + i, n + i) = -f.one();

    Algebra dbl("cd(" + a.name() + ")", f, m, {}, {std::move(t)});
    return ConjugatedAlgebra{std::move(dbl), std::move(conj)};
}

Algebra octonions(const Field& f) {
    ConjugatedAlgebra c = cayley_dickson_base(f);
    for (int step = 0; step < 3; ++step) c = cayley_dickson_double(c);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < 8; ++i) names.push_back("e" + std::to_string(i));
    return Algebra("octonions", f, 8, std::move(names), c.algebra.products());
}

Algebra sedenions(const Field& f) {
    ConjugatedAlgebra c = cayley_dickson_base(f);
    for (int step = 0; step < 4; ++step) c = cayley_dickson_double(c);
    return Algebra("sedenions", f, 16, {}, c.algebra.products());
}

Algebra poisson_from_commutator(const Algebra& a, std::string name) {
    if (a.num_products() != 1) throw Error("expected a single-product algebra");
    const Field& f = a.field();
    std::size_t n = a.dim();
    ProductTable b = zero_table(f, n, "bracket");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Scalar v = a.sc(0, i, j, k) - a.sc(0, j, i, k);
                if (!v.is_zero()) set(b, n, i, j, k, v);
            }
    return Algebra(std::move(name), f, n, a.basis_names(), {a.products()[0], std::move(b)});
}

Algebra poisson_zero_bracket(const Algebra& a, std::string name) {
    if (a.num_products() != 1) throw Error("expected a single-product algebra");
    return Algebra(std::move(name), a.field(), a.dim(), a.basis_names(),
                   {a.products()[0], zero_table(a.field(), a.dim(), "bracket")});
}

}  // namespace builders
}  // namespace actorkit
