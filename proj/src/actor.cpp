#include "actorkit/actor.hpp"

namespace actorkit {

Vec ActorElement::flatten() const {
    Vec v = left.flatten();
    Vec r = right.flatten();
    v.insert(v.end(), r.begin(), r.end());
    return v;
}

ActorElement ActorElement::unflatten(const Field& f, std::size_t n, const Vec& v) {
    if (v.size() != 2 * n * n) throw Error("actor element vector has wrong length");
    return ActorElement{Matrix::unflatten(f, n, n, v, 0), Matrix::unflatten(f, n, n, v, n * n)};
}

ActorSpace::ActorSpace(Algebra algebra, VarietyPreset variety, Subspace space)
    : algebra_(std::move(algebra)), variety_(std::move(variety)), space_(std::move(space)) {
    std::size_t n = algebra_.dim();
    if (space_.ambient_dim() != 2 * n * n) throw Error("actor space ambient dimension mismatch");
    for (const auto& row : space_.basis())
        basis_.push_back(ActorElement::unflatten(algebra_.field(), n, row));
}

bool ActorSpace::contains(const ActorElement& e) const {
    return space_.contains(e.flatten());
}

namespace {

/// Value of a subtree during operator substitution: either a concrete
/// element, the bare operator leaf, or an element linear in the 2n^2
/// unknowns (an n x 2n^2 coefficient matrix).
struct SymValue {
    enum class Kind { Concrete, OperatorLeaf, Linear } kind;
    Element elem;    // Concrete
    Matrix coeffs;   // Linear

    static SymValue concrete(Element e) {
        return SymValue{Kind::Concrete, std::move(e), Matrix(Field::rationals(), 0, 0)};
    }
    static SymValue op_leaf() {
        return SymValue{Kind::OperatorLeaf, {}, Matrix(Field::rationals(), 0, 0)};
    }
    static SymValue linear(Matrix m) {
        return SymValue{Kind::Linear, {}, std::move(m)};
    }
};

SymValue evaluate_with_operator(const Monomial& m, const Algebra& a,
                                const std::vector<Element>& args, std::size_t op_slot) {
    const Field& f = a.field();
    std::size_t n = a.dim();
    if (m.is_leaf()) {
        if (static_cast<std::size_t>(m.var()) == op_slot) return SymValue::op_leaf();
        return SymValue::concrete(args[m.var() - 1]);
    }
    SymValue l = evaluate_with_operator(m.left(), a, args, op_slot);
    SymValue r = evaluate_with_operator(m.right(), a, args, op_slot);
    using K = SymValue::Kind;
    if (l.kind == K::Concrete && r.kind == K::Concrete)
        return SymValue::concrete(a.multiply(l.elem, r.elem, m.product()));
    if (l.kind == K::OperatorLeaf && r.kind == K::Concrete) {
        // f * w contributes L_f w: coefficient of L[c][d] is w_d.
        Matrix coeffs(f, n, 2 * n * n);
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t d = 0; d < n; ++d) coeffs.at(c, c * n + d) = r.elem[d];
        return SymValue::linear(std::move(coeffs));
    }
    if (l.kind == K::Concrete && r.kind == K::OperatorLeaf) {
        // w * f contributes R_f w.
        Matrix coeffs(f, n, 2 * n * n);
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t d = 0; d < n; ++d) coeffs.at(c, n * n + c * n + d) = l.elem[d];
        return SymValue::linear(std::move(coeffs));
    }
    if (l.kind == K::Linear && r.kind == K::Concrete)
        return SymValue::linear(a.right_mult(r.elem, m.product()) * l.coeffs);
    if (l.kind == K::Concrete && r.kind == K::Linear)
        return SymValue::linear(a.left_mult(l.elem, m.product()) * r.coeffs);
    // Two operator-bearing children would mean the variable occurs twice.
    throw Error("monomial is not multilinear in the substituted variable");
}

}  // namespace

Matrix operator_constraints(const MultilinearIdentity& phi, const Algebra& a,
                            std::size_t position) {
    if (position < 1 || position > phi.degree())
        throw Error("substitution position out of range");
    const Field& f = a.field();
    std::size_t n = a.dim();
    std::size_t k = phi.degree();
    std::size_t unknowns = 2 * n * n;

    std::size_t tuples = 1;
    for (std::size_t t = 0; t + 1 < k; ++t) tuples *= n;
    if (n == 0) return Matrix(f, 0, unknowns);

    Matrix out(f, tuples * n, unknowns);
    std::vector<std::size_t> tuple(k - 1, 0);
    std::vector<Element> args(k, a.zero_element());
    for (std::size_t row_block = 0; row_block < tuples; ++row_block) {
        // Fill the non-substituted slots from the odometer.
        std::size_t t = 0;
        for (std::size_t slot = 1; slot <= k; ++slot) {
            if (slot == position) continue;
            args[slot - 1] = a.basis_element(tuple[t]);
            ++t;
        }
        Matrix acc(f, n, unknowns);
        for (const auto& term : phi.terms()) {
            SymValue v = evaluate_with_operator(term.tree, a, args, position);
            if (v.kind != SymValue::Kind::Linear)
                throw Error("identity term is a bare variable; cannot substitute an operator");
            acc += f.from_int(term.coeff) * v.coeffs;
        }
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t u = 0; u < unknowns; ++u)
                out.at(row_block * n + c, u) = acc.at(c, u);
        // Advance the odometer (last slot fastest).
        for (std::size_t d = tuple.size(); d-- > 0;) {
            if (++tuple[d] < n) break;
            tuple[d] = 0;
        }
    }
    return out;
}

ActorSpace external_weak_actor(const Algebra& a, const VarietyPreset& v) {
    require_in_variety(a, v);
    if (v.num_products != 1)
        throw Error("external_weak_actor applies to single-product varieties");
    std::size_t n = a.dim();
    RowReducer red(a.field(), 2 * n * n);
    for (const auto& phi : v.identities)
        for (std::size_t j = 1; j <= phi.degree(); ++j)
            red.insert_rows(operator_constraints(phi, a, j));
    return ActorSpace(a, v, kernel_from_reducer(red));
}

bool alt_actor_equations_check(const ActorElement& e, const Algebra& a) {
    auto alt = find_preset("alt");
    require_in_variety(a, *alt);
    std::size_t n = a.dim();
    const Matrix& L = e.left;
    const Matrix& R = e.right;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Element x = a.basis_element(i), y = a.basis_element(j);
            Element xy = a.multiply(x, y), yx = a.multiply(y, x);
            Element Lx = L.apply(x), Ly = L.apply(y);
            Element Rx = R.apply(x), Ry = R.apply(y);
            // f*(xy) = (x*f)y + (f*x)y - x(f*y)
            Element lhs1 = L.apply(xy);
            Element rhs1 = vec_sub(vec_add(a.multiply(Rx, y), a.multiply(Lx, y)),
                                   a.multiply(x, Ly));
            if (lhs1 != rhs1) return false;
            // (xy)*f = x(f*y) + x(y*f) - (x*f)y
            Element lhs2 = R.apply(xy);
            Element rhs2 = vec_sub(vec_add(a.multiply(x, Ly), a.multiply(x, Ry)),
                                   a.multiply(Rx, y));
            if (lhs2 != rhs2) return false;
            // x(y*f) = (yx)*f + (xy)*f - y(x*f)
            Element lhs3 = a.multiply(x, Ry);
            Element rhs3 = vec_sub(vec_add(R.apply(yx), R.apply(xy)), a.multiply(y, Rx));
            if (lhs3 != rhs3) return false;
            // (f*x)y = f*(yx) + f*(xy) - (f*y)x
            Element lhs4 = a.multiply(Lx, y);
            Element rhs4 = vec_sub(vec_add(L.apply(yx), L.apply(xy)), a.multiply(Ly, x));
            if (lhs4 != rhs4) return false;
        }
    return true;
}

std::optional<ActorElement> partial_product(const ActorSpace& s, const ActorElement& f,
                                            const ActorElement& g) {
    if (!s.contains(f)) throw Error("left factor is not in the actor space");
    if (!s.contains(g)) throw Error("right factor is not in the actor space");
    const Field& fld = s.algebra().field();
    std::size_t n = s.algebra().dim();
    const Matrix &Lf = f.left, &Rf = f.right, &Lg = g.left, &Rg = g.right;

    Matrix Lh(fld, n, n), Rh(fld, n, n);
    switch (s.variety().product_rule) {
        case ActorProductRule::Alternative: {
            // h*x = -(f*x)*g + f*(g*x) + f*(x*g)
            Lh = Lf * Lg + Lf * Rg - Rg * Lf;
            // x*h = (x*f)*g + (f*x)*g - f*(x*g)
            Rh = Rg * Rf + Rg * Lf - Lf * Rg;
            break;
        }
        case ActorProductRule::LambdaMu: {
            if (!s.variety().lambda_mu) throw Error("variety has no lambda/mu rules");
            const LambdaMuRules& lm = *s.variety().lambda_mu;
            // Composite matrices of the 8 bracketings, in rule order.
            const Matrix table[8] = {
                Rg * Rf,  // (x*f)*g
                Rg * Lf,  // (f*x)*g
                Lg * Rf,  // g*(x*f)
                Lg * Lf,  // g*(f*x)
                Rf * Rg,  // (x*g)*f
                Rf * Lg,  // (g*x)*f
                Lf * Rg,  // f*(x*g)
                Lf * Lg,  // f*(g*x)
            };
            for (int t = 0; t < 8; ++t) {
                Scalar lam = fld.parse(lm.lambda[t]);
                Scalar mu = fld.parse(lm.mu[t]);
                if (!lam.is_zero()) Rh += lam * table[t];
                if (!mu.is_zero()) Lh += mu * table[t];
            }
            break;
        }
        case ActorProductRule::None:
            throw Error("variety '" + s.variety().name + "' defines no partial product");
    }
    ActorElement h{std::move(Lh), std::move(Rh)};
    if (!s.contains(h)) return std::nullopt;
    return h;
}

Subspace derivations(const Algebra& a, std::size_t product_index) {
    const Field& f = a.field();
    std::size_t n = a.dim();
    // Unknowns D[c][d], row-major; D(b_i b_j) = (D b_i) b_j + b_i (D b_j).
    RowReducer red(f, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t c = 0; c < n; ++c) {
                Vec row = vec_zero(f, n * n);
                for (std::size_t d = 0; d < n; ++d) {
                    row[c * n + d] += a.sc(product_index, i, j, d);
                    row[d * n + i] -= a.sc(product_index, d, j, c);
                    row[d * n + j] -= a.sc(product_index, i, d, c);
                }
                red.insert(std::move(row));
            }
    return kernel_from_reducer(red);
}

Subspace multipliers(const Algebra& a) {
    auto cassoc = find_preset("cassoc");
    require_in_variety(a, *cassoc);
    const Field& f = a.field();
    std::size_t n = a.dim();
    // f(b_i b_j) = f(b_i) b_j.
    RowReducer red(f, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t c = 0; c < n; ++c) {
                Vec row = vec_zero(f, n * n);
                for (std::size_t d = 0; d < n; ++d) {
                    row[c * n + d] += a.sc(0, i, j, d);
                    row[d * n + i] -= a.sc(0, d, j, c);
                }
                red.insert(std::move(row));
            }
    return kernel_from_reducer(red);
}

ActorElement inn_element(const Algebra& a, const Element& x) {
    return ActorElement{a.left_mult(x, 0), a.right_mult(x, 0)};
}

}  // namespace actorkit
