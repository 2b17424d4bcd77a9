#include "actorkit/poisson.hpp"

namespace actorkit {

Vec PoissonActorElement::flatten() const {
    Vec v = left.flatten();
    Vec r = right.flatten();
    Vec d = der.flatten();
    v.insert(v.end(), r.begin(), r.end());
    v.insert(v.end(), d.begin(), d.end());
    return v;
}

PoissonActorElement PoissonActorElement::unflatten(const Field& f, std::size_t n, const Vec& v) {
    if (v.size() != 3 * n * n) throw Error("poisson actor element vector has wrong length");
    return PoissonActorElement{Matrix::unflatten(f, n, n, v, 0),
                               Matrix::unflatten(f, n, n, v, n * n),
                               Matrix::unflatten(f, n, n, v, 2 * n * n)};
}

PoissonActorSpace::PoissonActorSpace(Algebra algebra, Subspace space)
    : algebra_(std::move(algebra)), space_(std::move(space)) {
    std::size_t n = algebra_.dim();
    if (space_.ambient_dim() != 3 * n * n)
        throw Error("poisson actor space ambient dimension mismatch");
    for (const auto& row : space_.basis())
        basis_.push_back(PoissonActorElement::unflatten(algebra_.field(), n, row));
}

bool PoissonActorSpace::contains(const PoissonActorElement& e) const {
    return space_.contains(e.flatten());
}

PoissonActorSpace usga(const Algebra& a) {
    auto pois = find_preset("pois");
    require_in_variety(a, *pois);
    const Field& f = a.field();
    std::size_t n = a.dim();
    // Unknown layout: L in [0, n^2), R in [n^2, 2n^2), D in [2n^2, 3n^2).
    const std::size_t L0 = 0, R0 = n * n, D0 = 2 * n * n;
    RowReducer red(f, 3 * n * n);
    auto mul = [&](std::size_t i, std::size_t j, std::size_t k) { return a.sc(0, i, j, k); };
    auto brk = [&](std::size_t i, std::size_t j, std::size_t k) { return a.sc(1, i, j, k); };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t c = 0; c < n; ++c) {
                // f*(xy) = (f*x)y
                Vec r1 = vec_zero(f, 3 * n * n);
                for (std::size_t d = 0; d < n; ++d) {
                    r1[L0 + c * n + d] += mul(i, j, d);
                    r1[L0 + d * n + i] -= mul(d, j, c);
                }
                red.insert(std::move(r1));
                // (xy)*f = x(y*f)
                Vec r2 = vec_zero(f, 3 * n * n);
                for (std::size_t d = 0; d < n; ++d) {
                    r2[R0 + c * n + d] += mul(i, j, d);
                    r2[R0 + d * n + j] -= mul(i, d, c);
                }
                red.insert(std::move(r2));
                // x(f*y) = (x*f)y
                Vec r3 = vec_zero(f, 3 * n * n);
                for (std::size_t d = 0; d < n; ++d) {
                    r3[L0 + d * n + j] += mul(i, d, c);
                    r3[R0 + d * n + i] -= mul(d, j, c);
                }
                red.insert(std::move(r3));
                // [f,xy] = [f,x]y + x[f,y]
                Vec r4 = vec_zero(f, 3 * n * n);
                for (std::size_t d = 0; d < n; ++d) {
                    r4[D0 + c * n + d] += mul(i, j, d);
                    r4[D0 + d * n + i] -= mul(d, j, c);
                    r4[D0 + d * n + j] -= mul(i, d, c);
                }
                red.insert(std::move(r4));
                // [f,[x,y]] = [[f,x],y] + [x,[f,y]]
                Vec r5 = vec_zero(f, 3 * n * n);
                for (std::size_t d = 0; d < n; ++d) {
                    r5[D0 + c * n + d] += brk(i, j, d);
                    r5[D0 + d * n + i] -= brk(d, j, c);
                    r5[D0 + d * n + j] -= brk(i, d, c);
                }
                red.insert(std::move(r5));
                // f*[x,y] = [f*x,y] - [f,y]x
                Vec r6 = vec_zero(f, 3 * n * n);
                for (std::size_t d = 0; d < n; ++d) {
                    r6[L0 + c * n + d] += brk(i, j, d);
                    r6[L0 + d * n + i] -= brk(d, j, c);
                    r6[D0 + d * n + j] += mul(d, i, c);
                }
                red.insert(std::move(r6));
                // [x,y]*f = [x*f,y] - x[f,y]
                Vec r7 = vec_zero(f, 3 * n * n);
                for (std::size_t d = 0; d < n; ++d) {
                    r7[R0 + c * n + d] += brk(i, j, d);
                    r7[R0 + d * n + i] -= brk(d, j, c);
                    r7[D0 + d * n + j] += mul(i, d, c);
                }
                red.insert(std::move(r7));
            }
    return PoissonActorSpace(a, kernel_from_reducer(red));
}

std::optional<PoissonActorElement> usga_multiply(const PoissonActorSpace& s,
                                                 const PoissonActorElement& f,
                                                 const PoissonActorElement& g) {
    if (!s.contains(f)) throw Error("left factor is not in the actor space");
    if (!s.contains(g)) throw Error("right factor is not in the actor space");
    PoissonActorElement h{f.left * g.left,          // f*(g*-)
                          g.right * f.right,        // (-*f)*g
                          f.left * g.der + g.right * f.der};  // f*[g,-] + [f,-]*g
    if (!s.contains(h)) return std::nullopt;
    return h;
}

std::optional<PoissonActorElement> usga_bracket(const PoissonActorSpace& s,
                                                const PoissonActorElement& f,
                                                const PoissonActorElement& g) {
    if (!s.contains(f)) throw Error("left factor is not in the actor space");
    if (!s.contains(g)) throw Error("right factor is not in the actor space");
    PoissonActorElement h{f.left * g.der - g.der * f.left,    // f*[g,-] - [g, f*-]
                          f.right * g.der - g.der * f.right,  // [g,-]*f - [g, -*f]
                          f.der * g.der - g.der * f.der};     // [f,[g,-]] - [g,[f,-]]
    if (!s.contains(h)) return std::nullopt;
    return h;
}

CenterActorReport z_center_actor_check(const Algebra& a) {
    auto unit = find_unit(a);
    if (!unit) throw Error("z_center_actor_check requires a unital Poisson algebra");
    const Field& f = a.field();
    std::size_t n = a.dim();

    CenterActorReport rep;
    Subspace z = lie_center(a, 1);
    rep.center_dim = z.dim();
    rep.unit_in_center = z.contains(*unit);

    rep.center_closed = true;
    rep.center_bracket_trivial = true;
    for (std::size_t i = 0; i < z.dim(); ++i)
        for (std::size_t j = 0; j < z.dim(); ++j) {
            if (!z.contains(a.multiply(z.basis()[i], z.basis()[j], 0))) rep.center_closed = false;
            if (!vec_is_zero(a.multiply(z.basis()[i], z.basis()[j], 1)))
                rep.center_bracket_trivial = false;
        }

    PoissonActorSpace ax = usga(a);
    rep.usga_dim = ax.dim();
    rep.d_components_zero = true;
    for (const auto& e : ax.basis())
        if (!e.der.is_zero()) rep.d_components_zero = false;

    // z -> (L_z, R_z, 0): injective and onto [X].
    std::vector<Vec> cols;
    for (std::size_t i = 0; i < z.dim(); ++i) {
        PoissonActorElement img{a.left_mult(z.basis()[i], 0), a.right_mult(z.basis()[i], 0),
                                Matrix(f, n, n)};
        if (!ax.contains(img)) {
            rep.bijective = false;
            rep.pass = false;
            return rep;
        }
        cols.push_back(img.flatten());
    }
    Matrix map = Matrix::from_columns(f, 3 * n * n, cols);
    bool injective = nullspace_basis(map).dim() == 0;
    bool surjective = rank(map) == ax.dim();
    rep.bijective = injective && surjective;
    rep.pass = rep.unit_in_center && rep.center_closed && rep.center_bracket_trivial &&
               rep.d_components_zero && rep.bijective && rep.center_dim == rep.usga_dim;
    return rep;
}

bool poisson_acting_check(const PoissonActorSpace& s, const Algebra& B,
                          const std::vector<PoissonActorElement>& images) {
    if (images.size() != B.dim()) throw Error("one actor image per basis vector required");
    for (const auto& img : images)
        if (!s.contains(img)) throw Error("image is outside the universal strict general actor");
    for (const auto& fi : images)
        for (const auto& gj : images)
            if (!permutability_check(fi.pair(), gj.pair())) return false;
    return true;
}

}  // namespace actorkit
