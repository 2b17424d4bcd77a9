#pragma once

#include "actorkit/extensions.hpp"

namespace actorkit {

/// A triple (f*-, -*f, [f,-]) of endomorphism matrices.
struct PoissonActorElement {
    Matrix left;
    Matrix right;
    Matrix der;

    /// Row-major L, then R, then D (length 3n^2).
    Vec flatten() const;
    static PoissonActorElement unflatten(const Field& f, std::size_t n, const Vec& v);

    ActorElement pair() const { return ActorElement{left, right}; }

    friend bool operator==(const PoissonActorElement& a, const PoissonActorElement& b) {
        return a.left == b.left && a.right == b.right && a.der == b.der;
    }
};

/// The universal strict general actor [X] of a Poisson algebra: all triples
/// satisfying the bimultiplier equations for the product, the derivation
/// equations for both products, and the two mixed compatibility identities.
class PoissonActorSpace {
public:
    PoissonActorSpace(Algebra algebra, Subspace space);

    const Algebra& algebra() const { return algebra_; }
    const Subspace& space() const { return space_; }
    const std::vector<PoissonActorElement>& basis() const { return basis_; }
    std::size_t dim() const { return space_.dim(); }

    bool contains(const PoissonActorElement& e) const;

private:
    Algebra algebra_;
    Subspace space_;
    std::vector<PoissonActorElement> basis_;
};

/// Computes [X]; the algebra must pass the Poisson validity check.
PoissonActorSpace usga(const Algebra& a);

/// f . g = (L_f L_g, x -> (x*f)*g, x -> f*[g,x] + [f,x]*g), returned when it
/// lies back in [X]. Throws when f or g is outside.
std::optional<PoissonActorElement> usga_multiply(const PoissonActorSpace& s,
                                                 const PoissonActorElement& f,
                                                 const PoissonActorElement& g);

/// [f,g] = (f*[g,-] - [g, f*-], [g,-]*f - [g, -*f], [f,[g,-]] - [g,[f,-]]),
/// returned when it lies back in [X]. Throws when f or g is outside.
std::optional<PoissonActorElement> usga_bracket(const PoissonActorSpace& s,
                                                const PoissonActorElement& f,
                                                const PoissonActorElement& g);

struct CenterActorReport {
    std::size_t center_dim = 0;
    std::size_t usga_dim = 0;
    bool unit_in_center = false;
    bool center_closed = false;       // closed under both products
    bool center_bracket_trivial = false;
    bool d_components_zero = false;   // D part of every [X] basis element is 0
    bool bijective = false;           // z -> (L_z, R_z, 0) maps Z(X) onto [X]
    bool pass = false;
};

/// For unital Poisson algebras: verifies that Z(X) is a Poisson subalgebra
/// with trivial bracket containing the unit, and that z -> (L_z, R_z, 0) is
/// a bijection Z(X) -> [X].
CenterActorReport z_center_actor_check(const Algebra& a);

/// A candidate morphism B -> [X] is acting iff its (left, right) pairs pass
/// the permutability check on all basis pairs of B. Images must lie in [X].
bool poisson_acting_check(const PoissonActorSpace& s, const Algebra& B,
                          const std::vector<PoissonActorElement>& images);

}  // namespace actorkit
