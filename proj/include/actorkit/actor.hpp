#pragma once

#include <optional>

#include "actorkit/identity.hpp"

namespace actorkit {

/// A pair (L_f, R_f) of endomorphism matrices representing (f*-, -*f).
struct ActorElement {
    Matrix left;
    Matrix right;

    /// Row-major L entries followed by row-major R entries (length 2n^2).
    Vec flatten() const;
    static ActorElement unflatten(const Field& f, std::size_t n, const Vec& v);

    friend bool operator==(const ActorElement& a, const ActorElement& b) {
        return a.left == b.left && a.right == b.right;
    }
    friend bool operator!=(const ActorElement& a, const ActorElement& b) { return !(a == b); }
};

/// The solution space of all operator-substituted identities of a variety,
/// canonicalized as a subspace of F^(2n^2).
class ActorSpace {
public:
    ActorSpace(Algebra algebra, VarietyPreset variety, Subspace space);

    const Algebra& algebra() const { return algebra_; }
    const VarietyPreset& variety() const { return variety_; }
    const Subspace& space() const { return space_; }
    const std::vector<ActorElement>& basis() const { return basis_; }
    std::size_t dim() const { return space_.dim(); }

    bool contains(const ActorElement& e) const;

private:
    Algebra algebra_;
    VarietyPreset variety_;
    Subspace space_;
    std::vector<ActorElement> basis_;
};

/// Homogeneous constraint matrix over the 2n^2 unknowns (entries of L_f then
/// R_f) expressing phi(..., f at slot position, ...) = 0 for all basis tuples
/// in the remaining slots. position is 1-based.
Matrix operator_constraints(const MultilinearIdentity& phi, const Algebra& a,
                            std::size_t position);

/// The external weak actor E(X): stacks operator_constraints over every
/// (identity, position) pair of the variety and returns the nullspace.
/// Verifies first that the algebra lies in the variety.
ActorSpace external_weak_actor(const Algebra& a, const VarietyPreset& v);

/// True iff e satisfies the four displayed actor equations of the
/// alternative case on all basis pairs. Requires an alternative algebra.
bool alt_actor_equations_check(const ActorElement& e, const Algebra& a);

/// The partial product <f,g> of the actor space: computed from the variety's
/// lambda/mu rules (or the dedicated alternative formulas) and returned only
/// when the result lies back in the space. Throws when f or g is outside.
std::optional<ActorElement> partial_product(const ActorSpace& s, const ActorElement& f,
                                            const ActorElement& g);

/// All D with D(xy) = (Dx)y + x(Dy) on basis pairs, as a canonical subspace
/// of F^(n^2) (row-major matrices).
Subspace derivations(const Algebra& a, std::size_t product_index = 0);

/// All f with f(xy) = f(x)y on basis pairs. Requires a commutative
/// associative algebra.
Subspace multipliers(const Algebra& a);

/// The inner pair (x . -, - . x) for product 0.
ActorElement inn_element(const Algebra& a, const Element& x);

}  // namespace actorkit
