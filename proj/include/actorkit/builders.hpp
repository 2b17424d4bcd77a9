#pragma once

#include "actorkit/algebra.hpp"

namespace actorkit {
namespace builders {

/// The ground field as a 1-dim unital algebra (basis "1", 1*1 = 1).
Algebra field_algebra(const Field& f);

/// n-dim algebra with zero product.
Algebra abelian(const Field& f, std::size_t n);

/// One generator with b*b = b.
Algebra idempotent_line(const Field& f);

/// One generator with b*b = 0.
Algebra nilpotent_line(const Field& f);

/// F[x]/(x^2), basis {1, x}.
Algebra dual_numbers(const Field& f);

/// F x F, basis {e1, e2} of orthogonal idempotents.
Algebra product_of_fields(const Field& f);

/// The non-unital ideal <x, x^2> inside F[x]/(x^3).
Algebra truncated_polynomial_ideal(const Field& f);

/// Full 2x2 matrix algebra, basis {E11, E12, E21, E22}.
Algebra matrix2(const Field& f);

/// 2-dim Lie algebra with [e1, e2] = e2 (single anticommutative product).
Algebra lie2_nonabelian(const Field& f);

/// An algebra together with its conjugation involution, as consumed and
/// produced by the Cayley-Dickson doubling step.
struct ConjugatedAlgebra {
    Algebra algebra;
    Matrix conjugation;
};

/// The doubling base: the ground field with trivial conjugation.
ConjugatedAlgebra cayley_dickson_base(const Field& f);

/// One Cayley-Dickson doubling: on A + A,
///   (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)),  conj(a,b) = (conj(a), -b).
ConjugatedAlgebra cayley_dickson_double(const ConjugatedAlgebra& a);

/// Octonions via three doublings, basis e0..e7 with e0 the unit.
Algebra octonions(const Field& f);

/// Four doublings (16-dim; not alternative). Kept for oracle tests.
Algebra sedenions(const Field& f);

/// Two-product algebra: a's product plus the commutator bracket.
Algebra poisson_from_commutator(const Algebra& a, std::string name);

/// Two-product algebra: a's product plus the zero bracket.
Algebra poisson_zero_bracket(const Algebra& a, std::string name);

}  // namespace builders
}  // namespace actorkit
