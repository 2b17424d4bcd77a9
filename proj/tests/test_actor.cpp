#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "actorkit/builders.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace actorkit;
using namespace actorkit::builders;
using testutil::Rng;

namespace {

const Field Q = Field::rationals();

ActorElement random_actor_element(const ActorSpace& s, Rng& rng) {
    const Field& f = s.algebra().field();
    std::size_t n = s.algebra().dim();
    Matrix l(f, n, n), r(f, n, n);
    ActorElement e{l, r};
    for (const auto& b : s.basis()) {
        Scalar c = testutil::random_scalar(f, rng);
        e.left += c * b.left;
        e.right += c * b.right;
    }
    return e;
}

}  // namespace

TEST_CASE("operator constraints of associativity match the displayed equations") {
    for (const Algebra& a : {dual_numbers(Q), matrix2(Q), truncated_polynomial_ideal(Q)}) {
        auto assoc = find_preset("assoc");
        const MultilinearIdentity& phi = assoc->identities[0];
        // j = 1 gives f*(xy) = (f*x)y; j = 2 gives x(f*y) = (x*f)y;
        // j = 3 gives (xy)*f = x(y*f).
        CHECK(nullspace_basis(operator_constraints(phi, a, 1)) ==
              nullspace_basis(oracles::bim_equation_rows(a, 0)));
        CHECK(nullspace_basis(operator_constraints(phi, a, 2)) ==
              nullspace_basis(oracles::bim_equation_rows(a, 2)));
        CHECK(nullspace_basis(operator_constraints(phi, a, 3)) ==
              nullspace_basis(oracles::bim_equation_rows(a, 1)));
    }
}

TEST_CASE("operator constraints over the 0-dim algebra are empty") {
    Algebra zero("zero", Q, 0, {}, {ProductTable{"mul", {}}});
    auto assoc = find_preset("assoc");
    Matrix m = operator_constraints(assoc->identities[0], zero, 1);
    CHECK(m.rows() == 0);
    CHECK(m.cols() == 0);
    ActorSpace s = external_weak_actor(zero, *assoc);
    CHECK(s.dim() == 0);
}

TEST_CASE("operator constraints position range") {
    auto assoc = find_preset("assoc");
    CHECK_THROWS_AS(operator_constraints(assoc->identities[0], dual_numbers(Q), 0), Error);
    CHECK_THROWS_AS(operator_constraints(assoc->identities[0], dual_numbers(Q), 4), Error);
}

TEST_CASE("E(X) of the 1-dim abelian algebra under assoc is everything") {
    ActorSpace s = external_weak_actor(abelian(Q, 1), *find_preset("assoc"));
    CHECK(s.dim() == 2);
}

TEST_CASE("E(X) of the ground field is 1-dim (the actor is X itself)") {
    ActorSpace s = external_weak_actor(field_algebra(Q), *find_preset("assoc"));
    CHECK(s.dim() == 1);
}

TEST_CASE("E(X) equals the bimultiplier space on associative test algebras") {
    auto assoc = find_preset("assoc");
    for (const Algebra& a : {field_algebra(Q), dual_numbers(Q), product_of_fields(Q),
                             matrix2(Q), abelian(Q, 2), truncated_polynomial_ideal(Q),
                             matrix2(Field::gf(5))}) {
        ActorSpace s = external_weak_actor(a, *assoc);
        CHECK(s.space() == oracles::bim_oracle_space(a));
    }
}

TEST_CASE("E(X) rejects algebras outside the variety, with a witness") {
    CHECK_THROWS_WITH_AS(external_weak_actor(octonions(Q), *find_preset("assoc")),
                         doctest::Contains("fails at basis tuple"), Error);
}

TEST_CASE("alt preset refuses GF(2)") {
    CHECK_THROWS_WITH_AS(external_weak_actor(dual_numbers(Field::gf(2)), *find_preset("alt")),
                         doctest::Contains("characteristic 2"), Error);
}

TEST_CASE("CAssoc actor has L = R and projects onto the multiplier space") {
    auto cassoc = find_preset("cassoc");
    for (const Algebra& a :
         {field_algebra(Q), dual_numbers(Q), product_of_fields(Q), abelian(Q, 2),
          truncated_polynomial_ideal(Q)}) {
        ActorSpace s = external_weak_actor(a, *cassoc);
        std::vector<Vec> lefts;
        for (const auto& e : s.basis()) {
            CHECK(e.left == e.right);
            lefts.push_back(e.left.flatten());
        }
        Subspace proj = Subspace::span(a.field(), a.dim() * a.dim(), lefts);
        CHECK(proj == multipliers(a));
    }
}

TEST_CASE("multiplier examples") {
    // Unital commutative: M(X) = left multiplications, dim = dim X.
    for (const Algebra& a : {field_algebra(Q), dual_numbers(Q), product_of_fields(Q)}) {
        Subspace m = multipliers(a);
        CHECK(m.dim() == a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i)
            CHECK(m.contains(a.left_mult(a.basis_element(i)).flatten()));
    }
    CHECK(multipliers(abelian(Q, 2)).dim() == 4);
    CHECK(multipliers(truncated_polynomial_ideal(Q)).dim() == 2);
    CHECK_THROWS_AS(multipliers(matrix2(Q)), Error);  // not commutative
}

TEST_CASE("derivation examples") {
    CHECK(derivations(abelian(Q, 2)).dim() == 4);
    CHECK(derivations(field_algebra(Q)).dim() == 0);
    CHECK(derivations(lie2_nonabelian(Q)).dim() == 2);
}

TEST_CASE("Lie actor: D -> (D, -D) is a bijection Der(X) -> E(X)") {
    auto lie = find_preset("lie");
    for (const Algebra& a : {lie2_nonabelian(Q), lie2_nonabelian(Field::gf(5))}) {
        ActorSpace s = external_weak_actor(a, *lie);
        Subspace der = derivations(a);
        CHECK(s.dim() == der.dim());
        std::vector<Vec> lefts;
        for (const auto& e : s.basis()) {
            CHECK(e.right == -a.field().one() * e.left);
            lefts.push_back(e.left.flatten());
        }
        CHECK(Subspace::span(a.field(), a.dim() * a.dim(), lefts) == der);
        // And conversely every derivation gives an actor element.
        for (const auto& d : der.basis()) {
            Matrix dm = Matrix::unflatten(a.field(), a.dim(), a.dim(), d);
            CHECK(s.contains(ActorElement{dm, -a.field().one() * dm}));
        }
    }
}

TEST_CASE("alt actor equations: inner pairs pass, random non-solutions fail") {
    Rng rng(1812);
    Algebra o = octonions(Q);
    CHECK(alt_actor_equations_check(inn_element(o, o.basis_element(0)), o));  // Inn(e) = (id,id)
    for (int i = 0; i < 8; ++i)
        CHECK(alt_actor_equations_check(inn_element(o, o.basis_element(i)), o));
    ActorSpace s = external_weak_actor(dual_numbers(Q), *find_preset("alt"));
    // A pair outside the computed solution space must fail the equations.
    int rejected = 0;
    for (int iter = 0; iter < 20; ++iter) {
        ActorElement e{testutil::random_matrix(Q, 2, 2, rng),
                       testutil::random_matrix(Q, 2, 2, rng)};
        if (!s.contains(e)) {
            CHECK_FALSE(alt_actor_equations_check(e, dual_numbers(Q)));
            ++rejected;
        }
    }
    CHECK(rejected > 0);
}

TEST_CASE("partial product: zero absorbs") {
    Algebra a = dual_numbers(Q);
    ActorSpace s = external_weak_actor(a, *find_preset("assoc"));
    ActorElement zero{Matrix(Q, 2, 2), Matrix(Q, 2, 2)};
    ActorElement g = s.basis()[0];
    auto p = partial_product(s, zero, g);
    REQUIRE(p.has_value());
    CHECK(p->left.is_zero());
    CHECK(p->right.is_zero());
}

TEST_CASE("partial product is bilinear on its domain") {
    Rng rng(99182);
    Algebra a = matrix2(Q);
    ActorSpace s = external_weak_actor(a, *find_preset("assoc"));
    for (int iter = 0; iter < 10; ++iter) {
        ActorElement f1 = random_actor_element(s, rng);
        ActorElement f2 = random_actor_element(s, rng);
        ActorElement g = random_actor_element(s, rng);
        Scalar c = testutil::random_scalar(Q, rng);
        auto p1 = partial_product(s, f1, g);
        auto p2 = partial_product(s, f2, g);
        ActorElement sum{c * f1.left + f2.left, c * f1.right + f2.right};
        auto ps = partial_product(s, sum, g);
        REQUIRE(p1.has_value());
        REQUIRE(p2.has_value());
        REQUIRE(ps.has_value());
        CHECK(ps->left == c * p1->left + p2->left);
        CHECK(ps->right == c * p1->right + p2->right);
    }
}

TEST_CASE("assoc rules on a unital algebra: <Inn x, Inn y> = Inn(xy)") {
    Rng rng(451);
    for (const Algebra& a : {dual_numbers(Q), product_of_fields(Q), matrix2(Q)}) {
        ActorSpace s = external_weak_actor(a, *find_preset("assoc"));
        for (int iter = 0; iter < 8; ++iter) {
            Element x = testutil::random_vec(Q, a.dim(), rng);
            Element y = testutil::random_vec(Q, a.dim(), rng);
            auto p = partial_product(s, inn_element(a, x), inn_element(a, y));
            REQUIRE(p.has_value());
            CHECK(*p == inn_element(a, a.multiply(x, y)));
        }
    }
}

TEST_CASE("alt rules on the octonions: <Inn x, Inn y> = Inn(xy)") {
    Rng rng(452);
    Algebra o = octonions(Q);
    ActorSpace s = external_weak_actor(o, *find_preset("alt"));
    CHECK(s.dim() == 8);
    for (int iter = 0; iter < 5; ++iter) {
        Element x = testutil::random_vec(Q, 8, rng);
        Element y = testutil::random_vec(Q, 8, rng);
        auto p = partial_product(s, inn_element(o, x), inn_element(o, y));
        REQUIRE(p.has_value());
        CHECK(*p == inn_element(o, o.multiply(x, y)));
    }
}

TEST_CASE("partial product can fall outside the space (the domain is genuine)") {
    // CAssoc on the 2-dim abelian algebra: E(X) = {(f,f)}, and the rule
    // composes to (fg, gf), which is inside only when f and g commute.
    Algebra a = abelian(Q, 2);
    ActorSpace s = external_weak_actor(a, *find_preset("cassoc"));
    CHECK(s.dim() == 4);
    Matrix e12(Q, 2, 2), e21(Q, 2, 2);
    e12.at(0, 1) = Q.one();
    e21.at(1, 0) = Q.one();
    ActorElement f{e12, e12}, g{e21, e21};
    REQUIRE(s.contains(f));
    REQUIRE(s.contains(g));
    CHECK_FALSE(partial_product(s, f, g).has_value());
    // Commuting pair stays inside.
    CHECK(partial_product(s, f, f).has_value());
}

TEST_CASE("the dedicated alternative product equals its lambda/mu encoding") {
    // x*h = (x*f)*g + (f*x)*g - f*(x*g) and
    // h*x = -(f*x)*g + f*(g*x) + f*(x*g), written as rule vectors.
    Rng rng(9090);
    VarietyPreset alt = *find_preset("alt");
    VarietyPreset alt_lm = alt;
    alt_lm.product_rule = ActorProductRule::LambdaMu;
    alt_lm.lambda_mu = LambdaMuRules{{"1", "1", "0", "0", "0", "0", "-1", "0"},
                                     {"0", "-1", "0", "0", "0", "0", "1", "1"}};
    for (const Algebra& a : {octonions(Q), matrix2(Q), dual_numbers(Field::gf(5))}) {
        ActorSpace s1 = external_weak_actor(a, alt);
        ActorSpace s2 = external_weak_actor(a, alt_lm);
        REQUIRE(s1.space() == s2.space());
        for (int iter = 0; iter < 6; ++iter) {
            ActorElement f = random_actor_element(s1, rng);
            ActorElement g = random_actor_element(s1, rng);
            auto p1 = partial_product(s1, f, g);
            auto p2 = partial_product(s2, f, g);
            REQUIRE(p1.has_value() == p2.has_value());
            if (p1) CHECK(*p1 == *p2);
        }
    }
}

TEST_CASE("partial product is total on the actor of a unital algebra") {
    struct Case {
        Algebra a;
        const char* preset;
    };
    std::vector<Case> cases = {{dual_numbers(Q), "assoc"},   {matrix2(Q), "assoc"},
                               {product_of_fields(Q), "cassoc"}, {dual_numbers(Q), "cassoc"},
                               {octonions(Q), "alt"},        {matrix2(Field::gf(5)), "assoc"}};
    for (const auto& [a, preset_name] : cases) {
        ActorSpace s = external_weak_actor(a, *find_preset(preset_name));
        for (const auto& f : s.basis())
            for (const auto& g : s.basis()) CHECK(partial_product(s, f, g).has_value());
    }
}

TEST_CASE("partial product membership precondition") {
    Algebra a = dual_numbers(Q);
    ActorSpace s = external_weak_actor(a, *find_preset("assoc"));
    Matrix bad(Q, 2, 2);
    bad.at(1, 0) = Q.one();  // x -> x * f must fix the ideal; this does not
    ActorElement outside{bad, bad};
    if (!s.contains(outside)) CHECK_THROWS_AS(partial_product(s, outside, outside), Error);
}

TEST_CASE("lie preset has no partial product rules") {
    Algebra a = lie2_nonabelian(Q);
    ActorSpace s = external_weak_actor(a, *find_preset("lie"));
    REQUIRE(s.dim() > 0);
    CHECK_THROWS_WITH_AS(partial_product(s, s.basis()[0], s.basis()[0]),
                         doctest::Contains("no partial product"), Error);
}

TEST_CASE("substitution correctness: spliced identities vanish on E(X)") {
    Rng rng(11235);
    struct Case {
        Algebra a;
        const char* preset;
    };
    std::vector<Case> cases = {{matrix2(Q), "assoc"},
                               {dual_numbers(Q), "cassoc"},
                               {lie2_nonabelian(Q), "lie"},
                               {octonions(Q), "alt"}};
    for (const auto& [a, preset_name] : cases) {
        auto v = find_preset(preset_name);
        ActorSpace s = external_weak_actor(a, *v);
        for (int iter = 0; iter < 3; ++iter) {
            ActorElement f = random_actor_element(s, rng);
            REQUIRE(s.contains(f));
            for (const auto& phi : v->identities)
                for (std::size_t slot = 1; slot <= phi.degree(); ++slot)
                    for (int probe = 0; probe < 5; ++probe) {
                        std::vector<Element> args;
                        std::uniform_int_distribution<std::size_t> pick(0, a.dim() - 1);
                        for (std::size_t t = 0; t < phi.degree(); ++t)
                            args.push_back(a.basis_element(pick(rng)));
                        Element val = oracles::splice_identity(phi, a, args, slot, f);
                        CHECK(vec_is_zero(val));
                    }
        }
    }
}

TEST_CASE("actor space basis is canonical and closed under the constraints") {
    Algebra a = matrix2(Q);
    ActorSpace s = external_weak_actor(a, *find_preset("assoc"));
    CHECK(s.dim() == 4);
    for (const auto& e : s.basis()) CHECK(s.contains(e));
    // Flattened basis is the RREF basis of the subspace.
    for (std::size_t i = 0; i < s.dim(); ++i)
        CHECK(s.basis()[i].flatten() == s.space().basis()[i]);
}
