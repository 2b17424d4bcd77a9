#include "actorkit/extensions.hpp"

#include <cstdlib>
#include <map>

namespace actorkit {

AlgebraMorphism::AlgebraMorphism(Algebra source, Algebra target, Matrix m)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(m)) {
    if (!(source_.field() == target_.field())) throw Error("morphism across different fields");
    if (source_.num_products() != target_.num_products())
        throw Error("morphism between algebras with different product counts");
    if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim())
        throw Error("morphism matrix has wrong shape");
    for (std::size_t r = 0; r < source_.num_products(); ++r)
        for (std::size_t i = 0; i < source_.dim(); ++i)
            for (std::size_t j = 0; j < source_.dim(); ++j) {
                Element lhs = matrix_.apply(
                    source_.multiply(source_.basis_element(i), source_.basis_element(j), r));
                Element rhs = target_.multiply(matrix_.column(i), matrix_.column(j), r);
                if (lhs != rhs)
                    throw Error("linear map does not preserve product '" +
                                source_.product_name(r) + "' at basis pair (" +
                                source_.basis_names()[i] + "," + source_.basis_names()[j] + ")");
            }
}

SplitExtensionData make_split_extension(Algebra X, Algebra A, Algebra B, AlgebraMorphism k,
                                        AlgebraMorphism alpha, AlgebraMorphism beta) {
    const Field& f = A.field();
    if (!(k.source() == X) || !(k.target() == A) || !(alpha.source() == A) ||
        !(alpha.target() == B) || !(beta.source() == B) || !(beta.target() == A))
        throw Error("split extension maps do not fit the diagram");
    // alpha . beta = id_B
    if (alpha.matrix() * beta.matrix() != Matrix::identity(f, B.dim()))
        throw Error("alpha . beta is not the identity of B");
    // k injective, image(k) = kernel(alpha)
    if (rank(k.matrix()) != X.dim()) throw Error("kernel inclusion k is not injective");
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < X.dim(); ++j) cols.push_back(k.matrix().column(j));
    Subspace image_k = Subspace::span(f, A.dim(), cols);
    if (image_k != nullspace_basis(alpha.matrix()))
        throw Error("image of k differs from the kernel of alpha");
    return SplitExtensionData{std::move(X), std::move(A), std::move(B),
                              std::move(k), std::move(alpha), std::move(beta)};
}

ActorElement ActingMorphism::apply(const Element& b) const {
    if (b.size() != B_.dim()) throw Error("element length differs from algebra dimension");
    std::size_t n = target_->algebra().dim();
    const Field& f = B_.field();
    Matrix l(f, n, n), r(f, n, n);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (b[i].is_zero()) continue;
        l += b[i] * images_[i].left;
        r += b[i] * images_[i].right;
    }
    return ActorElement{std::move(l), std::move(r)};
}

ActingMorphism make_acting_morphism(Algebra B, std::shared_ptr<const ActorSpace> s,
                                    std::vector<ActorElement> images) {
    if (!s) throw Error("acting morphism needs a target actor space");
    if (!(B.field() == s->algebra().field()))
        throw Error("acting morphism across different fields");
    if (images.size() != B.dim()) throw Error("one actor image per basis vector required");
    for (std::size_t i = 0; i < images.size(); ++i)
        if (!s->contains(images[i]))
            throw Error("image of basis vector '" + B.basis_names()[i] +
                        "' is outside the actor space");
    ActingMorphism phi(std::move(B), s, std::move(images));
    const Algebra& b_alg = phi.B();
    // Permutability on all basis pairs of B.
    for (std::size_t i = 0; i < b_alg.dim(); ++i)
        for (std::size_t j = 0; j < b_alg.dim(); ++j)
            if (!permutability_check(phi.images()[i], phi.images()[j]))
                throw Error("permutability fails on basis pair (" + b_alg.basis_names()[i] +
                            "," + b_alg.basis_names()[j] + ")");
    // Multiplicativity for the partial product, where the variety has one.
    if (s->variety().product_rule != ActorProductRule::None) {
        for (std::size_t i = 0; i < b_alg.dim(); ++i)
            for (std::size_t j = 0; j < b_alg.dim(); ++j) {
                auto prod = partial_product(*s, phi.images()[i], phi.images()[j]);
                if (!prod)
                    throw Error("partial product of images is outside the actor space");
                Element bb = b_alg.multiply(b_alg.basis_element(i), b_alg.basis_element(j), 0);
                if (!(*prod == phi.apply(bb)))
                    throw Error("map is not multiplicative for the partial product");
            }
    }
    return phi;
}

ActingMorphism extension_to_acting_morphism(const SplitExtensionData& e,
                                            std::shared_ptr<const ActorSpace> s) {
    if (!s) throw Error("acting morphism needs a target actor space");
    const Algebra& X = e.X;
    const Algebra& actor_alg = s->algebra();
    if (!(actor_alg.field() == X.field()) || actor_alg.dim() != X.dim() ||
        actor_alg.products()[0].c != X.products()[0].c)
        throw Error("actor space was computed for a different algebra");
    const Field& f = X.field();
    std::size_t n = X.dim();
    std::vector<ActorElement> images;
    for (std::size_t bi = 0; bi < e.B.dim(); ++bi) {
        Element a_b = e.beta.apply(e.B.basis_element(bi));
        Matrix l(f, n, n), r(f, n, n);
        for (std::size_t xi = 0; xi < n; ++xi) {
            Element kx = e.k.apply(X.basis_element(xi));
            // b * x = beta(b) . k(x), pulled back along k.
            auto lx = solve_linear(e.k.matrix(), e.A.multiply(a_b, kx, 0));
            auto rx = solve_linear(e.k.matrix(), e.A.multiply(kx, a_b, 0));
            if (!lx || !rx)
                throw Error("action of B does not preserve the kernel ideal");
            for (std::size_t c = 0; c < n; ++c) {
                l.at(c, xi) = (*lx)[c];
                r.at(c, xi) = (*rx)[c];
            }
        }
        images.push_back(ActorElement{std::move(l), std::move(r)});
    }
    return make_acting_morphism(e.B, std::move(s), std::move(images));
}

bool permutability_check(const ActorElement& f, const ActorElement& g) {
    return g.right * f.left == f.left * g.right;
}

InnReport inn_map(const Algebra& a, const ActorSpace& s) {
    std::size_t n = a.dim();
    const Field& f = a.field();
    std::vector<Vec> cols;
    for (std::size_t i = 0; i < n; ++i)
        cols.push_back(inn_element(a, a.basis_element(i)).flatten());
    Matrix map = Matrix::from_columns(f, 2 * n * n, cols);

    InnReport rep{map, nullspace_basis(map)};
    rep.image_in_actor = true;
    for (const auto& c : cols)
        if (!s.space().contains(c)) rep.image_in_actor = false;
    if (!rep.image_in_actor)
        throw Error("inner pairs fall outside the actor space; inconsistent inputs");
    rep.injective = rep.kernel.dim() == 0;
    rep.surjective = rank(map) == s.dim();
    rep.bijective = rep.injective && rep.surjective;
    return rep;
}

SemidirectResult semidirect_product(const Algebra& B, const Algebra& X,
                                    const ActingMorphism& phi, const VarietyPreset& v) {
    require_in_variety(B, v);
    require_in_variety(X, v);
    if (!(phi.B() == B)) throw Error("acting morphism was built for a different B");
    const Algebra& actor_alg = phi.target().algebra();
    if (!(actor_alg.field() == X.field()) || actor_alg.dim() != X.dim() ||
        actor_alg.products()[0].c != X.products()[0].c)
        throw Error("acting morphism was built for a different X");
    if (v.num_products == 2 && (B.num_products() != 2 || X.num_products() != 2))
        throw Error("two-product variety needs two-product algebras");
    const Field& f = X.field();
    std::size_t m = B.dim(), n = X.dim(), dim = m + n;

    std::vector<ProductTable> prods;
    for (std::size_t r = 0; r < v.num_products; ++r) {
        ProductTable t{X.product_name(r), std::vector<Scalar>(dim * dim * dim, f.zero())};
        auto set = [&](std::size_t i, std::size_t j, std::size_t k, const Scalar& val) {
            t.c[(i * dim + j) * dim + k] = val;
        };
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t k = 0; k < m; ++k) set(i, j, k, B.sc(r, i, j, k));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) set(m + i, m + j, m + k, X.sc(r, i, j, k));
        if (r == 0) {
            // Cross terms phi(b) x' and x phi(b').
            for (std::size_t i = 0; i < m; ++i) {
                const ActorElement& img = phi.images()[i];
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k) {
                        set(i, m + j, m + k, img.left.at(k, j));
                        set(m + j, i, m + k, img.right.at(k, j));
                    }
            }
        }
        // The bracket of a two-product variety is componentwise: no cross terms.
        prods.push_back(std::move(t));
    }

    std::vector<std::string> names;
    for (const auto& s : B.basis_names()) names.push_back("b:" + s);
    for (const auto& s : X.basis_names()) names.push_back("x:" + s);
    Algebra A("sd(" + B.name() + "," + X.name() + ")", f, dim, std::move(names),
              std::move(prods));
    require_in_variety(A, v);

    Matrix km(f, dim, n);
    for (std::size_t j = 0; j < n; ++j) km.at(m + j, j) = f.one();
    Matrix am(f, m, dim);
    for (std::size_t i = 0; i < m; ++i) am.at(i, i) = f.one();
    Matrix bm(f, dim, m);
    for (std::size_t i = 0; i < m; ++i) bm.at(i, i) = f.one();
    SplitExtensionData ext = make_split_extension(
        X, A, B, AlgebraMorphism(X, A, km), AlgebraMorphism(A, B, am), AlgebraMorphism(B, A, bm));
    return SemidirectResult{std::move(A), std::move(ext)};
}

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t budget) {
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (v > budget / base + 1) return budget + 1;
        v *= base;
        if (v > budget) return budget + 1;
    }
    return v;
}

}  // namespace

std::vector<SplitExtensionData> enumerate_split_extensions(const Algebra& B, const Algebra& X,
                                                           const VarietyPreset& v,
                                                           std::uint64_t budget) {
    require_in_variety(B, v);
    require_in_variety(X, v);
    if (!B.field().is_prime_field())
        throw Error("the enumeration oracle needs a finite prime field");
    const Field& f = B.field();
    std::uint64_t p = static_cast<std::uint64_t>(f.prime());
    std::size_t m = B.dim(), n = X.dim(), dim = m + n;
    std::size_t nprod = v.num_products;
    // Cross-term tables: for each product, B x X -> X and X x B -> X.
    std::size_t cells = 2 * nprod * m * n * n;
    std::uint64_t total = checked_pow(p, cells, budget);
    if (total > budget)
        throw BudgetExceeded("enumeration needs p^" + std::to_string(cells) +
                             " candidates, over the budget of " + std::to_string(budget));

    std::vector<SplitExtensionData> out;
    std::vector<std::uint64_t> digits(cells, 0);
    for (std::uint64_t cand = 0; cand < total; ++cand) {
        std::vector<ProductTable> prods;
        std::size_t cell = 0;
        // Decode the candidate in lexicographic order.
        {
            std::uint64_t rest = cand;
            for (std::size_t d = cells; d-- > 0;) {
                digits[d] = rest % p;
                rest /= p;
            }
        }
        for (std::size_t r = 0; r < nprod; ++r) {
            ProductTable t{X.product_name(r), std::vector<Scalar>(dim * dim * dim, f.zero())};
            auto set = [&](std::size_t i, std::size_t j, std::size_t k, const Scalar& val) {
                t.c[(i * dim + j) * dim + k] = val;
            };
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j)
                    for (std::size_t k = 0; k < m; ++k) set(i, j, k, B.sc(r, i, j, k));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k)
                        set(m + i, m + j, m + k, X.sc(r, i, j, k));
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k)
                        set(i, m + j, m + k, f.from_int(static_cast<std::int64_t>(digits[cell++])));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < m; ++j)
                    for (std::size_t k = 0; k < n; ++k)
                        set(m + i, j, m + k, f.from_int(static_cast<std::int64_t>(digits[cell++])));
            prods.push_back(std::move(t));
        }
        Algebra A("ext" + std::to_string(cand), f, dim, {}, std::move(prods));
        bool ok = true;
        for (const auto& phi : v.identities)
            if (!check_identity(phi, A).satisfied) {
                ok = false;
                break;
            }
        if (!ok) continue;
        Matrix km(f, dim, n);
        for (std::size_t j = 0; j < n; ++j) km.at(m + j, j) = f.one();
        Matrix am(f, m, dim);
        for (std::size_t i = 0; i < m; ++i) am.at(i, i) = f.one();
        Matrix bm(f, dim, m);
        for (std::size_t i = 0; i < m; ++i) bm.at(i, i) = f.one();
        out.push_back(make_split_extension(X, A, B, AlgebraMorphism(X, A, km),
                                           AlgebraMorphism(A, B, am), AlgebraMorphism(B, A, bm)));
    }
    return out;
}

namespace {

/// Brute-force count of algebra morphisms B -> T over a prime field.
std::size_t count_variety_morphisms(const Algebra& B, const Algebra& T, std::uint64_t budget) {
    const Field& f = B.field();
    std::uint64_t p = static_cast<std::uint64_t>(f.prime());
    std::size_t cells = B.dim() * T.dim();
    std::uint64_t total = checked_pow(p, cells, budget);
    if (total > budget)
        throw BudgetExceeded("morphism census needs p^" + std::to_string(cells) +
                             " candidates, over the budget of " + std::to_string(budget));
    std::size_t count = 0;
    for (std::uint64_t cand = 0; cand < total; ++cand) {
        Matrix mm(f, T.dim(), B.dim());
        std::uint64_t rest = cand;
        for (std::size_t i = 0; i < T.dim(); ++i)
            for (std::size_t j = 0; j < B.dim(); ++j) {
                mm.at(i, j) = f.from_int(static_cast<std::int64_t>(rest % p));
                rest /= p;
            }
        bool ok = true;
        for (std::size_t r = 0; r < B.num_products() && ok; ++r)
            for (std::size_t i = 0; i < B.dim() && ok; ++i)
                for (std::size_t j = 0; j < B.dim() && ok; ++j) {
                    Element lhs = mm.apply(
                        B.multiply(B.basis_element(i), B.basis_element(j), r));
                    Element rhs = T.multiply(mm.column(i), mm.column(j), r);
                    if (lhs != rhs) ok = false;
                }
        if (ok) ++count;
    }
    return count;
}

std::string actor_signature(const ActingMorphism& phi, const SplitExtensionData& e) {
    std::string sig;
    for (const auto& img : phi.images())
        for (const auto& s : img.flatten()) sig += s.str() + ",";
    // Two-product extensions distinguish classes by the bracket action too.
    if (e.A.num_products() == 2) {
        std::size_t n = e.X.dim();
        for (std::size_t bi = 0; bi < e.B.dim(); ++bi) {
            Element a_b = e.beta.apply(e.B.basis_element(bi));
            for (std::size_t xi = 0; xi < n; ++xi) {
                Element kx = e.k.apply(e.X.basis_element(xi));
                auto d = solve_linear(e.k.matrix(), e.A.multiply(a_b, kx, 1));
                if (!d) throw Error("bracket action does not preserve the kernel ideal");
                for (const auto& s : *d) sig += s.str() + ",";
            }
        }
    }
    return sig;
}

}  // namespace

BijectionReport verify_bijection(const Algebra& B, const Algebra& X, const VarietyPreset& v,
                                 std::uint64_t budget) {
    auto unit = find_unit(X);
    if (!unit) throw Error("verify_bijection requires a unital X");

    auto exts = enumerate_split_extensions(B, X, v, budget);

    // Group survivors by their induced acting morphism.
    std::shared_ptr<const ActorSpace> s;
    if (v.num_products == 1) {
        s = std::make_shared<const ActorSpace>(external_weak_actor(X, v));
    } else {
        auto assoc = find_preset("assoc");
        s = std::make_shared<const ActorSpace>(
            external_weak_actor(X.with_single_product(0), *assoc));
    }
    std::map<std::string, std::size_t> classes;
    for (const auto& e : exts) {
        ActingMorphism phi = extension_to_acting_morphism(e, s);
        classes[actor_signature(phi, e)]++;
    }

    // The actor object: X itself, or the Lie center for Poisson input.
    std::size_t morphisms;
    if (v.num_products == 1) {
        morphisms = count_variety_morphisms(B, X, budget);
    } else {
        Subspace z = lie_center(X, 1);
        auto zx = induced_subalgebra(X, z, "Z(" + X.name() + ")");
        if (!zx) throw Error("Lie center is not closed under the products");
        morphisms = count_variety_morphisms(B, *zx, budget);
    }

    BijectionReport rep;
    rep.split_extensions = classes.size();
    rep.variety_morphisms = morphisms;
    rep.match = rep.split_extensions == rep.variety_morphisms;
    rep.detail = std::to_string(exts.size()) + " surviving extension tables in " +
                 std::to_string(classes.size()) + " acting-morphism classes";
    return rep;
}

std::uint64_t default_budget() {
    if (const char* env = std::getenv("ACTORKIT_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw Error("ACTORKIT_BUDGET must be a positive integer");
    }
    return 1u << 16;
}

}  // namespace actorkit
