#pragma once

#include <cstdint>
#include <memory>

#include "actorkit/actor.hpp"

namespace actorkit {

/// Raised when a brute-force enumeration would exceed the candidate budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// A linear map between algebras that preserves every product; validated at
/// construction.
class AlgebraMorphism {
public:
    AlgebraMorphism(Algebra source, Algebra target, Matrix m);

    const Algebra& source() const { return source_; }
    const Algebra& target() const { return target_; }
    const Matrix& matrix() const { return matrix_; }

    Element apply(const Element& x) const { return matrix_.apply(x); }

private:
    Algebra source_, target_;
    Matrix matrix_;  // target_dim x source_dim
};

/// The data of a split extension 0 -> X -k-> A <-alpha/beta-> B -> 0 with
/// alpha . beta = id_B and (X, k) the kernel of alpha.
struct SplitExtensionData {
    Algebra X, A, B;
    AlgebraMorphism k;      // X -> A
    AlgebraMorphism alpha;  // A -> B
    AlgebraMorphism beta;   // B -> A
};

/// Validates the split extension equations and returns the data.
SplitExtensionData make_split_extension(Algebra X, Algebra A, Algebra B, AlgebraMorphism k,
                                        AlgebraMorphism alpha, AlgebraMorphism beta);

/// A linear map b -> (b*-, -*b) into an actor space, with the image
/// verified to lie in the space, to satisfy the permutability condition on
/// all pairs, and to be multiplicative for the partial product where the
/// variety provides one.
class ActingMorphism {
public:
    const Algebra& B() const { return B_; }
    const ActorSpace& target() const { return *target_; }
    const std::vector<ActorElement>& images() const { return images_; }

    ActorElement apply(const Element& b) const;

    friend bool operator==(const ActingMorphism& a, const ActingMorphism& b) {
        return a.images_ == b.images_;
    }

private:
    ActingMorphism(Algebra B, std::shared_ptr<const ActorSpace> target,
                   std::vector<ActorElement> images)
        : B_(std::move(B)), target_(std::move(target)), images_(std::move(images)) {}

    friend ActingMorphism make_acting_morphism(Algebra B, std::shared_ptr<const ActorSpace> s,
                                               std::vector<ActorElement> images);
    Algebra B_;
    std::shared_ptr<const ActorSpace> target_;
    std::vector<ActorElement> images_;
};

ActingMorphism make_acting_morphism(Algebra B, std::shared_ptr<const ActorSpace> s,
                                    std::vector<ActorElement> images);

/// The acting morphism b -> (beta(b) . k(x), k(x) . beta(b)) induced by a
/// split extension, pulled back along k and verified to land in s.
ActingMorphism extension_to_acting_morphism(const SplitExtensionData& e,
                                            std::shared_ptr<const ActorSpace> s);

/// The permutability condition (b*x)*b' = b*(x*b'): true iff
/// R_g . L_f = L_f . R_g as matrices.
bool permutability_check(const ActorElement& f, const ActorElement& g);

struct InnReport {
    Matrix map;        // 2n^2 x n, column i = flatten(Inn(b_i))
    Subspace kernel;   // of the Inn map
    bool image_in_actor = false;
    bool injective = false;
    bool surjective = false;
    bool bijective = false;
};

/// The canonical map x -> (x . -, - . x) into the actor space.
InnReport inn_map(const Algebra& a, const ActorSpace& s);

struct SemidirectResult {
    Algebra A;
    SplitExtensionData extension;
};

/// The semidirect product on B + X with
/// (b,x)(b',x') = (bb', xx' + phi(b) x' + x phi(b')); two-product varieties
/// add the componentwise bracket [(b,x),(b',x')] = ([b,b'], [x,x']).
/// The result is variety-checked and packaged with its canonical extension.
SemidirectResult semidirect_product(const Algebra& B, const Algebra& X,
                                    const ActingMorphism& phi, const VarietyPreset& v);

/// All split extensions of B by X in the variety, in semidirect normal form:
/// enumerates every pair of cross-term bilinear maps B x X -> X and
/// X x B -> X (plus bracket cross terms for two-product varieties) over a
/// prime field and keeps those whose total algebra satisfies the variety.
std::vector<SplitExtensionData> enumerate_split_extensions(const Algebra& B, const Algebra& X,
                                                           const VarietyPreset& v,
                                                           std::uint64_t budget);

struct BijectionReport {
    std::size_t split_extensions = 0;   // distinct acting morphisms among survivors
    std::size_t variety_morphisms = 0;  // brute-forced morphisms B -> actor object
    bool match = false;
    std::string detail;
};

/// Compares the split-extension census with the count of variety morphisms
/// B -> actor object (X itself for assoc/cassoc/alt, the Lie center for
/// pois). X must be unital.
BijectionReport verify_bijection(const Algebra& B, const Algebra& X, const VarietyPreset& v,
                                 std::uint64_t budget);

/// Default candidate budget for the enumeration oracle (2^16), overridden by
/// the ACTORKIT_BUDGET environment variable when set.
std::uint64_t default_budget();

}  // namespace actorkit
