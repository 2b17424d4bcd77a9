#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "actorkit/algebra.hpp"
#include "actorkit/rules.hpp"

namespace actorkit {

/// Parse failure with a 0-based character position into the source text.
class ParseError : public Error {
public:
    ParseError(std::size_t pos, const std::string& what)
        : Error("parse error at position " + std::to_string(pos) + ": " + what), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

/// Immutable binary product tree; leaves hold 1-based variable indices,
/// internal nodes carry the product index they multiply with.
class Monomial {
public:
    static Monomial leaf(int var);
    static Monomial node(std::size_t product, Monomial left, Monomial right);

    bool is_leaf() const { return impl_->var != 0; }
    int var() const { return impl_->var; }
    std::size_t product() const { return impl_->product; }
    const Monomial& left() const { return *impl_->left; }
    const Monomial& right() const { return *impl_->right; }

    friend bool operator==(const Monomial& a, const Monomial& b);
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
    struct Impl {
        int var = 0;  // 0 for internal nodes
        std::size_t product = 0;
        std::shared_ptr<const Monomial> left, right;
    };
    std::shared_ptr<const Impl> impl_;
};

struct IdentityTerm {
    std::int64_t coeff;
    Monomial tree;

    friend bool operator==(const IdentityTerm& a, const IdentityTerm& b) {
        return a.coeff == b.coeff && a.tree == b.tree;
    }
};

/// A multilinear non-associative polynomial: each of x1..xk occurs exactly
/// once in every term. Canonical form merges structurally equal trees and
/// drops zero coefficients.
class MultilinearIdentity {
public:
    MultilinearIdentity(std::size_t degree, std::vector<IdentityTerm> terms);

    std::size_t degree() const { return degree_; }
    const std::vector<IdentityTerm>& terms() const { return terms_; }

    /// Canonical source form; parse(str()) reproduces the identity.
    std::string str() const;

    friend bool operator==(const MultilinearIdentity& a, const MultilinearIdentity& b) {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

private:
    std::size_t degree_;
    std::vector<IdentityTerm> terms_;
};

/// Parses a +/- separated sum of optionally coefficient-prefixed fully
/// parenthesized products of variables x1..xk. `*` is product 0; `[u,v]`
/// is product 1 and requires num_products == 2.
MultilinearIdentity parse_identity(const std::string& src, std::size_t num_products);

/// Value of the polynomial at the given arguments.
Element evaluate_identity(const MultilinearIdentity& phi, const Algebra& a,
                          const std::vector<Element>& args);

struct SatisfactionReport {
    bool satisfied = true;
    std::vector<std::size_t> witness;  // basis indices of the first failing tuple
    Element value;                     // nonzero value at the witness

    explicit operator bool() const { return satisfied; }
};

/// Evaluates phi on all k-tuples of basis vectors (which suffices by
/// multilinearity) and reports the first failure, if any.
SatisfactionReport check_identity(const MultilinearIdentity& phi, const Algebra& a);

/// How an actor space multiplies its elements.
enum class ActorProductRule {
    None,         // no partial product available
    LambdaMu,     // the generic 8+8 coefficient scheme
    Alternative,  // the dedicated three-term formulas of the alternative case
};

struct VarietyPreset {
    std::string name;
    std::size_t num_products = 1;
    std::vector<MultilinearIdentity> identities;
    ActorProductRule product_rule = ActorProductRule::None;
    std::optional<LambdaMuRules> lambda_mu;
    std::vector<std::int64_t> excluded_characteristics;
};

/// Built-in presets: assoc, cassoc, lie, alt, abalg, pois (case-insensitive).
std::optional<VarietyPreset> find_preset(const std::string& name);

/// All identities of the preset hold in a; throws with a witness otherwise.
/// Also refuses fields whose characteristic the preset excludes.
void require_in_variety(const Algebra& a, const VarietyPreset& v);

/// Throws when the algebra's characteristic is excluded by the preset.
void require_characteristic_ok(const VarietyPreset& v, const Field& f);

}  // namespace actorkit
