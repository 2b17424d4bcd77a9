#include "actorkit/identity.hpp"

#include <algorithm>
#include <map>

namespace actorkit {

Monomial Monomial::leaf(int var) {
    if (var < 1) throw Error("variable index must be positive");
    Monomial m;
    auto impl = std::make_shared<Impl>();
    impl->var = var;
    m.impl_ = std::move(impl);
    return m;
}

Monomial Monomial::node(std::size_t product, Monomial left, Monomial right) {
    Monomial m;
    auto impl = std::make_shared<Impl>();
    impl->product = product;
    impl->left = std::make_shared<Monomial>(std::move(left));
    impl->right = std::make_shared<Monomial>(std::move(right));
    m.impl_ = std::move(impl);
    return m;
}

bool operator==(const Monomial& a, const Monomial& b) {
    if (a.impl_ == b.impl_) return true;
    if (a.is_leaf() != b.is_leaf()) return false;
    if (a.is_leaf()) return a.var() == b.var();
    return a.product() == b.product() && a.left() == b.left() && a.right() == b.right();
}

namespace {

void collect_vars(const Monomial& m, std::vector<int>& out) {
    if (m.is_leaf()) {
        out.push_back(m.var());
        return;
    }
    collect_vars(m.left(), out);
    collect_vars(m.right(), out);
}

void check_multilinear(const std::vector<IdentityTerm>& terms, std::size_t degree,
                       std::size_t err_pos) {
    for (const auto& t : terms) {
        std::vector<int> vars;
        collect_vars(t.tree, vars);
        std::vector<int> seen(degree + 1, 0);
        for (int v : vars) {
            if (v < 1 || static_cast<std::size_t>(v) > degree)
                throw ParseError(err_pos, "variable x" + std::to_string(v) + " out of range");
            if (++seen[v] > 1)
                throw ParseError(err_pos,
                                 "variable x" + std::to_string(v) + " repeated in a term");
        }
        for (std::size_t v = 1; v <= degree; ++v)
            if (seen[v] == 0)
                throw ParseError(err_pos,
                                 "variable x" + std::to_string(v) + " missing from a term");
    }
}

std::string monomial_str(const Monomial& m, bool outer) {
    if (m.is_leaf()) return "x" + std::to_string(m.var());
    if (m.product() == 1)
        return "[" + monomial_str(m.left(), true) + "," + monomial_str(m.right(), true) + "]";
    std::string s = monomial_str(m.left(), false) + "*" + monomial_str(m.right(), false);
    return outer ? s : "(" + s + ")";
}

}  // namespace

MultilinearIdentity::MultilinearIdentity(std::size_t degree, std::vector<IdentityTerm> terms)
    : degree_(degree) {
    // Canonicalize: merge structurally equal trees, drop zeros.
    for (auto& t : terms) {
        bool merged = false;
        for (auto& u : terms_) {
            if (u.tree == t.tree) {
                u.coeff += t.coeff;
                merged = true;
                break;
            }
        }
        if (!merged && t.coeff != 0) terms_.push_back(std::move(t));
    }
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                [](const IdentityTerm& t) { return t.coeff == 0; }),
                 terms_.end());
    if (terms_.empty()) throw Error("identity has no nonzero terms");
    check_multilinear(terms_, degree_, 0);
}

std::string MultilinearIdentity::str() const {
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        std::int64_t c = terms_[i].coeff;
        if (i == 0) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::int64_t mag = c < 0 ? -c : c;
        if (mag != 1) out += std::to_string(mag) + "*";
        out += monomial_str(terms_[i].tree, true);
    }
    return out;
}

namespace {

/// Recursive-descent parser over the fully parenthesized grammar.
class IdentityParser {
public:
    IdentityParser(const std::string& src, std::size_t num_products)
        : src_(src), nprod_(num_products) {}

    MultilinearIdentity parse() {
        std::vector<IdentityTerm> terms;
        skip_ws();
        std::int64_t sign = parse_sign_opt();
        terms.push_back(parse_term(sign));
        skip_ws();
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c != '+' && c != '-') throw ParseError(pos_, "expected '+' or '-'");
            ++pos_;
            skip_ws();
            terms.push_back(parse_term(c == '-' ? -1 : 1));
            skip_ws();
        }
        std::size_t degree = 0;
        for (const auto& t : terms) {
            std::vector<int> vars;
            collect_vars(t.tree, vars);
            for (int v : vars) degree = std::max<std::size_t>(degree, v);
        }
        check_multilinear(terms, degree, pos_);
        return MultilinearIdentity(degree, std::move(terms));
    }

private:
    const std::string& src_;
    std::size_t nprod_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t')) ++pos_;
    }

    std::int64_t parse_sign_opt() {
        if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
            std::int64_t s = src_[pos_] == '-' ? -1 : 1;
            ++pos_;
            skip_ws();
            return s;
        }
        return 1;
    }

    IdentityTerm parse_term(std::int64_t sign) {
        std::int64_t coeff = sign;
        if (pos_ < src_.size() && isdigit(static_cast<unsigned char>(src_[pos_]))) {
            coeff *= parse_integer();
            skip_ws();
            if (pos_ < src_.size() && src_[pos_] == '*') {
                ++pos_;
                skip_ws();
            }
        }
        Monomial m = parse_monomial();
        return IdentityTerm{coeff, std::move(m)};
    }

    std::int64_t parse_integer() {
        std::size_t start = pos_;
        std::int64_t v = 0;
        while (pos_ < src_.size() && isdigit(static_cast<unsigned char>(src_[pos_]))) {
            v = v * 10 + (src_[pos_] - '0');
            if (v > (std::int64_t(1) << 40)) throw ParseError(start, "coefficient too large");
            ++pos_;
        }
        return v;
    }

    // monomial := atom [ '*' atom ]; a second '*' at the same level is
    // ambiguous without parentheses.
    Monomial parse_monomial() {
        Monomial left = parse_atom();
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == '*') {
            std::size_t star = pos_;
            ++pos_;
            skip_ws();
            Monomial right = parse_atom();
            skip_ws();
            if (pos_ < src_.size() && src_[pos_] == '*')
                throw ParseError(pos_, "ambiguous product; parenthesize (the product at " +
                                           std::to_string(star) + " is unparenthesized)");
            return Monomial::node(0, std::move(left), std::move(right));
        }
        return left;
    }

    Monomial parse_atom() {
        if (pos_ >= src_.size()) throw ParseError(pos_, "expected a monomial");
        char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            skip_ws();
            Monomial m = parse_monomial();
            skip_ws();
            if (pos_ >= src_.size() || src_[pos_] != ')')
                throw ParseError(pos_, "expected ')'");
            ++pos_;
            return m;
        }
        if (c == '[') {
            if (nprod_ < 2)
                throw ParseError(pos_, "bracket product requires a two-product variety");
            ++pos_;
            skip_ws();
            Monomial l = parse_monomial();
            skip_ws();
            if (pos_ >= src_.size() || src_[pos_] != ',') throw ParseError(pos_, "expected ','");
            ++pos_;
            skip_ws();
            Monomial r = parse_monomial();
            skip_ws();
            if (pos_ >= src_.size() || src_[pos_] != ']') throw ParseError(pos_, "expected ']'");
            ++pos_;
            return Monomial::node(1, std::move(l), std::move(r));
        }
        if (isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            std::string word;
            while (pos_ < src_.size() &&
                   isalnum(static_cast<unsigned char>(src_[pos_]))) word += src_[pos_++];
            if (word.size() < 2 || word[0] != 'x' ||
                !std::all_of(word.begin() + 1, word.end(),
                             [](char ch) { return isdigit(static_cast<unsigned char>(ch)); }))
                throw ParseError(start, "unknown variable '" + word + "' (expected x1, x2, ...)");
            int v = std::stoi(word.substr(1));
            if (v < 1) throw ParseError(start, "variable indices start at x1");
            return Monomial::leaf(v);
        }
        throw ParseError(pos_, std::string("unexpected character '") + c + "'");
    }
};

Element evaluate_monomial(const Monomial& m, const Algebra& a,
                          const std::vector<Element>& args) {
    if (m.is_leaf()) return args[m.var() - 1];
    Element l = evaluate_monomial(m.left(), a, args);
    Element r = evaluate_monomial(m.right(), a, args);
    return a.multiply(l, r, m.product());
}

std::size_t max_product_index(const Monomial& m) {
    if (m.is_leaf()) return 0;
    return std::max({m.product(), max_product_index(m.left()), max_product_index(m.right())});
}

}  // namespace

MultilinearIdentity parse_identity(const std::string& src, std::size_t num_products) {
    return IdentityParser(src, num_products).parse();
}

Element evaluate_identity(const MultilinearIdentity& phi, const Algebra& a,
                          const std::vector<Element>& args) {
    if (args.size() != phi.degree())
        throw Error("arity mismatch: identity of degree " + std::to_string(phi.degree()) +
                    " applied to " + std::to_string(args.size()) + " arguments");
    Element acc = a.zero_element();
    for (const auto& term : phi.terms()) {
        if (max_product_index(term.tree) >= a.num_products())
            throw Error("identity uses a product the algebra does not have");
        Element v = evaluate_monomial(term.tree, a, args);
        acc = vec_add(acc, vec_scale(a.field().from_int(term.coeff), v));
    }
    return acc;
}

SatisfactionReport check_identity(const MultilinearIdentity& phi, const Algebra& a) {
    std::size_t k = phi.degree();
    std::size_t n = a.dim();
    SatisfactionReport rep;
    if (n == 0) return rep;
    std::vector<std::size_t> tuple(k, 0);
    std::vector<Element> args(k, a.zero_element());
    while (true) {
        for (std::size_t t = 0; t < k; ++t) args[t] = a.basis_element(tuple[t]);
        Element v = evaluate_identity(phi, a, args);
        if (!vec_is_zero(v)) {
            rep.satisfied = false;
            rep.witness = tuple;
            rep.value = v;
            return rep;
        }
        std::size_t t = k;
        while (t > 0) {
            --t;
            if (++tuple[t] < n) break;
            tuple[t] = 0;
            if (t == 0) return rep;
        }
        if (k == 0) return rep;
    }
}

namespace {

VarietyPreset make_preset(std::string name, std::size_t nprod,
                          std::vector<std::string> identity_srcs, ActorProductRule rule,
                          std::optional<LambdaMuRules> lm, std::vector<std::int64_t> excl) {
    VarietyPreset v;
    v.name = std::move(name);
    v.num_products = nprod;
    for (const auto& s : identity_srcs) v.identities.push_back(parse_identity(s, nprod));
    v.product_rule = rule;
    v.lambda_mu = std::move(lm);
    v.excluded_characteristics = std::move(excl);
    return v;
}

}  // namespace

std::optional<VarietyPreset> find_preset(const std::string& name) {
    std::string n;
    for (char c : name) n += static_cast<char>(tolower(static_cast<unsigned char>(c)));
    if (n == "assoc")
        return make_preset("assoc", 1, {"(x1*x2)*x3 - x1*(x2*x3)"}, ActorProductRule::LambdaMu,
                           LambdaMuRules::standard_associative(), {});
    if (n == "cassoc")
        return make_preset("cassoc", 1, {"(x1*x2)*x3 - x1*(x2*x3)", "x1*x2 - x2*x1"},
                           ActorProductRule::LambdaMu, LambdaMuRules::standard_associative(), {});
    if (n == "lie")
        return make_preset("lie", 1,
                           {"x1*x2 + x2*x1", "(x1*x2)*x3 + (x2*x3)*x1 + (x3*x1)*x2"},
                           ActorProductRule::None, std::nullopt, {2});
    if (n == "alt")
        return make_preset("alt", 1,
                           {"(x1*x2)*x3 + (x1*x3)*x2 - x1*(x2*x3) - x1*(x3*x2)",
                            "(x1*x2)*x3 + (x2*x1)*x3 - x1*(x2*x3) - x2*(x1*x3)"},
                           ActorProductRule::Alternative, std::nullopt, {2});
    if (n == "abalg")
        return make_preset("abalg", 1, {"x1*x2"}, ActorProductRule::None, std::nullopt, {});
    if (n == "pois")
        return make_preset("pois", 2,
                           {"(x1*x2)*x3 - x1*(x2*x3)", "[x1,x2] + [x2,x1]",
                            "[[x1,x2],x3] + [[x2,x3],x1] + [[x3,x1],x2]",
                            "[x1,x2*x3] - [x1,x2]*x3 - x2*[x1,x3]"},
                           ActorProductRule::None, std::nullopt, {2});
    return std::nullopt;
}

void require_characteristic_ok(const VarietyPreset& v, const Field& f) {
    for (auto c : v.excluded_characteristics)
        if (f.characteristic() == c)
            throw Error("variety '" + v.name + "' excludes characteristic " + std::to_string(c) +
                        " (field " + f.str() + ")");
}

void require_in_variety(const Algebra& a, const VarietyPreset& v) {
    require_characteristic_ok(v, a.field());
    if (a.num_products() < v.num_products)
        throw Error("variety '" + v.name + "' needs " + std::to_string(v.num_products) +
                    " products, algebra '" + a.name() + "' has " +
                    std::to_string(a.num_products()));
    for (std::size_t i = 0; i < v.identities.size(); ++i) {
        SatisfactionReport rep = check_identity(v.identities[i], a);
        if (!rep.satisfied) {
            std::string w = "(";
            for (std::size_t t = 0; t < rep.witness.size(); ++t) {
                if (t) w += ",";
                w += a.basis_names()[rep.witness[t]];
            }
            w += ")";
            throw Error("algebra '" + a.name() + "' is not in variety '" + v.name +
                        "': identity '" + v.identities[i].str() + "' fails at basis tuple " + w);
        }
    }
}

}  // namespace actorkit
