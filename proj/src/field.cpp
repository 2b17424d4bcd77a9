#include "actorkit/field.hpp"

namespace actorkit {

namespace {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
    std::int64_t r = v % p;
    return r < 0 ? r + p : r;
}

// Inverse of a mod p via extended Euclid; a must be nonzero mod p.
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw Error("scalar has no inverse mod " + std::to_string(p));
    return mod_reduce(t, p);
}

}  // namespace

Field Field::rationals() { return Field(0); }

Field Field::gf(std::int64_t p) {
    if (p >= (std::int64_t(1) << 31)) throw Error("prime too large for GF(p): " + std::to_string(p));
    if (!is_prime(p)) throw Error("GF(p) requires a prime, got " + std::to_string(p));
    return Field(p);
}

std::int64_t Field::prime() const {
    if (p_ == 0) throw Error("the rationals have no prime modulus");
    return p_;
}

std::string Field::str() const {
    return p_ == 0 ? "Q" : "GF(" + std::to_string(p_) + ")";
}

Scalar Field::zero() const { return from_int(0); }

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t v) const {
    Scalar s;
    s.field_ = *this;
    if (p_ == 0)
        s.q_ = mpq_class(static_cast<long>(v));
    else
        s.r_ = mod_reduce(v, p_);
    return s;
}

Scalar Field::parse(const std::string& text) const {
    if (text.empty()) throw Error("empty scalar literal");
    Scalar s;
    s.field_ = *this;
    if (p_ == 0) {
        // mpq_class accepts "num" and "num/den" but does not canonicalize.
        // Parse in base 10 explicitly; GMP does not take a leading '+'.
        std::string body = text[0] == '+' ? text.substr(1) : text;
        try {
            s.q_ = mpq_class(body, 10);
        } catch (const std::invalid_argument&) {
            throw Error("bad rational literal: '" + text + "'");
        }
        if (s.q_.get_den() == 0) throw Error("zero denominator in '" + text + "'");
        s.q_.canonicalize();
        return s;
    }
    std::size_t i = 0;
    bool neg = false;
    if (text[i] == '-' || text[i] == '+') {
        neg = text[i] == '-';
        ++i;
    }
    if (i == text.size()) throw Error("bad residue literal: '" + text + "'");
    std::int64_t v = 0;
    for (; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') throw Error("bad residue literal: '" + text + "'");
        v = (v * 10 + (text[i] - '0')) % p_;
    }
    s.r_ = mod_reduce(neg ? -v : v, p_);
    return s;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (!(field_ == o.field_))
        throw Error("field mismatch: " + field_.str() + " vs " + o.field_.str());
}

bool Scalar::is_zero() const {
    return field_.is_rational() ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rational() ? q_ == 1 : r_ == 1;
}

Scalar Scalar::operator-() const {
    Scalar s(*this);
    if (field_.is_rational())
        s.q_ = -q_;
    else
        s.r_ = r_ == 0 ? 0 : field_.prime() - r_;
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("division by zero in " + field_.str());
    Scalar s(*this);
    if (field_.is_rational())
        s.q_ = 1 / q_;
    else
        s.r_ = mod_inverse(r_, field_.prime());
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same_field(o);
    if (field_.is_rational())
        q_ += o.q_;
    else
        r_ = (r_ + o.r_) % field_.prime();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same_field(o);
    if (field_.is_rational()) {
        q_ -= o.q_;
    } else {
        r_ -= o.r_;
        if (r_ < 0) r_ += field_.prime();
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same_field(o);
    if (field_.is_rational()) {
        q_ *= o.q_;
    } else {
        // p < 2^31 so the product fits in 64 bits.
        r_ = (r_ * o.r_) % field_.prime();
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
    a.check_same_field(b);
    return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::str() const {
    return field_.is_rational() ? q_.get_str() : std::to_string(r_);
}

const mpq_class& Scalar::rational() const {
    if (!field_.is_rational()) throw Error("not a rational scalar");
    return q_;
}

std::int64_t Scalar::residue() const {
    if (!field_.is_prime_field()) throw Error("not a GF(p) scalar");
    return r_;
}

}  // namespace actorkit
