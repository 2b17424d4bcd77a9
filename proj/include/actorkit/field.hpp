#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace actorkit {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Exact scalar domain: the field of rationals or a prime field GF(p).
///
/// A Field value is a lightweight descriptor; the actual arithmetic lives in
/// Scalar. Two fields compare equal iff they denote the same domain.
class Field {
public:
    static Field rationals();

    /// GF(p) for a prime p, 2 <= p < 2^31.
    static Field gf(std::int64_t p);

    bool is_rational() const { return p_ == 0; }
    bool is_prime_field() const { return p_ != 0; }

    /// The prime p of GF(p); error for the rationals.
    std::int64_t prime() const;

    /// 0 for the rationals, p for GF(p).
    std::int64_t characteristic() const { return p_; }

    class Scalar zero() const;
    class Scalar one() const;
    class Scalar from_int(std::int64_t v) const;

    /// Parses the serialized scalar format: "p/q" or "p" over the rationals,
    /// a decimal integer (reduced mod p) over GF(p).
    class Scalar parse(const std::string& text) const;

    /// "Q" or "GF(p)".
    std::string str() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    explicit Field(std::int64_t p) : p_(p) {}

    std::int64_t p_ = 0;  // 0 encodes the rationals
};

/// An exact element of a Field. Rationals are kept in lowest terms with a
/// positive denominator; GF(p) residues lie in [0, p). All operations are
/// exact and throw on field mismatch or division by zero.
class Scalar {
public:
    /// Rational zero. Provided so containers are usable; real values are
    /// built through Field.
    Scalar() : field_(Field::rationals()) {}

    const Field& field() const { return field_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Serialized form: "p/q" (or "p" when q = 1) over Q, the residue over GF(p).
    std::string str() const;

    /// The rational value; error over GF(p).
    const mpq_class& rational() const;

    /// The residue in [0, p); error over Q.
    std::int64_t residue() const;

private:
    friend class Field;

    Field field_;
    mpq_class q_{0};        // value when rational
    std::int64_t r_ = 0;    // residue when prime field

    void check_same_field(const Scalar& o) const;
};

}  // namespace actorkit
