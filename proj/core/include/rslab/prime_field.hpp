#pragma once

#include <cstdint>
#include <string>

#include "rslab/bigint.hpp"
#include "rslab/error.hpp"

namespace rslab {

/// A residue in [0, p). Raw residues are used in inner loops; FieldElem is
/// the checked value type for the public surface.
using Residue = std::uint64_t;

bool is_small_prime(std::uint64_t n);

/// The prime field F_p for p < 2^32, so that products of two residues fit
/// in 64 bits.
class PrimeField {
public:
    explicit PrimeField(std::uint64_t p);

    std::uint64_t modulus() const noexcept { return p_; }
    std::uint64_t size() const noexcept { return p_; }

    Residue reduce(std::int64_t v) const noexcept {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        return static_cast<Residue>(r < 0 ? r + static_cast<std::int64_t>(p_) : r);
    }
    Residue add(Residue a, Residue b) const noexcept {
        Residue s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Residue mul(Residue a, Residue b) const noexcept { return (a * b) % p_; }

    /// Multiplicative inverse; throws Domain for zero.
    Residue inv(Residue a) const;
    Residue div(Residue a, Residue b) const { return mul(a, inv(b)); }
    Residue pow(Residue a, std::uint64_t e) const noexcept;
    Residue pow(Residue a, const BigInt& e) const;

    bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }

private:
    std::uint64_t p_;
};

/// Element of F_p carrying its field.
class FieldElem {
public:
    FieldElem(const PrimeField& field, std::int64_t value) : field_(field), value_(field.reduce(value)) {}

    const PrimeField& field() const noexcept { return field_; }
    Residue value() const noexcept { return value_; }

    FieldElem operator+(const FieldElem& o) const { return {Raw{}, field_, field_.add(value_, checked(o))}; }
    FieldElem operator-(const FieldElem& o) const { return {Raw{}, field_, field_.sub(value_, checked(o))}; }
    FieldElem operator*(const FieldElem& o) const { return {Raw{}, field_, field_.mul(value_, checked(o))}; }
    FieldElem operator/(const FieldElem& o) const { return {Raw{}, field_, field_.div(value_, checked(o))}; }
    FieldElem operator-() const { return {Raw{}, field_, field_.neg(value_)}; }
    FieldElem pow(const BigInt& e) const { return {Raw{}, field_, field_.pow(value_, e)}; }
    FieldElem inverse() const { return {Raw{}, field_, field_.inv(value_)}; }

    bool operator==(const FieldElem& o) const noexcept { return field_ == o.field_ && value_ == o.value_; }

private:
    struct Raw {};
    FieldElem(Raw, const PrimeField& field, Residue v) : field_(field), value_(v) {}

    Residue checked(const FieldElem& o) const {
        if (!(field_ == o.field_))
            throw Error(ErrorKind::InvalidArgument, "mixed fields: F_" + std::to_string(field_.modulus()) +
                                                        " and F_" + std::to_string(o.field_.modulus()));
        return o.value_;
    }

    PrimeField field_;
    Residue value_;
};

}  // namespace rslab
