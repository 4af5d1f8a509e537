#pragma once

#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rslab/factorize.hpp"
#include "rslab/poly.hpp"

namespace rslab {

class ExtElem;

/// F_q[x]/(h(x)) for prime q and monic irreducible h of degree >= 2, with
/// distinguished generator alpha = x mod h(x). Cheap to copy (shared state).
class ExtField {
public:
    /// Validates the modulus; a reducible modulus is rejected with a Domain
    /// error naming a nontrivial factor.
    static ExtField make(const PrimeField& base, const Poly& modulus);
    static ExtField make(std::uint64_t p, std::string_view modulus_text);

    const PrimeField& base() const noexcept { return impl_->base; }
    const Poly& modulus() const noexcept { return impl_->modulus; }
    std::size_t degree() const noexcept { return impl_->h; }
    std::uint64_t q() const noexcept { return impl_->base.modulus(); }
    /// Multiplicative group order, q^h - 1.
    const BigInt& order() const noexcept { return impl_->order; }
    /// Number of field elements, q^h.
    const BigInt& size() const noexcept { return impl_->size; }
    /// Prime factorization of order(), computed on first use.
    const std::vector<PrimePower>& order_factorization() const;

    ExtElem zero() const;
    ExtElem one() const;
    ExtElem alpha() const;
    /// alpha - a for a in F_q.
    ExtElem linear(Residue a) const;
    /// Class of the polynomial modulo h(x).
    ExtElem element(const Poly& poly) const;
    ExtElem parse(std::string_view text) const;

    /// Elements are indexed by their residue coefficients read as base-q
    /// digits (constant term least significant). Requires q^h < 2^63.
    bool indexable() const noexcept { return impl_->indexable; }
    std::uint64_t element_count() const;
    std::uint64_t index_of(const ExtElem& e) const;
    std::uint64_t index_of(std::span<const Residue> coeffs) const;
    ExtElem from_index(std::uint64_t index) const;
    void coeffs_of_index(std::uint64_t index, std::span<Residue> out) const;

    /// out = a * b mod h; all spans have length degree(). out may alias.
    void mul_raw(std::span<const Residue> a, std::span<const Residue> b, std::span<Residue> out) const;

    bool operator==(const ExtField& o) const noexcept {
        return impl_ == o.impl_ || (impl_->base == o.impl_->base && impl_->modulus == o.impl_->modulus);
    }

private:
    struct Impl;
    explicit ExtField(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

    std::shared_ptr<const Impl> impl_;

    struct Impl {
        Impl(const PrimeField& b, const Poly& m);

        PrimeField base;
        Poly modulus;
        std::size_t h;
        BigInt order;
        BigInt size;
        bool indexable;
        mutable std::once_flag factored;
        mutable std::vector<PrimePower> factorization;
    };
};

/// Element of an ExtField: residue polynomial of degree < h.
class ExtElem {
public:
    ExtElem(ExtField field, std::vector<Residue> coeffs);

    const ExtField& field() const noexcept { return field_; }
    std::span<const Residue> coeffs() const noexcept { return c_; }
    Poly residue() const { return Poly(field_.base(), c_); }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    ExtElem operator+(const ExtElem& o) const;
    ExtElem operator-(const ExtElem& o) const;
    ExtElem operator*(const ExtElem& o) const;
    ExtElem operator/(const ExtElem& o) const { return *this * o.inverse(); }
    ExtElem& operator*=(const ExtElem& o);
    /// Throws Domain for zero.
    ExtElem inverse() const;
    /// Negative exponents invert first; 0^0 = 1.
    ExtElem pow(const BigInt& e) const;

    bool operator==(const ExtElem& o) const noexcept { return field_ == o.field_ && c_ == o.c_; }

private:
    void check_same(const ExtElem& o) const;

    ExtField field_;
    std::vector<Residue> c_;
};

std::string to_text(const ExtElem& e);

/// Multiplicative order of a nonzero element, from the factorization of N.
BigInt multiplicative_order(const ExtElem& e);
bool is_primitive(const ExtElem& e);
/// Smallest primitive element in index order.
ExtElem first_primitive(const ExtField& field);

}  // namespace rslab
