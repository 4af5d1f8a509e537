#pragma once

#include <climits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rslab/prime_field.hpp"

namespace rslab {

/// Dense univariate polynomial over F_p, coefficients in ascending degree.
/// Always normalized: no trailing zero coefficients, so the zero polynomial
/// has an empty coefficient vector.
class Poly {
public:
    /// degree() of the zero polynomial; compares below every real degree.
    static constexpr int kZeroDegree = INT_MIN;

    explicit Poly(const PrimeField& field) : field_(field) {}
    Poly(const PrimeField& field, std::vector<Residue> coeffs);

    static Poly constant(const PrimeField& field, Residue c);
    static Poly monomial(const PrimeField& field, Residue c, std::size_t degree);
    static Poly x(const PrimeField& field) { return monomial(field, 1, 1); }

    const PrimeField& field() const noexcept { return field_; }
    int degree() const noexcept { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }

    /// Coefficient of x^i; zero past the degree.
    Residue coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    Residue leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
    std::span<const Residue> coeffs() const noexcept { return c_; }

    Residue eval(Residue x) const noexcept;
    FieldElem eval(const FieldElem& x) const;

    Poly monic() const;
    Poly derivative() const;
    Poly scaled(Residue s) const;
    /// Multiply by x^shift.
    Poly shifted(std::size_t shift) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    bool operator==(const Poly& o) const noexcept { return field_ == o.field_ && c_ == o.c_; }

private:
    void check_same(const Poly& o) const;
    void normalize() noexcept;

    PrimeField field_;
    std::vector<Residue> c_;
};

/// Quotient and remainder; throws Domain when dividing by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
inline Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
inline Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
struct ExtGcd {
    Poly g, s, t;
};
ExtGcd ext_gcd(const Poly& a, const Poly& b);

/// base^e mod modulus.
Poly powmod(const Poly& base, const BigInt& e, const Poly& modulus);

/// prod (x - a) over the given roots.
Poly from_roots(const PrimeField& field, std::span<const Residue> roots);

/// Lagrange interpolation through points with pairwise distinct x; the result
/// has degree < points.size(). Throws InvalidArgument on a repeated x.
Poly interpolate(const PrimeField& field, std::span<const std::pair<Residue, Residue>> points);
Poly interpolate(std::span<const std::pair<FieldElem, FieldElem>> points);

/// Canonical order: lexicographic on ascending, zero-padded coefficient sequences.
bool lex_less(const Poly& a, const Poly& b) noexcept;

/// Text format: comma-separated decimal coefficients, ascending degree,
/// e.g. "1,0,2" is 1 + 2x^2. The zero polynomial is "0".
std::string to_text(const Poly& p);
Poly parse_poly(const PrimeField& field, std::string_view text);

/// Comma-separated residues ("0,1,2"); used for words and subsets. Values are
/// validated against the field but not reduced.
std::vector<Residue> parse_residues(const PrimeField& field, std::string_view text);
std::string residues_to_text(std::span<const Residue> values);

}  // namespace rslab
