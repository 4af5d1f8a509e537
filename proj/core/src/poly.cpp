#include "rslab/poly.hpp"

#include <algorithm>
#include <set>

namespace rslab {

Poly::Poly(const PrimeField& field, std::vector<Residue> coeffs) : field_(field), c_(std::move(coeffs)) {
    for (auto& c : c_) c %= field_.modulus();
    normalize();
}

Poly Poly::constant(const PrimeField& field, Residue c) { return Poly(field, {c}); }

Poly Poly::monomial(const PrimeField& field, Residue c, std::size_t degree) {
    std::vector<Residue> v(degree + 1, 0);
    v[degree] = c;
    return Poly(field, std::move(v));
}

void Poly::normalize() noexcept {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::check_same(const Poly& o) const {
    if (!(field_ == o.field_))
        throw Error(ErrorKind::InvalidArgument, "mixed fields: F_" + std::to_string(field_.modulus()) + " and F_" +
                                                    std::to_string(o.field_.modulus()));
}

Residue Poly::eval(Residue x) const noexcept {
    Residue acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
    return acc;
}

FieldElem Poly::eval(const FieldElem& x) const {
    if (!(x.field() == field_)) throw Error(ErrorKind::InvalidArgument, "mixed fields in evaluation");
    return FieldElem(field_, static_cast<std::int64_t>(eval(x.value())));
}

Poly Poly::monic() const {
    if (is_zero()) throw Error(ErrorKind::Domain, "zero polynomial has no monic associate");
    return scaled(field_.inv(leading()));
}

Poly Poly::derivative() const {
    std::vector<Residue> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(field_.mul(c_[i], i % field_.modulus()));
    return Poly(field_, std::move(d));
}

Poly Poly::scaled(Residue s) const {
    std::vector<Residue> v(c_);
    for (auto& c : v) c = field_.mul(c, s);
    return Poly(field_, std::move(v));
}

Poly Poly::shifted(std::size_t shift) const {
    if (is_zero()) return *this;
    std::vector<Residue> v(shift, 0);
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(field_, std::move(v));
}

Poly Poly::operator+(const Poly& o) const {
    check_same(o);
    std::vector<Residue> v(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_.add(coeff(i), o.coeff(i));
    return Poly(field_, std::move(v));
}

Poly Poly::operator-(const Poly& o) const {
    check_same(o);
    std::vector<Residue> v(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_.sub(coeff(i), o.coeff(i));
    return Poly(field_, std::move(v));
}

Poly Poly::operator-() const { return Poly(field_) - *this; }

Poly Poly::operator*(const Poly& o) const {
    check_same(o);
    if (is_zero() || o.is_zero()) return Poly(field_);
    const std::uint64_t p = field_.modulus();
    std::vector<Residue> v(c_.size() + o.c_.size() - 1, 0);
    // accumulate unreduced products while they cannot overflow
    const std::uint64_t headroom = ~std::uint64_t{0} / ((p - 1) * (p - 1) + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            v[i + j] += c_[i] * o.c_[j];
            if (headroom < 64) v[i + j] %= p;
        }
        if (headroom >= 64 && (i % 32) == 31)
            for (auto& x : v) x %= p;
    }
    for (auto& x : v) x %= p;
    return Poly(field_, std::move(v));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error(ErrorKind::Domain, "polynomial division by zero");
    if (!(a.field() == b.field())) throw Error(ErrorKind::InvalidArgument, "mixed fields in polynomial division");
    const PrimeField& F = a.field();
    if (a.degree() < b.degree()) return {Poly(F), a};
    std::vector<Residue> r(a.coeffs().begin(), a.coeffs().end());
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<Residue> q(r.size() - db, 0);
    const Residue lead_inv = F.inv(b.leading());
    auto bc = b.coeffs();
    for (std::size_t i = r.size(); i-- > db;) {
        Residue coef = F.mul(r[i], lead_inv);
        if (coef == 0) continue;
        q[i - db] = coef;
        for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = F.sub(r[i - db + j], F.mul(coef, bc[j]));
    }
    r.resize(db);
    return {Poly(F, std::move(q)), Poly(F, std::move(r))};
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.is_zero() ? x : x.monic();
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
    const PrimeField& F = a.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(F, 1), s1(F);
    Poly t0(F), t1 = Poly::constant(F, 1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Residue inv = F.inv(r0.leading());
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

Poly powmod(const Poly& base, const BigInt& e, const Poly& modulus) {
    if (sgn(e) < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent in powmod");
    const PrimeField& F = base.field();
    Poly result = Poly::constant(F, 1) % modulus;
    Poly b = base % modulus;
    const std::size_t bits = sgn(e) == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = (result * result) % modulus;
        if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % modulus;
    }
    return result;
}

Poly from_roots(const PrimeField& field, std::span<const Residue> roots) {
    std::vector<Residue> c{1};
    for (Residue a : roots) {
        // multiply by (x - a)
        Residue na = field.neg(a % field.modulus());
        c.push_back(0);
        for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = field.add(c[i - 1], field.mul(c[i], na));
        c[0] = field.mul(c[0], na);
    }
    return Poly(field, std::move(c));
}

Poly interpolate(const PrimeField& field, std::span<const std::pair<Residue, Residue>> points) {
    std::set<Residue> xs;
    for (const auto& [x, y] : points) {
        if (x >= field.modulus() || y >= field.modulus())
            throw Error(ErrorKind::InvalidArgument, "interpolation point outside F_" + std::to_string(field.modulus()));
        if (!xs.insert(x).second)
            throw Error(ErrorKind::InvalidArgument, "repeated x-coordinate " + std::to_string(x) + " in interpolation");
    }
    // Newton divided differences
    const std::size_t n = points.size();
    std::vector<Residue> dd(n);
    for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            Residue num = field.sub(dd[i], dd[i - 1]);
            Residue den = field.sub(points[i].first, points[i - level].first);
            dd[i] = field.div(num, den);
        }
    }
    Poly result(field);
    for (std::size_t i = n; i-- > 0;) {
        result = result * Poly(field, {field.neg(points[i].first), 1}) + Poly::constant(field, dd[i]);
    }
    return result;
}

Poly interpolate(std::span<const std::pair<FieldElem, FieldElem>> points) {
    if (points.empty()) throw Error(ErrorKind::InvalidArgument, "interpolation needs at least one point");
    const PrimeField& F = points.front().first.field();
    std::vector<std::pair<Residue, Residue>> raw;
    raw.reserve(points.size());
    for (const auto& [x, y] : points) {
        if (!(x.field() == F) || !(y.field() == F))
            throw Error(ErrorKind::InvalidArgument, "mixed fields in interpolation");
        raw.emplace_back(x.value(), y.value());
    }
    return interpolate(F, raw);
}

bool lex_less(const Poly& a, const Poly& b) noexcept {
    const std::size_t len = std::max(a.coeffs().size(), b.coeffs().size());
    for (std::size_t i = 0; i < len; ++i) {
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    }
    return false;
}

std::string to_text(const Poly& p) {
    if (p.is_zero()) return "0";
    return residues_to_text(p.coeffs());
}

std::vector<Residue> parse_residues(const PrimeField& field, std::string_view text) {
    std::vector<Residue> out;
    std::size_t pos = 0;
    if (text.find_first_not_of(" \t") == std::string_view::npos) return out;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        BigInt v = parse_bigint(token);
        if (sgn(v) < 0 || v >= to_big(field.modulus()))
            throw Error(ErrorKind::Usage,
                        "value " + v.get_str() + " is not a residue in [0, " + std::to_string(field.modulus()) + ")");
        out.push_back(to_u64(v));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string residues_to_text(std::span<const Residue> values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

Poly parse_poly(const PrimeField& field, std::string_view text) { return Poly(field, parse_residues(field, text)); }

}  // namespace rslab
