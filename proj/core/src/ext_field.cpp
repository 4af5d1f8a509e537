#include "rslab/ext_field.hpp"

#include "rslab/poly_factor.hpp"

namespace rslab {

ExtField::Impl::Impl(const PrimeField& b, const Poly& m)
    : base(b), modulus(m), h(static_cast<std::size_t>(m.degree())) {
    size = power(b.modulus(), h);
    order = size - 1;
    indexable = mpz_sizeinbase(size.get_mpz_t(), 2) <= 63;
}

ExtField ExtField::make(const PrimeField& base, const Poly& modulus) {
    if (!(modulus.field() == base)) throw Error(ErrorKind::InvalidArgument, "modulus is over a different prime field");
    if (modulus.degree() < 2)
        throw Error(ErrorKind::InvalidArgument, "extension modulus must have degree >= 2, got '" + to_text(modulus) + "'");
    if (!modulus.is_monic())
        throw Error(ErrorKind::InvalidArgument, "extension modulus '" + to_text(modulus) + "' is not monic");
    if (auto factor = nontrivial_factor(modulus)) {
        throw Error(ErrorKind::Domain, "modulus '" + to_text(modulus) + "' is reducible over F_" +
                                           std::to_string(base.modulus()) + ": divisible by '" + to_text(*factor) + "'");
    }
    return ExtField(std::make_shared<const Impl>(base, modulus));
}

ExtField ExtField::make(std::uint64_t p, std::string_view modulus_text) {
    PrimeField base(p);
    return make(base, parse_poly(base, modulus_text));
}

const std::vector<PrimePower>& ExtField::order_factorization() const {
    std::call_once(impl_->factored, [this] { impl_->factorization = factorize(impl_->order); });
    return impl_->factorization;
}

ExtElem ExtField::zero() const { return ExtElem(*this, std::vector<Residue>(degree(), 0)); }

ExtElem ExtField::one() const {
    std::vector<Residue> c(degree(), 0);
    c[0] = 1;
    return ExtElem(*this, std::move(c));
}

ExtElem ExtField::alpha() const {
    std::vector<Residue> c(degree(), 0);
    c[1] = 1;
    return ExtElem(*this, std::move(c));
}

ExtElem ExtField::linear(Residue a) const {
    if (a >= q()) throw Error(ErrorKind::InvalidArgument, std::to_string(a) + " is not an element of F_" + std::to_string(q()));
    std::vector<Residue> c(degree(), 0);
    c[0] = base().neg(a);
    c[1] = 1;
    return ExtElem(*this, std::move(c));
}

ExtElem ExtField::element(const Poly& poly) const {
    if (!(poly.field() == base())) throw Error(ErrorKind::InvalidArgument, "polynomial is over a different prime field");
    Poly r = poly % modulus();
    std::vector<Residue> c(degree(), 0);
    for (std::size_t i = 0; i < r.coeffs().size(); ++i) c[i] = r.coeffs()[i];
    return ExtElem(*this, std::move(c));
}

ExtElem ExtField::parse(std::string_view text) const { return element(parse_poly(base(), text)); }

std::uint64_t ExtField::element_count() const {
    if (!indexable()) throw Error(ErrorKind::Guard, "field of size " + size().get_str() + " is too large to index");
    return to_u64(size());
}

std::uint64_t ExtField::index_of(std::span<const Residue> coeffs) const {
    std::uint64_t idx = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) idx = idx * q() + coeffs[i];
    return idx;
}

std::uint64_t ExtField::index_of(const ExtElem& e) const {
    element_count();
    return index_of(e.coeffs());
}

void ExtField::coeffs_of_index(std::uint64_t index, std::span<Residue> out) const {
    for (std::size_t i = 0; i < degree(); ++i) {
        out[i] = index % q();
        index /= q();
    }
}

ExtElem ExtField::from_index(std::uint64_t index) const {
    if (index >= element_count()) throw Error(ErrorKind::InvalidArgument, "element index out of range");
    std::vector<Residue> c(degree());
    coeffs_of_index(index, c);
    return ExtElem(*this, std::move(c));
}

void ExtField::mul_raw(std::span<const Residue> a, std::span<const Residue> b, std::span<Residue> out) const {
    const PrimeField& F = base();
    const std::size_t h = degree();
    const auto m = modulus().coeffs();
    // h <= a few thousand and p < 2^32, so one reduction per product suffices
    std::vector<Residue> t(2 * h - 1, 0);
    for (std::size_t i = 0; i < h; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < h; ++j) t[i + j] = F.add(t[i + j], F.mul(a[i], b[j]));
    }
    for (std::size_t i = 2 * h - 1; i-- > h;) {
        const Residue c = t[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j < h; ++j) t[i - h + j] = F.sub(t[i - h + j], F.mul(c, m[j]));
    }
    std::copy(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(h), out.begin());
}

ExtElem::ExtElem(ExtField field, std::vector<Residue> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    if (c_.size() != field_.degree())
        throw Error(ErrorKind::InvalidArgument, "extension element needs exactly " + std::to_string(field_.degree()) +
                                                    " residue coefficients");
    for (Residue v : c_)
        if (v >= field_.q()) throw Error(ErrorKind::InvalidArgument, "coefficient outside F_" + std::to_string(field_.q()));
}

void ExtElem::check_same(const ExtElem& o) const {
    if (!(field_ == o.field_)) throw Error(ErrorKind::InvalidArgument, "mixed extension fields");
}

bool ExtElem::is_zero() const noexcept {
    for (Residue v : c_)
        if (v != 0) return false;
    return true;
}

bool ExtElem::is_one() const noexcept {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != (i == 0 ? 1u : 0u)) return false;
    return true;
}

ExtElem ExtElem::operator+(const ExtElem& o) const {
    check_same(o);
    std::vector<Residue> c(c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = field_.base().add(c_[i], o.c_[i]);
    return ExtElem(field_, std::move(c));
}

ExtElem ExtElem::operator-(const ExtElem& o) const {
    check_same(o);
    std::vector<Residue> c(c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = field_.base().sub(c_[i], o.c_[i]);
    return ExtElem(field_, std::move(c));
}

ExtElem ExtElem::operator*(const ExtElem& o) const {
    ExtElem r = *this;
    r *= o;
    return r;
}

ExtElem& ExtElem::operator*=(const ExtElem& o) {
    check_same(o);
    field_.mul_raw(c_, o.c_, c_);
    return *this;
}

ExtElem ExtElem::inverse() const {
    if (is_zero()) throw Error(ErrorKind::Domain, "zero has no inverse in the extension field");
    ExtGcd eg = ext_gcd(residue(), field_.modulus());
    ensure(eg.g.degree() == 0, "residue coprime to irreducible modulus");
    return field_.element(eg.s);
}

ExtElem ExtElem::pow(const BigInt& e) const {
    if (sgn(e) < 0) return inverse().pow(BigInt(-e));
    ExtElem result = field_.one();
    if (sgn(e) == 0) return result;
    ExtElem base = *this;
    BigInt reduced = e;
    // a^N = 1 for nonzero a; keeps exponent loops short for huge e
    if (!is_zero() && e > field_.order()) reduced = mod_floor(e, field_.order());
    const std::size_t bits = sgn(reduced) == 0 ? 0 : mpz_sizeinbase(reduced.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result *= result;
        if (mpz_tstbit(reduced.get_mpz_t(), i)) result *= base;
    }
    return result;
}

std::string to_text(const ExtElem& e) { return to_text(e.residue()); }

BigInt multiplicative_order(const ExtElem& e) {
    if (e.is_zero()) throw Error(ErrorKind::Domain, "zero has no multiplicative order");
    BigInt order = e.field().order();
    for (const auto& pp : e.field().order_factorization()) {
        for (unsigned i = 0; i < pp.exponent; ++i) {
            BigInt candidate = order / pp.prime;
            if (!e.pow(candidate).is_one()) break;
            order = candidate;
        }
    }
    return order;
}

bool is_primitive(const ExtElem& e) {
    if (e.is_zero()) return false;
    const BigInt& N = e.field().order();
    for (const auto& pp : e.field().order_factorization()) {
        if (e.pow(BigInt(N / pp.prime)).is_one()) return false;
    }
    return true;
}

ExtElem first_primitive(const ExtField& field) {
    const std::uint64_t count = field.element_count();
    for (std::uint64_t i = 1; i < count; ++i) {
        ExtElem e = field.from_index(i);
        if (is_primitive(e)) return e;
    }
    throw Error(ErrorKind::Internal, "no primitive element found");
}

}  // namespace rslab
