#include "rslab/products.hpp"

#include <algorithm>

#include "rslab/error.hpp"
#include "rslab/prime_field.hpp"

namespace rslab {

namespace {

std::uint64_t checked_size(const ExtField& field, std::uint64_t guard, const char* what) {
    if (!field.indexable() || field.size() > to_big(guard))
        throw Error(ErrorKind::Guard, std::string(what) + " needs q^h = " + to_string(field.size()) +
                                          " within the guard " + std::to_string(guard));
    return field.element_count();
}

// Logarithms to base gamma of every nonzero element, by walking the powers.
struct LogIndex {
    ExtElem gamma;
    std::vector<std::uint64_t> log_of;   // by element index; unused at 0
    std::vector<std::uint64_t> index_of; // by log
};

LogIndex build_log_index(const ExtField& field) {
    const std::uint64_t size = field.element_count();
    const std::uint64_t N = size - 1;
    LogIndex L{first_primitive(field), std::vector<std::uint64_t>(size, 0), std::vector<std::uint64_t>(N, 0)};
    const std::size_t h = field.degree();
    std::vector<Residue> cur(h, 0), g(L.gamma.coeffs().begin(), L.gamma.coeffs().end());
    cur[0] = 1;
    for (std::uint64_t e = 0; e < N; ++e) {
        const std::uint64_t idx = field.index_of(cur);
        L.log_of[idx] = e;
        L.index_of[e] = idx;
        field.mul_raw(cur, g, cur);
    }
    return L;
}

}  // namespace

u128 NkCounts::min() const { return counts.empty() ? 0 : *std::min_element(counts.begin(), counts.end()); }

u128 NkCounts::max() const { return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end()); }

BigInt NkCounts::total() const {
    BigInt s = 0;
    for (u128 c : counts) s += u128_to_big(c);
    return s;
}

CountTable NkCounts::table() const {
    CountTable t{field, {}, true, 0};
    for (std::size_t e = 0; e < counts.size(); ++e) t.counts[element_index[e]] = u128_to_big(counts[e]);
    return t;
}

NkCounts nk_count_dense(const ExtField& field, std::size_t k, const NkOptions& options) {
    if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be at least 1");
    const std::uint64_t q = field.q();
    if (!field.indexable()) throw Error(ErrorKind::Guard, "field too large to tabulate");
    const BigInt steps = to_big(q) * to_big(k) * field.size();
    if (steps > to_big(options.guard))
        throw Error(ErrorKind::Guard, "N_k table needs q*k*q^h = " + to_string(steps) + " updates, above the guard " +
                                          std::to_string(options.guard));
    if (binomial(q, k) >= power(2, 127)) throw Error(ErrorKind::Guard, "C(q,k) exceeds the 127-bit counter range");

    LogIndex L = build_log_index(field);
    const std::uint64_t N = field.element_count() - 1;
    std::vector<std::vector<u128>> cnt(k + 1, std::vector<u128>(N, 0));
    cnt[0][0] = 1;
    for (Residue a = 0; a < q; ++a) {
        const std::uint64_t s = L.log_of[field.index_of(field.linear(a))];
        const std::size_t top = std::min<std::size_t>(k, a + 1);
        for (std::size_t j = top; j >= 1; --j) {
            const auto& src = cnt[j - 1];
            auto& dst = cnt[j];
            // dst[(e + s) mod N] += src[e]
            for (std::uint64_t e = 0; e + s < N; ++e) dst[e + s] += src[e];
            for (std::uint64_t e = N - s; e < N; ++e) dst[e + s - N] += src[e];
        }
    }
    NkCounts out{field, k, L.gamma, std::move(L.index_of), std::move(cnt[k])};
    ensure(out.total() == binomial(q, k), "sum of N_k equals C(q, k)");
    return out;
}

CountTable nk_count_all(const ExtField& field, std::size_t k, const NkOptions& options) {
    return nk_count_dense(field, k, options).table();
}

WeilReport weil_lower_bound(std::uint64_t q, std::uint64_t h, std::uint64_t k) {
    if (!is_small_prime(q)) throw Error(ErrorKind::InvalidArgument, "q must be prime");
    if (h < 1 || k < 1) throw Error(ErrorKind::InvalidArgument, "need h >= 1 and k >= 1");
    WeilReport r;
    r.q = q;
    r.h = h;
    r.k = k;
    const BigInt ck2 = binomial(k, 2);
    const BigInt Q = to_big(q);
    Rational main(power(Q, k) - ck2 * power(Q, k - 1), power(Q, h) - 1);
    main.canonicalize();
    BigInt root;
    if (k % 2 == 0) {
        root = power(Q, k / 2);
    } else {
        r.exact_root = false;
        const BigInt qk = power(Q, k);
        mpz_sqrt(root.get_mpz_t(), qk.get_mpz_t());
        if (root * root < qk) root += 1;
    }
    const BigInt error = (1 + ck2) * power(to_big(h - 1), k) * root;
    r.lower_bound = main - Rational(error);
    r.lower_bound.canonicalize();

    r.cond_a = Q > to_big(k) * to_big(k - 1) + 1;
    // q^(k/2-1-h) > (h-1)^k, squared: q^(k-2-2h) > (h-1)^(2k)
    const BigInt lhs = power(to_big(h - 1), 2 * k);
    const std::int64_t ex = static_cast<std::int64_t>(k) - 2 - 2 * static_cast<std::int64_t>(h);
    if (ex >= 0)
        r.cond_b = power(Q, static_cast<std::uint64_t>(ex)) > lhs;
    else
        r.cond_b = 1 > lhs * power(Q, static_cast<std::uint64_t>(-ex));
    r.sufficient = Q >= power(to_big(h + 2), 4) && k == 4 * h + 4;
    if (r.sufficient) ensure(r.cond_a && r.cond_b, "sufficient condition implies both Weil conditions");
    return r;
}

Theorem3Report theorem3_verify(const ExtField& field, const NkOptions& options) {
    Theorem3Report r;
    r.k = 4 * field.degree() + 4;
    NkCounts counts = nk_count_dense(field, r.k, options);
    r.min_subsets = counts.min();
    r.max_subsets = counts.max();
    r.min_ordered = factorial(r.k) * u128_to_big(r.min_subsets);
    r.total = counts.total();
    r.weil = weil_lower_bound(field.q(), field.degree(), r.k);
    r.min_positive = r.min_subsets >= 1;
    r.bound_holds = Rational(r.min_ordered) >= r.weil.lower_bound;
    return r;
}

GroupOrderResult group_order(const ExtField& field, const std::vector<Residue>& S, GroupOrderMethod method,
                             const GroupOrderOptions& options) {
    const std::uint64_t size = checked_size(field, options.guard, "group order");
    for (Residue a : S)
        if (a >= field.q()) throw Error(ErrorKind::InvalidArgument, "subset element out of range");
    if (method == GroupOrderMethod::Closure) {
        const std::size_t h = field.degree();
        std::vector<std::vector<Residue>> gens;
        for (Residue a : S) {
            const ExtElem e = field.linear(a);
            gens.emplace_back(e.coeffs().begin(), e.coeffs().end());
        }
        std::vector<char> seen(size, 0);
        std::vector<std::uint64_t> frontier{field.index_of(field.one())};
        seen[frontier[0]] = 1;
        std::uint64_t count = 1;
        std::vector<Residue> cur(h), next(h);
        while (!frontier.empty()) {
            const std::uint64_t idx = frontier.back();
            frontier.pop_back();
            field.coeffs_of_index(idx, cur);
            for (const auto& g : gens) {
                field.mul_raw(cur, g, next);
                const std::uint64_t j = field.index_of(next);
                if (!seen[j]) {
                    seen[j] = 1;
                    ++count;
                    frontier.push_back(j);
                }
            }
        }
        return {to_big(count), method};
    }
    LogIndex L = build_log_index(field);
    BigInt g = field.order();
    for (Residue a : S) {
        const BigInt e = to_big(L.log_of[field.index_of(field.linear(a))]);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
    }
    return {field.order() / g, method};
}

std::string to_string(GroupOrderMethod m) { return m == GroupOrderMethod::Closure ? "closure" : "dlog-gcd"; }

}  // namespace rslab
