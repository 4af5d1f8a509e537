#include "rslab/rs_code.hpp"

#include <algorithm>
#include <set>

#include "rslab/gf_matrix.hpp"
#include "rslab/parallel.hpp"
#include "rslab/poly_factor.hpp"

namespace rslab {

RSParams::RSParams(const PrimeField& field, std::vector<Residue> points, std::size_t k)
    : field_(field), points_(std::move(points)), k_(k) {
    std::set<Residue> seen;
    for (Residue a : points_) {
        if (a >= field_.modulus())
            throw Error(ErrorKind::InvalidArgument, "evaluation point " + std::to_string(a) + " outside F_" +
                                                        std::to_string(field_.modulus()));
        if (!seen.insert(a).second)
            throw Error(ErrorKind::InvalidArgument, "repeated evaluation point " + std::to_string(a));
    }
    if (k_ < 1 || k_ > points_.size())
        throw Error(ErrorKind::InvalidArgument, "code dimension k=" + std::to_string(k_) + " must satisfy 1 <= k <= n=" +
                                                    std::to_string(points_.size()));
}

RSParams RSParams::full(const PrimeField& field, std::size_t k) {
    std::vector<Residue> pts(field.modulus());
    for (Residue a = 0; a < pts.size(); ++a) pts[a] = a;
    return RSParams(field, std::move(pts), k);
}

void check_word(const RSParams& params, const Word& w) {
    if (w.size() != params.n())
        throw Error(ErrorKind::InvalidArgument,
                    "word has length " + std::to_string(w.size()) + ", code length is " + std::to_string(params.n()));
    for (Residue v : w)
        if (v >= params.field().modulus())
            throw Error(ErrorKind::InvalidArgument, "word symbol " + std::to_string(v) + " outside the field");
}

std::size_t hamming_distance(const Word& a, const Word& b) {
    if (a.size() != b.size()) throw Error(ErrorKind::InvalidArgument, "distance between words of unequal length");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

Word rs_encode(const RSParams& params, const Poly& message) {
    if (!(message.field() == params.field())) throw Error(ErrorKind::InvalidArgument, "message over a different field");
    if (message.degree() >= static_cast<int>(params.k()))
        throw Error(ErrorKind::InvalidArgument, "message degree " + std::to_string(message.degree()) +
                                                    " is not below k=" + std::to_string(params.k()));
    Word w(params.n());
    for (std::size_t i = 0; i < params.n(); ++i) w[i] = message.eval(params.points()[i]);
    return w;
}

std::optional<Poly> bw_decode(const RSParams& params, const Word& r) {
    check_word(params, r);
    const PrimeField& F = params.field();
    const std::size_t n = params.n(), k = params.k(), e = params.unique_radius();
    // unknowns: E_0..E_{e-1} (E monic of degree e), then Q_0..Q_{e+k-1}
    const std::size_t cols = e + (e + k);
    GfMatrix A(n, cols);
    std::vector<Residue> b(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Residue a = params.points()[i];
        Residue pw = 1;
        for (std::size_t j = 0; j < e + k; ++j) {
            if (j < e) A.at(i, j) = F.neg(F.mul(r[i], pw));
            A.at(i, e + j) = pw;
            if (j == e) b[i] = F.mul(r[i], pw);
            pw = F.mul(pw, a);
        }
    }
    auto sol = solve(F, std::move(A), std::move(b));
    if (!sol) return std::nullopt;
    std::vector<Residue> ec(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(e));
    ec.push_back(1);
    Poly E(F, std::move(ec));
    Poly Q(F, std::vector<Residue>(sol->begin() + static_cast<std::ptrdiff_t>(e), sol->end()));
    auto [m, rem] = divmod(Q, E);
    if (!rem.is_zero() || m.degree() >= static_cast<int>(k)) return std::nullopt;
    if (hamming_distance(rs_encode(params, m), r) > e) return std::nullopt;
    return m;
}

namespace {

void sort_unique(std::vector<Poly>& v) {
    std::sort(v.begin(), v.end(), lex_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Enumerates messages by their high part (coefficients 1..k-1); for each, the
// constant terms that agree at position j are r_j - high(a_j), so one
// histogram gives the agreement of all q completions at once.
std::vector<Poly> enumerate_messages(const RSParams& params, const Word& r, std::size_t agreement, unsigned threads) {
    const PrimeField& F = params.field();
    const std::uint64_t q = F.modulus();
    const std::size_t n = params.n(), k = params.k();
    std::uint64_t high_count = 1;
    for (std::size_t i = 1; i < k; ++i) high_count *= q;
    const std::size_t tasks = std::min<std::uint64_t>(high_count, std::max(1u, threads) * 8ull);
    std::vector<std::vector<Poly>> found(tasks);
    parallel_for(tasks, threads, [&](std::size_t task) {
        const std::uint64_t lo = high_count * task / tasks, hi = high_count * (task + 1) / tasks;
        std::vector<Residue> coeffs(k, 0);
        std::vector<std::uint32_t> hist(q, 0);
        std::vector<Residue> need(n);
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            std::uint64_t t = idx;
            for (std::size_t i = 1; i < k; ++i) {
                coeffs[i] = t % q;
                t /= q;
            }
            std::fill(hist.begin(), hist.end(), 0);
            for (std::size_t j = 0; j < n; ++j) {
                const Residue a = params.points()[j];
                Residue acc = 0;
                for (std::size_t i = k; i-- > 1;) acc = F.add(F.mul(acc, a), coeffs[i]);
                acc = F.mul(acc, a);
                need[j] = F.sub(r[j], acc);
                ++hist[need[j]];
            }
            for (Residue c0 = 0; c0 < q; ++c0) {
                if (hist[c0] >= agreement) {
                    coeffs[0] = c0;
                    found[task].emplace_back(F, coeffs);
                }
            }
        }
    });
    std::vector<Poly> out;
    for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
    sort_unique(out);
    return out;
}

std::vector<Poly> enumerate_subsets(const RSParams& params, const Word& r, std::size_t agreement, unsigned threads) {
    const PrimeField& F = params.field();
    const std::size_t n = params.n(), k = params.k();
    // partition by the first chosen position
    const std::size_t tasks = n - k + 1;
    std::vector<std::vector<Poly>> found(tasks);
    parallel_for(tasks, threads, [&](std::size_t first) {
        std::vector<std::size_t> idx(k);
        idx[0] = first;
        for (std::size_t i = 1; i < k; ++i) idx[i] = first + i;
        std::vector<std::pair<Residue, Residue>> pts(k);
        for (;;) {
            for (std::size_t i = 0; i < k; ++i) pts[i] = {params.points()[idx[i]], r[idx[i]]};
            Poly m = interpolate(F, pts);
            std::size_t agree = 0;
            for (std::size_t j = 0; j < n; ++j) agree += m.eval(params.points()[j]) == r[j];
            if (agree >= agreement) found[first].push_back(std::move(m));
            // advance idx[1..k-1] over subsets of (first, n)
            std::size_t i = k;
            while (i > 1 && idx[i - 1] == n - k + i - 1) --i;
            if (i == 1) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    });
    std::vector<Poly> out;
    for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
    sort_unique(out);
    return out;
}

}  // namespace

std::vector<Poly> list_decode_bruteforce(const RSParams& params, const Word& r, std::size_t radius,
                                         const BruteForceOptions& options) {
    check_word(params, r);
    const std::size_t n = params.n(), k = params.k();
    radius = std::min(radius, n);
    const std::size_t agreement = n - radius;
    const BigInt message_cost = power(params.field().modulus(), k);
    const BigInt subset_cost = binomial(n, k);
    const bool subsets_valid = agreement >= k;
    const bool use_subsets = subsets_valid && subset_cost < message_cost;
    const BigInt& cost = use_subsets ? subset_cost : message_cost;
    if (cost > to_big(options.guard))
        throw Error(ErrorKind::Guard, "brute-force list decoding would enumerate " + cost.get_str() +
                                          " candidates, above the guard of " + std::to_string(options.guard));
    return use_subsets ? enumerate_subsets(params, r, agreement, options.threads)
                       : enumerate_messages(params, r, agreement, options.threads);
}

std::size_t sudan_agreement_bound(std::size_t n, std::size_t k) {
    if (k <= 1) return 1;
    const std::size_t w = k - 1;
    for (std::size_t D = 0;; ++D) {
        std::size_t monomials = 0;
        for (std::size_t j = 0; j * w <= D; ++j) monomials += D - j * w + 1;
        if (monomials > n) return D + 1;
    }
}

namespace {

using Bivariate = std::vector<Poly>;  // coefficients in y, each a polynomial in x

void trim(Bivariate& Q) {
    while (!Q.empty() && Q.back().is_zero()) Q.pop_back();
}

// Q(x, x*y + gamma)
Bivariate substitute_shift(const Bivariate& Q, Residue gamma, const PrimeField& F) {
    Bivariate out(Q.size(), Poly(F));
    Bivariate power{Poly::constant(F, 1)};  // (x*y + gamma)^j
    for (std::size_t j = 0; j < Q.size(); ++j) {
        if (!Q[j].is_zero())
            for (std::size_t l = 0; l < power.size(); ++l) out[l] += Q[j] * power[l];
        Bivariate next(power.size() + 1, Poly(F));
        for (std::size_t l = 0; l < power.size(); ++l) {
            next[l] += power[l].scaled(gamma);
            next[l + 1] += power[l].shifted(1);
        }
        power = std::move(next);
    }
    trim(out);
    return out;
}

void roth_ruckenstein(Bivariate Q, std::size_t depth, std::size_t k, std::vector<Residue>& prefix,
                      std::vector<std::vector<Residue>>& out, const PrimeField& F) {
    trim(Q);
    if (Q.empty()) return;
    // divide out the largest power of x
    std::size_t val = SIZE_MAX;
    for (const auto& c : Q) {
        if (c.is_zero()) continue;
        std::size_t v = 0;
        while (c.coeff(v) == 0) ++v;
        val = std::min(val, v);
    }
    if (val > 0) {
        for (auto& c : Q) {
            if (c.is_zero()) continue;
            c = Poly(F, std::vector<Residue>(c.coeffs().begin() + static_cast<std::ptrdiff_t>(val), c.coeffs().end()));
        }
    }
    std::vector<Residue> at_zero(Q.size());
    for (std::size_t j = 0; j < Q.size(); ++j) at_zero[j] = Q[j].coeff(0);
    Poly M(F, std::move(at_zero));
    if (M.degree() <= 0) return;
    for (Residue gamma : roots(M)) {
        prefix[depth] = gamma;
        if (depth + 1 == k) {
            out.push_back(prefix);
        } else {
            roth_ruckenstein(substitute_shift(Q, gamma, F), depth + 1, k, prefix, out, F);
        }
    }
}

bool vanishes_on(const Bivariate& Q, const Poly& f) {
    const PrimeField& F = f.field();
    Poly acc(F);
    for (std::size_t j = Q.size(); j-- > 0;) acc = acc * f + Q[j];
    return acc.is_zero();
}

}  // namespace

std::vector<Poly> sudan_list_decode(const RSParams& params, const Word& r, std::size_t radius,
                                    const SudanOptions& options) {
    check_word(params, r);
    const PrimeField& F = params.field();
    const std::size_t n = params.n(), k = params.k();
    radius = std::min(radius, n);
    const std::size_t bound = sudan_agreement_bound(n, k);
    if (n - radius < bound && !options.allow_incomplete)
        throw Error(ErrorKind::InvalidArgument, "agreement " + std::to_string(n - radius) +
                                                    " is below the Sudan completeness bound " + std::to_string(bound) +
                                                    " for n=" + std::to_string(n) + ", k=" + std::to_string(k));
    // monomials x^i y^j with i + j(k-1) <= D, D = bound - 1; for k = 1 the
    // y-degree is capped at n instead
    const std::size_t D = bound - 1;
    std::vector<std::pair<std::size_t, std::size_t>> monomials;
    if (k == 1) {
        for (std::size_t j = 0; j <= n; ++j) monomials.emplace_back(0, j);
    } else {
        for (std::size_t j = 0; j * (k - 1) <= D; ++j)
            for (std::size_t i = 0; i + j * (k - 1) <= D; ++i) monomials.emplace_back(i, j);
    }
    GfMatrix A(n, monomials.size());
    for (std::size_t row = 0; row < n; ++row) {
        const Residue a = params.points()[row];
        for (std::size_t c = 0; c < monomials.size(); ++c)
            A.at(row, c) = F.mul(F.pow(a, monomials[c].first), F.pow(r[row], monomials[c].second));
    }
    auto sol = kernel_vector(F, std::move(A));
    ensure(sol.has_value(), "interpolation space exceeds the number of points");
    std::size_t ydeg = 0;
    for (auto& [i, j] : monomials) ydeg = std::max(ydeg, j);
    std::vector<std::vector<Residue>> coeffs(ydeg + 1);
    for (std::size_t c = 0; c < monomials.size(); ++c) {
        auto [i, j] = monomials[c];
        if (coeffs[j].size() <= i) coeffs[j].resize(i + 1, 0);
        coeffs[j][i] = (*sol)[c];
    }
    Bivariate Q;
    for (auto& c : coeffs) Q.emplace_back(F, std::move(c));

    std::vector<std::vector<Residue>> candidates;
    std::vector<Residue> prefix(k, 0);
    roth_ruckenstein(Q, 0, k, prefix, candidates, F);

    std::vector<Poly> out;
    for (auto& c : candidates) {
        Poly m(F, std::move(c));
        if (!vanishes_on(Q, m)) continue;
        if (hamming_distance(rs_encode(params, m), r) <= radius) out.push_back(std::move(m));
    }
    sort_unique(out);
    return out;
}

}  // namespace rslab
