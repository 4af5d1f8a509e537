#include "rslab/radius.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rslab/error.hpp"
#include "rslab/parallel.hpp"

namespace rslab {

namespace {

void check_order(std::uint64_t n, std::uint64_t k, std::uint64_t g, std::uint64_t q) {
    if (!(k <= g && g <= n)) throw Error(ErrorKind::InvalidArgument, "need k <= g <= n");
    if (q < 2) throw Error(ErrorKind::InvalidArgument, "need q >= 2");
}

double log2_binomial(std::uint64_t n, std::uint64_t g) {
    const long double ln2 = 0.693147180559945309417232121458176568L;
    long double v = std::lgamma(static_cast<long double>(n) + 1) - std::lgamma(static_cast<long double>(g) + 1) -
                    std::lgamma(static_cast<long double>(n - g) + 1);
    return static_cast<double>(v / ln2);
}

}  // namespace

double jh_log2(std::uint64_t n, std::uint64_t k, std::uint64_t g, std::uint64_t q) {
    check_order(n, k, g, q);
    return log2_binomial(n, g) - static_cast<double>(g - k) * std::log2(static_cast<double>(q));
}

JhCmp jh_exact_cmp(std::uint64_t n, std::uint64_t k, std::uint64_t g, std::uint64_t q) {
    check_order(n, k, g, q);
    const int c = cmp(binomial(n, g), power(q, g - k));
    return c < 0 ? JhCmp::LT1 : (c == 0 ? JhCmp::EQ1 : JhCmp::GT1);
}

GhatResult ghat(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
    if (!(1 <= k && k < n)) throw Error(ErrorKind::InvalidArgument, "ghat needs 1 <= k < n");
    if (!(q >= n && n >= 2)) throw Error(ErrorKind::InvalidArgument, "ghat needs q >= n >= 2");
    for (std::uint64_t g = k + 1; g <= n; ++g) {
        if (jh_exact_cmp(n, k, g, q) == JhCmp::LT1) {
            GhatResult r{n, k, q, g, Rational(binomial(n, g), power(q, g - k)),
                         Rational(binomial(n, g - 1), power(q, g - 1 - k))};
            r.ratio_at_ghat.canonicalize();
            r.ratio_below.canonicalize();
            ensure(r.ratio_at_ghat < 1 && r.ratio_below >= 1, "ghat boundary ratios");
            return r;
        }
    }
    // g = n gives 1 < q^(n-k)
    throw Error(ErrorKind::Internal, "no ghat found although C(n,n) < q^(n-k)");
}

Lemma1Report lemma1_search(const Lemma1Options& options) {
    if (options.h_max < 1 || options.n_max < 1) throw Error(ErrorKind::InvalidArgument, "search bounds must be positive");
    const std::uint64_t n_max = options.n_max;
    const std::int64_t c = options.c;
    const bool strict = c == 0;
    // ln k! and ln k for every k in range
    std::vector<long double> lnfact(n_max + 1, 0.0L), lnv(n_max + 1, 0.0L);
    for (std::uint64_t i = 1; i <= n_max; ++i) {
        lnfact[i] = std::lgamma(static_cast<long double>(i) + 1);
        lnv[i] = std::log(static_cast<long double>(i));
    }
    // worst-case float error is ~1e-13 here; anything within the margin is
    // settled with exact integers
    const long double margin = 1e-7L;
    const long double ln2 = 0.693147180559945309417232121458176568L;

    const std::size_t tasks = options.h_max > 1 ? options.h_max - 1 : 0;
    std::vector<Lemma1Report> partial(tasks);
    parallel_for(tasks, options.threads, [&](std::size_t task) {
        const std::uint64_t h = task + 1;
        Lemma1Report& rep = partial[task];
        rep.closest_log2_margin = -std::numeric_limits<double>::infinity();
        rep.boundary_log2_margin = -std::numeric_limits<double>::infinity();
        const long double expo = static_cast<long double>(static_cast<std::int64_t>(h) - c);
        for (std::uint64_t g = h + 1; g + 1 < n_max; ++g) {
            // g^2 > n (g - h)  <=>  n <= (g^2 - 1) / (g - h)
            const std::uint64_t n_hi_ineq = (g * g - 1) / (g - h);
            const std::uint64_t n_hi = std::min(n_hi_ineq, n_max - 1);
            if (n_hi_ineq > n_max - 1) ++rep.cap_truncated;
            for (std::uint64_t n = g + 1; n <= n_hi; ++n) {
                ++rep.triples_scanned;
                const long double diff = lnfact[n] - lnfact[g] - lnfact[n - g] - expo * lnv[n];
                double log2_margin = static_cast<double>(diff / ln2);
                bool hit;
                if (diff > margin) {
                    hit = true;
                } else if (diff < -margin) {
                    hit = false;
                } else {
                    ++rep.exact_checks;
                    BigInt lhs = binomial(n, g), rhs = 1;
                    if (expo >= 0)
                        rhs = power(n, static_cast<std::uint64_t>(static_cast<std::int64_t>(h) - c));
                    else
                        lhs *= power(n, static_cast<std::uint64_t>(c - static_cast<std::int64_t>(h)));
                    const int sign = cmp(lhs, rhs);
                    hit = strict ? sign > 0 : sign >= 0;
                    if (sign == 0) log2_margin = 0;
                }
                if (log2_margin > rep.closest_log2_margin) {
                    rep.closest_log2_margin = log2_margin;
                    rep.closest = {n, g, h};
                }
                if (n == n_max - 1) rep.boundary_log2_margin = std::max(rep.boundary_log2_margin, log2_margin);
                if (hit) rep.solutions.push_back({n, g, h});
            }
        }
    });

    Lemma1Report out;
    out.closest_log2_margin = -std::numeric_limits<double>::infinity();
    out.boundary_log2_margin = -std::numeric_limits<double>::infinity();
    for (auto& rep : partial) {
        out.solutions.insert(out.solutions.end(), rep.solutions.begin(), rep.solutions.end());
        out.triples_scanned += rep.triples_scanned;
        out.exact_checks += rep.exact_checks;
        out.cap_truncated += rep.cap_truncated;
        if (rep.closest_log2_margin > out.closest_log2_margin) {
            out.closest_log2_margin = rep.closest_log2_margin;
            out.closest = rep.closest;
        }
        out.boundary_log2_margin = std::max(out.boundary_log2_margin, rep.boundary_log2_margin);
    }
    std::sort(out.solutions.begin(), out.solutions.end());
    return out;
}

double lemma1_part2_probe(std::uint64_t n, std::uint64_t k, double c1) {
    if (!(c1 > 0 && c1 < 0.5)) throw Error(ErrorKind::InvalidArgument, "c1 must lie strictly between 0 and 1/2");
    if (k >= n) throw Error(ErrorKind::InvalidArgument, "need k < n");
    const auto g = static_cast<std::uint64_t>(std::llround(static_cast<double>(k) + c1 * static_cast<double>(n - k)));
    if (!(k < g && g < n))
        throw Error(ErrorKind::InvalidArgument, "g = round(k + c1 (n-k)) = " + std::to_string(g) + " is not in (k, n)");
    return (log2_big(binomial(n, g)) - log2_big(power(n, g - k))) / static_cast<double>(n);
}

}  // namespace rslab
