#include <functional>
#include <set>

#include "rslab/cli.hpp"
#include "rslab/dlog.hpp"
#include "rslab/error.hpp"
#include "rslab/modular.hpp"
#include "rslab/poly_factor.hpp"
#include "rslab/products.hpp"
#include "rslab/radius.hpp"
#include "rslab/reduction.hpp"
#include "rslab/rng.hpp"
#include "rslab/rs_code.hpp"

namespace rslab::cli {

namespace {

struct Property {
    std::string name;
    std::uint64_t cases = 0;
    std::string failure;

    void check(bool ok, const std::string& what) {
        ++cases;
        if (!ok && failure.empty()) failure = what;
    }
};

std::vector<Residue> iota(std::size_t n) {
    std::vector<Residue> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

void each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<Residue>&)>& f) {
    std::vector<Residue> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (cur.size() == k) return f(cur);
        for (std::size_t a = start; a + (k - cur.size()) <= n; ++a) {
            cur.push_back(a);
            rec(a + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

void field_axioms(Property& p, std::uint64_t) {
    for (auto [q, hp] : std::vector<std::pair<std::uint64_t, const char*>>{{3, "1,0,1"}, {2, "1,1,0,1"}}) {
        const ExtField K = ExtField::make(q, hp);
        const std::uint64_t n = K.element_count();
        for (std::uint64_t i = 0; i < n; ++i) {
            const ExtElem a = K.from_index(i);
            if (!a.is_zero()) p.check((a * a.inverse()).is_one(), "a * a^-1 = 1 in F_" + std::to_string(n));
            for (std::uint64_t j = 0; j < n; ++j)
                for (std::uint64_t l = 0; l < n; ++l) {
                    const ExtElem b = K.from_index(j), c = K.from_index(l);
                    p.check((a * b) * c == a * (b * c), "associativity");
                    p.check(a * (b + c) == a * b + a * c, "distributivity");
                }
        }
    }
}

void irreducible_counts(Property& p, std::uint64_t) {
    // monic irreducibles of degree d over F_q: (1/d) sum_{e | d} mu(e) q^(d/e)
    for (auto [q, d, expect] : std::vector<std::tuple<std::uint64_t, int, std::uint64_t>>{
             {2, 2, 1}, {2, 3, 2}, {2, 4, 3}, {3, 2, 3}, {3, 3, 8}, {5, 2, 10}, {7, 2, 21}}) {
        const PrimeField F(q);
        std::uint64_t count = 0, total = 1;
        for (int i = 0; i < d; ++i) total *= q;
        for (std::uint64_t code = 0; code < total; ++code) {
            std::vector<Residue> c(d + 1, 1);
            std::uint64_t x = code;
            for (int i = 0; i < d; ++i, x /= q) c[i] = x % q;
            count += is_irreducible(Poly(F, c));
        }
        p.check(count == expect, "irreducible count over F_" + std::to_string(q) + " in degree " + std::to_string(d));
    }
}

void primitive_counts(Property& p, std::uint64_t) {
    for (auto [q, hp, phi] : std::vector<std::tuple<std::uint64_t, const char*, std::uint64_t>>{
             {5, "2,0,1", 8}, {3, "1,2,0,1", 12}, {7, "3,1,1", 16}, {2, "1,1,0,0,1", 8}}) {
        const ExtField K = ExtField::make(q, hp);
        std::uint64_t count = 0;
        for (std::uint64_t i = 1; i < K.element_count(); ++i) count += is_primitive(K.from_index(i));
        p.check(count == phi, "primitive count equals phi(q^h - 1) over F_" + std::to_string(q));
    }
}

// All messages within radius, by scanning every polynomial of degree < k.
std::vector<Poly> scan_messages(const RSParams& code, const Word& r, std::size_t radius) {
    const std::uint64_t q = code.field().modulus();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < code.k(); ++i) total *= q;
    std::vector<Poly> out;
    for (std::uint64_t m = 0; m < total; ++m) {
        std::vector<Residue> c(code.k());
        std::uint64_t x = m;
        for (auto& v : c) v = x % q, x /= q;
        Poly f(code.field(), c);
        if (hamming_distance(rs_encode(code, f), r) <= radius) out.push_back(f);
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

void decoders(Property& p, std::uint64_t seed) {
    Rng rng(seed, 101);
    for (int t = 0; t < 60; ++t) {
        const std::uint64_t q = std::vector<std::uint64_t>{5, 7}[rng.below(2)];
        const std::size_t k = 1 + rng.below(3);
        const RSParams code = RSParams::full(PrimeField(q), k);
        Word r(q);
        for (auto& v : r) v = rng.below(q);
        const auto within = scan_messages(code, r, code.unique_radius());
        const auto bw = bw_decode(code, r);
        const bool bw_ok = within.empty() ? !bw || hamming_distance(rs_encode(code, *bw), r) > code.unique_radius()
                                          : bw && *bw == within.front();
        p.check(bw_ok, "Berlekamp-Welch equals the scan inside the unique radius");
        const std::size_t radius = q - sudan_agreement_bound(q, k);
        auto brute = list_decode_bruteforce(code, r, radius);
        p.check(brute == scan_messages(code, r, radius), "brute-force list equals the scan");
        auto sudan = sudan_list_decode(code, r, radius);
        std::sort(sudan.begin(), sudan.end(), lex_less);
        p.check(sudan == brute, "Sudan equals brute force at its completeness bound");
    }
}

void correspondence(Property& p, std::uint64_t) {
    const ExtField K = ExtField::make(5, "2,0,1");
    const std::vector<Residue> S = iota(5);
    std::map<std::uint64_t, std::uint64_t> pre;
    each_subset(5, 3, [&](const std::vector<Residue>& A) { ++pre[K.index_of(psi_map(K, A))]; });
    std::uint64_t sum = 0;
    for (std::uint64_t idx = 0; idx < K.element_count(); ++idx) {
        const InstanceSpec spec(K, S, 3, K.from_index(idx));
        const auto list = list_decode_bruteforce(spec.code(), build_received_word(spec), spec.radius());
        std::set<std::vector<Residue>> sets;
        for (const auto& m : list)
            if (auto A = subset_from_codeword(spec, m)) sets.insert(*A);
        p.check(sets.size() == list.size() && list.size() == pre[idx], "codewords biject with psi preimages");
        sum += list.size();
    }
    p.check(sum == 10, "preimage sizes add up to C(5,3)");
}

void subset_products(Property& p, std::uint64_t) {
    const ExtField K = ExtField::make(5, "2,0,1");
    for (std::size_t k = 1; k <= 4; ++k) {
        std::map<std::uint64_t, BigInt> direct;
        each_subset(5, k, [&](const std::vector<Residue>& A) { direct[K.index_of(psi_map(K, A))] += 1; });
        const CountTable dp = nk_count_all(K, k);
        bool same = true;
        for (const auto& [idx, c] : dp.counts) same &= c == (direct.count(idx) ? direct[idx] : BigInt(0));
        p.check(same, "N_k table equals direct enumeration");
        p.check(dp.total() == binomial(5, k), "N_k sums to C(q, k)");
    }
}

void group_orders(Property& p, std::uint64_t seed) {
    Rng rng(seed, 102);
    const ExtField K = ExtField::make(7, "3,1,1");
    for (int t = 0; t < 40; ++t) {
        std::vector<Residue> S;
        for (Residue a = 0; a < 7; ++a)
            if (rng.below(3) == 0) S.push_back(a);
        const BigInt a = group_order(K, S, GroupOrderMethod::Closure).order;
        const BigInt b = group_order(K, S, GroupOrderMethod::DlogGcd).order;
        p.check(a == b, "closure and dlog-gcd agree");
        p.check(mpz_divisible_p(K.order().get_mpz_t(), a.get_mpz_t()) != 0, "subgroup order divides q^h - 1");
    }
}

void discrete_logs(Property& p, std::uint64_t seed) {
    const ExtField K = ExtField::make(5, "2,0,1");
    const ExtElem b = first_primitive(K);
    ExtElem cur = K.one();
    for (std::uint64_t e = 0; e < 24; ++e, cur *= b) p.check(bsgs_dlog(b, cur) == to_big(e), "bsgs inverts b^e");

    const ExtField L = ExtField::make(7, "3,1,1");
    const ExtElem base = first_primitive(L);
    Rng rng(seed, 103);
    for (int t = 0; t < 4; ++t) {
        const ExtElem target = L.from_index(1 + rng.below(L.element_count() - 1));
        DlogConfig cfg{.field = L, .S = iota(7), .g = 5, .base = base, .target = target, .seed = seed + t};
        const DlogReport rep = dlog_via_rs(cfg);
        p.check(rep.verified && base.pow(rep.extraction.exponent) == target, "pipeline exponent satisfies b^e = t");
    }
}

void modular_systems(Property& p, std::uint64_t seed) {
    Rng rng(seed, 104);
    for (std::uint64_t N : {360ull, 97ull * 4, 1001ull, 1ull << 10}) {
        for (int t = 0; t < 10; ++t) {
            const std::size_t n = 2 + rng.below(4);
            std::vector<BigInt> x(n);
            for (auto& v : x) v = to_big(rng.below(N));
            ModLinearSystem sys{to_big(N), n, {}, {}};
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<BigInt> row(n, 0);
                row[i] = 1;
                BigInt rhs = x[i];
                for (std::size_t j = i + 1; j < n; ++j) {
                    row[j] = to_big(rng.below(N));
                    rhs += row[j] * x[j];
                }
                sys.add_row(row, mod_floor(rhs, sys.modulus));
            }
            const ModSolution s = solve_mod(sys);
            p.check(s.unique() && s.particular() == x, "planted solution recovered mod " + std::to_string(N));
        }
    }
}

void threshold(Property& p, std::uint64_t) {
    for (std::uint64_t n = 2; n <= 24; ++n)
        for (std::uint64_t k = 1; k < n; ++k)
            for (std::uint64_t q : {n, n + 1, 2 * n + 1}) {
                const GhatResult r = ghat(n, k, q);
                p.check(r.ratio_at_ghat < 1 && (r.ghat == k + 1 || r.ratio_below >= 1), "g-hat is the least g below 1");
                p.check(jh_exact_cmp(n, k, r.ghat, q) == JhCmp::LT1, "exact comparison at g-hat");
            }
}

}  // namespace

json run_selftest(std::uint64_t seed) {
    const std::vector<std::pair<std::string, void (*)(Property&, std::uint64_t)>> suite{
        {"field_axioms", field_axioms},
        {"irreducible_counts", irreducible_counts},
        {"primitive_counts", primitive_counts},
        {"decoders_agree", decoders},
        {"psi_correspondence", correspondence},
        {"subset_products", subset_products},
        {"group_orders", group_orders},
        {"discrete_logs", discrete_logs},
        {"modular_systems", modular_systems},
        {"ghat_threshold", threshold},
    };
    json props = json::array();
    bool all = true;
    for (const auto& [name, fn] : suite) {
        Property p{name, 0, {}};
        try {
            fn(p, seed);
        } catch (const std::exception& e) {
            p.check(false, std::string("threw: ") + e.what());
        }
        json entry = {{"name", name}, {"passed", p.failure.empty()}, {"cases", p.cases}};
        if (!p.failure.empty()) entry["failure"] = p.failure;
        all &= p.failure.empty();
        props.push_back(std::move(entry));
    }
    return {{"passed", all}, {"properties", props}};
}

}  // namespace rslab::cli
