#include "rslab/reduction.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "rslab/error.hpp"
#include "rslab/parallel.hpp"
#include "rslab/poly_factor.hpp"
#include "rslab/rng.hpp"

namespace rslab {

namespace {

void check_subset(const PrimeField& F, const std::vector<Residue>& S) {
    std::set<Residue> seen;
    for (Residue a : S) {
        if (a >= F.modulus()) throw Error(ErrorKind::InvalidArgument, "evaluation point out of range");
        if (!seen.insert(a).second) throw Error(ErrorKind::InvalidArgument, "evaluation set has repeated points");
    }
}

void check_census_args(const ExtField& field, const std::vector<Residue>& S, std::size_t g) {
    check_subset(field.base(), S);
    if (g > S.size()) throw Error(ErrorKind::InvalidArgument, "need g <= |S|");
    if (!field.indexable()) throw Error(ErrorKind::Guard, "field too large to tabulate");
}

}  // namespace

InstanceSpec::InstanceSpec(ExtField field, std::vector<Residue> S, std::size_t g, const Poly& f)
    : field_(std::move(field)), S_(std::move(S)), g_(g), f_(f % field_.modulus()) {
    check_subset(field_.base(), S_);
    if (!(field_.degree() < g_ && g_ <= S_.size()))
        throw Error(ErrorKind::InvalidArgument, "need h < g <= |S|");
}

InstanceSpec::InstanceSpec(ExtField field, std::vector<Residue> S, std::size_t g, const ExtElem& f)
    : InstanceSpec(std::move(field), std::move(S), g, f.residue()) {}

ExtElem psi_map(const ExtField& field, std::span<const Residue> A) {
    ExtElem acc = field.one();
    for (Residue a : A) acc *= field.linear(a);
    return acc;
}

Word build_received_word(const InstanceSpec& spec) {
    const PrimeField& F = spec.field().base();
    const Poly& h = spec.field().modulus();
    const std::uint64_t e = spec.g() - spec.field().degree();
    Word w;
    w.reserve(spec.n());
    for (Residue a : spec.S()) w.push_back(F.sub(F.neg(F.div(spec.f().eval(a), h.eval(a))), F.pow(a, e)));
    return w;
}

std::optional<std::vector<Residue>> subset_from_codeword(const InstanceSpec& spec, const Poly& m) {
    const std::size_t k = spec.k();
    if (!m.is_zero() && m.degree() >= static_cast<int>(k))
        throw Error(ErrorKind::InvalidArgument, "decoder output must have degree < g - h");
    const PrimeField& F = spec.field().base();
    const Poly t = m + Poly::monomial(F, 1, static_cast<int>(k));
    const Poly P = spec.f() + t * spec.field().modulus();
    auto A = linear_split(P);
    if (!A) return std::nullopt;
    for (Residue a : *A)
        if (std::find(spec.S().begin(), spec.S().end(), a) == spec.S().end()) return std::nullopt;
    return A;
}

std::optional<Relation> relation_from_codeword(const InstanceSpec& spec, const Poly& m, const ExtElem& base,
                                               const BigInt& i) {
    auto A = subset_from_codeword(spec, m);
    if (!A) return std::nullopt;
    const ExtElem prod = psi_map(spec.field(), *A);
    ensure(prod == spec.field().element(spec.f()), "split set reproduces f");
    ensure(base.pow(i) == prod, "relation b^i = psi(A)");
    return Relation{i, std::move(*A)};
}

BigInt CountTable::at(const ExtElem& e) const {
    auto it = counts.find(field.index_of(e));
    return it == counts.end() ? BigInt(0) : it->second;
}

BigInt CountTable::total() const {
    BigInt s = 0;
    for (const auto& [idx, c] : counts) s += c;
    return s;
}

CountTable psi_census(const ExtField& field, const std::vector<Residue>& S, std::size_t g,
                      const CensusOptions& options) {
    check_census_args(field, S, g);
    const BigInt subsets = binomial(S.size(), g);
    if (subsets > to_big(options.guard))
        throw Error(ErrorKind::Guard, "census needs C(" + std::to_string(S.size()) + "," + std::to_string(g) +
                                          ") = " + to_string(subsets) + " subsets, above the guard " +
                                          std::to_string(options.guard));
    const std::size_t h = field.degree();
    const std::size_t n = S.size();
    std::vector<std::vector<Residue>> lin(n);
    for (std::size_t j = 0; j < n; ++j) {
        const ExtElem e = field.linear(S[j]);
        lin[j].assign(e.coeffs().begin(), e.coeffs().end());
    }

    // task j: subsets whose smallest position is j
    const std::size_t tasks = g == 0 ? 1 : n - g + 1;
    std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> partial(tasks);
    parallel_for(tasks, options.threads, [&](std::size_t task) {
        auto& local = partial[task];
        std::vector<std::vector<Residue>> prefix(g + 1, std::vector<Residue>(h, 0));
        prefix[0][0] = 1;
        if (g == 0) {
            ++local[field.index_of(prefix[0])];
            return;
        }
        // depth-first over increasing positions with running products
        auto dfs = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
            if (depth == g) {
                ++local[field.index_of(prefix[g])];
                return;
            }
            const std::size_t last = n - (g - depth);
            for (std::size_t j = start; j <= last; ++j) {
                field.mul_raw(prefix[depth], lin[j], prefix[depth + 1]);
                self(self, depth + 1, j + 1);
            }
        };
        field.mul_raw(prefix[0], lin[task], prefix[1]);
        dfs(dfs, 1, task + 1);
    });

    CountTable out{field, {}, true, 0};
    for (const auto& local : partial)
        for (const auto& [idx, c] : local) out.counts[idx] += to_big(c);
    ensure(out.total() == subsets, "census total equals C(n, g)");
    return out;
}

CountTable psi_sample(const ExtField& field, const std::vector<Residue>& S, std::size_t g, std::uint64_t samples,
                      std::uint64_t seed) {
    check_census_args(field, S, g);
    Rng rng(seed, 0);
    std::vector<Residue> pool = S;
    std::unordered_map<std::uint64_t, std::uint64_t> hits;
    for (std::uint64_t s = 0; s < samples; ++s) {
        for (std::size_t j = 0; j < g; ++j) std::swap(pool[j], pool[j + rng.below(pool.size() - j)]);
        ++hits[field.index_of(psi_map(field, std::span<const Residue>(pool.data(), g)))];
    }
    CountTable out{field, {}, false, samples};
    for (const auto& [idx, c] : hits) out.counts[idx] = to_big(c);
    return out;
}

}  // namespace rslab
