#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rslab/poly.hpp"

namespace rslab {

/// Rabin's test: f of degree n is irreducible iff x^(p^n) = x mod f and
/// gcd(x^(p^(n/r)) - x, f) = 1 for every prime r | n. Constants and the zero
/// polynomial are not irreducible.
bool is_irreducible(const Poly& f);

/// A monic factor of f with 0 < degree < deg f, or nullopt when f is
/// irreducible (or of degree < 2).
std::optional<Poly> nontrivial_factor(const Poly& f);

/// Monic irreducible polynomial of exact degree `degree`, drawn uniformly at
/// random from a generator seeded with `seed`.
Poly random_irreducible(const PrimeField& field, int degree, std::uint64_t seed);

/// Distinct roots of f in F_p, ascending. f must be nonzero.
std::vector<Residue> roots(const Poly& f);

/// If monic P of degree m >= 1 equals prod_{a in A} (x - a) for m pairwise
/// distinct a, returns A ascending; otherwise nullopt.
std::optional<std::vector<Residue>> linear_split(const Poly& P);

}  // namespace rslab
