#ifndef CSYM_DISCOVER_HPP
#define CSYM_DISCOVER_HPP

#include "csym/seed.hpp"

#include <optional>
#include <string>
#include <vector>

namespace csym {

// m-th root of a polynomial with rational coefficients, found by rooting
// the lex-least term and extracting ascending terms; verified by
// exponentiation. nullopt when no root exists.
std::optional<LaurentPoly> poly_root(const LaurentPoly& P, int m);

// Total denominator pattern d + dtilde of a discovered pair: on the
// sigma-orbit of s the value is forced to eta_s/2; every other orbit
// carries one free integer parameter named after its least member
// ("d2", "d3", ...).
struct DtildePattern {
    ExpVec base_d;           // the d of the input polynomial
    std::vector<int> forced; // forced total value, or INT_MIN when free
    std::vector<int> param;  // orbit label (0-based least member) when free

    // dtilde with all free parameters set to the given value.
    ExpVec instantiate(int free_value = 0) const;
    bool admits_zero() const; // dtilde = 0 possible
    std::string str() const;  // e.g. "(1, d2, d3, d2)"
};

// One non-trivial cluster symmetric pair (psi, dtilde): the map is stored
// with a canonical seedlet (segment read off the support of P, minimal r,
// z_0 anchored at the lex-least support point); the negate_b twin denotes
// the same map.
struct DiscoveredPair {
    ClusterSymmetricMap map;
    Seedlet twin;       // negate_b(map.omega)
    LaurentPoly P;      // shared exchange polynomial
    DtildePattern dtilde;
};

struct TrivialFamily {
    std::vector<int> zero_eta_dirs;     // I = { i : eta_i = 0 }
    std::vector<Permutation> symmetries; // { sigma : T(sigma(x)) = T(x) }
};

struct PairReport {
    ExpVec eta;
    ExpVec d;
    std::vector<DiscoveredPair> pairs;
    TrivialFamily trivial;
};

// Algorithm "find all non-trivial cluster symmetric pairs" over all
// directions with even nonzero eta and all permutations. n <= 8.
PairReport find_pairs(const LaurentPoly& F);

// S(F): maps of pairs whose dtilde admits the all-zero instantiation.
std::vector<ClusterSymmetricMap> cluster_symmetric_set_of(const LaurentPoly& F);

// First seed (deterministic order) to which every map of S(F) corresponds.
std::optional<Seed> find_cs_seed(const LaurentPoly& F, int entry_bound);

} // namespace csym

#endif
