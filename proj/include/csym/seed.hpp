#ifndef CSYM_SEED_HPP
#define CSYM_SEED_HPP

#include "csym/csm.hpp"

#include <optional>
#include <string>
#include <vector>

namespace csym {

using IntMatrix = std::vector<std::vector<int>>;

// Generalized-cluster-algebra seed (B, R, Z): skew-symmetrizable exchange
// matrix, positive mutation degrees r_1..r_n, and reciprocal mutation
// polynomials Z_k with z_{k,0} = z_{k,r_k} = 1 and z_{k,t} = z_{k,r_k-t}.
struct Seed {
    IntMatrix B;
    std::vector<int> R;
    std::vector<std::vector<Int>> Z;

    int rank() const { return static_cast<int>(R.size()); }
    bool operator==(const Seed& o) const {
        return B == o.B && R == o.R && Z == o.Z;
    }
    bool operator<(const Seed& o) const {
        if (B != o.B) return B < o.B;
        if (R != o.R) return R < o.R;
        return Z < o.Z;
    }
};

Seed make_seed(IntMatrix B, std::vector<int> R, std::vector<std::vector<Int>> Z);

// Column-s data (b, r_s, Z_s) of the seed; a valid seedlet.
Seedlet seedlet_at(const Seed& seed, int s);

// The mutation map mu_s = psi_{id,s,pi_s(seed)} acting on points.
ClusterSymmetricMap mutation_map(const Seed& seed, int s);

// Exchange polynomial tuple P(seed).
std::vector<LaurentPoly> exchange_tuple(const Seed& seed);

IntMatrix mutate_matrix(const IntMatrix& B, const std::vector<int>& R, int s);
Seed mutate(const Seed& seed, int s);

// Re-indexing: b'_ij = b_{sigma(i)sigma(j)}, r'_i = r_{sigma(i)},
// Z'_i = Z_{sigma(i)}.
Seed permute_seed(const Seed& seed, const Permutation& sigma);

// Positive integer diagonal S with SB skew-symmetric, minimal entries;
// nullopt when none exists.
std::optional<std::vector<int>> find_symmetrizer(const IntMatrix& B);

// One element sigma*mu_s of the cluster symmetric set S(seed):
// permute_seed(mutate(seed,s), sigma) = (sign*B, R, Z).
struct SeedSymmetry {
    Permutation sigma;
    int s = 0;
    int sign = 1;
};

// Exhaustive S(seed) over S_n x [1,n]; refuses n > 8.
std::vector<SeedSymmetry> cluster_symmetric_set(const Seed& seed);

// True iff (sigma, s) is in S(seed) and omega equals column-s data of
// +B or of -B.
bool corresponds(const ClusterSymmetricMap& psi, const Seed& seed);

// All seeds with |b_ij| <= entry_bound, r_i <= max r over the maps,
// free Z coefficients bounded by those in the maps, such that every map
// corresponds. Sorted (deterministic) output.
std::vector<Seed> seed_search(const std::vector<ClusterSymmetricMap>& maps,
                              int entry_bound);

// Rank-3 classification of BR up to permutation equivalence.
enum class Rank3Class { A1, A2, A3, A4, A5, TrivialRing };
Rank3Class classify_rank3(const Seed& seed);
std::string to_string(Rank3Class c);

// Rank-2 classification against the twelve built-in seeds, up to a
// permutation of S_2 and a global sign of B.
struct Rank2Class {
    bool trivial_ring = false;
    int index = 0;  // 1-based row when !trivial_ring
    int sign = 1;
    bool swapped = false;
};
Rank2Class classify_rank2(const Seed& seed);
std::string to_string(const Rank2Class& c);

} // namespace csym

#endif
