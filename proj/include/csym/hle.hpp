#ifndef CSYM_HLE_HPP
#define CSYM_HLE_HPP

#include "csym/csm.hpp"

#include <utility>
#include <vector>

namespace csym {

// Lexicographically ordered box N = { j : 0 <= j_i <= eta_i }. Positions
// are row-major, so position order equals lex order on the tuples.
class MonomialIndexSet {
public:
    explicit MonomialIndexSet(ExpVec eta);

    long size() const { return size_; }
    const ExpVec& eta() const { return eta_; }
    bool contains(const ExpVec& j) const;
    long index_of(const ExpVec& j) const; // -1 if outside
    ExpVec at(long pos) const;

private:
    ExpVec eta_;
    std::vector<long> stride_;
    long size_;
};

// Sparse homogeneous system over the unknowns a_j, j in N.
struct LinearSystem {
    long width = 0;
    std::vector<std::vector<std::pair<long, Rat>>> rows;
};

// Canonical kernel basis: the unique RREF basis of the solution space,
// rows ordered by pivot column (lex order of N).
struct KernelBasis {
    long width = 0;
    std::vector<std::vector<Rat>> vecs;
};

// Coefficients of Z(u)^k; [1] when k = 0.
std::vector<Int> power_coeffs(const std::vector<Int>& Z, int k);

// b^{(i)}_{s,k,l} = l[b]_+ + (kr-l)[-b]_+ - i e_s.
ExpVec shift_vector(const Seedlet& w, int k, int l, int i);

// The full system HLE(sigma, s, omega, eta, d): both map directions, all
// k in [0, d_s]. Throws precondition_error naming the violated equality
// when d != sigma(d) or eta_s = eta_t = 2 d_s = 2 d_t fails.
LinearSystem build_hle(const ClusterSymmetricMap& psi, const ExpVec& eta,
                       const ExpVec& d);
LinearSystem build_hle(const std::vector<ClusterSymmetricMap>& maps,
                       const ExpVec& eta, const ExpVec& d);

KernelBasis solve_kernel(const LinearSystem& sys);

// One kernel vector assembled as a Laurent polynomial with its realized
// type. full_support records top-support: for every i with
// eta_i > 0 some term has j_i = eta_i.
struct InvariantReport {
    LaurentPoly F;
    ExpVec eta_realized;
    ExpVec d_realized;
    bool full_support = false;
};

std::vector<InvariantReport> invariants_for(
    const std::vector<ClusterSymmetricMap>& maps, const ExpVec& eta,
    const ExpVec& d);

// True iff some rational combination of the basis achieves top-support in
// every direction with eta_i > 0.
bool span_has_full_support(const KernelBasis& basis, const MonomialIndexSet& N);

// Coefficient vector of F over N, i.e. the a_j of F = x^{-d} sum a_j x^j;
// throws if F has support outside the box.
std::vector<Rat> coeff_vector(const LaurentPoly& F, const MonomialIndexSet& N,
                              const ExpVec& d);

// Exact membership of v in the span of the basis vectors.
bool in_span(const KernelBasis& basis, const std::vector<Rat>& v);

// Necessary eta/d feasibility bounds:
// eta_s = eta_t = 2 d_s = 2 d_t, d = sigma(d), and for every k
// 2 min(eta_k, eta_{sigma^{-1}(k)}) >= eta_s r |b_k| >= 2 |eta_k - eta_{sigma^{-1}(k)}|.
bool feasible_eta(const ClusterSymmetricMap& psi, const ExpVec& eta,
                  const ExpVec& d);

// All eta within the componentwise cap satisfying the necessary bounds.
std::vector<ExpVec> feasible_eta_list(const ClusterSymmetricMap& psi,
                                      const ExpVec& d, int cap);

// False when the two-map product bound exceeds 4 (assuming eta_s != 0):
// no common non-trivial invariant can exist.
bool pair_feasibility(const ClusterSymmetricMap& psi1,
                      const ClusterSymmetricMap& psi2, const ExpVec& eta);

// For sigma = id and F invariant: F as a polynomial in the ring generator
// g = (P + x_s^2)/x_s with Laurent coefficients in the other variables.
// Returned as coefficient-of-g^m, m = 0..d_s.
std::vector<LaurentPoly> identity_case_express(const LaurentPoly& F,
                                               const ClusterSymmetricMap& psi);

// x^{d - d_s e_orbit(s)} F: clears denominator exponents off the
// sigma-orbit of s; invariance is preserved.
LaurentPoly normalize_d(const LaurentPoly& F, const ClusterSymmetricMap& psi);

} // namespace csym

#endif
