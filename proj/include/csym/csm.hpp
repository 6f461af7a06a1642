#ifndef CSYM_CSM_HPP
#define CSYM_CSM_HPP

#include "csym/laurent.hpp"

#include <vector>

namespace csym {

// Seedlet (b, r, Z) at direction s: the single-direction slice of a
// mutation. b_s = 0, r >= 1, Z has nonnegative integer coefficients with
// z_0, z_r > 0. Direction s is 0-based.
struct Seedlet {
    int s = 0;
    ExpVec b;
    int r = 1;
    std::vector<Int> Z; // z_0 ... z_r

    int nvars() const { return static_cast<int>(b.size()); }
    bool operator==(const Seedlet& o) const {
        return s == o.s && b == o.b && r == o.r && Z == o.Z;
    }
    bool operator!=(const Seedlet& o) const { return !(*this == o); }
};

Seedlet make_seedlet(int s, ExpVec b, int r, std::vector<Int> Z);

// P(x) = x^{r[-b]_+} Z(x^b) = sum_i z_i x^{i[b]_+ + (r-i)[-b]_+}.
LaurentPoly exchange_poly(const Seedlet& w);

// (-b, r, Z') with Z'(u) = u^r Z(1/u); same exchange polynomial.
Seedlet negate_b(const Seedlet& w);

// The composite of a permutation with one exchange substitution:
// psi(x) = sigma(x) with x_s replaced by P(x)/x_s; the substituted value
// sits at position sigma^{-1}(s).
struct ClusterSymmetricMap {
    Permutation sigma;
    int s = 0;
    Seedlet omega;

    int nvars() const { return sigma.size(); }
    int t() const { return sigma.inverse()(s); } // sigma^{-1}(s)
    bool operator==(const ClusterSymmetricMap& o) const {
        return sigma == o.sigma && s == o.s && omega == o.omega;
    }
};

ClusterSymmetricMap make_map(Permutation sigma, int s, Seedlet omega);

// Components of psi(x) as quotients of honest polynomials.
struct RationalFunctionTuple {
    std::vector<LaurentPoly> num;
    std::vector<LaurentPoly> den;
};

std::vector<Rat> apply_numeric(const ClusterSymmetricMap& psi,
                               const std::vector<Rat>& x);
RationalFunctionTuple apply_symbolic(const ClusterSymmetricMap& psi);

// psi^{-1} = psi_{sigma^{-1}, t, (sigma(b), r, Z)} with t = sigma^{-1}(s).
ClusterSymmetricMap inverse(const ClusterSymmetricMap& psi);

// Conjugation by tau: the map fixing F(tau(x)) whenever psi fixes F.
ClusterSymmetricMap conjugate(const ClusterSymmetricMap& psi,
                              const Permutation& tau);

// Exact test of F(psi(x)) = F(x), done by clearing all denominators and
// comparing Laurent polynomials.
bool is_invariant(const LaurentPoly& F, const ClusterSymmetricMap& psi);

} // namespace csym

#endif
