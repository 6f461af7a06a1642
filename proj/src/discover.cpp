#include "csym/discover.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <sstream>

namespace csym {

std::optional<LaurentPoly> poly_root(const LaurentPoly& P, int m) {
    if (m < 1) throw error("poly_root: m must be positive");
    int n = P.nvars();
    if (P.is_zero()) return LaurentPoly::zero(n);
    if (m == 1) return P;

    auto least = P.terms().begin();
    ExpVec e0 = least->first;
    for (int& v : e0) {
        if (v % m != 0) return std::nullopt;
        v /= m;
    }
    Rat c0;
    if (!rat_root(least->second, static_cast<unsigned long>(m), c0))
        return std::nullopt;

    LaurentPoly Q = LaurentPoly::monomial(e0, c0);
    Rat lead_factor = Rat(m) * rat_pow(c0, m - 1);
    ExpVec lead_shift = exp_scale(m - 1, e0);
    size_t cap = 2 * P.term_count() + 16;
    for (size_t it = 0; it < cap; ++it) {
        LaurentPoly R = P - Q.pow(m);
        if (R.is_zero()) return Q;
        auto rl = R.terms().begin();
        Q.add_term(exp_sub(rl->first, lead_shift), rl->second / lead_factor);
    }
    if (P - Q.pow(m) == LaurentPoly::zero(n)) return Q;
    return std::nullopt;
}

ExpVec DtildePattern::instantiate(int free_value) const {
    ExpVec out(base_d.size());
    for (size_t i = 0; i < base_d.size(); ++i) {
        int total = forced[i] != INT_MIN ? forced[i] : free_value;
        out[i] = total - base_d[i];
    }
    return out;
}

bool DtildePattern::admits_zero() const {
    // forced orbits must already carry d; free orbits need d constant.
    for (size_t i = 0; i < base_d.size(); ++i)
        if (forced[i] != INT_MIN && forced[i] != base_d[i]) return false;
    for (size_t i = 0; i < base_d.size(); ++i)
        for (size_t j = i + 1; j < base_d.size(); ++j)
            if (forced[i] == INT_MIN && forced[j] == INT_MIN &&
                param[i] == param[j] && base_d[i] != base_d[j])
                return false;
    return true;
}

std::string DtildePattern::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < forced.size(); ++i) {
        if (i) os << ", ";
        if (forced[i] != INT_MIN)
            os << forced[i];
        else
            os << "d" << (param[i] + 1);
    }
    os << ")";
    return os.str();
}

namespace {

// Reads (b, r, Z) off the support of a candidate exchange polynomial.
// The support must be an arithmetic segment from A = r[-b]_+ to
// B = r[b]_+ with positive integer coefficients; r is taken minimal and
// z_0 anchored at the lex-least support point (the negate_b twin carries
// the opposite anchoring).
std::optional<Seedlet> seedlet_from_exchange(const LaurentPoly& P, int s) {
    if (P.is_zero()) return std::nullopt;
    for (auto& [e, c] : P.terms()) {
        if (c.get_den() != 1 || c <= 0) return std::nullopt;
        for (int v : e)
            if (v < 0) return std::nullopt;
    }
    int n = P.nvars();
    if (P.deg_max(s) != 0) return std::nullopt;

    ExpVec A = P.terms().begin()->first;
    ExpVec B = std::prev(P.terms().end())->first;
    if (A == B) {
        // constant Z(1) with b = 0
        for (int v : A)
            if (v != 0) return std::nullopt; // bare non-constant monomial
        Int c = P.terms().begin()->second.get_num();
        if (c < 2) return std::nullopt;
        return make_seedlet(s, ExpVec(n, 0), 1, {Int(1), Int(c - 1)});
    }
    for (int i = 0; i < n; ++i)
        if (std::min(A[i], B[i]) != 0) return std::nullopt;
    ExpVec delta = exp_sub(B, A);
    Int gz = 0;
    for (int v : delta) gz = gcd(gz, Int(std::abs(v)));
    long g = gz.get_si();
    ExpVec u(n);
    for (int i = 0; i < n; ++i) u[i] = delta[i] / static_cast<int>(g);

    // positions mu in [0, g] along the segment A + mu*u
    std::vector<std::pair<long, Int>> spots;
    long step = g;
    for (auto& [e, c] : P.terms()) {
        ExpVec diff = exp_sub(e, A);
        long mu = -1;
        for (int i = 0; i < n; ++i) {
            if (u[i] == 0) {
                if (diff[i] != 0) return std::nullopt;
                continue;
            }
            if (diff[i] % u[i] != 0) return std::nullopt;
            long q = diff[i] / u[i];
            if (q < 0) return std::nullopt;
            if (mu == -1)
                mu = q;
            else if (mu != q)
                return std::nullopt;
        }
        if (mu < 0 || mu > g) return std::nullopt;
        spots.emplace_back(mu, c.get_num());
        if (mu != 0) step = std::gcd(step, mu);
    }
    long r = g / step;
    ExpVec b = exp_scale(static_cast<int>(step), u);
    if (b[s] != 0) return std::nullopt;
    std::vector<Int> Z(r + 1, 0);
    for (auto& [mu, c] : spots) Z[mu / step] = c;
    if (Z.front() <= 0 || Z.back() <= 0) return std::nullopt;
    Seedlet w = make_seedlet(s, b, static_cast<int>(r), Z);
    if (exchange_poly(w) != P) return std::nullopt;
    return w;
}

// Bounds of the W set in the reconstruction step:
// min(eta_k, eta_{sigma^{-1}(k)}) >= eta_s r |b_k| / 2 >= |eta_k - eta_{sigma^{-1}(k)}|.
bool segment_bounds_ok(const ExpVec& eta, const Permutation& sigma, int s,
                       const Seedlet& w) {
    Permutation inv = sigma.inverse();
    int n = static_cast<int>(eta.size());
    for (int k = 0; k < n; ++k) {
        long mid = static_cast<long>(eta[s]) * w.r * std::abs(w.b[k]);
        long lo = 2L * std::min(eta[k], eta[inv(k)]);
        long hi = 2L * std::abs(eta[k] - eta[inv(k)]);
        if (!(lo >= mid && mid >= hi)) return false;
    }
    return true;
}

} // namespace

PairReport find_pairs(const LaurentPoly& F) {
    int n = F.nvars();
    if (n > 8) throw error("find_pairs: n > 8 refused");
    TypedLaurent ty = normalize_type(F);
    PairReport report;
    report.eta = ty.eta;
    report.d = ty.d;

    for (int i = 0; i < n; ++i)
        if (ty.eta[i] == 0) report.trivial.zero_eta_dirs.push_back(i);
    auto perms = all_permutations(n);
    for (const auto& sigma : perms)
        if (ty.T.permute(sigma) == ty.T)
            report.trivial.symmetries.push_back(sigma);
    if (ty.T.is_zero()) return report;

    for (int s = 0; s < n; ++s) {
        if (ty.eta[s] == 0 || ty.eta[s] % 2 != 0) continue;
        int eta_s = ty.eta[s];
        int D = eta_s / 2;
        std::vector<LaurentPoly> fs;
        for (int i = 0; i <= eta_s; ++i) fs.push_back(slice(ty, s, i));
        for (const auto& sigma : perms) {
            int t = sigma.inverse()(s);
            if (ty.eta[t] != eta_s) continue;

            std::vector<LaurentPoly> ft;
            for (int i = 0; i <= eta_s; ++i)
                ft.push_back(slice(ty, t, i).permute(sigma));

            bool patterns_match = true;
            std::vector<int> K;
            for (int k = 0; k <= eta_s; ++k) {
                bool zs = fs[eta_s - k].is_zero();
                if (zs != ft[k].is_zero()) { patterns_match = false; break; }
                if (!zs) K.push_back(k);
            }
            if (!patterns_match || K.empty()) continue;

            int k0 = -1;
            for (int k : K)
                if (k < D) k0 = std::max(k0, k);
            if (k0 < 0) continue; // unreachable: k = 0 is always in K

            auto Q = ft[k0].divide_exact(fs[eta_s - k0]);
            if (!Q) continue;
            auto P = poly_root(*Q, D - k0);
            if (!P || P->is_zero()) continue;

            bool all_ok = true;
            for (int k : K) {
                if (k == k0) continue;
                int m = D - k;
                bool ok = m >= 0 ? (ft[k] == fs[eta_s - k] * P->pow(m))
                                 : (ft[k] * P->pow(-m) == fs[eta_s - k]);
                if (!ok) { all_ok = false; break; }
            }
            if (!all_ok) continue;

            auto w = seedlet_from_exchange(*P, s);
            if (!w || !segment_bounds_ok(ty.eta, sigma, s, *w)) continue;

            DiscoveredPair pair;
            pair.map = make_map(sigma, s, *w);
            pair.twin = negate_b(*w);
            pair.P = *P;
            pair.dtilde.base_d = ty.d;
            pair.dtilde.forced.assign(n, INT_MIN);
            pair.dtilde.param.assign(n, -1);
            for (const auto& orb : sigma.orbits()) {
                bool has_s = std::find(orb.begin(), orb.end(), s) != orb.end();
                for (int i : orb) {
                    if (has_s)
                        pair.dtilde.forced[i] = D;
                    else
                        pair.dtilde.param[i] = orb.front();
                }
            }
            report.pairs.push_back(std::move(pair));
        }
    }
    return report;
}

std::vector<ClusterSymmetricMap> cluster_symmetric_set_of(const LaurentPoly& F) {
    std::vector<ClusterSymmetricMap> out;
    for (const auto& pair : find_pairs(F).pairs)
        if (pair.dtilde.admits_zero()) out.push_back(pair.map);
    return out;
}

std::optional<Seed> find_cs_seed(const LaurentPoly& F, int entry_bound) {
    auto maps = cluster_symmetric_set_of(F);
    if (maps.empty()) return std::nullopt;
    auto seeds = seed_search(maps, entry_bound);
    if (seeds.empty()) return std::nullopt;
    return seeds.front();
}

} // namespace csym
