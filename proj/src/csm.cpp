#include "csym/csm.hpp"

namespace csym {

Seedlet make_seedlet(int s, ExpVec b, int r, std::vector<Int> Z) {
    int n = static_cast<int>(b.size());
    if (s < 0 || s >= n) throw error("seedlet direction out of range");
    if (b[s] != 0) throw error("seedlet requires b_s = 0");
    if (r < 1) throw error("seedlet requires r >= 1");
    if (static_cast<int>(Z.size()) != r + 1)
        throw error("seedlet Z must have r+1 coefficients");
    for (auto& z : Z)
        if (z < 0) throw error("seedlet Z coefficients must be nonnegative");
    if (Z.front() <= 0 || Z.back() <= 0)
        throw error("seedlet requires z_0 > 0 and z_r > 0");
    Seedlet w;
    w.s = s;
    w.b = std::move(b);
    w.r = r;
    w.Z = std::move(Z);
    return w;
}

LaurentPoly exchange_poly(const Seedlet& w) {
    int n = w.nvars();
    ExpVec bp = exp_pos(w.b);
    ExpVec bm = exp_pos(exp_neg(w.b));
    LaurentPoly P(n);
    for (int i = 0; i <= w.r; ++i) {
        if (w.Z[i] == 0) continue;
        P.add_term(exp_add(exp_scale(i, bp), exp_scale(w.r - i, bm)),
                   Rat(w.Z[i]));
    }
    return P;
}

Seedlet negate_b(const Seedlet& w) {
    std::vector<Int> Z(w.Z.rbegin(), w.Z.rend());
    return make_seedlet(w.s, exp_neg(w.b), w.r, std::move(Z));
}

ClusterSymmetricMap make_map(Permutation sigma, int s, Seedlet omega) {
    if (omega.nvars() != sigma.size()) throw error("map size mismatch");
    if (omega.s != s) throw error("seedlet direction must equal the map's s");
    ClusterSymmetricMap psi;
    psi.sigma = std::move(sigma);
    psi.s = s;
    psi.omega = std::move(omega);
    return psi;
}

std::vector<Rat> apply_numeric(const ClusterSymmetricMap& psi,
                               const std::vector<Rat>& x) {
    int n = psi.nvars();
    if (static_cast<int>(x.size()) != n) throw error("point size mismatch");
    if (x[psi.s] == 0) throw error("apply: x_s = 0");
    std::vector<Rat> out(n);
    for (int i = 0; i < n; ++i) out[i] = x[psi.sigma(i)];
    LaurentPoly P = exchange_poly(psi.omega);
    out[psi.t()] = P.eval(x) / x[psi.s];
    return out;
}

RationalFunctionTuple apply_symbolic(const ClusterSymmetricMap& psi) {
    int n = psi.nvars();
    RationalFunctionTuple out;
    out.num.reserve(n);
    out.den.reserve(n);
    int t = psi.t();
    for (int i = 0; i < n; ++i) {
        if (i == t) {
            out.num.push_back(exchange_poly(psi.omega));
            out.den.push_back(LaurentPoly::variable(n, psi.s));
        } else {
            out.num.push_back(LaurentPoly::variable(n, psi.sigma(i)));
            out.den.push_back(LaurentPoly::constant(n, Rat(1)));
        }
    }
    return out;
}

ClusterSymmetricMap inverse(const ClusterSymmetricMap& psi) {
    int t = psi.t();
    Seedlet wt = make_seedlet(t, psi.sigma.act(psi.omega.b), psi.omega.r,
                              psi.omega.Z);
    return make_map(psi.sigma.inverse(), t, std::move(wt));
}

ClusterSymmetricMap conjugate(const ClusterSymmetricMap& psi,
                              const Permutation& tau) {
    int t = tau(psi.s);
    Seedlet wt = make_seedlet(t, tau.inverse().act(psi.omega.b), psi.omega.r,
                              psi.omega.Z);
    Permutation sig = tau.compose(psi.sigma).compose(tau.inverse());
    return make_map(std::move(sig), t, std::move(wt));
}

// Write F = T / x^d. With t = sigma^{-1}(s) and w = d permuted by sigma^{-1},
//   T(psi(x)) = sum_i f_{t,i}(sigma(x)) (P/x_s)^i,
//   psi(x)^d  = x^w (P/x_s^2)^{d_t},
// so F(psi(x)) = F(x) iff U x_s^{2 d_t - eta_t} x^d = T x^w P^{d_t},
// where U = sum_i f_{t,i}(sigma(x)) P^i x_s^{eta_t - i}.
bool is_invariant(const LaurentPoly& F, const ClusterSymmetricMap& psi) {
    int n = F.nvars();
    if (n != psi.nvars()) throw error("variable count mismatch");
    if (F.is_zero()) return true;

    TypedLaurent ty = normalize_type(F);
    int t = psi.t();
    int eta_t = ty.eta[t];
    int d_t = ty.d[t];
    LaurentPoly P = exchange_poly(psi.omega);

    LaurentPoly U(n);
    LaurentPoly Ppow = LaurentPoly::constant(n, Rat(1));
    for (int i = 0; i <= eta_t; ++i) {
        LaurentPoly f = slice(ty, t, i).permute(psi.sigma);
        if (!f.is_zero())
            U = U + f * Ppow.mul_monomial(exp_unit(n, psi.s, eta_t - i));
        if (i < eta_t) Ppow = Ppow * P;
    }

    ExpVec w = psi.sigma.inverse().act(ty.d);
    ExpVec ls = exp_add(ty.d, exp_unit(n, psi.s, 2 * d_t - eta_t));
    LaurentPoly lhs = U.mul_monomial(ls);
    LaurentPoly rhs = LaurentPoly(n);
    if (d_t >= 0) {
        rhs = ty.T.mul_monomial(w) * P.pow(d_t);
    } else {
        lhs = lhs * P.pow(-d_t);
        rhs = ty.T.mul_monomial(w);
    }
    return lhs == rhs;
}

} // namespace csym
