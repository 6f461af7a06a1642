#include "csym/hle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace csym {

MonomialIndexSet::MonomialIndexSet(ExpVec eta) : eta_(std::move(eta)) {
    for (int e : eta_)
        if (e < 0) throw error("eta must be nonnegative");
    int n = static_cast<int>(eta_.size());
    stride_.assign(n, 1);
    for (int i = n - 2; i >= 0; --i) stride_[i] = stride_[i + 1] * (eta_[i + 1] + 1);
    size_ = n == 0 ? 1 : stride_[0] * (eta_[0] + 1);
}

bool MonomialIndexSet::contains(const ExpVec& j) const {
    if (j.size() != eta_.size()) return false;
    for (size_t i = 0; i < j.size(); ++i)
        if (j[i] < 0 || j[i] > eta_[i]) return false;
    return true;
}

long MonomialIndexSet::index_of(const ExpVec& j) const {
    if (!contains(j)) return -1;
    long pos = 0;
    for (size_t i = 0; i < j.size(); ++i) pos += stride_[i] * j[i];
    return pos;
}

ExpVec MonomialIndexSet::at(long pos) const {
    ExpVec j(eta_.size());
    for (size_t i = 0; i < eta_.size(); ++i) {
        j[i] = static_cast<int>(pos / stride_[i]);
        pos %= stride_[i];
    }
    return j;
}

std::vector<Int> power_coeffs(const std::vector<Int>& Z, int k) {
    if (k < 0) throw error("power_coeffs: k must be nonnegative");
    std::vector<Int> out{1};
    for (int i = 0; i < k; ++i) {
        std::vector<Int> next(out.size() + Z.size() - 1, 0);
        for (size_t a = 0; a < out.size(); ++a)
            for (size_t b = 0; b < Z.size(); ++b) next[a + b] += out[a] * Z[b];
        out = std::move(next);
    }
    return out;
}

ExpVec shift_vector(const Seedlet& w, int k, int l, int i) {
    ExpVec bp = exp_pos(w.b);
    ExpVec bm = exp_pos(exp_neg(w.b));
    ExpVec out = exp_add(exp_scale(l, bp), exp_scale(k * w.r - l, bm));
    out[w.s] -= i;
    return out;
}

namespace {

void check_preconditions(const ClusterSymmetricMap& psi, const ExpVec& eta,
                         const ExpVec& d) {
    int n = psi.nvars();
    if (static_cast<int>(eta.size()) != n || static_cast<int>(d.size()) != n)
        throw error("eta/d size mismatch");
    for (int e : eta)
        if (e < 0) throw error("eta must be nonnegative");
    if (psi.sigma.act(d) != d)
        throw precondition_error("d != sigma(d)");
    int s = psi.s, t = psi.t();
    if (eta[s] != eta[t])
        throw precondition_error("eta_s != eta_{sigma^{-1}(s)}");
    if (eta[s] != 2 * d[s])
        throw precondition_error("eta_s != 2 d_s");
    if (eta[t] != 2 * d[t])
        throw precondition_error("eta_{sigma^{-1}(s)} != 2 d_{sigma^{-1}(s)}");
}

// Appends HLE(sigma', s', omega', eta, d, k) for all k in [0, d_{s'}].
// For each k the equations compare, coefficientwise,
//   f_{sigma'^{-1}(s'), d-k}(sigma'(x))  with  f_{s', d+k}(x) P^k(x),
// which after aligning exponents splits into three index-set cases over
// the slice pi_{s'} = d_{s'} - k.
void append_side(LinearSystem& sys, const MonomialIndexSet& N,
                 const Permutation& sigma, const Seedlet& omega,
                 const ExpVec& d) {
    int s = omega.s;
    for (int k = 0; k <= d[s]; ++k) {
        std::vector<Int> cs = power_coeffs(omega.Z, k);
        std::vector<ExpVec> shifts;
        std::vector<Int> coeffs;
        for (int l = 0; l <= k * omega.r; ++l) {
            if (l < static_cast<int>(cs.size()) && cs[l] != 0) {
                shifts.push_back(shift_vector(omega, k, l, 2 * k));
                coeffs.push_back(cs[l]);
            }
        }
        int v = d[s] - k;

        // Slice of sigma^{-1}(N) union (N + shifts) at pi_s = v.
        std::set<ExpVec> js;
        for (long pos = 0; pos < N.size(); ++pos) {
            ExpVec u = N.at(pos);
            ExpVec j = sigma.inverse().act(u);
            if (j[s] == v) js.insert(std::move(j));
        }
        for (long pos = 0; pos < N.size(); ++pos) {
            ExpVec u = N.at(pos);
            if (u[s] != d[s] + k) continue;
            for (const auto& sh : shifts) {
                ExpVec j = exp_add(u, sh);
                js.insert(std::move(j));
            }
        }

        for (const auto& j : js) {
            std::map<long, Rat> row;
            ExpVec sj = sigma.act(j);
            long left = N.index_of(sj);
            if (left >= 0) row[left] += 1;
            for (size_t l = 0; l < shifts.size(); ++l) {
                long right = N.index_of(exp_sub(j, shifts[l]));
                if (right >= 0) row[right] -= Rat(coeffs[l]);
            }
            std::vector<std::pair<long, Rat>> entries;
            for (auto& [col, c] : row)
                if (c != 0) entries.emplace_back(col, c);
            if (!entries.empty()) sys.rows.push_back(std::move(entries));
        }
    }
}

} // namespace

LinearSystem build_hle(const ClusterSymmetricMap& psi, const ExpVec& eta,
                       const ExpVec& d) {
    return build_hle(std::vector<ClusterSymmetricMap>{psi}, eta, d);
}

LinearSystem build_hle(const std::vector<ClusterSymmetricMap>& maps,
                       const ExpVec& eta, const ExpVec& d) {
    if (maps.empty()) throw error("build_hle: no maps");
    MonomialIndexSet N(eta);
    LinearSystem sys;
    sys.width = N.size();
    for (const auto& psi : maps) {
        check_preconditions(psi, eta, d);
        append_side(sys, N, psi.sigma, psi.omega, d);
        int t = psi.t();
        Seedlet omega_t =
            make_seedlet(t, psi.sigma.act(psi.omega.b), psi.omega.r, psi.omega.Z);
        append_side(sys, N, psi.sigma.inverse(), omega_t, d);
    }
    return sys;
}

namespace {

using SparseRow = std::vector<std::pair<long, Rat>>;

// row -= c * pivot (pivot has leading coefficient 1).
SparseRow axpy(const SparseRow& row, const Rat& c, const SparseRow& pivot) {
    SparseRow out;
    out.reserve(row.size() + pivot.size());
    size_t a = 0, b = 0;
    while (a < row.size() || b < pivot.size()) {
        if (b == pivot.size() || (a < row.size() && row[a].first < pivot[b].first)) {
            out.push_back(row[a++]);
        } else if (a == row.size() || pivot[b].first < row[a].first) {
            out.emplace_back(pivot[b].first, -c * pivot[b].second);
            ++b;
        } else {
            Rat v = row[a].second - c * pivot[b].second;
            if (v != 0) out.emplace_back(row[a].first, v);
            ++a;
            ++b;
        }
    }
    return out;
}

} // namespace

KernelBasis solve_kernel(const LinearSystem& sys) {
    const long W = sys.width;
    // Incremental sparse echelon: pivots[col] = row with leading column col,
    // normalized to leading coefficient 1.
    std::map<long, SparseRow> pivots;
    for (const auto& input : sys.rows) {
        SparseRow row = input;
        while (!row.empty()) {
            auto it = pivots.find(row.front().first);
            if (it == pivots.end()) break;
            row = axpy(row, row.front().second, it->second);
        }
        if (row.empty()) continue;
        Rat lead = row.front().second;
        if (lead != 1)
            for (auto& [c, v] : row) v /= lead;
        pivots.emplace(row.front().first, std::move(row));
    }

    // Back substitution to RREF: eliminate later pivot columns from earlier
    // rows, walking pivots from the largest column down.
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        SparseRow& row = it->second;
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t k = 1; k < row.size(); ++k) {
                auto p = pivots.find(row[k].first);
                if (p != pivots.end() && p->first != it->first) {
                    row = axpy(row, row[k].second, p->second);
                    changed = true;
                    break;
                }
            }
        }
    }

    std::vector<char> is_pivot(W, 0);
    for (auto& [col, row] : pivots) is_pivot[col] = 1;

    KernelBasis out;
    out.width = W;
    for (long f = 0; f < W; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(W, Rat(0));
        v[f] = 1;
        for (auto& [col, row] : pivots) {
            for (auto& [c, val] : row)
                if (c == f) v[col] = -val;
        }
        out.vecs.push_back(std::move(v));
    }
    // Canonical RREF kernel basis (unit at its own free column); scale so
    // the first nonzero entry in column order is 1.
    for (auto& v : out.vecs) {
        for (long c = 0; c < W; ++c) {
            if (v[c] != 0) {
                if (v[c] != 1) {
                    Rat lead = v[c];
                    for (long k = c; k < W; ++k) v[k] /= lead;
                }
                break;
            }
        }
    }
    return out;
}

std::vector<InvariantReport> invariants_for(
    const std::vector<ClusterSymmetricMap>& maps, const ExpVec& eta,
    const ExpVec& d) {
    LinearSystem sys = build_hle(maps, eta, d);
    KernelBasis basis = solve_kernel(sys);
    MonomialIndexSet N(eta);
    int n = static_cast<int>(eta.size());

    std::vector<InvariantReport> out;
    for (const auto& vec : basis.vecs) {
        LaurentPoly T(n);
        for (long pos = 0; pos < N.size(); ++pos)
            if (vec[pos] != 0) T.add_term(N.at(pos), vec[pos]);
        InvariantReport rep;
        rep.F = T.mul_monomial(exp_neg(d));
        TypedLaurent ty = normalize_type(rep.F);
        rep.eta_realized = ty.eta;
        rep.d_realized = ty.d;
        rep.full_support = true;
        for (int i = 0; i < n; ++i) {
            if (eta[i] == 0) continue;
            bool hit = false;
            for (auto& [e, c] : T.terms())
                if (e[i] == eta[i]) { hit = true; break; }
            if (!hit) rep.full_support = false;
        }
        out.push_back(std::move(rep));
    }
    return out;
}

bool span_has_full_support(const KernelBasis& basis, const MonomialIndexSet& N) {
    const ExpVec& eta = N.eta();
    int n = static_cast<int>(eta.size());
    if (basis.vecs.empty()) return false;
    for (int i = 0; i < n; ++i) {
        if (eta[i] == 0) continue;
        bool hit = false;
        for (const auto& vec : basis.vecs) {
            for (long pos = 0; pos < N.size() && !hit; ++pos)
                if (vec[pos] != 0 && N.at(pos)[i] == eta[i]) hit = true;
            if (hit) break;
        }
        if (!hit) return false;
    }
    return true;
}

std::vector<Rat> coeff_vector(const LaurentPoly& F, const MonomialIndexSet& N,
                              const ExpVec& d) {
    std::vector<Rat> v(N.size(), Rat(0));
    for (auto& [e, c] : F.terms()) {
        long pos = N.index_of(exp_add(e, d));
        if (pos < 0) throw error("coeff_vector: term outside the eta box");
        v[pos] = c;
    }
    return v;
}

bool in_span(const KernelBasis& basis, const std::vector<Rat>& v) {
    const long W = basis.width;
    std::map<long, std::vector<Rat>> piv; // lead column -> normalized row
    auto reduce = [&](std::vector<Rat> x) {
        long c = 0;
        while (c < W) {
            if (x[c] == 0) { ++c; continue; }
            auto it = piv.find(c);
            if (it == piv.end()) break;
            Rat f = x[c];
            for (long m = c; m < W; ++m) x[m] -= f * it->second[m];
        }
        return x;
    };
    for (const auto& b : basis.vecs) {
        auto row = reduce(b);
        long l = -1;
        for (long c = 0; c < W; ++c)
            if (row[c] != 0) { l = c; break; }
        if (l < 0) continue;
        Rat lc = row[l];
        for (long m = l; m < W; ++m) row[m] /= lc;
        piv.emplace(l, std::move(row));
    }
    auto rem = reduce(v);
    for (const auto& x : rem)
        if (x != 0) return false;
    return true;
}

bool feasible_eta(const ClusterSymmetricMap& psi, const ExpVec& eta,
                  const ExpVec& d) {
    int n = psi.nvars();
    if (static_cast<int>(eta.size()) != n || static_cast<int>(d.size()) != n)
        throw error("eta/d size mismatch");
    if (psi.sigma.act(d) != d) return false;
    int s = psi.s, t = psi.t();
    if (eta[s] != eta[t] || eta[s] != 2 * d[s] || eta[t] != 2 * d[t]) return false;
    Permutation inv = psi.sigma.inverse();
    for (int k = 0; k < n; ++k) {
        int lo = 2 * std::min(eta[k], eta[inv(k)]);
        int mid = eta[s] * psi.omega.r * std::abs(psi.omega.b[k]);
        int hi = 2 * std::abs(eta[k] - eta[inv(k)]);
        if (!(lo >= mid && mid >= hi)) return false;
    }
    return true;
}

std::vector<ExpVec> feasible_eta_list(const ClusterSymmetricMap& psi,
                                      const ExpVec& d, int cap) {
    int n = psi.nvars();
    std::vector<ExpVec> out;
    ExpVec eta(n, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            if (feasible_eta(psi, eta, d)) out.push_back(eta);
            return;
        }
        if (i == psi.s || i == psi.t()) {
            eta[i] = 2 * d[psi.s];
            if (eta[i] <= cap) rec(i + 1);
            return;
        }
        for (int v = 0; v <= cap; ++v) {
            eta[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

bool pair_feasibility(const ClusterSymmetricMap& psi1,
                      const ClusterSymmetricMap& psi2, const ExpVec& eta) {
    int s = psi1.s;
    if (eta[s] == 0) return true;
    const ExpVec& b = psi1.omega.b;
    const ExpVec& bp = psi2.omega.b;
    int sp = psi2.s;
    const Permutation& sigma = psi1.sigma;
    const Permutation& tau = psi2.sigma;
    long m1 = std::max(std::abs(b[sp]), std::abs(b[sigma(sp)]));
    long m2 = std::max({std::abs(bp[s]), std::abs(bp[tau(s)]),
                        std::abs(bp[sigma.inverse()(s)]),
                        std::abs(bp[tau(sigma.inverse()(s))])});
    long prod = static_cast<long>(psi1.omega.r) * psi2.omega.r * m1 * m2;
    return prod <= 4;
}

std::vector<LaurentPoly> identity_case_express(const LaurentPoly& F,
                                               const ClusterSymmetricMap& psi) {
    if (!psi.sigma.is_identity())
        throw error("identity_case_express: sigma must be the identity");
    if (!is_invariant(F, psi))
        throw error("identity_case_express: F is not invariant under psi");
    int n = F.nvars();
    int s = psi.s;
    TypedLaurent ty = normalize_type(F);
    int ds = ty.d[s], eta_s = ty.eta[s];
    LaurentPoly P = exchange_poly(psi.omega);

    // Power sums p_m(g, P) with p_0 = 2, p_1 = g, p_m = g p_{m-1} - P p_{m-2},
    // kept as coefficient lists in powers of g.
    auto mul_g = [&](const std::vector<LaurentPoly>& a) {
        std::vector<LaurentPoly> out(a.size() + 1, LaurentPoly::zero(n));
        for (size_t i = 0; i < a.size(); ++i) out[i + 1] = a[i];
        return out;
    };
    auto sub_scaled = [&](std::vector<LaurentPoly> a,
                          const std::vector<LaurentPoly>& b,
                          const LaurentPoly& f) {
        if (a.size() < b.size()) a.resize(b.size(), LaurentPoly::zero(n));
        for (size_t i = 0; i < b.size(); ++i) a[i] = a[i] - b[i] * f;
        return a;
    };

    std::vector<std::vector<LaurentPoly>> p;
    p.push_back({LaurentPoly::constant(n, Rat(2))});
    p.push_back({LaurentPoly::zero(n), LaurentPoly::constant(n, Rat(1))});
    for (int m = 2; m <= ds; ++m)
        p.push_back(sub_scaled(mul_g(p[m - 1]), p[m - 2], P));

    std::vector<LaurentPoly> H(ds + 1, LaurentPoly::zero(n));
    H[0] = slice(ty, s, ds);
    for (int i = 0; i < ds; ++i) {
        LaurentPoly f = slice(ty, s, eta_s - i);
        const auto& pm = p[ds - i];
        for (size_t m = 0; m < pm.size(); ++m)
            if (!pm[m].is_zero()) H[m] = H[m] + f * pm[m];
    }
    // F = x^{-(d - d_s e_s)} (T / x_s^{d_s}); fold the remaining monomial in.
    ExpVec rest = ty.d;
    rest[s] = 0;
    for (auto& h : H) h = h.mul_monomial(exp_neg(rest));
    return H;
}

LaurentPoly normalize_d(const LaurentPoly& F, const ClusterSymmetricMap& psi) {
    // x^{d - d_s e_orbit} F: the resulting type has d supported on the
    // sigma-orbit of s only, with value d_s there.
    TypedLaurent ty = normalize_type(F);
    ExpVec m = ty.d;
    for (int i : psi.sigma.orbit_of(psi.s)) m[i] -= ty.d[psi.s];
    return F.mul_monomial(m);
}

} // namespace csym
