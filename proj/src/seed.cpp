#include "csym/seed.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace csym {

namespace {

bool is_reciprocal(const std::vector<Int>& Z) {
    int r = static_cast<int>(Z.size()) - 1;
    if (r < 1) return false;
    if (Z[0] != 1 || Z[r] != 1) return false;
    for (int t = 1; t < r; ++t) {
        if (Z[t] < 0) return false;
        if (Z[t] != Z[r - t]) return false;
    }
    return true;
}

int sgn(int v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

IntMatrix neg(const IntMatrix& B) {
    IntMatrix out = B;
    for (auto& row : out)
        for (auto& v : row) v = -v;
    return out;
}

} // namespace

Seed make_seed(IntMatrix B, std::vector<int> R, std::vector<std::vector<Int>> Z) {
    size_t n = R.size();
    if (B.size() != n || Z.size() != n) throw error("seed component sizes differ");
    for (auto& row : B)
        if (row.size() != n) throw error("exchange matrix is not square");
    for (size_t i = 0; i < n; ++i) {
        if (B[i][i] != 0) throw error("exchange matrix has nonzero diagonal");
        if (R[i] < 1) throw error("mutation degrees must be positive");
        if (static_cast<int>(Z[i].size()) != R[i] + 1)
            throw error("Z_k must have r_k+1 coefficients");
        if (!is_reciprocal(Z[i]))
            throw error("Z_k must be reciprocal with z_0 = z_r = 1");
    }
    if (!find_symmetrizer(B)) throw error("exchange matrix is not skew-symmetrizable");
    Seed s;
    s.B = std::move(B);
    s.R = std::move(R);
    s.Z = std::move(Z);
    return s;
}

Seedlet seedlet_at(const Seed& seed, int s) {
    int n = seed.rank();
    if (s < 0 || s >= n) throw error("direction out of range");
    ExpVec b(n);
    for (int i = 0; i < n; ++i) b[i] = seed.B[i][s];
    return make_seedlet(s, std::move(b), seed.R[s], seed.Z[s]);
}

ClusterSymmetricMap mutation_map(const Seed& seed, int s) {
    return make_map(Permutation::identity(seed.rank()), s, seedlet_at(seed, s));
}

std::vector<LaurentPoly> exchange_tuple(const Seed& seed) {
    std::vector<LaurentPoly> out;
    out.reserve(seed.rank());
    for (int s = 0; s < seed.rank(); ++s)
        out.push_back(exchange_poly(seedlet_at(seed, s)));
    return out;
}

IntMatrix mutate_matrix(const IntMatrix& B, const std::vector<int>& R, int s) {
    int n = static_cast<int>(B.size());
    IntMatrix out = B;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == s || j == s) {
                out[i][j] = -B[i][j];
            } else {
                int bis = B[i][s], bsj = B[s][j];
                out[i][j] = B[i][j] + R[s] * (std::max(bis, 0) * bsj +
                                              bis * std::max(-bsj, 0));
            }
        }
    }
    return out;
}

Seed mutate(const Seed& seed, int s) {
    if (s < 0 || s >= seed.rank()) throw error("direction out of range");
    Seed out = seed;
    out.B = mutate_matrix(seed.B, seed.R, s);
    return out;
}

Seed permute_seed(const Seed& seed, const Permutation& sigma) {
    int n = seed.rank();
    if (sigma.size() != n) throw error("permutation size mismatch");
    Seed out = seed;
    for (int i = 0; i < n; ++i) {
        out.R[i] = seed.R[sigma(i)];
        out.Z[i] = seed.Z[sigma(i)];
        for (int j = 0; j < n; ++j) out.B[i][j] = seed.B[sigma(i)][sigma(j)];
    }
    return out;
}

std::optional<std::vector<int>> find_symmetrizer(const IntMatrix& B) {
    int n = static_cast<int>(B.size());
    // s_i b_ij = -s_j b_ji forces matching zero patterns, opposite signs,
    // and fixes the ratio s_j / s_i on every edge; propagate and check cycles.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if ((B[i][j] == 0) != (B[j][i] == 0)) return std::nullopt;
            if (B[i][j] != 0 && sgn(B[i][j]) == sgn(B[j][i])) return std::nullopt;
        }
    std::vector<Rat> val(n, Rat(0));
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int root = 0; root < n; ++root) {
        if (comp[root] >= 0) continue;
        comp[root] = ncomp;
        val[root] = 1;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < n; ++j) {
                if (B[i][j] == 0) continue;
                Rat ratio = make_rat(abs(Int(B[i][j])), abs(Int(B[j][i])));
                Rat vj = val[i] * ratio; // s_j = s_i |b_ij| / |b_ji|
                if (comp[j] < 0) {
                    comp[j] = ncomp;
                    val[j] = vj;
                    stack.push_back(j);
                } else if (val[j] != vj) {
                    return std::nullopt;
                }
            }
        }
        ++ncomp;
    }
    // Scale each component to minimal positive integers.
    std::vector<int> out(n, 1);
    for (int c = 0; c < ncomp; ++c) {
        Int l(1), g(0);
        for (int i = 0; i < n; ++i)
            if (comp[i] == c) l = lcm(l, val[i].get_den());
        for (int i = 0; i < n; ++i)
            if (comp[i] == c) g = gcd(g, Int(val[i].get_num() * (l / val[i].get_den())));
        for (int i = 0; i < n; ++i) {
            if (comp[i] != c) continue;
            Int v = val[i].get_num() * (l / val[i].get_den()) / g;
            if (!v.fits_sint_p()) throw error("symmetrizer entry overflow");
            out[i] = static_cast<int>(v.get_si());
        }
    }
    return out;
}

std::vector<SeedSymmetry> cluster_symmetric_set(const Seed& seed) {
    int n = seed.rank();
    if (n > 8) throw error("cluster_symmetric_set: rank > 8 refused (n! n search)");
    std::vector<SeedSymmetry> out;
    IntMatrix negB = neg(seed.B);
    for (const auto& sigma : all_permutations(n)) {
        bool rz_ok = true;
        for (int i = 0; i < n && rz_ok; ++i)
            rz_ok = seed.R[sigma(i)] == seed.R[i] && seed.Z[sigma(i)] == seed.Z[i];
        if (!rz_ok) continue;
        for (int s = 0; s < n; ++s) {
            IntMatrix M = mutate_matrix(seed.B, seed.R, s);
            IntMatrix MP(n, std::vector<int>(n));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) MP[i][j] = M[sigma(i)][sigma(j)];
            if (MP == seed.B)
                out.push_back({sigma, s, +1});
            else if (MP == negB)
                out.push_back({sigma, s, -1});
        }
    }
    return out;
}

bool corresponds(const ClusterSymmetricMap& psi, const Seed& seed) {
    int n = seed.rank();
    if (psi.nvars() != n) return false;
    int s = psi.s;
    if (seed.R[s] != psi.omega.r || seed.Z[s] != psi.omega.Z) return false;
    ExpVec col(n);
    for (int i = 0; i < n; ++i) col[i] = seed.B[i][s];
    if (psi.omega.b != col && psi.omega.b != exp_neg(col)) return false;
    for (int i = 0; i < n; ++i)
        if (seed.R[psi.sigma(i)] != seed.R[i] || seed.Z[psi.sigma(i)] != seed.Z[i])
            return false;
    IntMatrix M = mutate_matrix(seed.B, seed.R, s);
    IntMatrix MP(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) MP[i][j] = M[psi.sigma(i)][psi.sigma(j)];
    return MP == seed.B || MP == neg(seed.B);
}

namespace {

// Candidate exchange matrices compatible with sigma*mu_s(B) = eps*B, given
// the pinned column s. The defining relation
//   B[sigma^{-1}(p)][sigma^{-1}(q)] = eps * mu_s(B)[p][q]
// propagates values along cycles of (p,q) -> (sigma^{-1}(p), sigma^{-1}(q)).
// Cycles touching row/col s are fully determined once row s is chosen;
// the remaining cycles either close to a forced value or leave one free
// entry each.
class MatrixPropagator {
public:
    MatrixPropagator(int n, const Permutation& sigma, int s, int r_s,
                     const ExpVec& col_s, int bound)
        : n_(n), inv_(sigma.inverse()), s_(s), rs_(r_s), bound_(bound) {
        B_.assign(n, std::vector<int>(n, 0));
        known_.assign(n, std::vector<char>(n, 0));
        for (int i = 0; i < n; ++i) {
            known_[i][i] = 1;
            if (i != s) set(i, s, col_s[i]);
        }
    }

    // Enumerates completions for both eps and all row-s choices compatible
    // with the sign pattern of column s; calls sink on every full matrix.
    void run(const std::function<void(const IntMatrix&)>& sink) {
        for (int i = 0; i < n_; ++i)
            if (i != s_ && std::abs(B_[i][s_]) > bound_) return;
        for (int eps : {+1, -1}) {
            eps_ = eps;
            enumerate_row_s(0, sink);
        }
    }

private:
    void set(int i, int j, int v) {
        B_[i][j] = v;
        known_[i][j] = 1;
    }

    void enumerate_row_s(int q, const std::function<void(const IntMatrix&)>& sink) {
        if (q == n_) {
            propagate(sink);
            return;
        }
        if (q == s_) {
            enumerate_row_s(q + 1, sink);
            return;
        }
        int c = B_[q][s_]; // column entry, already pinned
        if (c == 0) {
            set(s_, q, 0);
            enumerate_row_s(q + 1, sink);
        } else {
            for (int v = 1; v <= bound_; ++v) {
                set(s_, q, c > 0 ? -v : v);
                enumerate_row_s(q + 1, sink);
            }
        }
        known_[s_][q] = 0;
    }

    int mutated(int p, int q) const {
        if (p == s_ || q == s_) return -B_[p][q];
        int bps = B_[p][s_], bsq = B_[s_][q];
        return B_[p][q] + rs_ * (std::max(bps, 0) * bsq + bps * std::max(-bsq, 0));
    }

    void propagate(const std::function<void(const IntMatrix&)>& sink) {
        std::vector<std::vector<char>> snap = known_;
        IntMatrix saved = B_;
        std::vector<std::vector<std::pair<int, int>>> free_cycles;
        bool dead = false;

        std::vector<std::vector<char>> visited(n_, std::vector<char>(n_, 0));
        for (int p0 = 0; p0 < n_ && !dead; ++p0) {
            for (int q0 = 0; q0 < n_ && !dead; ++q0) {
                if (p0 == q0 || visited[p0][q0]) continue;
                std::vector<std::pair<int, int>> cyc;
                int p = p0, q = q0;
                int start = -1;
                do {
                    visited[p][q] = 1;
                    cyc.emplace_back(p, q);
                    if (start < 0 && (p == s_ || q == s_))
                        start = static_cast<int>(cyc.size()) - 1;
                    int np = inv_(p), nq = inv_(q);
                    p = np;
                    q = nq;
                } while (p != p0 || q != q0);
                if (start >= 0) {
                    if (!walk_known(cyc, start)) dead = true;
                } else {
                    free_cycles.push_back(std::move(cyc));
                }
            }
        }
        if (!dead) fill_free(free_cycles, 0, sink);
        B_ = saved;
        known_ = snap;
    }

    // Propagate around a cycle starting from a known position; every
    // position on the cycle becomes determined, and revisits must agree.
    bool walk_known(const std::vector<std::pair<int, int>>& cyc, int start) {
        int L = static_cast<int>(cyc.size());
        for (int m = 0; m < L; ++m) {
            auto [p, q] = cyc[(start + m) % L];
            auto [np, nq] = cyc[(start + m + 1) % L];
            int v = eps_ * mutated(p, q);
            if (known_[np][nq]) {
                if (B_[np][nq] != v) return false;
            } else {
                if (std::abs(v) > bound_) return false;
                set(np, nq, v);
            }
        }
        return true;
    }

    void fill_free(const std::vector<std::vector<std::pair<int, int>>>& cycles,
                   size_t idx, const std::function<void(const IntMatrix&)>& sink) {
        if (idx == cycles.size()) {
            sink(B_);
            return;
        }
        const auto& cyc = cycles[idx];
        int L = static_cast<int>(cyc.size());
        // v_{m+1} = eps (v_m + corr_m); around the cycle v_0 = eps^L v_0 + C.
        std::vector<int> corr(L);
        for (int m = 0; m < L; ++m) {
            auto [p, q] = cyc[m];
            int bps = B_[p][s_], bsq = B_[s_][q];
            corr[m] = rs_ * (std::max(bps, 0) * bsq + bps * std::max(-bsq, 0));
        }
        long C = 0;
        int epsL = 1;
        for (int m = 0; m < L; ++m) {
            C = eps_ * (C + corr[m]);
            epsL *= eps_;
        }
        auto assign = [&](long v0) {
            long v = v0;
            for (int m = 0; m < L; ++m) {
                if (std::abs(v) > bound_) return false;
                set(cyc[m].first, cyc[m].second, static_cast<int>(v));
                v = eps_ * (v + corr[m]);
            }
            return true;
        };
        auto clear = [&]() {
            for (auto [p, q] : cyc) known_[p][q] = 0;
        };
        if (epsL == 1) {
            if (C != 0) return;
            for (int v0 = -bound_; v0 <= bound_; ++v0) {
                if (assign(v0)) fill_free(cycles, idx + 1, sink);
                clear();
            }
        } else {
            if (C % 2 != 0) return;
            if (assign(C / 2)) fill_free(cycles, idx + 1, sink);
            clear();
        }
    }

    int n_;
    Permutation inv_;
    int s_;
    int rs_;
    int bound_;
    int eps_ = 1;
    IntMatrix B_;
    std::vector<std::vector<char>> known_;
};

} // namespace

std::vector<Seed> seed_search(const std::vector<ClusterSymmetricMap>& maps,
                              int entry_bound) {
    if (maps.empty()) throw error("seed_search: at least one map required");
    if (entry_bound < 1) throw error("seed_search: entry bound must be >= 1");
    int n = maps[0].nvars();
    for (const auto& m : maps)
        if (m.nvars() != n) throw error("seed_search: maps have mixed sizes");

    // A seed column must carry a reciprocal Z with ends 1; otherwise no
    // seed corresponds to the map at all.
    for (const auto& m : maps)
        if (!is_reciprocal(m.omega.Z)) return {};

    int rmax = 1;
    Int zmax = 1;
    for (const auto& m : maps) {
        rmax = std::max(rmax, m.omega.r);
        for (auto& z : m.omega.Z) zmax = std::max(zmax, z);
    }

    // Pin r/Z per mutation direction; conflicting pins mean no seed.
    std::vector<int> pin_r(n, 0);
    std::vector<std::vector<Int>> pin_Z(n);
    for (const auto& m : maps) {
        int s = m.s;
        if (pin_r[s] == 0) {
            pin_r[s] = m.omega.r;
            pin_Z[s] = m.omega.Z;
        } else if (pin_r[s] != m.omega.r || pin_Z[s] != m.omega.Z) {
            return {};
        }
    }

    // r and Z must be constant on orbits of the group generated by all
    // sigmas (sigma(R) = R, sigma(Z) = Z).
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (const auto& m : maps)
        for (int i = 0; i < n; ++i) {
            int a = find(i), b = find(m.sigma(i));
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::vector<std::vector<int>> classes;
    {
        std::vector<int> root_id(n, -1);
        for (int i = 0; i < n; ++i) {
            int r = find(i);
            if (root_id[r] < 0) {
                root_id[r] = static_cast<int>(classes.size());
                classes.emplace_back();
            }
            classes[root_id[r]].push_back(i);
        }
    }
    // Per class: forced (r, Z) or free.
    struct ClassChoice {
        bool pinned = false;
        int r = 1;
        std::vector<Int> Z;
    };
    std::vector<ClassChoice> choice(classes.size());
    for (size_t c = 0; c < classes.size(); ++c) {
        for (int i : classes[c]) {
            if (pin_r[i] == 0) continue;
            if (!choice[c].pinned) {
                choice[c] = {true, pin_r[i], pin_Z[i]};
            } else if (choice[c].r != pin_r[i] || choice[c].Z != pin_Z[i]) {
                return {};
            }
        }
    }

    // Enumerate matrices via the first map, then Z/r choices, then verify
    // every map. Deduplicate and sort for a reproducible result.
    std::set<Seed> found;
    const auto& m0 = maps[0];

    std::vector<ExpVec> col_options;
    col_options.push_back(m0.omega.b);
    ExpVec nb = exp_neg(m0.omega.b);
    if (nb != m0.omega.b) col_options.push_back(nb);

    std::vector<IntMatrix> matrices;
    for (const auto& col : col_options) {
        MatrixPropagator prop(n, m0.sigma, m0.s, m0.omega.r, col, entry_bound);
        prop.run([&](const IntMatrix& B) { matrices.push_back(B); });
    }

    // All (r, Z) assignments across free classes.
    std::vector<std::vector<std::pair<int, std::vector<Int>>>> class_values(
        classes.size());
    for (size_t c = 0; c < classes.size(); ++c) {
        if (choice[c].pinned) {
            class_values[c].push_back({choice[c].r, choice[c].Z});
            continue;
        }
        for (int r = 1; r <= rmax; ++r) {
            std::vector<Int> Z(r + 1, 0);
            Z[0] = Z[r] = 1;
            int nfree = r / 2;
            std::vector<Int> mids(nfree, 0);
            std::function<void(int)> rec = [&](int k) {
                if (k == nfree) {
                    for (int t = 1; t < r; ++t)
                        Z[t] = mids[std::min(t, r - t) - 1];
                    class_values[c].push_back({r, Z});
                    return;
                }
                for (Int z(0); z <= zmax; ++z) {
                    mids[k] = z;
                    rec(k + 1);
                }
            };
            rec(0);
        }
    }

    for (const auto& B : matrices) {
        bool in_bound = true;
        for (int i = 0; i < n && in_bound; ++i)
            for (int j = 0; j < n && in_bound; ++j)
                if (std::abs(B[i][j]) > entry_bound) in_bound = false;
        if (!in_bound || !find_symmetrizer(B)) continue;

        std::vector<size_t> pick(classes.size(), 0);
        std::function<void(size_t)> rec = [&](size_t c) {
            if (c == classes.size()) {
                std::vector<int> R(n);
                std::vector<std::vector<Int>> Z(n);
                for (size_t cc = 0; cc < classes.size(); ++cc)
                    for (int i : classes[cc]) {
                        R[i] = class_values[cc][pick[cc]].first;
                        Z[i] = class_values[cc][pick[cc]].second;
                    }
                Seed seed;
                seed.B = B;
                seed.R = std::move(R);
                seed.Z = std::move(Z);
                for (const auto& m : maps)
                    if (!corresponds(m, seed)) return;
                found.insert(std::move(seed));
                return;
            }
            for (size_t v = 0; v < class_values[c].size(); ++v) {
                pick[c] = v;
                rec(c + 1);
            }
        };
        rec(0);
    }
    return std::vector<Seed>(found.begin(), found.end());
}

namespace {

const IntMatrix kA2{{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}};
const IntMatrix kA3{{0, 1, -1}, {-4, 0, 2}, {4, -2, 0}};
const IntMatrix kA4{{0, 4, -4}, {-1, 0, 2}, {1, -2, 0}};

IntMatrix reindex(const IntMatrix& M, const Permutation& sigma) {
    int n = static_cast<int>(M.size());
    IntMatrix out(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i][j] = M[sigma(i)][sigma(j)];
    return out;
}

} // namespace

Rank3Class classify_rank3(const Seed& seed) {
    if (seed.rank() != 3) throw error("classify_rank3: rank must be 3");
    IntMatrix negB = neg(seed.B);
    for (int s = 0; s < 3; ++s) {
        IntMatrix M = mutate_matrix(seed.B, seed.R, s);
        if (M != seed.B && M != negB)
            throw error("classify_rank3: mu_" + std::to_string(s + 1) +
                        " is not in S(seed)");
    }
    IntMatrix BR(3, std::vector<int>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) BR[i][j] = seed.B[i][j] * seed.R[j];

    for (const auto& sigma : all_permutations(3)) {
        IntMatrix M = reindex(BR, sigma);
        bool zero = true;
        for (auto& row : M)
            for (int v : row)
                if (v != 0) zero = false;
        if (zero) return Rank3Class::A1;
        if (M == kA2) return Rank3Class::A2;
        if (M == kA3) return Rank3Class::A3;
        if (M == kA4) return Rank3Class::A4;
        if (M[0][1] != 0 && M[1][0] != 0 && M[0][2] == 0 && M[2][0] == 0 &&
            M[1][2] == 0 && M[2][1] == 0)
            return Rank3Class::A5;
    }
    return Rank3Class::TrivialRing;
}

std::string to_string(Rank3Class c) {
    switch (c) {
    case Rank3Class::A1: return "A1";
    case Rank3Class::A2: return "A2";
    case Rank3Class::A3: return "A3";
    case Rank3Class::A4: return "A4";
    case Rank3Class::A5: return "A5";
    default: return "trivial-ring";
    }
}

namespace {

struct Rank2Row {
    IntMatrix B;
    std::vector<int> R;
};

const std::vector<Rank2Row> kRank2Rows{
    {{{0, 2}, {-2, 0}}, {1, 1}},  // 1
    {{{0, 2}, {-1, 0}}, {2, 1}},  // 2
    {{{0, 1}, {-1, 0}}, {2, 2}},  // 3
    {{{0, 1}, {-4, 0}}, {1, 1}},  // 4
    {{{0, 1}, {-2, 0}}, {2, 1}},  // 5
    {{{0, 1}, {-1, 0}}, {4, 1}},  // 6
    {{{0, 1}, {-3, 0}}, {1, 1}},  // 7
    {{{0, 1}, {-1, 0}}, {3, 1}},  // 8
    {{{0, 1}, {-2, 0}}, {1, 1}},  // 9
    {{{0, 1}, {-1, 0}}, {2, 1}},  // 10
    {{{0, 1}, {-1, 0}}, {1, 1}},  // 11
};

} // namespace

Rank2Class classify_rank2(const Seed& seed) {
    if (seed.rank() != 2) throw error("classify_rank2: rank must be 2");
    // Row 12: zero matrix, any degrees.
    if (seed.B[0][1] == 0 && seed.B[1][0] == 0) return {false, 12, 1, false};

    long prod = static_cast<long>(seed.R[0]) * seed.R[1] *
                std::abs(seed.B[0][1]) * std::abs(seed.B[1][0]);
    if (prod > 4) return {true, 0, 1, false};

    for (bool swapped : {false, true}) {
        Permutation sigma = swapped ? Permutation::transposition(2, 0, 1)
                                    : Permutation::identity(2);
        IntMatrix B = reindex(seed.B, sigma);
        std::vector<int> R{seed.R[sigma(0)], seed.R[sigma(1)]};
        for (int sign : {+1, -1}) {
            IntMatrix BS = sign == 1 ? B : neg(B);
            for (size_t i = 0; i < kRank2Rows.size(); ++i) {
                if (BS == kRank2Rows[i].B && R == kRank2Rows[i].R)
                    return {false, static_cast<int>(i) + 1, sign, swapped};
            }
        }
    }
    // prod <= 4 cases are covered by the table; reaching here means the
    // seed data is inconsistent with a valid rank-2 seed.
    throw error("classify_rank2: no table row matches");
}

std::string to_string(const Rank2Class& c) {
    if (c.trivial_ring) return "trivial-ring";
    std::string out = "Omega_{2," + std::to_string(c.index) + "}";
    if (c.sign < 0) out += " (negated)";
    if (c.swapped) out += " (swapped)";
    return out;
}

} // namespace csym
