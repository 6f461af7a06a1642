#include "csym/diophantine.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <thread>

namespace csym {

namespace {

// term helper: coefficient times x^e
struct Tm {
    Rat c;
    ExpVec e;
};

LaurentPoly build(int n, std::initializer_list<Tm> terms) {
    LaurentPoly out(n);
    for (const auto& t : terms) out.add_term(t.e, t.c);
    return out;
}

void expect_params(const std::vector<Int>& params, size_t arity,
                   const char* where) {
    if (params.size() != arity)
        throw error(std::string(where) + ": expected " + std::to_string(arity) +
                    " parameter(s), got " + std::to_string(params.size()));
    for (const auto& p : params)
        if (p < 0) throw error(std::string(where) + ": parameters must be nonnegative");
}

std::vector<Int> recip2(const Int& k) { return {Int(1), k, Int(1)}; }
const std::vector<Int> kZ11{Int(1), Int(1)};

struct TableEntry {
    IntMatrix B;
    std::vector<int> R;
    std::vector<std::string> names;
    std::function<std::vector<std::vector<Int>>(const std::vector<Int>&)> Z;
    std::function<LaurentPoly(const std::vector<Int>&)> numerator;
    ExpVec d;
};

const std::vector<TableEntry>& rank3_table() {
    static const std::vector<TableEntry> table = [] {
        std::vector<TableEntry> t;
        // 1: Markov
        t.push_back({{{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}},
                     {1, 1, 1},
                     {},
                     [](const std::vector<Int>&) {
                         return std::vector<std::vector<Int>>{kZ11, kZ11, kZ11};
                     },
                     [](const std::vector<Int>&) {
                         return build(3, {{Rat(1), {2, 0, 0}},
                                          {Rat(1), {0, 2, 0}},
                                          {Rat(1), {0, 0, 2}}});
                     },
                     {1, 1, 1}});
        // 2
        t.push_back({{{0, 2, -1}, {-2, 0, 1}, {2, -2, 0}},
                     {1, 1, 2},
                     {"k3"},
                     [](const std::vector<Int>& k) {
                         return std::vector<std::vector<Int>>{kZ11, kZ11, recip2(k[0])};
                     },
                     [](const std::vector<Int>& k) {
                         return build(3, {{Rat(1), {2, 0, 0}},
                                          {Rat(1), {0, 2, 0}},
                                          {Rat(1), {0, 0, 2}},
                                          {Rat(k[0]), {1, 1, 0}}});
                     },
                     {1, 1, 1}});
        // 3
        t.push_back({{{0, 2, -1}, {-1, 0, 1}, {1, -2, 0}},
                     {2, 1, 2},
                     {"k1", "k3"},
                     [](const std::vector<Int>& k) {
                         return std::vector<std::vector<Int>>{recip2(k[0]), kZ11,
                                                              recip2(k[1])};
                     },
                     [](const std::vector<Int>& k) {
                         return build(3, {{Rat(1), {2, 0, 0}},
                                          {Rat(1), {0, 2, 0}},
                                          {Rat(1), {0, 0, 2}},
                                          {Rat(k[0]), {0, 1, 1}},
                                          {Rat(k[1]), {1, 1, 0}}});
                     },
                     {1, 1, 1}});
        // 4
        t.push_back({{{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}},
                     {2, 2, 2},
                     {"k1", "k2", "k3"},
                     [](const std::vector<Int>& k) {
                         return std::vector<std::vector<Int>>{
                             recip2(k[0]), recip2(k[1]), recip2(k[2])};
                     },
                     [](const std::vector<Int>& k) {
                         return build(3, {{Rat(1), {2, 0, 0}},
                                          {Rat(1), {0, 2, 0}},
                                          {Rat(1), {0, 0, 2}},
                                          {Rat(k[0]), {0, 1, 1}},
                                          {Rat(k[1]), {1, 0, 1}},
                                          {Rat(k[2]), {1, 1, 0}}});
                     },
                     {1, 1, 1}});
        // 5
        t.push_back({{{0, 1, -1}, {-4, 0, 2}, {4, -2, 0}},
                     {1, 1, 1},
                     {},
                     [](const std::vector<Int>&) {
                         return std::vector<std::vector<Int>>{kZ11, kZ11, kZ11};
                     },
                     [](const std::vector<Int>&) {
                         return build(3, {{Rat(1), {2, 0, 0}},
                                          {Rat(1), {0, 4, 0}},
                                          {Rat(1), {0, 0, 4}},
                                          {Rat(2), {1, 2, 0}},
                                          {Rat(2), {1, 0, 2}}});
                     },
                     {1, 2, 2}});
        // 6
        t.push_back({{{0, 1, -1}, {-2, 0, 2}, {2, -2, 0}},
                     {2, 1, 1},
                     {"k"},
                     [](const std::vector<Int>& k) {
                         return std::vector<std::vector<Int>>{recip2(k[0]), kZ11, kZ11};
                     },
                     [](const std::vector<Int>& k) {
                         return build(3, {{Rat(1), {2, 0, 0}},
                                          {Rat(1), {0, 4, 0}},
                                          {Rat(1), {0, 0, 4}},
                                          {Rat(2), {1, 2, 0}},
                                          {Rat(k[0]), {0, 2, 2}},
                                          {Rat(2), {1, 0, 2}}});
                     },
                     {1, 2, 2}});
        // 7: the quartic-Z row; numerator written out explicitly
        t.push_back({{{0, 1, -1}, {-1, 0, 2}, {1, -2, 0}},
                     {4, 1, 1},
                     {"k1", "k2"},
                     [](const std::vector<Int>& k) {
                         return std::vector<std::vector<Int>>{
                             {Int(1), k[0], k[1], k[0], Int(1)}, kZ11, kZ11};
                     },
                     [](const std::vector<Int>& k) {
                         return build(3, {{Rat(1), {2, 0, 0}},
                                          {Rat(2), {1, 2, 0}},
                                          {Rat(2), {1, 0, 2}},
                                          {Rat(k[0]), {1, 1, 1}},
                                          {Rat(1), {0, 4, 0}},
                                          {Rat(k[0]), {0, 3, 1}},
                                          {Rat(k[1]), {0, 2, 2}},
                                          {Rat(k[0]), {0, 1, 3}},
                                          {Rat(1), {0, 0, 4}}});
                     },
                     {1, 2, 2}});
        // 8
        t.push_back({{{0, 4, -4}, {-1, 0, 2}, {1, -2, 0}},
                     {1, 1, 1},
                     {},
                     [](const std::vector<Int>&) {
                         return std::vector<std::vector<Int>>{kZ11, kZ11, kZ11};
                     },
                     [](const std::vector<Int>&) {
                         return build(3, {{Rat(1), {4, 0, 0}},
                                          {Rat(1), {0, 2, 0}},
                                          {Rat(1), {0, 0, 2}},
                                          {Rat(2), {0, 1, 1}}});
                     },
                     {2, 1, 1}});
        // 9
        t.push_back({{{0, 2, -4}, {-1, 0, 2}, {1, -1, 0}},
                     {1, 2, 1},
                     {"k2"},
                     [](const std::vector<Int>& k) {
                         return std::vector<std::vector<Int>>{kZ11, recip2(k[0]), kZ11};
                     },
                     [](const std::vector<Int>& k) {
                         return build(3, {{Rat(1), {4, 0, 0}},
                                          {Rat(k[0]), {2, 0, 1}},
                                          {Rat(1), {0, 2, 0}},
                                          {Rat(1), {0, 0, 2}},
                                          {Rat(2), {0, 1, 1}}});
                     },
                     {2, 1, 1}});
        // 10
        t.push_back({{{0, 2, -2}, {-1, 0, 1}, {1, -1, 0}},
                     {1, 2, 2},
                     {"k2", "k3"},
                     [](const std::vector<Int>& k) {
                         return std::vector<std::vector<Int>>{kZ11, recip2(k[0]),
                                                              recip2(k[1])};
                     },
                     [](const std::vector<Int>& k) {
                         return build(3, {{Rat(1), {4, 0, 0}},
                                          {Rat(k[1]), {2, 1, 0}},
                                          {Rat(k[0]), {2, 0, 1}},
                                          {Rat(1), {0, 2, 0}},
                                          {Rat(1), {0, 0, 2}},
                                          {Rat(2), {0, 1, 1}}});
                     },
                     {2, 1, 1}});
        return t;
    }();
    return table;
}

const std::vector<TableEntry>& rank2_table() {
    static const std::vector<TableEntry> table = [] {
        std::vector<TableEntry> t;
        auto z11 = [](const std::vector<Int>&) {
            return std::vector<std::vector<Int>>{kZ11, kZ11};
        };
        // 1
        t.push_back({{{0, 2}, {-2, 0}}, {1, 1}, {}, z11,
                     [](const std::vector<Int>&) {
                         return build(2, {{Rat(1), {2, 0}},
                                          {Rat(1), {0, 2}},
                                          {Rat(1), {0, 0}}});
                     },
                     {1, 1}});
        // 2
        t.push_back({{{0, 2}, {-1, 0}}, {2, 1}, {"k1"},
                     [](const std::vector<Int>& k) {
                         return std::vector<std::vector<Int>>{recip2(k[0]), kZ11};
                     },
                     [](const std::vector<Int>& k) {
                         return build(2, {{Rat(1), {2, 0}},
                                          {Rat(1), {0, 2}},
                                          {Rat(k[0]), {0, 1}},
                                          {Rat(1), {0, 0}}});
                     },
                     {1, 1}});
        // 3
        t.push_back({{{0, 1}, {-1, 0}}, {2, 2}, {"k1", "k2"},
                     [](const std::vector<Int>& k) {
                         return std::vector<std::vector<Int>>{recip2(k[0]),
                                                              recip2(k[1])};
                     },
                     [](const std::vector<Int>& k) {
                         return build(2, {{Rat(1), {2, 0}},
                                          {Rat(1), {0, 2}},
                                          {Rat(k[0]), {0, 1}},
                                          {Rat(k[1]), {1, 0}},
                                          {Rat(1), {0, 0}}});
                     },
                     {1, 1}});
        // 4
        t.push_back({{{0, 1}, {-4, 0}}, {1, 1}, {}, z11,
                     [](const std::vector<Int>&) {
                         return build(2, {{Rat(1), {2, 0}},
                                          {Rat(1), {0, 4}},
                                          {Rat(2), {1, 0}},
                                          {Rat(1), {0, 0}}});
                     },
                     {1, 2}});
        // 5
        t.push_back({{{0, 1}, {-2, 0}}, {2, 1}, {"k"},
                     [](const std::vector<Int>& k) {
                         return std::vector<std::vector<Int>>{recip2(k[0]), kZ11};
                     },
                     [](const std::vector<Int>& k) {
                         return build(2, {{Rat(1), {2, 0}},
                                          {Rat(1), {0, 4}},
                                          {Rat(k[0]), {0, 2}},
                                          {Rat(2), {1, 0}},
                                          {Rat(1), {0, 0}}});
                     },
                     {1, 2}});
        // 6
        t.push_back({{{0, 1}, {-1, 0}}, {4, 1}, {"k1", "k2"},
                     [](const std::vector<Int>& k) {
                         return std::vector<std::vector<Int>>{
                             {Int(1), k[0], k[1], k[0], Int(1)}, kZ11};
                     },
                     [](const std::vector<Int>& k) {
                         // x^2 + 2x + k1 x y + Z_1(y)
                         return build(2, {{Rat(1), {2, 0}},
                                          {Rat(2), {1, 0}},
                                          {Rat(k[0]), {1, 1}},
                                          {Rat(1), {0, 0}},
                                          {Rat(k[0]), {0, 1}},
                                          {Rat(k[1]), {0, 2}},
                                          {Rat(k[0]), {0, 3}},
                                          {Rat(1), {0, 4}}});
                     },
                     {1, 2}});
        // 7: (x^2 + 2x + 1 + y^3)(y+1) + x y^3, reading the table's Z_1(y)
        // as the y-part of the direction-1 exchange polynomial 1 + y^3
        t.push_back({{{0, 1}, {-3, 0}}, {1, 1}, {}, z11,
                     [](const std::vector<Int>&) {
                         auto base = build(2, {{Rat(1), {2, 0}},
                                               {Rat(2), {1, 0}},
                                               {Rat(1), {0, 0}},
                                               {Rat(1), {0, 3}}});
                         auto lin = build(2, {{Rat(1), {0, 1}}, {Rat(1), {0, 0}}});
                         return base * lin + build(2, {{Rat(1), {1, 3}}});
                     },
                     {1, 2}});
        // 8: (x^2 + 2x + Z_1(y))(y+1) + x y (y^2 + k1)
        t.push_back({{{0, 1}, {-1, 0}}, {3, 1}, {"k1"},
                     [](const std::vector<Int>& k) {
                         return std::vector<std::vector<Int>>{
                             {Int(1), k[0], k[0], Int(1)}, kZ11};
                     },
                     [](const std::vector<Int>& k) {
                         auto base = build(2, {{Rat(1), {2, 0}},
                                               {Rat(2), {1, 0}},
                                               {Rat(1), {0, 0}},
                                               {Rat(k[0]), {0, 1}},
                                               {Rat(k[0]), {0, 2}},
                                               {Rat(1), {0, 3}}});
                         auto lin = build(2, {{Rat(1), {0, 1}}, {Rat(1), {0, 0}}});
                         auto tail = build(2, {{Rat(1), {1, 3}}, {Rat(k[0]), {1, 1}}});
                         return base * lin + tail;
                     },
                     {1, 2}});
        // 9
        t.push_back({{{0, 1}, {-2, 0}}, {1, 1}, {}, z11,
                     [](const std::vector<Int>&) {
                         return build(2, {{Rat(1), {1, 2}},
                                          {Rat(1), {0, 2}},
                                          {Rat(1), {2, 0}},
                                          {Rat(2), {1, 0}},
                                          {Rat(1), {0, 0}}});
                     },
                     {1, 1}});
        // 10
        t.push_back({{{0, 1}, {-1, 0}}, {2, 1}, {"k1"},
                     [](const std::vector<Int>& k) {
                         return std::vector<std::vector<Int>>{recip2(k[0]), kZ11};
                     },
                     [](const std::vector<Int>& k) {
                         return build(2, {{Rat(1), {1, 2}},
                                          {Rat(1), {0, 2}},
                                          {Rat(k[0]), {0, 1}},
                                          {Rat(1), {2, 0}},
                                          {Rat(2), {1, 0}},
                                          {Rat(1), {0, 0}}});
                     },
                     {1, 1}});
        // 11
        t.push_back({{{0, 1}, {-1, 0}}, {1, 1}, {}, z11,
                     [](const std::vector<Int>&) {
                         return build(2, {{Rat(1), {2, 0}},
                                          {Rat(1), {0, 2}},
                                          {Rat(2), {1, 0}},
                                          {Rat(2), {0, 1}},
                                          {Rat(1), {2, 1}},
                                          {Rat(1), {1, 2}},
                                          {Rat(1), {0, 0}}});
                     },
                     {1, 1}});
        // 12: zero matrix; degrees fixed at r = 2 so the free coefficients
        // stay a two-parameter family
        t.push_back({{{0, 0}, {0, 0}}, {2, 2}, {"k1", "k2"},
                     [](const std::vector<Int>& k) {
                         return std::vector<std::vector<Int>>{recip2(k[0]),
                                                              recip2(k[1])};
                     },
                     [](const std::vector<Int>& k) {
                         auto f1 = build(2, {{Rat(1), {2, 0}},
                                             {Rat(k[0] + 2), {0, 0}}});
                         auto f2 = build(2, {{Rat(1), {0, 2}},
                                             {Rat(k[1] + 2), {0, 0}}});
                         return f1 * f2;
                     },
                     {1, 1}});
        return t;
    }();
    return table;
}

} // namespace

int builtin_arity(BuiltinTable table, int index) {
    const auto& t = table == BuiltinTable::Rank2 ? rank2_table() : rank3_table();
    if (index < 1 || index > static_cast<int>(t.size()))
        throw error("builtin: index out of range");
    return static_cast<int>(t[index - 1].names.size());
}

BuiltinRow builtin(BuiltinTable table, int index, const std::vector<Int>& params) {
    const auto& t = table == BuiltinTable::Rank2 ? rank2_table() : rank3_table();
    if (index < 1 || index > static_cast<int>(t.size()))
        throw error("builtin: index out of range");
    const TableEntry& row = t[index - 1];
    expect_params(params, row.names.size(), "builtin");

    BuiltinRow out;
    out.seed = make_seed(row.B, row.R, row.Z(params));
    out.param_names = row.names;
    out.eq.F = row.numerator(params).mul_monomial(exp_neg(row.d));
    out.eq.c = out.eq.F.eval(std::vector<Rat>(row.R.size(), Rat(1)));
    out.eq.height_d = normalize_type(out.eq.F).d;
    for (int s = 0; s < out.seed.rank(); ++s) {
        auto mu = mutation_map(out.seed, s);
        if (!is_invariant(out.eq.F, mu))
            throw error("builtin: table polynomial is not invariant under mu_" +
                        std::to_string(s + 1));
        out.eq.generators.push_back(std::move(mu));
    }
    return out;
}

Rat eval_at(const LaurentPoly& F, const Tuple& x) {
    std::vector<Rat> pt;
    pt.reserve(x.size());
    for (const auto& v : x) pt.emplace_back(v);
    return F.eval(pt);
}

bool is_solution(const EquationInstance& eq, const Tuple& x) {
    for (const auto& v : x)
        if (v <= 0) return false;
    return eval_at(eq.F, x) == eq.c;
}

Int height(const EquationInstance& eq, const Tuple& x) {
    Int h = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        Int p;
        mpz_pow_ui(p.get_mpz_t(), x[i].get_mpz_t(),
                   static_cast<unsigned long>(std::max(eq.height_d[i], 0)));
        h = std::max(h, p);
    }
    return h;
}

Tuple apply_generator(const ClusterSymmetricMap& psi, const Tuple& x) {
    std::vector<Rat> pt;
    pt.reserve(x.size());
    for (const auto& v : x) pt.emplace_back(v);
    auto img = apply_numeric(psi, pt);
    Tuple out(x.size());
    for (size_t i = 0; i < img.size(); ++i) {
        if (img[i].get_den() != 1 || img[i] <= 0)
            throw error("generator image is not a positive integer tuple");
        out[i] = img[i].get_num();
    }
    return out;
}

namespace {

std::vector<Tuple> orbit_bfs(const EquationInstance& eq, const Tuple& start,
                             const std::function<bool(const Tuple&)>& keep) {
    if (!is_solution(eq, start)) throw error("orbit: start is not a solution");
    if (!keep(start)) throw error("orbit: start violates the bound");
    std::set<Tuple> seen{start};
    std::deque<Tuple> frontier{start};
    while (!frontier.empty()) {
        Tuple cur = frontier.front();
        frontier.pop_front();
        for (const auto& g : eq.generators) {
            Tuple next = apply_generator(g, cur);
            if (!keep(next) || seen.count(next)) continue;
            if (eval_at(eq.F, next) != eq.c)
                throw error("orbit: generator image is not a solution");
            seen.insert(next);
            frontier.push_back(next);
        }
    }
    return std::vector<Tuple>(seen.begin(), seen.end());
}

} // namespace

std::vector<Tuple> orbit_enumerate(const EquationInstance& eq,
                                   const Tuple& start, const Int& height_bound) {
    return orbit_bfs(eq, start, [&](const Tuple& t) {
        return height(eq, t) <= height_bound;
    });
}

std::vector<Tuple> orbit_in_box(const EquationInstance& eq, const Tuple& start,
                                const Int& coord_bound) {
    return orbit_bfs(eq, start, [&](const Tuple& t) {
        for (const auto& v : t)
            if (v > coord_bound) return false;
        return true;
    });
}

namespace {

// Positive integer roots <= bound of sum_j coeff[j] w^j (integer coeffs).
std::vector<Int> integer_roots(std::vector<Int> coeff, const Int& bound) {
    while (!coeff.empty() && coeff.back() == 0) coeff.pop_back();
    std::vector<Int> out;
    if (coeff.empty()) { // identically zero: every w solves it
        for (Int w = 1; w <= bound; ++w) out.push_back(w);
        return out;
    }
    int deg = static_cast<int>(coeff.size()) - 1;
    if (deg == 0) return out;
    if (deg == 1) {
        // c1 w = -c0
        if (coeff[1] != 0 && coeff[0] % coeff[1] == 0) {
            Int w = -coeff[0] / coeff[1];
            if (w >= 1 && w <= bound) out.push_back(w);
        }
        return out;
    }
    if (deg == 2) {
        Int a = coeff[2], b = coeff[1], c = coeff[0];
        Int disc = b * b - 4 * a * c;
        if (disc < 0) return out;
        if (mpz_perfect_square_p(disc.get_mpz_t())) {
            Int sq;
            mpz_sqrt(sq.get_mpz_t(), disc.get_mpz_t());
            for (const Int& num : {Int(-b + sq), Int(-b - sq)}) {
                if (num % (2 * a) != 0) continue;
                Int w = num / (2 * a);
                if (w >= 1 && w <= bound &&
                    std::find(out.begin(), out.end(), w) == out.end())
                    out.push_back(w);
            }
        }
        return out;
    }
    // Degree >= 3: direct scan (used only by non-table instances).
    for (Int w = 1; w <= bound; ++w) {
        Int val = 0;
        for (int j = deg; j >= 0; --j) val = val * w + coeff[j];
        if (val == 0) out.push_back(w);
    }
    return out;
}

} // namespace

std::vector<Tuple> brute_force_solutions(const EquationInstance& eq,
                                         const Int& bound, int jobs) {
    int n = eq.nvars();
    if (n < 1) throw error("brute force: empty equation");
    if (jobs < 1) jobs = 1;

    // Cleared equation G = T - c x^d = 0 over nonnegative exponents;
    // solve for the variable of least degree, scan the others.
    TypedLaurent ty = normalize_type(eq.F);
    LaurentPoly G = ty.T - LaurentPoly::monomial(ty.d, eq.c);
    int solve_var = 0;
    for (int i = 1; i < n; ++i)
        if (G.deg_max(i) < G.deg_max(solve_var)) solve_var = i;
    int deg = G.deg_max(solve_var);

    // G = sum_j g_j(others) w^j; common denominator scales to integers.
    std::vector<LaurentPoly> gs;
    for (int j = 0; j <= deg; ++j) gs.push_back(slice(G, solve_var, j));
    Int den = 1;
    for (const auto& g : gs)
        for (auto& [e, c] : g.terms()) den = lcm(den, c.get_den());

    std::vector<int> others;
    for (int i = 0; i < n; ++i)
        if (i != solve_var) others.push_back(i);

    long outer = bound.fits_slong_p() ? bound.get_si() : -1;
    if (outer < 0) throw error("brute force: bound too large");

    auto scan_range = [&](long lo, long hi, std::vector<Tuple>& sink) {
        Tuple point(n, Int(1));
        std::function<void(size_t)> rec = [&](size_t idx) {
            if (idx == others.size()) {
                std::vector<Rat> pt;
                pt.reserve(n);
                for (const auto& v : point) pt.emplace_back(v);
                std::vector<Int> coeff;
                for (const auto& g : gs) {
                    Rat val = g.eval(pt) * Rat(den);
                    coeff.push_back(val.get_num());
                }
                for (const Int& w : integer_roots(coeff, bound)) {
                    Tuple sol = point;
                    sol[solve_var] = w;
                    sink.push_back(std::move(sol));
                }
                return;
            }
            long from = idx == 0 ? lo : 1;
            long to = idx == 0 ? hi : outer;
            for (long v = from; v <= to; ++v) {
                point[others[idx]] = v;
                rec(idx + 1);
            }
        };
        if (others.empty()) {
            rec(0);
        } else if (lo <= hi) {
            rec(0);
        }
    };

    std::vector<Tuple> all;
    if (jobs == 1 || others.empty()) {
        scan_range(1, outer, all);
    } else {
        std::vector<std::vector<Tuple>> parts(jobs);
        std::vector<std::thread> workers;
        long chunk = (outer + jobs - 1) / jobs;
        for (int w = 0; w < jobs; ++w) {
            long lo = 1 + w * chunk;
            long hi = std::min(outer, lo + chunk - 1);
            workers.emplace_back(
                [&, w, lo, hi] { scan_range(lo, hi, parts[w]); });
        }
        for (auto& th : workers) th.join();
        for (auto& p : parts)
            all.insert(all.end(), p.begin(), p.end());
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

std::vector<int> descend(const EquationInstance& eq, const Tuple& x) {
    if (!is_solution(eq, x)) throw error("descend: input is not a solution");
    int n = eq.nvars();
    Tuple ones(n, Int(1));

    // first-shell states mu_i(1,...,1)
    std::vector<Tuple> shell;
    for (const auto& g : eq.generators) shell.push_back(apply_generator(g, ones));

    std::vector<int> word;
    Tuple cur = x;
    size_t guard = 0;
    while (cur != ones) {
        if (++guard > 100000) throw error("descend: no convergence");
        bool done = false;
        for (size_t i = 0; i < shell.size(); ++i) {
            if (cur == shell[i]) {
                cur = apply_generator(eq.generators[i], cur);
                word.push_back(static_cast<int>(i));
                done = true;
                break;
            }
        }
        if (done) continue;
        // mutate the direction whose coordinate power attains the height
        Int h = height(eq, cur);
        int dir = -1;
        for (int i = 0; i < n; ++i) {
            Int p;
            mpz_pow_ui(p.get_mpz_t(), cur[i].get_mpz_t(),
                       static_cast<unsigned long>(std::max(eq.height_d[i], 0)));
            if (p == h) {
                if (dir >= 0)
                    throw error("descend: height tie outside the first shell");
                dir = i;
            }
        }
        Tuple next = apply_generator(eq.generators[dir], cur);
        if (!(height(eq, next) < h))
            throw error("descend: height failed to decrease at direction " +
                        std::to_string(dir + 1));
        cur = std::move(next);
        word.push_back(dir);
    }
    return word;
}

OrbitCheckReport verify_orbit_equals_solutions(const EquationInstance& eq,
                                               const Int& bound, int jobs) {
    OrbitCheckReport report;
    Tuple ones(eq.nvars(), Int(1));
    auto orbit = orbit_in_box(eq, ones, bound);
    auto sols = brute_force_solutions(eq, bound, jobs);
    std::set_difference(orbit.begin(), orbit.end(), sols.begin(), sols.end(),
                        std::back_inserter(report.only_in_orbit));
    std::set_difference(sols.begin(), sols.end(), orbit.begin(), orbit.end(),
                        std::back_inserter(report.only_in_solutions));
    report.equal =
        report.only_in_orbit.empty() && report.only_in_solutions.empty();
    report.count = sols.size();
    return report;
}

} // namespace csym
