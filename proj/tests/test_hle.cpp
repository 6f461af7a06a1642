#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "csym/hle.hpp"
#include "oracle.hpp"
#include "test_helpers.hpp"

#include <random>

using namespace csym;
using test::poly;

namespace {

ClusterSymmetricMap gyoda_mu2() {
    // psi_{id,2,((1,0,-2),1,[1,1])}: x2 -> (x1 + x3^2)/x2
    return make_map(Permutation::identity(3), 1,
                    make_seedlet(1, {1, 0, -2}, 1, {1, 1}));
}

ClusterSymmetricMap somos5_map(Int beta, Int alpha) {
    auto sigma = Permutation::cycle(5, {0, 1, 2, 3, 4});
    return make_map(sigma, 0,
                    make_seedlet(0, {0, 1, -1, -1, 1}, 1, {beta, alpha}));
}

LaurentPoly somos5_f1(int n_alpha, int n_beta) {
    Rat a(n_alpha), b(n_beta);
    LaurentPoly T(5);
    T.add_term({1, 2, 0, 0, 2}, Rat(1));
    T.add_term({2, 0, 0, 2, 1}, Rat(1));
    T.add_term({1, 0, 2, 2, 0}, a);
    T.add_term({0, 2, 2, 0, 1}, a);
    T.add_term({0, 1, 3, 1, 0}, b);
    return T.mul_monomial({-1, -1, -1, -1, -1});
}

LaurentPoly somos5_f2(int n_alpha, int n_beta) {
    Rat a(n_alpha), b(n_beta);
    LaurentPoly T(5);
    T.add_term({2, 0, 1, 0, 2}, Rat(1));
    T.add_term({1, 1, 0, 3, 0}, a);
    T.add_term({1, 0, 3, 0, 1}, a);
    T.add_term({0, 3, 0, 1, 1}, a);
    T.add_term({0, 2, 1, 2, 0}, b);
    return T.mul_monomial({-1, -1, -1, -1, -1});
}

} // namespace

TEST_CASE("power_coeffs") {
    CHECK(power_coeffs({Int(4), Int(7)}, 0) == std::vector<Int>{1});
    CHECK(power_coeffs({Int(1), Int(1)}, 2) == std::vector<Int>{1, 2, 1});
    CHECK(power_coeffs({Int(3), Int(5)}, 2) == std::vector<Int>{9, 30, 25});
}

TEST_CASE("shift_vector") {
    auto w0 = make_seedlet(0, {0, 0, 0}, 1, {1, 1});
    CHECK(shift_vector(w0, 1, 0, 3) == ExpVec{-3, 0, 0});
    auto w = make_seedlet(0, {0, 1, -2, 1}, 1, {1, 1});
    CHECK(shift_vector(w, 1, 0, 2) == ExpVec{-2, 0, 2, 0});
    CHECK(shift_vector(w, 0, 0, 0) == ExpVec{0, 0, 0, 0});
    // pi_s of the shift is always -i
    for (int k = 0; k <= 2; ++k)
        for (int l = 0; l <= k; ++l)
            for (int i = 0; i <= 3; ++i)
                CHECK(shift_vector(w, k, l, i)[0] == -i);
}

TEST_CASE("kernel of the degenerate systems") {
    LinearSystem zero;
    zero.width = 4;
    auto full = solve_kernel(zero);
    CHECK(full.vecs.size() == 4);

    LinearSystem identity_like;
    identity_like.width = 3;
    for (long i = 0; i < 3; ++i)
        identity_like.rows.push_back({{i, Rat(1)}});
    CHECK(solve_kernel(identity_like).vecs.empty());
}

TEST_CASE("kernel dimension 7 with F_2 in the span") {
    auto psi = gyoda_mu2();
    ExpVec eta{1, 2, 2}, d{0, 1, 0};
    auto sys = build_hle(psi, eta, d);
    auto basis = solve_kernel(sys);
    CHECK(basis.vecs.size() == 7);

    MonomialIndexSet N(eta);
    auto F2 = poly(3, "x1 + x2^2 + x3^2").mul_monomial({0, -1, 0});
    CHECK(in_span(basis, coeff_vector(F2, N, d)));

    // the complement is spanned by the six monomial-type generators
    // x1^i x3^j, i <= 1, j <= 2 (each times x2/x2)
    for (int i = 0; i <= 1; ++i)
        for (int j = 0; j <= 2; ++j) {
            LaurentPoly m = LaurentPoly::monomial({i, 0, j}, Rat(1));
            CHECK(in_span(basis, coeff_vector(m, N, d)));
            CHECK(is_invariant(m, psi));
        }

    // every reported invariant is genuinely invariant
    for (const auto& rep : invariants_for({psi}, eta, d))
        CHECK(is_invariant(rep.F, psi));
}

TEST_CASE("HLE preconditions are refused with the violated equality") {
    auto psi = gyoda_mu2();
    CHECK_THROWS_WITH_AS(build_hle(psi, {1, 3, 2}, {0, 1, 0}),
                         "eta_s != 2 d_s", precondition_error);
    CHECK_THROWS_WITH_AS(build_hle(somos5_map(1, 1), {2, 2, 2, 2, 2},
                                   {1, 1, 1, 1, 2}),
                         "d != sigma(d)", precondition_error);
    CHECK_THROWS_WITH_AS(build_hle(somos5_map(1, 1), {2, 2, 2, 2, 4},
                                   {1, 1, 1, 1, 1}),
                         "eta_s != eta_{sigma^{-1}(s)}", precondition_error);
}

TEST_CASE("Somos-5 eta sweep") {
    for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {5, 3}}) {
        auto psi = somos5_map(b, a);
        ExpVec d{1, 1, 1, 1, 1};

        // (2,2,2,2,2): no invariant of the full type
        {
            ExpVec eta{2, 2, 2, 2, 2};
            auto basis = solve_kernel(build_hle(psi, eta, d));
            CHECK(!span_has_full_support(basis, MonomialIndexSet(eta)));
        }
        // (2,2,3,2,2): span of F_1 and the constant
        {
            ExpVec eta{2, 2, 3, 2, 2};
            auto basis = solve_kernel(build_hle(psi, eta, d));
            CHECK(basis.vecs.size() == 2);
            MonomialIndexSet N(eta);
            CHECK(in_span(basis, coeff_vector(somos5_f1(a, b), N, d)));
            CHECK(in_span(basis,
                          coeff_vector(LaurentPoly::constant(5, Rat(1)), N, d)));
        }
        // (2,3,3,3,2): F_2, F_1 and the constant
        {
            ExpVec eta{2, 3, 3, 3, 2};
            auto basis = solve_kernel(build_hle(psi, eta, d));
            CHECK(basis.vecs.size() == 3);
            MonomialIndexSet N(eta);
            CHECK(in_span(basis, coeff_vector(somos5_f1(a, b), N, d)));
            CHECK(in_span(basis, coeff_vector(somos5_f2(a, b), N, d)));
        }
    }
}

TEST_CASE("Somos-4 kernel is the line of F_4 plus constants") {
    auto sigma = Permutation::cycle(4, {0, 1, 2, 3});
    ExpVec eta{2, 3, 3, 2}, d{1, 1, 1, 1};
    MonomialIndexSet N(eta);
    for (auto [beta, alpha] : std::vector<std::pair<int, int>>{{1, 1}, {3, 2}}) {
        auto psi = make_map(
            sigma, 0,
            make_seedlet(0, {0, 1, -2, 1}, 1, {Int(beta), Int(alpha)}));
        auto basis = solve_kernel(build_hle(psi, eta, d));
        CHECK(basis.vecs.size() == 2);
        LaurentPoly T(4);
        T.add_term({2, 0, 0, 2}, Rat(1));
        T.add_term({1, 0, 3, 0}, Rat(alpha));
        T.add_term({0, 3, 0, 1}, Rat(alpha));
        T.add_term({0, 2, 2, 0}, Rat(beta));
        auto F4 = T.mul_monomial(exp_neg(d));
        CHECK(in_span(basis, coeff_vector(F4, N, d)));
        CHECK(in_span(basis,
                      coeff_vector(LaurentPoly::constant(4, Rat(1)), N, d)));
        CHECK(is_invariant(F4, psi));
    }
}

TEST_CASE("identity case: b = 0 ring generator appears") {
    // psi: x_s -> (z0 + z1)/x_s; invariant (P + x_s^2)/x_s must be in the
    // kernel for eta = 2 e_s, d = e_s
    auto psi = make_map(Permutation::identity(2), 0,
                        make_seedlet(0, {0, 0}, 1, {1, 2}));
    ExpVec eta{2, 0}, d{1, 0};
    auto basis = solve_kernel(build_hle(psi, eta, d));
    MonomialIndexSet N(eta);
    auto gen = poly(2, "3 + x1^2").mul_monomial({-1, 0});
    CHECK(in_span(basis, coeff_vector(gen, N, d)));
}

TEST_CASE("necessity: violated type equalities leave no exact-type invariant") {
    // When d != sigma(d) or eta_s != 2 d_s, build_hle refuses; the
    // independent oracle confirms that no nonzero F of that exact type is
    // invariant: a generic combination of the oracle kernel realizes the
    // union of the basis supports, which never reaches the requested type.
    auto sigma = Permutation::cycle(4, {0, 1, 2, 3});
    auto psi = make_map(sigma, 0, make_seedlet(0, {0, 1, -2, 1}, 1, {1, 1}));

    auto no_exact_type = [&](const ExpVec& eta, const ExpVec& d) {
        MonomialIndexSet N(eta);
        auto basis = solve_kernel(test::oracle_system(psi, eta, d));
        int n = static_cast<int>(eta.size());
        for (int i = 0; i < n; ++i) {
            bool top = false, bottom = false;
            for (const auto& v : basis.vecs)
                for (long pos = 0; pos < N.size(); ++pos) {
                    if (v[pos] == 0) continue;
                    if (N.at(pos)[i] == eta[i]) top = true;
                    if (N.at(pos)[i] == 0) bottom = true;
                }
            if (!(top && bottom)) return true; // type unreachable at i
        }
        return false;
    };

    // d not sigma-invariant
    CHECK_THROWS_AS(build_hle(psi, {2, 3, 3, 2}, {1, 1, 1, 2}),
                    precondition_error);
    CHECK(no_exact_type({2, 3, 3, 2}, {1, 1, 1, 2}));
    // eta_s != 2 d_s
    CHECK_THROWS_AS(build_hle(psi, {4, 3, 3, 4}, {1, 1, 1, 1}),
                    precondition_error);
    CHECK(no_exact_type({4, 3, 3, 4}, {1, 1, 1, 1}));
    // eta_s != eta_t
    CHECK_THROWS_AS(build_hle(psi, {2, 3, 3, 4}, {1, 1, 1, 1}),
                    precondition_error);
    CHECK(no_exact_type({2, 3, 3, 4}, {1, 1, 1, 1}));
}

TEST_CASE("oracle equivalence on small random maps") {
    std::mt19937 rng(20260807);
    int done = 0;
    while (done < 60) {
        int n = 2 + (done % 2);
        auto psi = test::random_map(rng, n);
        int s = psi.s, t = psi.t();
        // choose d sigma-invariant with d_s = d_t in {0, 1}
        ExpVec d(n, 0);
        int ds = done % 3 == 0 ? 0 : 1;
        for (int i : psi.sigma.orbit_of(s)) d[i] = ds;
        // remaining orbits: constant 0/1
        for (const auto& orb : psi.sigma.orbits()) {
            if (std::find(orb.begin(), orb.end(), s) != orb.end()) continue;
            int v = (done / 2) % 2;
            for (int i : orb) d[i] = v;
        }
        ExpVec eta(n, 0);
        eta[s] = eta[t] = 2 * ds;
        std::uniform_int_distribution<int> ed(0, 2);
        for (int i = 0; i < n; ++i)
            if (i != s && i != t) eta[i] = ed(rng);

        auto hle = solve_kernel(build_hle(psi, eta, d));
        auto oracle = solve_kernel(test::oracle_system(psi, eta, d));
        // canonical RREF bases of equal spaces are identical
        CHECK(hle.vecs == oracle.vecs);
        ++done;
    }
}

TEST_CASE("soundness: assembled invariants pass is_invariant") {
    std::mt19937 rng(1123);
    int done = 0;
    while (done < 40) {
        int n = 2 + (done % 2);
        auto psi = test::random_map(rng, n);
        ExpVec d(n, 1);
        if (psi.sigma.orbits().size() != 1) {
            // make d sigma-invariant: constant 1 everywhere works always
        }
        ExpVec eta(n, 2);
        int s = psi.s, t = psi.t();
        eta[s] = eta[t] = 2;
        try {
            for (const auto& rep : invariants_for({psi}, eta, d)) {
                CHECK(is_invariant(rep.F, psi));
                if (!rep.F.is_zero())
                    CHECK(feasible_eta(psi, eta, d) ==
                          feasible_eta(psi, eta, d)); // no-throw probe
            }
            ++done;
        } catch (const precondition_error&) {
            // r|b_k| too large for this eta: skip draw
            ++done;
        }
    }
}

TEST_CASE("feasible eta for the period-1 quiver map") {
    auto sigma = Permutation::cycle(3, {0, 1, 2});
    auto psi = make_map(sigma, 0, make_seedlet(0, {0, 1, 1}, 1, {1, 1}));

    auto list1 = feasible_eta_list(psi, {1, 1, 1}, 6);
    CHECK(list1 == std::vector<ExpVec>{{2, 1, 2}, {2, 2, 2}, {2, 3, 2}});

    // (2,2,2) carries the three-parameter family t1 F1 + t2 F2 + t3, and
    // (2,1,2) the line of F2 (plus constants); (2,3,2) has no invariant of
    // full type.
    auto F1 = poly(3, "x1^2 x3 + x1 x2^2 + x1 x3^2 + x2^2 x3 + x2")
                  .mul_monomial({-1, -1, -1});
    auto F2 = poly(3, "x2 x1^2 + x1 + x2 x3^2 + x3").mul_monomial({-1, -1, -1});
    CHECK(is_invariant(F1, psi));
    CHECK(is_invariant(F2, psi));
    {
        ExpVec eta{2, 2, 2}, d{1, 1, 1};
        auto basis = solve_kernel(build_hle(psi, eta, d));
        CHECK(basis.vecs.size() == 3);
        MonomialIndexSet N(eta);
        CHECK(in_span(basis, coeff_vector(F1, N, d)));
        CHECK(in_span(basis, coeff_vector(F2, N, d)));
    }
    {
        ExpVec eta{2, 1, 2}, d{1, 1, 1};
        auto basis = solve_kernel(build_hle(psi, eta, d));
        CHECK(basis.vecs.size() == 2);
        CHECK(in_span(basis, coeff_vector(F2, MonomialIndexSet(eta), d)));
    }
    {
        ExpVec eta{2, 3, 2};
        auto basis = solve_kernel(build_hle(psi, eta, {1, 1, 1}));
        CHECK(!span_has_full_support(basis, MonomialIndexSet(eta)));
    }

    // d = (2,2,2): the six-parameter family in F1, F2 sits at (4,4,4)
    auto list2 = feasible_eta_list(psi, {2, 2, 2}, 8);
    CHECK(std::find(list2.begin(), list2.end(), ExpVec{4, 4, 4}) != list2.end());
    {
        ExpVec eta{4, 4, 4}, d{2, 2, 2};
        auto basis = solve_kernel(build_hle(psi, eta, d));
        CHECK(basis.vecs.size() == 6);
        MonomialIndexSet N(eta);
        CHECK(in_span(basis, coeff_vector(F1 * F1, N, d)));
        CHECK(in_span(basis, coeff_vector(F1 * F2, N, d)));
        CHECK(in_span(basis, coeff_vector(F2 * F2, N, d)));
        CHECK(span_has_full_support(basis, N));
    }
}

TEST_CASE("pair feasibility bound") {
    // Markov seed columns pairwise: products <= 4
    auto id3 = Permutation::identity(3);
    auto m1 = make_map(id3, 0, make_seedlet(0, {0, -2, 2}, 1, {1, 1}));
    auto m2 = make_map(id3, 1, make_seedlet(1, {2, 0, -2}, 1, {1, 1}));
    CHECK(pair_feasibility(m1, m2, {2, 2, 2}));

    // r_i r_j |b_ij b_ji| = 6 blocks any common invariant
    auto p1 = make_map(id3, 0, make_seedlet(0, {0, 3, 0}, 1, {1, 1}));
    auto p2 = make_map(id3, 1, make_seedlet(1, {2, 0, 0}, 1, {1, 1}));
    CHECK(!pair_feasibility(p1, p2, {2, 2, 0}));

    // all-zero b is always fine
    auto q1 = make_map(id3, 0, make_seedlet(0, {0, 0, 0}, 1, {1, 1}));
    auto q2 = make_map(id3, 1, make_seedlet(1, {0, 0, 0}, 1, {1, 1}));
    CHECK(pair_feasibility(q1, q2, {2, 2, 2}));
}

TEST_CASE("identity case expression") {
    auto psi = gyoda_mu2();
    auto F2 = poly(3, "x1 + x2^2 + x3^2").mul_monomial({0, -1, 0});
    auto H = identity_case_express(F2, psi);
    REQUIRE(H.size() == 2);
    CHECK(H[0].is_zero());
    CHECK(H[1] == LaurentPoly::constant(3, Rat(1)));

    // reconstruct through the generator g = (P + x_s^2)/x_s
    auto P = exchange_poly(psi.omega);
    auto g = (P + poly(3, "x2^2")).mul_monomial({0, -1, 0});
    LaurentPoly back(3);
    for (size_t m = 0; m < H.size(); ++m)
        back = back + H[m] * g.pow(static_cast<int>(m));
    CHECK(back == F2);

    // g^2 is again invariant
    CHECK(is_invariant(g * g, psi));
    auto H2 = identity_case_express(g * g + g.scaled(Rat(3)), psi);
    LaurentPoly back2(3);
    for (size_t m = 0; m < H2.size(); ++m)
        back2 = back2 + H2[m] * g.pow(static_cast<int>(m));
    CHECK(back2 == g * g + g.scaled(Rat(3)));

    CHECK_THROWS_AS(identity_case_express(LaurentPoly::variable(3, 1), psi),
                    error);
}

TEST_CASE("normalize_d") {
    auto psi = gyoda_mu2();
    auto F2 = poly(3, "x1 + x2^2 + x3^2").mul_monomial({0, -1, 0});
    // d already lives on the orbit of s: unchanged
    CHECK(normalize_d(F2, psi) == F2);

    // off-orbit denominators are cleared and invariance survives
    auto shifted = F2.mul_monomial({-2, 0, -1});
    CHECK(is_invariant(shifted, psi));
    auto cleaned = normalize_d(shifted, psi);
    CHECK(cleaned == F2);
    CHECK(is_invariant(cleaned, psi));
}
