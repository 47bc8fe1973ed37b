#include <doctest.h>

#include <random>

#include "fibnet/closed_forms.hpp"
#include "fibnet/generator.hpp"
#include "fibnet/spanning.hpp"

using namespace fibnet;

TEST_CASE("fibonacci sequences") {
    auto classic = fibonacci({2, {1, 1}}, 6);
    CHECK(classic == std::vector<BigInt>{1, 1, 2, 3, 5, 8});
    auto three_term = fibonacci({3, {1, 1, 2}}, 4);
    CHECK(three_term == std::vector<BigInt>{1, 1, 2, 4});
    auto zeros = fibonacci({2, {0, 0}}, 5);
    CHECK(zeros == std::vector<BigInt>{0, 0, 0, 0, 0});
    CHECK_THROWS_AS(fibonacci({1, {1}}, 3), std::invalid_argument);
    CHECK_THROWS_AS(fibonacci({2, {1}}, 3), std::invalid_argument);
    CHECK_THROWS_AS(fibonacci({2, {1, 1}}, 0), std::invalid_argument);
}

TEST_CASE("fibonacci Cassini identity up to i=30") {
    auto f = fibonacci({2, {1, 1}}, 33);
    for (int i = 0; i + 2 < 32; ++i) {
        BigInt cassini = f[i] * f[i + 2] - f[i + 1] * f[i + 1];
        CHECK(abs(cassini) == 1);
        if (i > 0) CHECK(cassini == -(f[i - 1] * f[i + 1] - f[i] * f[i]));
    }
}

TEST_CASE("alpha/beta columns") {
    auto adj = alpha_beta(5, true);
    CHECK(adj.alpha == std::vector<BigInt>{1, 1, 2, 3, 5});
    CHECK(adj.beta == std::vector<BigInt>{1, 1, 1, 2, 3});
    auto truth = alpha_beta(5, false);
    CHECK(truth.beta[0] == 0);
    CHECK(truth.alpha == std::vector<BigInt>{1, 0, 1, 1, 2});

    auto big = alpha_beta(20, true);
    for (int i = 3; i <= 20; ++i)
        CHECK(big.alpha[i - 1] == big.alpha[i - 2] + big.alpha[i - 3]);
    for (int i = 4; i <= 20; ++i)  // beta joins the recurrence one step later
        CHECK(big.beta[i - 1] == big.beta[i - 2] + big.beta[i - 3]);
}

TEST_CASE("count predictions") {
    CHECK(predict_counts(0).vertices == 4);
    CHECK(predict_counts(0).edges == 4);
    CHECK(predict_counts(1).vertices == 10);
    CHECK(predict_counts(2).edges == 40);
    auto p3 = predict_counts(3);
    CHECK(p3.vertices == 78);
    CHECK(p3.edges == 124);
    CHECK(p3.pendant_edges == 20);
    auto p4 = predict_counts(4);
    CHECK(p4.vertices == 332);
    CHECK(p4.edges == 536);
    CHECK(p4.pendant_edges == 84);
    CHECK(p4.delta_general == 40);
    CHECK(*p4.delta_literal == 8);
    CHECK(p4.theta_general == 20);
    CHECK(*p4.theta_literal == 12);
    CHECK(p4.variant_conflict);
    CHECK_FALSE(predict_counts(3).variant_conflict);
    CHECK_THROWS_AS(predict_counts(-1), std::invalid_argument);
}

TEST_CASE("pseudofractal closed form") {
    CHECK(predict_n1(1) == std::pair<BigInt, BigInt>{3, 3});
    CHECK(predict_n1(2) == std::pair<BigInt, BigInt>{6, 9});
    CHECK(predict_n1(3) == std::pair<BigInt, BigInt>{15, 27});
    CHECK_THROWS_AS(predict_n1(0), std::invalid_argument);
}

TEST_CASE("degree table prediction at t=3") {
    auto table = predict_degree_table(3);
    REQUIRE(table.rows.size() == 5);
    CHECK(table.rows[0].degree == 16);
    CHECK(table.rows[0].count == 4);
    CHECK(table.rows[3].rank == 4);
    CHECK(table.rows[3].degree == 2);
    CHECK(table.rows[3].count == 38);
    CHECK(table.rows[4].degree == 1);
    CHECK(table.rows[4].count == 20);
    CHECK(table.degree_mass == 248);
    CHECK(table.vertex_sum == 82);  // overshoots |V(3)| = 78 by the known 4
    CHECK_THROWS_AS(predict_degree_table(2), std::invalid_argument);
}

TEST_CASE("degree table mass tracks 2|E| only at t=3") {
    CHECK(predict_degree_table(3).degree_mass == 2 * predict_counts(3).edges);
    CHECK(predict_degree_table(4).degree_mass == 960);
    CHECK(2 * predict_counts(4).edges == 1072);
}

TEST_CASE("clustering prediction values (independently evaluated)") {
    auto p5 = predict_clustering(5);
    CHECK_FALSE(p5.degenerate);
    CHECK(p5.triangle_sum == make_rational(4707, 8));
    CHECK(p5.rectangle_sum == make_rational(6463, 558));
    CHECK(p5.average == make_rational(1339105, 3048912));
    CHECK(p5.average > 0);
    CHECK(p5.average < 1);

    CHECK(predict_clustering(6).average == make_rational(552517913, 1185428160));
    CHECK(predict_clustering(7).average == make_rational(BigInt("117127923019"),
                                                         BigInt("240708809920")));
    CHECK(predict_clustering(8).average == make_rational(BigInt("11762104078481"),
                                                         BigInt("23435819178240")));
    CHECK(predict_clustering(4).degenerate);
    CHECK(predict_clustering(1).triangle_sum == 2);  // two triangle apexes, clustering 1 each
}

TEST_CASE("clustering prediction differences shrink (convergence trend)") {
    auto c6 = predict_clustering(6).average;
    auto c7 = predict_clustering(7).average;
    auto c8 = predict_clustering(8).average;
    Rational d1 = abs(c7 - c6), d2 = abs(c8 - c7);
    CHECK(d2 < d1);
}

TEST_CASE("moebius closed form: telescoping example is exact") {
    MobiusRecurrence rec{Rational(1), Rational(0), Rational(1), Rational(1), Rational(1)};
    auto r = solve_moebius(rec, 7);
    REQUIRE(r.exact.has_value());
    CHECK(*r.exact == make_rational(1, 7));
    CHECK(r.repeated_root);
    CHECK(iterate_moebius(rec, 7) == make_rational(1, 7));
}

TEST_CASE("moebius fixed point stays put") {
    // x = (2x+3)/(x+4) has fixed points 1 and -3; start at the + root
    MobiusRecurrence rec{Rational(2), Rational(3), Rational(1), Rational(4), Rational(1)};
    auto r = solve_moebius(rec, 12);
    REQUIRE(r.exact.has_value());
    CHECK(*r.exact == 1);
    // the second fixed point is a degenerate input
    rec.a1 = Rational(-3);
    CHECK_THROWS_AS(solve_moebius(rec, 5), std::domain_error);
}

TEST_CASE("moebius matches direct iteration on a worked example") {
    MobiusRecurrence rec{Rational(2), Rational(1), Rational(1), Rational(2), Rational(0)};
    auto iterated = iterate_moebius(rec, 5);
    CHECK(iterated == make_rational(40, 41));
    auto solved = solve_moebius(rec, 5);
    CHECK(std::abs(solved.value - iterated.get_d()) < 1e-12);
}

TEST_CASE("moebius preconditions and poles") {
    CHECK_THROWS_AS(solve_moebius({Rational(1), Rational(0), Rational(0), Rational(1),
                                   Rational(1)}, 3),
                    std::invalid_argument);  // r = 0
    CHECK_THROWS_AS(solve_moebius({Rational(1), Rational(2), Rational(2), Rational(4),
                                   Rational(1)}, 3),
                    std::invalid_argument);  // ps - qr = 0
    // orbit hits -s/r: a1 = -s/r immediately
    MobiusRecurrence pole{Rational(1), Rational(1), Rational(1), Rational(-1), Rational(1)};
    CHECK_THROWS_AS(iterate_moebius(pole, 3), std::domain_error);
}

TEST_CASE("moebius: 200 deterministic instances agree with iteration to 1e-9") {
    std::mt19937 rng(987654321u);
    auto draw = [&] { return Rational(static_cast<long>(rng() % 11) - 5); };
    int checked = 0;
    while (checked < 200) {
        MobiusRecurrence rec{draw(), draw(), draw(), draw(), draw()};
        if (sgn(rec.r) == 0 || sgn(rec.p * rec.s - rec.q * rec.r) == 0) continue;
        int n = 2 + static_cast<int>(rng() % 29);
        Rational iterated;
        try {
            iterated = iterate_moebius(rec, n);
        } catch (const std::domain_error&) {
            continue;  // pole-hitting orbit: excluded by construction
        }
        MobiusResult solved;
        try {
            solved = solve_moebius(rec, n);
        } catch (const std::domain_error&) {
            continue;  // a1 on the second fixed point: degenerate input
        }
        double want = iterated.get_d();
        double got = solved.value;
        CHECK(std::abs(got - want) <= 1e-9 * std::max(1.0, std::abs(want)));
        if (solved.exact) CHECK(*solved.exact == iterated);
        ++checked;
    }
    CHECK(checked == 200);
}

TEST_CASE("spanning predictions: small values evaluated by hand") {
    auto p1 = predict_spanning(1);
    REQUIRE(p1.per_triangle_cluster.exact.has_value());
    CHECK(*p1.per_triangle_cluster.exact == 3);
    REQUIRE(p1.per_rectangle_assembly.exact.has_value());
    CHECK(*p1.per_rectangle_assembly.exact == 30);
    CHECK_FALSE(p1.spanning_total.in_domain);
    CHECK_FALSE(p1.mls_leaf_count.in_domain);
    CHECK_FALSE(p1.mls_tree_count.in_domain);

    CHECK(*predict_spanning(2).per_triangle_cluster.exact == 54);
    CHECK(*predict_spanning(3).per_triangle_cluster.exact == 209952);
    CHECK(*predict_spanning(2).per_rectangle_assembly.exact == 8424);

    CHECK(*predict_spanning(3).mls_leaf_count.exact == 68);
    CHECK(*predict_spanning(4).mls_leaf_count.exact == 280);
    CHECK(*predict_spanning(5).mls_leaf_count.exact == 1152);
    CHECK(*predict_spanning(6).mls_leaf_count.exact == 4712);

    CHECK(*predict_spanning(3).spanning_total.exact == BigInt("23697323222630400000"));
    CHECK(*predict_spanning(4).spanning_total.exact ==
          BigInt("726925729176761890199443609219598166623084381027866684466135040000"));
    CHECK(*predict_spanning(5).mls_tree_count.exact ==
          BigInt("523364680995997964020938705837982720614624707028658001037769748449685667840"
                 "0000"));
}

TEST_CASE("spanning prediction leaf count stays below the predicted order") {
    for (int t = 3; t <= 8; ++t) {
        auto p = predict_spanning(t);
        CHECK(*p.mls_leaf_count.exact < predict_counts(t).vertices);
        CHECK(*p.mls_leaf_count.exact > 0);
    }
}

TEST_CASE("per-cluster spanning prediction equals the pseudofractal Kirchhoff count") {
    for (int t = 1; t <= 3; ++t) {
        auto g = generate_n1(t);
        CHECK(count_spanning_trees(g) == *predict_spanning(t).per_triangle_cluster.exact);
    }
}

TEST_CASE("theta convention parameter changes the spanning total") {
    auto general = predict_spanning(4, ThetaConvention::general_row);
    auto literal = predict_spanning(4, ThetaConvention::row_literal);
    REQUIRE(general.spanning_total.exact.has_value());
    REQUIRE(literal.spanning_total.exact.has_value());
    CHECK(*general.spanning_total.exact != *literal.spanning_total.exact);
}

TEST_CASE("bit bound switches large results to log2 form") {
    auto p = predict_spanning(6, ThetaConvention::general_row, 64);
    CHECK_FALSE(p.spanning_total.exact.has_value());
    CHECK(p.spanning_total.in_domain);
    auto exact = predict_spanning(6);
    REQUIRE(exact.spanning_total.exact.has_value());
    CHECK(p.spanning_total.log2_value ==
          doctest::Approx(log2_of(*exact.spanning_total.exact)).epsilon(1e-9));
}
