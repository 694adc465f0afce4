#include <catch2/catch_amalgamated.hpp>

#include "piqec/kl.hpp"
#include "piqec/pr_system.hpp"

using namespace piqec;

namespace {

const QuadraticEquation* find_eq(const QuadraticSystem& sys, const std::string& cond,
                                 long a, long b) {
    for (const auto& eq : sys.equations)
        if (eq.condition == cond && eq.a == a && eq.b == b) return &eq;
    return nullptr;
}

}  // namespace

TEST_CASE("7-qubit single-error system has the three printed equations") {
    QuadraticSystem sys = generate_system(7, 1);
    REQUIRE(sys.equations.size() == 3);
    CHECK(sys.num_vars() == 4);

    // raw coefficients are sums of C(5, 2k) weights
    const auto* d1a = find_eq(sys, "D1", 0, 1);
    REQUIRE(d1a != nullptr);
    CHECK(d1a->monomials.at({0, 3}) == binom_int(5, 0));
    CHECK(d1a->monomials.at({1, 2}) == binom_int(5, 2) + binom_int(5, 4));
    CHECK(d1a->monomials.size() == 2);

    const auto* d1b = find_eq(sys, "D1", 2, 1);
    REQUIRE(d1b != nullptr);
    CHECK(d1b->monomials.at({1, 3}) == binom_int(5, 0) + binom_int(5, 4));
    CHECK(d1b->monomials.at({2, 2}) == binom_int(5, 2));

    // normalized forms: q0 q6 + 15 q2 q4, 3 q2 q6 + 5 q4^2, q0^2 + 9 q2^2 - 5 q4^2 - 5 q6^2
    QuadraticEquation n1 = d1a->normalized();
    CHECK(n1.monomials.at({0, 3}) == 1);
    CHECK(n1.monomials.at({1, 2}) == 15);
    QuadraticEquation n2 = d1b->normalized();
    CHECK(n2.monomials.at({1, 3}) == 3);
    CHECK(n2.monomials.at({2, 2}) == 5);
    const auto* d2 = find_eq(sys, "D2", 0, 0);
    REQUIRE(d2 != nullptr);
    QuadraticEquation n3 = d2->normalized();
    CHECK(n3.monomials.at({0, 0}) == 1);
    CHECK(n3.monomials.at({1, 1}) == 9);
    CHECK(n3.monomials.at({2, 2}) == -5);
    CHECK(n3.monomials.at({3, 3}) == -5);
}

TEST_CASE("19-qubit two-error system has nine equations") {
    QuadraticSystem sys = generate_system(19, 2);
    CHECK(sys.equations.size() == 9);
    CHECK(sys.num_vars() == 10);
    long d1 = 0, d2 = 0, d3 = 0;
    for (const auto& eq : sys.equations) {
        if (eq.condition == "D1") ++d1;
        if (eq.condition == "D2") ++d2;
        if (eq.condition == "D3") ++d3;
        // pairs with a + b = 2t are identically zero and must be excluded
        if (eq.condition != "D1") CHECK(eq.a + eq.b < 2 * sys.t);
    }
    CHECK(d1 == 6);
    CHECK(d2 == 2);
    CHECK(d3 == 1);
}

TEST_CASE("generate_system validates inputs") {
    CHECK_THROWS_AS(generate_system(6, 1), std::invalid_argument);
    CHECK_THROWS_AS(generate_system(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(generate_system(7, -1), std::invalid_argument);
}

TEST_CASE("residuals are homogeneous of degree two under rational scaling") {
    QuadraticSystem sys = generate_system(7, 1);
    std::vector<Rational> q{Rational(1), Rational(2, 3), Rational(-1, 7), Rational(5, 11)};
    std::vector<Rational> base = residual(sys, q);
    for (const Rational& lam : {Rational(3), Rational(-2, 5), Rational(7, 13)}) {
        std::vector<Rational> scaled;
        for (const auto& v : q) {
            Rational s = lam * v;
            s.canonicalize();
            scaled.push_back(s);
        }
        std::vector<Rational> res = residual(sys, scaled);
        for (std::size_t i = 0; i < res.size(); ++i) {
            Rational expect = lam * lam * base[i];
            expect.canonicalize();
            CHECK(res[i] == expect);
        }
    }
}

TEST_CASE("exact radical residual agrees with double residual") {
    QuadraticSystem sys = generate_system(7, 1);
    std::vector<Radical> q{Radical(Rational(1)), Radical(Rational(1, 15), Int(5)),
                           Radical(Rational(1, 5)), Radical(Rational(-1, 5), Int(5))};
    auto exact = residual_radical(sys, q);
    std::vector<double> qd;
    for (const auto& r : q) qd.push_back(r.to_double());
    auto approx = residual_double(sys, qd);
    REQUIRE(exact.size() == approx.size());
    for (std::size_t i = 0; i < exact.size(); ++i) {
        CHECK(exact[i].is_zero());
        CHECK(std::abs(approx[i]) < 1e-12);
    }
}

TEST_CASE("continued-fraction rationalization recovers simple fractions") {
    CHECK(detail::rationalize(0.2) == Rational(1, 5));
    CHECK(detail::rationalize(-0.2) == Rational(-1, 5));
    CHECK(detail::rationalize(1.0 / 3.0) == Rational(1, 3));
    CHECK(detail::rationalize(0.0) == 0);
    CHECK(detail::rationalize(41.0 / 152.0) == Rational(41, 152));
}

TEST_CASE("solver finds the 7-qubit solution and it lifts to exact radicals") {
    QuadraticSystem sys = generate_system(7, 1);
    SolveConfig cfg;
    cfg.restarts = 60;
    cfg.seed = 11;
    cfg.tolerance = 1e-10;
    auto sols = solve(sys, cfg);
    REQUIRE_FALSE(sols.empty());
    bool lifted_any = false;
    for (const auto& s : sols) {
        CHECK(s.q[0] == 1.0);  // gauge
        CHECK(s.max_residual < 1e-10);
        CHECK(std::abs(std::abs(s.q[2]) - 0.2) < 1e-9);       // q4 = 1/5
        CHECK(std::abs(s.q[1] * s.q[1] - 1.0 / 45.0) < 1e-9);  // q2^2 = 1/45
        CHECK(std::abs(s.q[3] + 3.0 * s.q[1]) < 1e-9);         // q6 = -3 q2
        auto exact = recognize_radical_solution(sys, s.q);
        if (!exact) continue;
        lifted_any = true;
        for (const auto& rs : residual_radical(sys, *exact)) CHECK(rs.is_zero());
        PICode code = construct_pr_code(7, *exact);
        CHECK(all_passed(verify_pauli(code, 1)));
    }
    CHECK(lifted_any);
}

TEST_CASE("solver is deterministic for a fixed seed") {
    QuadraticSystem sys = generate_system(7, 1);
    SolveConfig cfg;
    cfg.restarts = 30;
    cfg.seed = 5;
    cfg.tolerance = 1e-10;
    auto a = solve(sys, cfg);
    auto b = solve(sys, cfg);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].q == b[i].q);
        CHECK(a[i].q_rational == b[i].q_rational);
    }
}

TEST_CASE("no 5-qubit single-error code exists in this family") {
    QuadraticSystem sys = generate_system(5, 1);
    SolveConfig cfg;
    cfg.restarts = 80;
    cfg.seed = 2;
    cfg.tolerance = 1e-10;
    CHECK(solve(sys, cfg).empty());
}

TEST_CASE("recognize_radical_solution rejects non-solutions") {
    QuadraticSystem sys = generate_system(7, 1);
    std::vector<double> bogus{1.0, 0.5, 0.5, 0.5};
    CHECK_FALSE(recognize_radical_solution(sys, bogus).has_value());
}
