#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "helpers.hpp"
#include "toralg/polynomial.hpp"

using namespace toralg;
using namespace toralg::testing;

TEST_CASE("degrevlex comparisons") {
    MonomialOrder ord;  // degrevlex
    // x^2 y  vs  x y^2 in two variables x > y
    Monomial a = Monomial::var(2, 0, 2) * Monomial::var(2, 1, 1);
    Monomial b = Monomial::var(2, 0, 1) * Monomial::var(2, 1, 2);
    CHECK(compare(a, b, ord) > 0);
    // x^3 vs x y: degree decides
    Monomial c = Monomial::var(2, 0, 3);
    Monomial d = Monomial::var(2, 0, 1) * Monomial::var(2, 1, 1);
    CHECK(compare(c, d, ord) > 0);
    // reflexivity
    CHECK(compare(a, a, ord) == 0);
    // x^4 vs y^3 z in three variables: same degree, degrevlex prefers x^4
    Monomial e = Monomial::var(3, 0, 4);
    Monomial f = Monomial::var(3, 1, 3) * Monomial::var(3, 2, 1);
    CHECK(compare(e, f, ord) > 0);
}

TEST_CASE("monomial arithmetic") {
    Monomial x = Monomial::var(2, 0), y = Monomial::var(2, 1);
    Monomial xy = x * y;
    CHECK(xy.deg == 2);
    CHECK(x.divides(xy));
    CHECK(!xy.divides(x));
    CHECK(xy / x == y);
    CHECK(lcm(x, y) == xy);
    CHECK(coprime(x, y));
    CHECK(!coprime(xy, y));
}

TEST_CASE("polynomial arithmetic over QQ") {
    RingPtr R = qq_ring({"x", "y"});
    QPoly f = pp(R, "x + y");
    QPoly g = pp(R, "x - y");
    CHECK(f * g == pp(R, "x^2 - y^2"));
    CHECK(f + g == pp(R, "2*x"));
    CHECK((f - f).is_zero());
}

TEST_CASE("characteristic two") {
    RingPtr R = gf_ring(2, {"x", "y"});
    FpPoly f = pp<Fp>(R, "x + y");
    CHECK(f * f == pp<Fp>(R, "x^2 + y^2"));
}

TEST_CASE("leading term under degrevlex") {
    RingPtr R = qq_ring({"x", "y", "z"});
    QPoly f = pp(R, "x^4 - y^3*z");
    CHECK(f.leading_term().m == Monomial::var(3, 0, 4));
    CHECK(f.total_degree() == 4);
    CHECK(f.is_homogeneous());
    CHECK(!pp(R, "x^2 + y").is_homogeneous());
}

namespace {

QPoly random_poly(const RingPtr& R, std::mt19937& rng) {
    std::vector<Term<Rational>> ts;
    int nterms = static_cast<int>(rng() % 5);
    for (int i = 0; i < nterms; ++i) {
        Monomial m = Monomial::one(R->nvars());
        for (int v = 0; v < R->nvars(); ++v) {
            int e = static_cast<int>(rng() % 3);
            m.e[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(e);
            m.deg += e;
        }
        long c = static_cast<long>(rng() % 11) - 5;
        ts.push_back({Rational(c), m});
    }
    return QPoly(R, std::move(ts));
}

}  // namespace

TEST_CASE("ring axioms on random polynomials") {
    RingPtr R = qq_ring({"x", "y", "z"});
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        QPoly a = random_poly(R, rng), b = random_poly(R, rng), c = random_poly(R, rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("normalization is idempotent") {
    RingPtr R = qq_ring({"x", "y"});
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        QPoly a = random_poly(R, rng);
        QPoly renorm(R, std::vector<Term<Rational>>(a.terms().begin(), a.terms().end()));
        CHECK(a == renorm);
    }
}

TEST_CASE("homogeneity preserved by products") {
    RingPtr R = qq_ring({"x", "y", "z"});
    QPoly f = pp(R, "x^2 + y*z");
    QPoly g = pp(R, "x*y - z^2");
    QPoly h = f * g;
    CHECK(h.is_homogeneous());
    CHECK(h.total_degree() == f.total_degree() + g.total_degree());
}

TEST_CASE("mismatched rings are rejected") {
    RingPtr R1 = qq_ring({"x", "y"});
    RingPtr R2 = qq_ring({"x", "z"});
    QPoly f = pp(R1, "x");
    QPoly g = pp(R2, "x");
    CHECK_THROWS_AS(f + g, std::invalid_argument);
}

TEST_CASE("spec line parsing") {
    InputSpec s = parse_input("QQ[x,y,z] / (x*y^2, x*y*z, y*z^2, x^4-y^3*z, x*z^3-y^4)");
    CHECK(s.field.kind == FieldKind::rationals);
    CHECK(s.vars == std::vector<std::string>{"x", "y", "z"});
    CHECK(s.generator_exprs.size() == 5);

    InputSpec t = parse_input("GF 2[u,v,w,x,y,z] / (x*y^2)");
    CHECK(t.field.kind == FieldKind::prime);
    CHECK(t.field.characteristic == 2);
    CHECK(t.vars.size() == 6);

    InputSpec z = parse_input("QQ[x] / ()");
    CHECK(z.generator_exprs.empty());
}

TEST_CASE("spec file parsing") {
    std::string text = "# comment\nFIELD GF 7\nVARS x, y\nGENS\nx^2 + 3*y^2\nx*y\n";
    InputSpec s = parse_input(text);
    CHECK(s.field.characteristic == 7);
    CHECK(s.vars.size() == 2);
    REQUIRE(s.generator_exprs.size() == 2);
    RingPtr R = make_ring(s.field, s.vars);
    auto gens = build_generators<Fp>(R, s);
    CHECK(gens[0] == pp<Fp>(R, "x^2+3*y^2"));
}

TEST_CASE("parse errors carry positions") {
    auto full_parse = [](const std::string& text) {
        InputSpec s = parse_input(text);
        return build_generators<Rational>(make_ring(s.field, s.vars), s);
    };
    CHECK_THROWS_AS(full_parse("QQ[x,y] / (x + )"), parse_error);
    CHECK_THROWS_AS(parse_input("GF 4[x] / (x)"), parse_error);       // non-prime
    CHECK_THROWS_AS(parse_input("QQ[x,x] / (x)"), parse_error);       // duplicate var
    RingPtr R = qq_ring({"x"});
    CHECK_THROWS_AS(pp(R, "x + w"), parse_error);                     // unknown variable
    try {
        parse_polynomial<Rational>(R, "x + w");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.column() == 5);
    }
}
