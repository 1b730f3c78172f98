#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "toralg/groebner.hpp"

using namespace toralg;
using namespace toralg::testing;

namespace {

ReductionBudget budget() { return ReductionBudget{}; }

// sum_i s_i * input_i, evaluated exactly
template <class K>
MVec<K> apply_syzygy(const MVec<K>& s, const std::vector<MVec<K>>& inputs,
                     const ModuleOrder& ord) {
    MVec<K> acc(s.ring());
    for (int i = 0; i <= s.max_component(); ++i) {
        Polynomial<K> c = s.component(i);
        if (c.is_zero()) continue;
        acc.add(mul_poly_vec(c, inputs[static_cast<std::size_t>(i)], ord), ord);
    }
    return acc;
}

}  // namespace

TEST_CASE("monomial ideal is its own reduced basis") {
    RingPtr R = qq_ring({"x", "y"});
    auto b = budget();
    auto gb = reduced_groebner(pps(R, {"x^2", "x*y"}), b);
    REQUIRE(gb.size() == 2);
    CHECK(gb[0] == pp(R, "x*y"));
    CHECK(gb[1] == pp(R, "x^2"));
}

TEST_CASE("single S-polynomial reduces to zero") {
    RingPtr R = qq_ring({"x", "y"});
    auto b = budget();
    auto gb = reduced_groebner(pps(R, {"x+y", "y^2"}), b);
    REQUIRE(gb.size() == 2);
    CHECK(gb[0] == pp(R, "x+y"));
    CHECK(gb[1] == pp(R, "y^2"));
}

TEST_CASE("unit ideal") {
    RingPtr R = qq_ring({"x"});
    auto b = budget();
    auto gb = reduced_groebner(pps(R, {"3"}), b);
    REQUIRE(gb.size() == 1);
    CHECK(gb[0] == pp(R, "1"));
}

TEST_CASE("buchberger criterion holds on assorted ideals") {
    RingPtr R = qq_ring({"x", "y", "z"});
    std::vector<std::vector<std::string>> ideals = {
        {"x*y^2", "x*y*z", "y*z^2", "x^4-y^3*z", "x*z^3-y^4"},
        {"x^2-y*z", "y^2-x*z", "z^2-x*y"},
        {"x^3-y^2", "x*y-z^2"},
    };
    for (const auto& gens : ideals) {
        auto b = budget();
        auto gb = reduced_groebner(pps(R, gens), b);
        for (std::size_t i = 0; i < gb.size(); ++i)
            for (std::size_t j = i + 1; j < gb.size(); ++j)
                CHECK(normal_form(s_polynomial(gb[i], gb[j]), gb).is_zero());
        // membership of the inputs
        for (const auto& g : pps(R, gens)) CHECK(normal_form(g, gb).is_zero());
        // determinism: a second run gives the identical basis
        auto b2 = budget();
        CHECK(gb == reduced_groebner(pps(R, gens), b2));
    }
}

TEST_CASE("normal forms") {
    RingPtr R = qq_ring({"x", "y"});
    auto b = budget();
    auto gb1 = reduced_groebner(pps(R, {"x^2"}), b);
    CHECK(normal_form(pp(R, "x^2*y"), gb1).is_zero());
    auto gb2 = reduced_groebner(pps(R, {"x"}), b);
    CHECK(normal_form(pp(R, "x*y + y"), gb2) == pp(R, "y"));
}

TEST_CASE("normal form invariant under generator permutation") {
    RingPtr R = qq_ring({"x", "y", "z"});
    auto b = budget();
    auto gb = reduced_groebner(pps(R, {"x^2-y*z", "y^2-x*z", "z^2-x*y"}), b);
    QPoly f = pp(R, "x^3*y + z^4 - 2*x*y*z + y");
    QPoly r = normal_form(f, gb);
    std::vector<QPoly> perm(gb.rbegin(), gb.rend());
    CHECK(normal_form(f, perm) == r);
}

TEST_CASE("koszul syzygies of the variables") {
    RingPtr R = qq_ring({"x", "y", "z"});
    auto b = budget();
    auto inputs = pps(R, {"x", "y", "z"});
    SyzygyResult<Rational> syz = syzygies(inputs, b);

    ModuleOrderPtr ord = ModuleOrder::pot(R->order);
    std::vector<MVec<Rational>> vin;
    for (const auto& f : inputs) vin.push_back(poly_to_vec(f, *ord));
    for (const auto& s : syz.generators) CHECK(apply_syzygy(s, vin, *ord).is_zero());

    // the syzygy module of a regular sequence is generated by the three
    // Koszul relations; check membership of (y, -x, 0) and count
    ModuleOrderPtr mord = ModuleOrder::pot(R->order);
    auto mgb = reduced_groebner_module(R, syz.module, mord, syz.generators, b);
    MVec<Rational> koszul(R);
    koszul.add(MVec<Rational>::from_poly(pp(R, "y"), 0, *mord), *mord);
    koszul.add(MVec<Rational>::from_poly(pp(R, "-x"), 1, *mord), *mord);
    CHECK(normal_form(koszul, mgb, *mord).is_zero());

    auto minimal = minimal_generators(R, syz.module, mord, syz.generators, b);
    CHECK(minimal.size() == 3);
}

TEST_CASE("syzygy of x^2 and xy") {
    RingPtr R = qq_ring({"x", "y"});
    auto b = budget();
    auto inputs = pps(R, {"x^2", "x*y"});
    SyzygyResult<Rational> syz = syzygies(inputs, b);
    ModuleOrderPtr ord = ModuleOrder::pot(R->order);
    std::vector<MVec<Rational>> vin;
    for (const auto& f : inputs) vin.push_back(poly_to_vec(f, *ord));
    REQUIRE(!syz.generators.empty());
    for (const auto& s : syz.generators) CHECK(apply_syzygy(s, vin, *ord).is_zero());

    auto minimal = minimal_generators(R, syz.module, ord, syz.generators, b);
    REQUIRE(minimal.size() == 1);
    // generated by (y, -x) up to scale
    MVec<Rational> expect(R);
    expect.add(MVec<Rational>::from_poly(pp(R, "y"), 0, *ord), *ord);
    expect.add(MVec<Rational>::from_poly(pp(R, "-x"), 1, *ord), *ord);
    bool match = minimal[0] == expect || minimal[0] == expect.negated();
    CHECK(match);
}

TEST_CASE("a nonzerodivisor has no syzygies") {
    RingPtr R = qq_ring({"x", "y"});
    auto b = budget();
    SyzygyResult<Rational> syz = syzygies(pps(R, {"x^2 - y^2"}), b);
    CHECK(syz.generators.empty());
}

TEST_CASE("colon ideal stability") {
    RingPtr R = qq_ring({"x", "y"});
    auto b = budget();
    auto gb1 = reduced_groebner(pps(R, {"x^2"}), b);
    CHECK(colon_equals(gb1, pp(R, "y"), b));

    auto gb2 = reduced_groebner(pps(R, {"x*y"}), b);
    CHECK(!colon_equals(gb2, pp(R, "x"), b));

    auto gb3 = reduced_groebner(pps(R, {"x^2", "x*y"}), b);
    CHECK(!colon_equals(gb3, pp(R, "x+y"), b));
}

TEST_CASE("module groebner over F_2") {
    RingPtr R = gf_ring(2, {"x", "y"});
    ModuleOrderPtr ord = ModuleOrder::pot(R->order);
    FreeModule mod = FreeModule::with_rank(2);
    std::vector<MVec<Fp>> gens;
    MVec<Fp> v1(R);
    v1.add(MVec<Fp>::from_poly(pp<Fp>(R, "x"), 0, *ord), *ord);
    v1.add(MVec<Fp>::from_poly(pp<Fp>(R, "y"), 1, *ord), *ord);
    MVec<Fp> v2 = MVec<Fp>::from_poly(pp<Fp>(R, "y"), 0, *ord);
    gens = {v1, v2};
    auto b = budget();
    auto gb = reduced_groebner_module(R, mod, ord, gens, b);
    // x e0 + y e1 and y e0 force y^2 e1 into the basis via the S-pair
    MVec<Fp> probe = MVec<Fp>::from_poly(pp<Fp>(R, "y^2"), 1, *ord);
    CHECK(normal_form(probe, gb, *ord).is_zero());
}

TEST_CASE("resource budget trips") {
    RingPtr R = qq_ring({"x", "y", "z"});
    ReductionBudget tiny{2, 0};
    CHECK_THROWS_AS(
        reduced_groebner(pps(R, {"x^2-y*z", "y^2-x*z", "z^2-x*y", "x*y*z-z^3"}), tiny),
        resource_limit_error);
}
