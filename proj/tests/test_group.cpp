#include <doctest.h>

#include "bq/random.hpp"
#include "helpers.hpp"

using namespace bq;

TEST_CASE("catalog groups satisfy the axioms exactly") {
    for (const auto& name : bqtest::battery()) {
        CAPTURE(name);
        FiniteGroup g = build_group(parse_group_spec(name));
        ValidationReport rep = validate_group(g);
        CHECK(rep.ok());
        CHECK(g.identity == 0);
    }
}

TEST_CASE("cyclic groups") {
    FiniteGroup one = build_group(parse_group_spec("cyclic(1)"));
    CHECK(one.order == 1);
    CHECK(one.mul(0, 0) == 0);

    FiniteGroup z4 = build_group(parse_group_spec("cyclic(4)"));
    CHECK(z4.order == 4);
    CHECK(z4.inv(3) == 1);
    CHECK(z4.is_abelian());
}

TEST_CASE("dihedral(4) is non-abelian of order 8") {
    FiniteGroup d4 = build_group(parse_group_spec("dihedral(4)"));
    CHECK(d4.order == 8);
    bool witness = false;
    for (int x = 0; x < d4.order && !witness; ++x)
        for (int y = 0; y < d4.order; ++y)
            if (d4.mul(x, y) != d4.mul(y, x)) {
                witness = true;
                break;
            }
    CHECK(witness);
    CHECK_FALSE(d4.is_abelian());
}

TEST_CASE("heisenberg(3) builds and validates") {
    FiniteGroup h = build_group(parse_group_spec("heisenberg(3)"));
    CHECK(h.order == 27);
    CHECK(validate_group(h).ok());
    CHECK_FALSE(h.is_abelian());
}

TEST_CASE("a tampered table is rejected with a witness") {
    FiniteGroup g = build_group(parse_group_spec("cyclic(4)"));
    std::swap(g.mul_table[1 * g.order + 1], g.mul_table[1 * g.order + 2]);
    ValidationReport rep = validate_group(g);
    CHECK_FALSE(rep.ok());
    bool has_witness = false;
    for (const auto& c : rep.checks)
        if (!c.pass && !c.detail.empty()) has_witness = true;
    CHECK(has_witness);
}

TEST_CASE("direct products") {
    FiniteGroup c2 = build_group(parse_group_spec("cyclic(2)"));
    FiniteGroup klein = direct_product(c2, c2);
    CHECK(klein.order == 4);
    CHECK(klein.is_abelian());
    CHECK(validate_group(klein).ok());

    FiniteGroup s3 = build_group(parse_group_spec("symmetric(3)"));
    FiniteGroup triv = build_group(parse_group_spec("cyclic(1)"));
    FiniteGroup same = direct_product(triv, s3);
    CHECK(same.order == s3.order);
    CHECK(same.mul_table == s3.mul_table);

    FiniteGroup c2s3 = direct_product(c2, s3);
    CHECK(c2s3.order == 12);
    CHECK_FALSE(c2s3.is_abelian());
    CHECK(validate_group(c2s3).ok());
}

TEST_CASE("counting measure is translation invariant") {
    FiniteGroup g = build_group(parse_group_spec("dihedral(4)"));
    Rng rng(11);
    Vector u = rng.vector(g.order);
    Complex total = u.sum();
    for (int t = 0; t < g.order; ++t) {
        Complex left = 0, right = 0;
        for (int x = 0; x < g.order; ++x) {
            left += u(g.mul(t, x));
            right += u(g.mul(x, t));
        }
        CHECK(std::abs(left - total) < 1e-12);
        CHECK(std::abs(right - total) < 1e-12);
    }
}

TEST_CASE("order bound and spec parsing errors") {
    CHECK_THROWS_AS(build_group(parse_group_spec("cyclic(65)")),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_group_spec("frobnicate(3)"), std::invalid_argument);
    CHECK_THROWS_AS(build_group(parse_group_spec("symmetric(5)")),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        build_group(parse_group_spec("product(cyclic(16),cyclic(16))")),
        std::invalid_argument);
}
