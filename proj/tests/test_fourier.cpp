#include <doctest.h>

#include <Eigen/SVD>

#include "bq/random.hpp"
#include "helpers.hpp"

using namespace bq;

namespace {

SymbolField random_field(const UnitaryDual& dual, int order, Rng& rng) {
    SymbolField f = symbol_zero(dual, order);
    for (int xi = 0; xi < dual.size(); ++xi)
        for (int x = 0; x < order; ++x)
            f.blocks[xi][x] = rng.matrix(dual.dim(xi), dual.dim(xi));
    return f;
}

} // namespace

TEST_CASE("transform of delta functions on cyclic(2)") {
    bqtest::GroupFixture fx("cyclic(2)");
    Vector de = Vector::Zero(2), dg = Vector::Zero(2);
    de(0) = 1;
    dg(1) = 1;
    DualField fe = fourier(fx.g, fx.dual, de);
    DualField fg = fourier(fx.g, fx.dual, dg);
    // characters of cyclic(2) are (1,1) and (1,-1) in some order
    std::vector<Complex> got = {fg.blocks[0](0, 0), fg.blocks[1](0, 0)};
    CHECK(std::abs(fe.blocks[0](0, 0) - 1.0) < 1e-14);
    CHECK(std::abs(fe.blocks[1](0, 0) - 1.0) < 1e-14);
    CHECK(std::abs(got[0] * got[1] + 1.0) < 1e-14);  // one is +1, the other -1
    CHECK(std::abs(std::abs(got[0]) - 1.0) < 1e-14);
}

TEST_CASE("constant function concentrates on the trivial irrep") {
    for (int n : {3, 5, 8}) {
        bqtest::GroupFixture fx("cyclic(" + std::to_string(n) + ")");
        Vector ones = Vector::Ones(n);
        DualField phi = fourier(fx.g, fx.dual, ones);
        int trivial_hits = 0;
        for (int xi = 0; xi < fx.dual.size(); ++xi) {
            double a = std::abs(phi.blocks[xi](0, 0));
            if (a > 1e-9) {
                ++trivial_hits;
                CHECK(std::abs(phi.blocks[xi](0, 0) - Complex(n, 0)) < 1e-12);
            }
        }
        CHECK(trivial_hits == 1);
    }
}

TEST_CASE("inversion and Plancherel on the battery") {
    for (const auto& name : bqtest::battery()) {
        CAPTURE(name);
        bqtest::GroupFixture fx(name);
        Rng rng(mix_seed(7, 21));
        Vector u = rng.vector(fx.g.order);
        DualField phi = fourier(fx.g, fx.dual, u);
        Vector back = inverse_fourier(fx.g, fx.dual, phi);
        CHECK((back - u).cwiseAbs().maxCoeff() < 1e-12 * (1 + u.cwiseAbs().maxCoeff()));
        double dual_norm2 = 0;
        for (int xi = 0; xi < fx.dual.size(); ++xi)
            dual_norm2 += fx.dual.weight(xi) * phi.blocks[xi].squaredNorm();
        CHECK(std::abs(dual_norm2 - u.squaredNorm()) < 1e-9);
    }
}

TEST_CASE("schatten norms") {
    Matrix id = Matrix::Identity(2, 2);
    CHECK(schatten_norm(id, 1.0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(schatten_norm(id, kInf) == doctest::Approx(1.0).epsilon(1e-12));

    Matrix diag = Matrix::Zero(2, 2);
    diag(0, 0) = 3;
    diag(1, 1) = 4;
    CHECK(schatten_norm(diag, 2.0) == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(schatten_norm(diag, 1.0) == doctest::Approx(7.0).epsilon(1e-12));
    CHECK(schatten_norm(diag, kInf) == doctest::Approx(4.0).epsilon(1e-12));

    Rng rng(mix_seed(7, 22));
    for (int trial = 0; trial < 5; ++trial) {
        Matrix m = rng.matrix(4, 4);
        // independent oracle: singular values straight from an SVD
        Eigen::JacobiSVD<Matrix> svd(m);
        Eigen::VectorXd sv = svd.singularValues();
        double p1 = sv.sum(), p2 = std::sqrt(sv.squaredNorm()), pinf = sv.maxCoeff();
        CHECK(schatten_norm(m, 1.0) == doctest::Approx(p1).epsilon(1e-10));
        CHECK(schatten_norm(m, 2.0) == doctest::Approx(p2).epsilon(1e-10));
        CHECK(schatten_norm(m, kInf) == doctest::Approx(pinf).epsilon(1e-10));
        CHECK(schatten_norm(m, kInf) <= schatten_norm(m, 2.0) + 1e-12);
        CHECK(schatten_norm(m, 2.0) <= schatten_norm(m, 1.0) + 1e-12);
    }
    CHECK_THROWS_AS(schatten_norm(id, 0.5), std::invalid_argument);
}

TEST_CASE("mixed norms of the identity field on cyclic(2)") {
    bqtest::GroupFixture fx("cyclic(2)");
    SymbolField one = symbol_one(fx.dual, fx.g.order);
    CHECK(bpp_norm(fx.dual, one, kInf) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(bpp_norm(fx.dual, one, 1.0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(std::abs(pairing(fx.dual, one, one) - Complex(2, 0)) < 1e-12);
    CHECK(std::abs(big_trace(fx.dual, one) - Complex(fx.g.order, 0)) < 1e-12);
}

TEST_CASE("pairing and norm inequalities on random fields") {
    bqtest::GroupFixture s3("symmetric(3)");
    bqtest::GroupFixture d4("dihedral(4)");
    Rng rng(mix_seed(7, 23));

    SUBCASE("pairing(F,F) equals the squared 2-norm, and is nonnegative") {
        SymbolField f = random_field(s3.dual, s3.g.order, rng);
        Complex p = pairing(s3.dual, f, f);
        CHECK(std::abs(p.imag()) < 1e-10);
        double n2 = bpp_norm(s3.dual, f, 2.0);
        CHECK(p.real() == doctest::Approx(n2 * n2).epsilon(1e-10));
        Complex tr = big_trace(s3.dual, symbol_product(symbol_star(f), f));
        CHECK(tr.real() >= -1e-10);
    }

    SUBCASE("Hoelder for the pointwise product") {
        SymbolField f = random_field(s3.dual, s3.g.order, rng);
        SymbolField h = random_field(s3.dual, s3.g.order, rng);
        double lhs = bpp_norm(s3.dual, symbol_product(f, h), 1.0);
        CHECK(lhs <= bpp_norm(s3.dual, f, 2.0) * bpp_norm(s3.dual, h, 2.0) + 1e-10);
    }

    SUBCASE("duality bound |<F,H>| <= ||F||_1 ||H||_inf") {
        SymbolField f = random_field(d4.dual, d4.g.order, rng);
        SymbolField h = random_field(d4.dual, d4.g.order, rng);
        CHECK(std::abs(pairing(d4.dual, f, h)) <=
              bpp_norm(d4.dual, f, 1.0) * bpp_norm(d4.dual, h, kInf) + 1e-10);
    }

    SUBCASE("pairing is linear in the first slot, conjugate-linear in the second") {
        SymbolField f = random_field(d4.dual, d4.g.order, rng);
        SymbolField h = random_field(d4.dual, d4.g.order, rng);
        Complex alpha(0.3, -1.7);
        SymbolField af = symbol_axpy(alpha - 1.0, f, f);  // alpha * f
        SymbolField ah = symbol_axpy(alpha - 1.0, h, h);  // alpha * h
        CHECK(std::abs(pairing(d4.dual, af, h) - alpha * pairing(d4.dual, f, h)) <
              1e-10);
        CHECK(std::abs(pairing(d4.dual, f, ah) -
                       std::conj(alpha) * pairing(d4.dual, f, h)) < 1e-10);
    }
}

TEST_CASE("orientation guards") {
    bqtest::GroupFixture fx("cyclic(3)");
    SymbolField one = symbol_one(fx.dual, fx.g.order);
    SymbolField flipped = one.reindexed();
    CHECK_THROWS_AS(bpp_norm(fx.dual, flipped, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(pairing(fx.dual, flipped, one), std::invalid_argument);
    CHECK_THROWS_AS(big_trace(fx.dual, flipped), std::invalid_argument);
    CHECK(flipped.reindexed().orientation == Orientation::DualFirst);
}
