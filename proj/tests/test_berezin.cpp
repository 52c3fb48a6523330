#include <doctest.h>

#include "bq/berezin.hpp"
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

TEST_CASE("coherent states on cyclic(2)") {
    bqtest::GroupFixture fx("cyclic(2)");
    Vector de = Vector::Zero(2);
    de(0) = 1;
    int sign = -1, trivial = -1;
    for (int xi = 0; xi < fx.dual.size(); ++xi)
        (std::abs(fx.dual.irreps[xi].character(1) + 1.0) < 1e-12 ? sign : trivial) =
            xi;
    REQUIRE(sign >= 0);
    REQUIRE(trivial >= 0);

    MatrixValuedFunction at_g = coherent_state(fx.g, fx.dual, de, sign, 1);
    CHECK(std::abs(at_g.values[0](0, 0)) < 1e-14);
    CHECK(std::abs(at_g.values[1](0, 0) + 1.0) < 1e-14);

    MatrixValuedFunction at_e = coherent_state(fx.g, fx.dual, de, trivial, 0);
    CHECK(std::abs(at_e.values[0](0, 0) - 1.0) < 1e-14);
    CHECK(std::abs(at_e.values[1](0, 0)) < 1e-14);
}

TEST_CASE("coherent states have constant module norm") {
    bqtest::GroupFixture fx("symmetric(3)");
    Rng rng(mix_seed(7, 41));
    Vector omega = rng.vector(fx.g.order);
    for (int xi = 0; xi < fx.dual.size(); ++xi) {
        int d = fx.dual.dim(xi);
        for (int x = 0; x < fx.g.order; ++x) {
            MatrixValuedFunction st = coherent_state(fx.g, fx.dual, omega, xi, x);
            Matrix gram = module_inner(st, st);
            CHECK(bqtest::max_abs(gram -
                                  omega.squaredNorm() * Matrix::Identity(d, d)) <
                  1e-10);
        }
    }
}

TEST_CASE("phase-space projections") {
    SUBCASE("cyclic(2), delta window at the shifted point") {
        bqtest::GroupFixture fx("cyclic(2)");
        Vector de = Vector::Zero(2);
        de(0) = 1;
        int trivial = std::abs(fx.dual.irreps[0].character(1) - 1.0) < 1e-12 ? 0 : 1;
        Matrix pr = projector(fx.g, fx.dual, de, trivial, 1);
        Matrix expect = Matrix::Zero(2, 2);
        expect(1, 1) = 1;
        CHECK(bqtest::max_abs(pr - expect) < 1e-14);
    }

    SUBCASE("squares to the window mass times itself") {
        bqtest::GroupFixture fx("dihedral(4)");
        Vector omega = Vector::Zero(fx.g.order);
        omega(0) = 1;
        omega(3) = 1;  // ||omega||^2 = 2
        for (int xi = 0; xi < fx.dual.size(); ++xi) {
            Matrix pr = projector(fx.g, fx.dual, omega, xi, 2);
            CHECK(bqtest::max_abs(pr * pr - 2.0 * pr) < 1e-10);
            CHECK(bqtest::max_abs(pr - pr.adjoint()) < 1e-12);
        }
    }

    SUBCASE("unit window gives a genuine orthogonal projection") {
        bqtest::GroupFixture fx("quaternion8");
        Rng rng(mix_seed(7, 42));
        Vector omega = rng.unit_vector(fx.g.order);
        for (int xi = 0; xi < fx.dual.size(); ++xi) {
            Matrix pr = projector(fx.g, fx.dual, omega, xi, 3);
            CHECK(bqtest::max_abs(pr * pr - pr) < 1e-10);
            CHECK(bqtest::max_abs(pr - pr.adjoint()) < 1e-12);
            Eigen::SelfAdjointEigenSolver<Matrix> es(pr);
            CHECK(es.eigenvalues().minCoeff() > -1e-10);
        }
    }
}

TEST_CASE("quantizing the identity field gives the identity operator") {
    for (const auto& name : {"cyclic(2)", "symmetric(3)"}) {
        CAPTURE(name);
        bqtest::GroupFixture fx(name);
        Rng rng(mix_seed(7, 43));
        Vector omega = rng.unit_vector(fx.g.order);
        SymbolField one = symbol_one(fx.dual, fx.g.order);
        Matrix b = berezin_weak(fx.g, fx.dual, omega, one);
        CHECK(bqtest::max_abs(b - Matrix::Identity(fx.g.order, fx.g.order)) < 1e-10);
    }
}

TEST_CASE("kernel form on cyclic(2) with the identity field is the identity") {
    bqtest::GroupFixture fx("cyclic(2)");
    Vector de = Vector::Zero(2);
    de(0) = 1;
    SymbolField one = symbol_one(fx.dual, fx.g.order);
    BerezinKernelResult kr = berezin_kernel(fx.g, fx.dual, de, one);
    CHECK(bqtest::max_abs(kr.kernel - Matrix::Identity(2, 2)) < 1e-14);
    CHECK(bqtest::max_abs(kr.op - kr.kernel) == 0.0);
}

TEST_CASE("weak and kernel evaluations agree") {
    bqtest::GroupFixture fx("dihedral(4)");
    Rng rng(mix_seed(7, 44));
    for (int trial = 0; trial < 3; ++trial) {
        Vector omega = rng.vector(fx.g.order);
        SymbolField f = random_field(fx.dual, fx.g.order, rng);
        Matrix weak = berezin_weak(fx.g, fx.dual, omega, f);
        Matrix kern = berezin_kernel(fx.g, fx.dual, omega, f).op;
        CHECK(bqtest::max_abs(weak - kern) < 1e-9 * (1 + bqtest::max_abs(weak)));
    }
}

TEST_CASE("self-adjoint fields quantize to self-adjoint operators") {
    bqtest::GroupFixture fx("symmetric(3)");
    Rng rng(mix_seed(7, 45));
    Vector omega = rng.vector(fx.g.order);
    SymbolField f = symbol_zero(fx.dual, fx.g.order);
    for (int xi = 0; xi < fx.dual.size(); ++xi)
        for (int x = 0; x < fx.g.order; ++x)
            f.blocks[xi][x] = rng.hermitian(fx.dual.dim(xi));
    Matrix k = berezin_kernel(fx.g, fx.dual, omega, f).kernel;
    CHECK(bqtest::max_abs(k - k.adjoint()) < 1e-10);
}

TEST_CASE("weak form matches the duality pairing against products of transforms") {
    bqtest::GroupFixture fx("dihedral(4)");
    Rng rng(mix_seed(7, 46));
    Vector omega = rng.vector(fx.g.order);
    Vector u = rng.vector(fx.g.order), v = rng.vector(fx.g.order);
    SymbolField f = random_field(fx.dual, fx.g.order, rng);

    Matrix b = berezin_weak(fx.g, fx.dual, omega, f);
    Complex lhs = v.dot(b * u);

    SymbolField wu = fourier_wigner(fx.g, fx.dual, u, omega);
    SymbolField wv = fourier_wigner(fx.g, fx.dual, v, omega);
    SymbolField h = symbol_zero(fx.dual, fx.g.order);
    for (int xi = 0; xi < fx.dual.size(); ++xi)
        for (int x = 0; x < fx.g.order; ++x)
            h.blocks[xi][x] = wu.at(xi, x).adjoint() * wv.at(xi, x);
    Complex rhs = pairing(fx.dual, f, h);
    CHECK(std::abs(lhs - rhs) < 1e-9 * (1 + std::abs(lhs)));
}
