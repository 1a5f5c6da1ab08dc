#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qtwist/uqsl2.hpp"

using namespace qtwist;

namespace {

const VarSpec kNoW = VarSpec::single("w", 0);

TensorElement el(const VarSpec& spec, int cap, std::vector<PBWMonomial> key) {
    return TensorElement::term(spec, cap, std::move(key), WSeries::one(spec, QScalar(1)));
}

PBWMonomial random_monomial(std::mt19937_64& rng) {
    auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); };
    return PBWMonomial{pick(0, 3), pick(-2, 2), pick(0, 3)};
}

QScalar random_qscalar(std::mt19937_64& rng) {
    auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); };
    IntPoly num(std::vector<BigInt>{pick(-3, 3), pick(-3, 3)});
    if (num.is_zero()) num = IntPoly(1);
    return QScalar(pick(-2, 2), num, IntPoly(pick(1, 3)));
}

TensorElement random_element(std::mt19937_64& rng, const VarSpec& spec, int rank, int cap, int nterms) {
    TensorElement x(spec, rank, cap);
    for (int t = 0; t < nterms; ++t) {
        TensorKey key;
        for (int i = 0; i < rank; ++i) key.push_back(random_monomial(rng));
        x.add_term(key, WSeries::constant(spec, random_qscalar(rng)));
    }
    return x;
}

}  // namespace

TEST_CASE("straightening reproduces the defining relations") {
    const int cap = 8;
    auto t = el(kNoW, cap, {gen_t(1)});
    auto tinv = el(kNoW, cap, {gen_t(-1)});
    auto e = el(kNoW, cap, {gen_e()});
    auto f = el(kNoW, cap, {gen_f()});

    CHECK(t * e == (e * t).scaled_q(QScalar::q_pow(1) * QScalar::q()));  // te = q^2 et
    CHECK(t * e == (e * t).scaled_q(QScalar::q_pow(2)));
    CHECK(t * f == (f * t).scaled_q(QScalar::q_pow(-2)));
    CHECK(t * tinv == TensorElement::one(kNoW, 1, cap));

    TensorElement h = (t - tinv).scaled_q(comm_denom_inv());
    CHECK(e * f - f * e == h);
}

TEST_CASE("monomial products associate") {
    std::mt19937_64 rng(919);
    const int cap = 14;  // large enough that no product term is truncated
    for (int trial = 0; trial < 25; ++trial) {
        auto x = el(kNoW, cap, {random_monomial(rng)});
        auto y = el(kNoW, cap, {random_monomial(rng)});
        auto z = el(kNoW, cap, {random_monomial(rng)});
        CHECK((x * y) * z == x * (y * z));
    }
}

TEST_CASE("two-dimensional representation is multiplicative") {
    std::mt19937_64 rng(333);
    auto e = el(kNoW, 3, {gen_e()});
    auto f = el(kNoW, 3, {gen_f()});
    auto t = el(kNoW, 3, {gen_t(1)});

    auto cs = [&](const QScalar& v) { return WSeries::constant(kNoW, v); };
    auto zero = WSeries(kNoW);
    SpectralMatrix<WSeries> me(2, zero), mf(2, zero), mt(2, zero);
    me.at(0, 1) = cs(QScalar(1));
    mf.at(1, 0) = cs(QScalar(1));
    mt.at(0, 0) = cs(QScalar::q_pow(1));
    mt.at(1, 1) = cs(QScalar::q_pow(-1));
    CHECK(e.rep2() == me);
    CHECK(f.rep2() == mf);
    CHECK(t.rep2() == mt);

    for (int trial = 0; trial < 10; ++trial) {
        auto x = random_element(rng, kNoW, 2, 3, 3);
        auto y = random_element(rng, kNoW, 2, 3, 3);
        CHECK((x * y).rep2() == x.rep2() * y.rep2());
    }
}

TEST_CASE("coproduct is a coassociative counital algebra map") {
    std::mt19937_64 rng(555);
    const int cap = 10;
    auto e = el(kNoW, cap, {gen_e()});
    auto f = el(kNoW, cap, {gen_f()});

    // generator images
    TensorElement de(kNoW, 2, cap), df(kNoW, 2, cap);
    de.add_term({gen_e(), PBWMonomial{}}, WSeries::one(kNoW, QScalar(1)));
    de.add_term({gen_t(1), gen_e()}, WSeries::one(kNoW, QScalar(1)));
    df.add_term({gen_f(), gen_t(-1)}, WSeries::one(kNoW, QScalar(1)));
    df.add_term({PBWMonomial{}, gen_f()}, WSeries::one(kNoW, QScalar(1)));
    CHECK(e.coproduct(0) == de);
    CHECK(f.coproduct(0) == df);

    for (int trial = 0; trial < 8; ++trial) {
        auto x = el(kNoW, cap, {random_monomial(rng)});
        auto y = el(kNoW, cap, {random_monomial(rng)});
        CHECK((x * y).coproduct(0) == x.coproduct(0) * y.coproduct(0));
        CHECK(x.coproduct(0).coproduct(0) == x.coproduct(0).coproduct(1));  // coassociativity
        CHECK(x.coproduct(0).counit(0) == x);
        CHECK(x.coproduct(0).counit(1) == x);
    }
}

TEST_CASE("counit kills e and f and removes the slot") {
    auto x = el(kNoW, 4, {gen_e(), gen_t(3)});
    CHECK(x.counit(0).is_zero());
    auto y = x.counit(1);
    CHECK(y == el(kNoW, 4, {gen_e()}));
    auto scalar = el(kNoW, 4, {gen_t(2)}).counit(0);
    CHECK(scalar == TensorElement::one(kNoW, 0, 4));
}

TEST_CASE("nilpotent R part: counit in either slot gives 1") {
    auto rb = r_nilpotent(kNoW, 5);
    CHECK(rb.counit(0) == TensorElement::one(kNoW, 1, 5));
    CHECK(rb.counit(1) == TensorElement::one(kNoW, 1, 5));
}

TEST_CASE("R matrix image on the 2-fold module") {
    auto rb = r_nilpotent(kNoW, 3);
    auto rmat = qmt_rep2(kNoW) * rb.rep2();
    auto cs = [&](const QScalar& v) { return WSeries::constant(kNoW, v); };
    SpectralMatrix<WSeries> expect(4, WSeries(kNoW));
    expect.at(0, 0) = cs(QScalar::v_pow(-1));
    expect.at(1, 1) = cs(QScalar::v_pow(1));
    expect.at(2, 2) = cs(QScalar::v_pow(1));
    expect.at(3, 3) = cs(QScalar::v_pow(-1));
    expect.at(1, 2) = cs(QScalar::v_pow(-1) * (QScalar(1) - QScalar::q_pow(2)));
    CHECK(rmat == expect);
}

TEST_CASE("R matrix intertwines the coproduct with its opposite") {
    auto rb = r_nilpotent(kNoW, 4);
    auto rmat = qmt_rep2(kNoW) * rb.rep2();
    for (PBWMonomial g : {gen_e(), gen_f(), gen_t(1)}) {
        auto x = el(kNoW, 4, {g});
        auto dx = x.coproduct(0);
        auto dx_op = dx.embed(2, {1, 0});
        CHECK(rmat * dx.rep2() == dx_op.rep2() * rmat);
    }
}

TEST_CASE("R matrix factorizes under the coproduct and satisfies YBE") {
    const int cap = 4;
    auto rb = r_nilpotent(kNoW, cap);
    auto qmt = qmt_rep2(kNoW);
    auto qmt13 = embed13(qmt), qmt23 = embed23(qmt), qmt12 = embed12(qmt);
    auto r13 = qmt13 * rb.embed(3, {0, 2}).rep2();
    auto r23 = qmt23 * rb.embed(3, {1, 2}).rep2();
    auto r12 = qmt12 * rb.embed(3, {0, 1}).rep2();

    auto lhs1 = qmt13 * (qmt23 * rb.coproduct(0).rep2());
    CHECK(lhs1 == r13 * r23);

    auto lhs2 = qmt13 * (qmt12 * rb.coproduct(1).rep2());
    CHECK(lhs2 == r13 * r12);

    CHECK(r12 * (r13 * r23) == r23 * (r13 * r12));
}

TEST_CASE("dynamical shift left-multiplies t^(2n) in the chosen slot") {
    VarSpec spec = VarSpec::single("w", 4);
    TensorElement x(spec, 2, 4);
    x.add_term({PBWMonomial{}, PBWMonomial{}}, WSeries::monomial(spec, {1}, QScalar(1)));
    x.add_term({gen_f(), gen_e()}, WSeries::monomial(spec, {2}, QScalar(1)));

    TensorElement expect(spec, 2, 4);
    expect.add_term({gen_t(2), PBWMonomial{}}, WSeries::monomial(spec, {1}, QScalar(1)));
    expect.add_term({PBWMonomial{1, 4, 0}, gen_e()},
                    WSeries::monomial(spec, {2}, QScalar::q_pow(-8)));
    CHECK(x.dynamical_shift(0) == expect);

    // in the slot holding e the weight factor is absent (a = 0)
    TensorElement expect2(spec, 2, 4);
    expect2.add_term({PBWMonomial{}, gen_t(2)}, WSeries::monomial(spec, {1}, QScalar(1)));
    expect2.add_term({gen_f(), PBWMonomial{0, 4, 1}}, WSeries::monomial(spec, {2}, QScalar(1)));
    CHECK(x.dynamical_shift(1) == expect2);
}

TEST_CASE("shift automorphism: generator images, multiplicativity, composition") {
    VarSpec spec = VarSpec::single("w", 6);
    const int cap = 6;

    auto te = el(spec, cap, {PBWMonomial{0, 3, 1}});  // t^3 e
    TensorElement expect(spec, 1, cap);
    expect.add_term({PBWMonomial{0, 5, 1}}, WSeries::monomial(spec, {1}, QScalar::q_pow(-2)));
    CHECK(te.apply_phi_power(1) == expect);

    // f alone would need w^{-1}
    auto f = el(spec, cap, {gen_f()});
    CHECK_THROWS_AS(f.apply_phi_power(1), DomainError);

    // but w * f shifts down to w^0
    auto wf = TensorElement::term(spec, cap, {gen_f()}, WSeries::monomial(spec, {1}, QScalar(1)));
    TensorElement expect_f(spec, 1, cap);
    expect_f.add_term({PBWMonomial{1, -2, 0}}, WSeries::constant(spec, QScalar::q_pow(2)));
    CHECK(wf.apply_phi_power(1) == expect_f);

    // automorphism property on elements of nonnegative weight
    TensorElement x(spec, 2, cap), y(spec, 2, cap);
    x.add_term({PBWMonomial{0, 1, 1}, gen_e()}, WSeries::one(spec, QScalar(1)));
    x.add_term({gen_e(), PBWMonomial{0, -1, 2}}, WSeries::monomial(spec, {1}, QScalar(3)));
    y.add_term({PBWMonomial{0, -1, 1}, gen_f()}, WSeries::one(spec, QScalar(1)));
    y.add_term({gen_t(2), gen_e()}, WSeries::constant(spec, QScalar::q_pow(-1)));
    CHECK((x * y).apply_phi_power(2) == x.apply_phi_power(2) * y.apply_phi_power(2));
    CHECK(x.apply_phi_power(1).apply_phi_power(2) == x.apply_phi_power(3));
}

TEST_CASE("unipotent inversion is exact and validated") {
    VarSpec spec = VarSpec::single("w", 5);
    const int cap = 5;
    auto one = TensorElement::one(spec, 2, cap);

    // 1 - w t^2 ot 1 inverts to the geometric sum
    TensorElement x = one;
    x.add_term({gen_t(2), PBWMonomial{}}, WSeries::monomial(spec, {1}, QScalar(-1)));
    auto inv = x.invert_unipotent();
    TensorElement expect(spec, 2, cap);
    for (int n = 0; n <= 5; ++n)
        expect.add_term({gen_t(2 * n), PBWMonomial{}}, WSeries::monomial(spec, {n}, QScalar(1)));
    CHECK(inv == expect);

    // mixed nilpotent content; e/f exponents stay within the w-order of their
    // term, the grading under which truncation at cap >= w-cap is exact
    std::mt19937_64 rng(808);
    for (int trial = 0; trial < 5; ++trial) {
        TensorElement y = one;
        for (int t = 0; t < 3; ++t) {
            int n = 1 + static_cast<int>(rng() % 2);
            auto graded = [&]() {
                auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); };
                return PBWMonomial{pick(0, n), pick(-2, 2), pick(0, n)};
            };
            TensorKey key{graded(), graded()};
            std::vector<int> exps{n};
            y.add_term(key, WSeries::monomial(spec, exps, random_qscalar(rng)));
        }
        auto yi = y.invert_unipotent();
        CHECK(yi * y == one);
        CHECK(y * yi == one);
    }

    auto bad = TensorElement::term(spec, cap, {gen_e(), gen_f()}, WSeries::one(spec, QScalar(1)));
    CHECK_THROWS_AS(bad.invert_unipotent(), NonUnitConstantTerm);
}

TEST_CASE("embed places slots and validates positions") {
    auto x = el(kNoW, 4, {gen_e(), gen_f()});
    CHECK(x.embed(2, {1, 0}) == el(kNoW, 4, {gen_f(), gen_e()}));
    auto big = x.embed(4, {3, 1});
    CHECK(big == el(kNoW, 4, {PBWMonomial{}, gen_f(), PBWMonomial{}, gen_e()}));
    CHECK_THROWS_AS(x.embed(3, {0, 1, 2}), RankMismatch);
    CHECK_THROWS_AS(x.embed(2, {0, 2}), SlotOutOfRange);
    CHECK_THROWS_AS(x.embed(2, {1, 1}), SlotOutOfRange);
}
