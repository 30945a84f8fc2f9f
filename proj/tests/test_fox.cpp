#include "support.hpp"

#include <gtest/gtest.h>

#include <chrono>

using namespace defring;
using namespace testing_support;

namespace {

const Modulus kM(5, 3);

FreeWord s(int i, std::int64_t e = 1) { return FreeWord::letter(i, e); }
GroupRingElt E(const FreeWord &w, std::int64_t c = 1) { return GroupRingElt(kM, w, c); }
GroupRingElt D(const FreeWord &w, int i) { return fox_derivative(w, i, kM); }

Presentation wingberg(std::int64_t q, std::int64_t qp, unsigned prec = 3, unsigned deg = 8)
{
    WingbergSpec spec;
    spec.p = 5;
    spec.prec = prec;
    spec.deg = deg;
    spec.diag = DiagChars{true, 0, 1, false, true};
    PlaceSpec w;
    w.name = "w";
    w.q = 5;
    w.distinguished = true;
    PlaceSpec v;
    v.name = "v";
    v.q = q;
    v.q_prime = qp;
    spec.places = {w, v};
    return build_wingberg(spec);
}

} // namespace

TEST(Fox, BaseExamples)
{
    EXPECT_EQ(D(s(0, 3), 0), E(FreeWord()) + E(s(0)) + E(s(0, 2)));
    EXPECT_TRUE(D(s(1), 0).is_zero());
    EXPECT_TRUE(D(FreeWord(), 0).is_zero());
    EXPECT_EQ(D(s(0, -1), 0), E(s(0, -1), -1));
    EXPECT_EQ(D(s(0, -2), 0), E(s(0, -1), -1) + E(s(0, -2), -1));

    auto u = s(0, 2) * s(2) * s(0, -1);
    EXPECT_EQ(D(commutator(u, s(1)), 0), D(u, 0) + D(u.inverse(), 0).mul_word_left(u * s(1)));
}

TEST(Fox, FundamentalIdentity)
{
    auto g = rng(61);
    auto start = std::chrono::steady_clock::now();
    for (int t = 0; t < 200; ++t) {
        int ngens = static_cast<int>(uniform(g, 1, 4));
        auto w = random_word(g, ngens, 12, 3);
        GroupRingElt sum(kM);
        for (int i = 0; i < ngens; ++i)
            sum = sum + D(w, i) * (E(s(i)) - E(FreeWord()));
        EXPECT_EQ(sum, E(w) - E(FreeWord())) << w.to_string(std::vector<std::string>{"a", "b", "c", "d"});
    }
    EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 5.0);
}

TEST(Fox, CommutatorFormulas)
{
    auto g = rng(62);
    for (int t = 0; t < 100; ++t) {
        auto u = random_word(g, 3, 8, 3);
        int i = static_cast<int>(uniform(g, 0, 2));
        int j = static_cast<int>(uniform(g, 0, 2));
        auto c = commutator(u, s(j));
        GroupRingElt want = D(u, i) + D(u.inverse(), i).mul_word_left(u * s(j));
        if (i == j)
            want = want + E(u) - E(u * s(i) * u.inverse() * s(i, -1));
        EXPECT_EQ(D(c, i), want) << t;
    }
}

TEST(Fox, ProductRule)
{
    auto g = rng(63);
    for (int t = 0; t < 100; ++t) {
        auto u = random_word(g, 3, 6, 3), v = random_word(g, 3, 6, 3);
        for (int i = 0; i < 3; ++i)
            EXPECT_EQ(D(u * v, i), D(u, i) + D(v, i).mul_word_left(u));
    }
}

TEST(Fox, ProjectExamples)
{
    Projection pr;
    pr.images = {FreeWord(), FreeWord::letter(0)};
    pr.k = 1;
    auto t = MagnusSeries::variable(kM, 1, 8, 0), one = t.make_constant(1);
    EXPECT_EQ(project(E(s(0)), pr, 8), one);
    EXPECT_EQ(project(E(s(1)), pr, 8), one + t);

    // d/dt of t^q [t, g^q' s'] with pi(t) = pi(s') = 1
    pr.images = {FreeWord(), FreeWord(), FreeWord::letter(0)}; // t, s', g
    for (auto [q, qp] : {std::pair{5, 1}, {25, 5}, {125, 25}}) {
        auto r = s(0, q) * commutator(s(0), s(2, qp) * s(1));
        EXPECT_EQ(project(D(r, 0), pr, 8), one.scaled(q) - (power(one + t, qp) - one)) << q;
    }
}

TEST(Fox, ProjectIsMultiplicative)
{
    auto g = rng(64);
    Projection pr;
    pr.images = {FreeWord(), FreeWord::letter(0), FreeWord::letter(1) * FreeWord::letter(0, 2)};
    pr.k = 2;
    for (int t = 0; t < 60; ++t) {
        auto u = random_word(g, 3, 5, 2), v = random_word(g, 3, 5, 2);
        EXPECT_EQ(project(E(u * v), pr, 5), project(E(u), pr, 5) * project(E(v), pr, 5));
        auto a = D(u, 1), b = D(v, 2);
        EXPECT_EQ(project(a * b, pr, 5), project(a, pr, 5) * project(b, pr, 5));
    }
}

TEST(Fox, MatrixExamples)
{
    auto none = parse_presentation("p 5\nchi1 omega^0 chi2 omega^1\ngen g block=Gamma chi=trivial pi=gamma\n");
    auto fm0 = fox_matrix(none);
    EXPECT_EQ(fm0.cols, 0u);
    EXPECT_EQ(fm0.rows, 1u);

    auto single = parse_dsl("p 5\nchi1 omega^0 chi2 omega^1\ngen g block=Gamma chi=trivial pi=gamma\n"
                            "gen s1 block=Xinf chi=omega^2\nrel r = s1\n");
    auto fm1 = fox_matrix(single);
    EXPECT_EQ(fm1.at(0, 0), MagnusSeries::constant(kM, 1, 8, 1));
    EXPECT_TRUE(fm1.at(1, 0).is_zero());
}

TEST(Fox, TameColumn)
{
    for (auto [q, qp] : {std::pair{5, 1}, {25, 5}, {125, 25}}) {
        auto pres = wingberg(q, qp);
        auto fm = restrict_to_xinf(fox_matrix(pres), pres.counts().n);
        unsigned col = 1, row = static_cast<unsigned>(pres.find("t_v"));
        auto t = MagnusSeries::variable(pres.modulus(), 1, 8, 0), one = t.make_constant(1);
        EXPECT_EQ(fm.at(row, col), one.scaled(q) - (power(one + t, qp) - one)) << q;
        for (unsigned i = 0; i < fm.rows; ++i)
            if (i != row) {
                EXPECT_TRUE(fm.at(i, col).is_zero()) << fm.row_names[i];
            }
        auto e = coeff_expansion(fm.at(row, col));
        EXPECT_EQ(e.a.balanced(), q % 125 == 0 ? 0 : q);
        EXPECT_EQ(e.b[0].balanced(), -qp);
    }
}

TEST(Fox, Restrict)
{
    auto pres = wingberg(25, 5);
    auto fm = fox_matrix(pres);
    EXPECT_EQ(restrict_to_xinf(fm, fm.rows).entries, fm.entries);
    auto r = restrict_to_xinf(fm, 2);
    EXPECT_EQ(r.rows, 2u);
    EXPECT_EQ(r.at(1, 1), fm.at(1, 1));
    EXPECT_THROW(restrict_to_xinf(fm, fm.rows + 1), ValidationError);
    auto x = restrict_to_xinf(fm, pres.counts().n);
    std::vector<std::string> want{"t_v", "sp_v", "t_w"};
    EXPECT_EQ(x.row_names, want);
}

TEST(Fox, DroppedGammaRow)
{
    // d r'/d gamma from the base rules against the closed form
    //   sum_{i<q'} t^{q+1} g^i - sum_{1<=i<=q'} t^{q+1} g^{q'} s' t^-1 s'^-1 g^-i
    const std::int64_t q = 25, qp = 5;
    auto pres = wingberg(q, qp);
    const int t = pres.find("t_v"), sp = pres.find("sp_v"), g = pres.find("g");
    const auto &r = pres.relations[1].word;
    const Modulus m = pres.modulus();
    GroupRingElt want(m);
    for (std::int64_t i = 0; i < qp; ++i)
        want = want + GroupRingElt(m, s(t, q + 1) * s(g, i));
    for (std::int64_t i = 1; i <= qp; ++i)
        want = want - GroupRingElt(m, s(t, q + 1) * s(g, qp) * s(sp) * s(t, -1) * s(sp, -1) * s(g, -i));
    auto got = fox_derivative(r, g, m);
    EXPECT_EQ(got, want);

    // the closed forms for d/dt agree as well; the printed d/ds' uses
    // [t, s' g^q'] and differs in the group ring, though both project to 0
    GroupRingElt dt(m);
    for (std::int64_t i = 0; i <= q; ++i)
        dt = dt + GroupRingElt(m, s(t, i));
    dt = dt - GroupRingElt(m, s(t, q + 1) * s(g, qp) * s(sp) * s(t, -1));
    EXPECT_EQ(fox_derivative(r, t, m), dt);

    auto printed_dsp = GroupRingElt(m, s(t, q + 1)) - GroupRingElt(m, s(t, q) * commutator(s(t), s(sp) * s(g, qp)));
    auto dsp = fox_derivative(r, sp, m);
    EXPECT_NE(dsp, printed_dsp);
    auto pr = Projection::of(pres);
    EXPECT_TRUE(project(dsp, pr, 8).is_zero());
    EXPECT_TRUE(project(printed_dsp, pr, 8).is_zero());

    // the full gamma row is what restrict_to_xinf discards
    auto fm = fox_matrix(pres);
    EXPECT_EQ(fm.at(static_cast<unsigned>(g), 1), project(want, pr, 8));
}
