#include <gtest/gtest.h>

#include <random>

#include "knotpad/bracket.hpp"
#include "knotpad/errors.hpp"
#include "knotpad/group.hpp"
#include "knotpad/homcount.hpp"
#include "knotpad/moves.hpp"
#include "knotpad/reduce_plat.hpp"
#include "oracles.hpp"

using namespace knotpad;

namespace {

Diagram left_trefoil() { return Diagram::from_pd(oracle::trefoil_left_pd()); }

std::vector<Diagram> corpus() {
    return {Diagram(),
            left_trefoil(),
            mirror(left_trefoil()),
            Diagram::from_pd(oracle::figure_eight_pd()),
            Diagram::from_pd(oracle::five_two_pd()),
            Diagram::from_pd(oracle::six_one_pd()),
            add_kink(add_kink(Diagram(), 1, 1), 1, 1),
            connected_sum(left_trefoil(), left_trefoil())};
}

}  // namespace

TEST(BraidToPlat, TrefoilAndEmptyWord) {
    const auto t = braid_to_plat({2, {1, 1, 1}});
    EXPECT_EQ(t.m, 2);
    EXPECT_EQ(t.total_crossings(), 3);
    EXPECT_EQ(bracket_plat(t, 20), oracle::brute_bracket(mirror(left_trefoil()), 20));
    const auto u = braid_to_plat({1, {}});
    EXPECT_EQ(u.m, 1);
    EXPECT_EQ(u.total_crossings(), 0);
    EXPECT_EQ(plat_to_pd(u).crossing_count(), 0);
    EXPECT_THROW(braid_to_plat({2, {1, 1}}), NotAKnotError);
}

TEST(BraidToPlat, RandomWordsMatchTheClosure) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const int strands = 2 + trial % 4;
        std::uniform_int_distribution<int> gen(1, strands - 1);
        BraidWord w{strands, {}};
        for (int i = 0; i < 6; ++i) w.letters.push_back(gen(rng) * (rng() % 2 ? 1 : -1));
        Diagram c;
        try {
            c = braid_closure(w);
        } catch (const NotAKnotError&) {
            EXPECT_THROW(braid_to_plat(w), NotAKnotError);
            continue;
        }
        const auto p = braid_to_plat(w);
        const auto d = plat_to_pd(p);
        EXPECT_EQ(d.writhe(), c.writhe());
        for (int order : {7, 20}) EXPECT_EQ(bracket_pd(d, order), oracle::brute_bracket(c, order));
    }
}

TEST(Standardize, TrefoilPlatReachesThreePlats) {
    const auto p = standardize(braid_to_plat({2, {1, 1, 1}}));
    EXPECT_GE(p.m, 3);
    EXPECT_EQ(p.n() % 2, 0);
    EXPECT_GT(p.n(), 4 * p.m * (p.m - 2));
    EXPECT_GE(p.n(), 14);
    const auto d = plat_to_pd(p);
    EXPECT_EQ(d.writhe(), 3);
    EXPECT_EQ(bracket_pd(d, 20), oracle::brute_bracket(mirror(left_trefoil()), 20));
}

TEST(Standardize, KeepsWritheAndBracketOnRandomPlats) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 40; ++trial) {
        const auto p = oracle::random_knot_plat(rng, 4, 7, 2);
        const auto q = standardize(p);
        EXPECT_GE(q.m, 3);
        EXPECT_EQ(q.n() % 2, 0);
        EXPECT_GT(q.n(), 4 * q.m * (q.m - 2));
        const auto before = plat_to_pd(p), after = plat_to_pd(q);
        EXPECT_EQ(after.writhe(), before.writhe());
        for (int order : {7, 12}) EXPECT_EQ(bracket_pd(after, order), bracket_pd(before, order));
        // already standard: nothing to do
        EXPECT_EQ(standardize(q), q);
    }
}

TEST(VafaPad, ShiftsCoefficientsAwayFromZero) {
    PlatDiagram p;
    p.m = 3;
    p.rows = {{0, -1}, {1, 0, -2}};
    const auto q = vafa_pad(p, 10);
    EXPECT_EQ(q.rows, (std::vector<std::vector<int>>{{20, -21}, {21, 20, -22}}));
    EXPECT_TRUE(q.highly_twisted());
    EXPECT_THROW(vafa_pad(p, 1), std::invalid_argument);
}

TEST(VafaPad, BracketUnchangedAtTheTwistExponent) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 10; ++trial) {
        const auto p = standardize(oracle::random_knot_plat(rng, 3, 5, 2));
        const auto q = vafa_pad(p, tl_vafa_exponent(20));
        EXPECT_EQ(bracket_plat(q, 20), bracket_plat(p, 20));
    }
}

TEST(Certificates, DistanceAndVolume) {
    EXPECT_EQ(bridge_distance(3, 13), 7);
    EXPECT_EQ(bridge_distance(4, 33), 9);
    EXPECT_EQ(bridge_distance(3, 14), 7);
    EXPECT_THROW(bridge_distance(2, 40), std::invalid_argument);
    EXPECT_THROW(bridge_distance(3, 12), std::invalid_argument);
    const auto [lo, hi] = volume_bounds(3, 14);
    EXPECT_NEAR(lo, 33.493, 1e-3);
    EXPECT_NEAR(hi, 345.08, 1e-2);
    double prev = 0;
    for (int n = 13; n < 40; ++n) {
        EXPECT_GE(volume_bounds(3, n).first, prev);
        prev = volume_bounds(3, n).first;
    }
}

TEST(Certificates, RecomputedFromThePlat) {
    PlatDiagram p;
    p.m = 3;
    for (int i = 0; i < 14; ++i) p.rows.push_back(std::vector<int>(i % 2 == 0 ? 2 : 3, 3));
    auto c = certify(p);
    EXPECT_TRUE(c.certificates.all());
    EXPECT_EQ(c.d, 7);
    p.rows[5][1] = 2;
    c = certify(p);
    EXPECT_FALSE(c.certificates.highly_twisted);
    EXPECT_FALSE(c.certificates.all());
    p.rows[5][1] = 3;
    p.rows.pop_back();
    EXPECT_FALSE(certify(p).certificates.n_even);
}

TEST(ReducePlat, CorpusIsCertifiedAndExact) {
    for (const auto& k : corpus()) {
        const auto rep = reduce_plat(k, 10);
        EXPECT_TRUE(rep.certificates.all());
        EXPECT_GT(rep.d, 2 * rep.m);
        const auto out = plat_to_pd(rep.output);
        EXPECT_EQ(bracket_plat(rep.output, 20), bracket_pd(k, 20));
        EXPECT_EQ(bracket_pd(out, 20), bracket_pd(k, 20));
    }
}

TEST(ReducePlat, UnknotHomcountForFiveCycles) {
    const auto gc = group_preset("a5/5cycle-a");
    const auto rep = reduce_plat(Diagram(), dw_vafa_exponent(gc));
    EXPECT_EQ(homcount_plat(rep.output, gc), 12);
}

TEST(ReducePlat, PlatInputSkipsTheBraid) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 20; ++i) {
        const auto p = oracle::random_knot_plat(rng, 4, 9, 2);
        const auto rep = reduce_plat(p, 10);
        EXPECT_EQ(rep.braid.strands, 0);
        EXPECT_TRUE(rep.certificates.all());
        EXPECT_EQ(rep.m, std::max(p.m, 3));
        EXPECT_EQ(bracket_plat(rep.output, 20), bracket_pd(plat_to_pd(p), 20));
    }
}
