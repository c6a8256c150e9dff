#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "zdg/relations.hpp"
#include "zdg/zdgraph.hpp"

using namespace zdg;

TEST_CASE("relation_partition on Z/12") {
    auto z12 = build_zn(12);
    auto assoc = relation_partition(*z12, RelationSpec::associated());
    std::vector<std::vector<int>> expected = {{0}, {1, 5, 7, 11}, {2, 10}, {3, 9}, {4, 8}, {6}};
    CHECK(assoc.blocks == expected);
    auto equiann = relation_partition(*z12, RelationSpec::equiannihilated());
    CHECK(equiann.blocks == expected); // same six blocks here

    auto z5 = build_zn(5);
    auto a5 = relation_partition(*z5, RelationSpec::associated());
    CHECK(a5.blocks == std::vector<std::vector<int>>{{0}, {1, 2, 3, 4}});

    auto eq = relation_partition(*z12, RelationSpec::equality());
    CHECK(eq.block_count() == 12);
}

TEST_CASE("strongly associated = unit orbits") {
    auto z12 = build_zn(12);
    auto sa = relation_partition(*z12, RelationSpec::strongly_associated());
    // on Z/n the unit orbits coincide with the associated classes
    auto as = relation_partition(*z12, RelationSpec::associated());
    CHECK(sa.blocks == as.blocks);
}

TEST_CASE("is_zero_divisor_relation") {
    auto z4 = build_zn(4);
    auto eq = relation_partition(*z4, RelationSpec::equality());
    CHECK(is_zero_divisor_relation(*z4, eq).is_zdr);

    auto bad = relation_partition(*z4, RelationSpec::custom({{0}, {1, 2, 3}}));
    auto res = is_zero_divisor_relation(*z4, bad);
    CHECK_FALSE(res.is_zdr);
    REQUIRE(res.witness.has_value());
    auto [a, a2, b, b2] = *res.witness;
    CHECK(z4->mul(a, b) == 0);
    CHECK(bad.related(a, a2));
    CHECK(bad.related(b, b2));
    CHECK(z4->mul(a2, b2) != 0);

    auto z12 = build_zn(12);
    CHECK(is_zero_divisor_relation(*z12,
                                   relation_partition(*z12, RelationSpec::equiannihilated()))
              .is_zdr);
}

TEST_CASE("zero-divisor iff finer than equiannihilated, randomized") {
    for (const auto& name : {"z12", "z4x_2x_x2", "f2xy_x2_y2"}) {
        auto A = oracle::catalog_ring(name);
        auto equiann = relation_partition(*A, RelationSpec::equiannihilated());
        for (const auto& R : random_partition_suite(*A, 60, 12345)) {
            bool zdr = is_zero_divisor_relation(*A, R).is_zdr;
            CHECK(zdr == is_finer(R, equiann));
            if (zdr) CHECK(R.blocks[R.class_of[A->zero()]].size() == 1);
        }
    }
}

TEST_CASE("is_finer chain") {
    for (const auto& name : {"z12", "z30", "f2xy_xy_x2my2"}) {
        auto A = oracle::catalog_ring(name);
        auto eq = relation_partition(*A, RelationSpec::equality());
        auto sa = relation_partition(*A, RelationSpec::strongly_associated());
        auto as = relation_partition(*A, RelationSpec::associated());
        auto ea = relation_partition(*A, RelationSpec::equiannihilated());
        CHECK(is_finer(eq, sa));
        CHECK(is_finer(sa, as));
        CHECK(is_finer(as, ea));
        CHECK(is_finer(eq, ea));
    }
    auto klein = build_product({build_zn(2), build_zn(2)});
    auto as = relation_partition(*klein, RelationSpec::associated());
    auto ea = relation_partition(*klein, RelationSpec::equiannihilated());
    CHECK(is_finer(ea, as)); // singleton classes on this ring, so both directions
    CHECK(is_finer(as, ea));
}

TEST_CASE("check_functorial") {
    auto z12 = build_zn(12);
    auto z2 = build_zn(2);
    std::vector<int> proj(12);
    for (int n = 0; n < 12; ++n) proj[n] = n % 2;
    auto f = make_ring_hom(z12, z2, proj);

    CHECK(check_functorial(f, RelationSpec::associated(), RelationSpec::associated()).ok);
    CHECK(check_functorial(identity_hom(z12), RelationSpec::equiannihilated(),
                           RelationSpec::equiannihilated())
              .ok);
    // the equiannihilated family has no witness on this projection: every class of
    // Z/12 lands inside a single class of Z/2; the exhaustive scan certifies that
    CHECK(check_functorial(f, RelationSpec::equiannihilated(), RelationSpec::equiannihilated()).ok);

    // a deliberately broken target relation produces a witness
    auto weird = RelationSpec::custom({{0, 1}});
    auto g = make_ring_hom(z2, z2, {0, 1});
    auto res = check_functorial(g, RelationSpec::custom({{0, 1}}), RelationSpec::custom({{0}, {1}}));
    CHECK_FALSE(res.ok);
    REQUIRE(res.witness.has_value());
}

TEST_CASE("blend relations") {
    auto z12 = build_zn(12);
    auto nilp = relation_partition(
        *z12, RelationSpec::blend(BlendSubset::Nilpotents, RelKind::Associated,
                                  RelKind::StronglyAssociated));
    // nilpotents {0,6} keep their associated classes; everything else unit orbits
    CHECK(nilp.related(2, 10));
    CHECK_FALSE(nilp.related(0, 6));
    CHECK(is_zero_divisor_relation(*z12, nilp).is_zdr);

    auto units = relation_partition(
        *z12, RelationSpec::blend(BlendSubset::Units, RelKind::Associated, RelKind::Equality));
    CHECK(units.related(1, 5));
    CHECK_FALSE(units.related(2, 10)); // outside: equality
    CHECK(is_zero_divisor_relation(*z12, units).is_zdr);

    CHECK_THROWS_AS(RelationSpec::blend(BlendSubset::Units, RelKind::Blend, RelKind::Equality),
                    Error);
}

TEST_CASE("custom partition validation") {
    auto z4 = build_zn(4);
    CHECK_THROWS_AS(relation_partition(*z4, RelationSpec::custom({{0, 1}, {1, 2, 3}})), Error);
    CHECK_THROWS_AS(relation_partition(*z4, RelationSpec::custom({{0, 1}})), Error);
    CHECK_THROWS_AS(relation_partition(*z4, RelationSpec::custom({{0, 1, 2, 3, 4}})), Error);
}

TEST_CASE("classical views of Z/12") {
    auto z12 = build_zn(12);
    auto views = classical_views(*z12);
    CHECK(views.beck.size() == 12);
    CHECK(views.beck.loop_count() == 0);

    CHECK(views.anderson_livingston.size() == 7);
    CHECK(views.anderson_livingston.edge_count() == 8);
    CHECK(views.anderson_livingston.edge_count() == oracle::classical_edge_count(*z12));

    CHECK(views.mulay.size() == 4);
    CHECK(views.mulay.edge_count() == 3);

    auto z5 = build_zn(5);
    CHECK(classical_views(*z5).anderson_livingston.size() == 0);
}
