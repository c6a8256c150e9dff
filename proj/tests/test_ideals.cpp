#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "zdg/ideals.hpp"

using namespace zdg;

TEST_CASE("all_ideals agrees with the subset-scan oracle") {
    for (const auto& name : {"z2", "z4", "z6", "z8", "z12", "z4x_2x_x2", "z4x_2x_x2m2",
                             "f2xy_x2_xy_y2", "f2xy_x2_y2", "f2xy_xy_x2my2"}) {
        auto A = oracle::catalog_ring(name);
        CAPTURE(name);
        CHECK(int(all_ideals(*A).size()) == oracle::count_ideals_by_subset_scan(*A));
    }
}

TEST_CASE("all_ideals counts") {
    CHECK(all_ideals(*build_zn(12)).size() == 6); // one per divisor of 12
    CHECK(all_ideals(*build_zn(7)).size() == 2);  // field: {0} and (1)
    // Z/4[x]/(2x,x^2): five principal ideals but six ideals ((2,x) is not principal)
    auto b1 = oracle::catalog_ring("z4x_2x_x2");
    CHECK(all_ideals(*b1).size() == 6);
    std::set<std::vector<int>> principal;
    for (int a = 0; a < b1->order(); ++a) principal.insert(principal_ideal(*b1, a).members);
    CHECK(principal.size() == 5);
}

TEST_CASE("all_ideals respects the cap") {
    Budgets tight;
    tight.ideal_cap = 3;
    CHECK_THROWS_AS(all_ideals(*build_zn(12), tight), Error);
}

TEST_CASE("ideal_ops") {
    auto z12 = build_zn(12);
    auto ann3 = annihilator(*z12, 3); // {0,4,8}
    auto ann4 = annihilator(*z12, 4); // {0,3,6,9}
    auto ops = ideal_ops(ann3, ann4);
    CHECK(ops.sum.size() == 12); // contains 4+3=7, a unit
    CHECK(ops.intersection.members == std::vector<int>{0});
    CHECK(ops.product_is_zero);

    auto i6 = principal_ideal(*z12, 6);
    auto zero = principal_ideal(*z12, 0);
    CHECK(ideal_ops(i6, zero).sum.members == i6.members);

    auto z8 = build_zn(8);
    CHECK_THROWS_AS(ideal_ops(annihilator(*z12, 2), annihilator(*z8, 2)), Error);
}

TEST_CASE("local_data") {
    auto z8 = build_zn(8);
    auto ld = local_data(*z8);
    CHECK(ld.is_local);
    CHECK(ld.maximal_ideals.size() == 1);
    CHECK(ld.maximal_ideals[0].members == std::vector<int>{0, 2, 4, 6});
    CHECK(ld.nilpotency_index == 3);

    auto z12 = build_zn(12);
    auto ld12 = local_data(*z12);
    CHECK_FALSE(ld12.is_local);
    CHECK(ld12.maximal_ideals.size() == 2);

    auto z5 = build_zn(5);
    auto ld5 = local_data(*z5);
    CHECK(ld5.is_local);
    CHECK(ld5.maximal_ideals[0].size() == 1);
    CHECK(ld5.nilpotency_index == 1);
}

TEST_CASE("is_pir") {
    CHECK(is_pir(*build_zn(12)));
    CHECK(is_pir(*build_zn(7)));
    CHECK_FALSE(is_pir(*oracle::catalog_ring("f2xy_x2_xy_y2"))); // (x,y) not principal
    CHECK_FALSE(is_pir(*oracle::catalog_ring("z4x_2x_x2")));
    CHECK(is_pir(*oracle::catalog_ring("z4x_2x_x2m2")));
}

TEST_CASE("ideal_poset_iso") {
    auto c2 = oracle::catalog_ring("f2xy_x2_y2");
    auto c3 = oracle::catalog_ring("f2xy_xy_x2my2");
    auto iso = ideal_poset_iso(*c2, *c3);
    REQUIRE(iso.has_value());
    // witness preserves inclusion both ways
    auto ia = all_ideals(*c2);
    auto ib = all_ideals(*c3);
    for (size_t i = 0; i < ia.size(); ++i)
        for (size_t j = 0; j < ia.size(); ++j) {
            bool sub_a = ia[i].bits().subset_of(ia[j].bits());
            bool sub_b = ib[(*iso)[i]].bits().subset_of(ib[(*iso)[j]].bits());
            CHECK(sub_a == sub_b);
        }

    // chain of 3 vs diamond of 4
    auto z4 = build_zn(4);
    auto klein = build_product({build_zn(2), build_zn(2)});
    CHECK_FALSE(ideal_poset_iso(*z4, *klein).has_value());

    auto z12 = build_zn(12);
    auto self = ideal_poset_iso(*z12, *z12);
    REQUIRE(self.has_value());
    for (size_t i = 0; i < self->size(); ++i) CHECK((*self)[i] == int(i));
}

TEST_CASE("ideal_product powers the maximal ideal down to zero") {
    auto z27 = build_zn(27);
    auto m = make_ideal(*z27, principal_ideal(*z27, 3).members);
    auto m2 = ideal_product(m, m);
    CHECK(m2.members == principal_ideal(*z27, 9).members);
    auto m3 = ideal_product(m2, m);
    CHECK(m3.members == std::vector<int>{0});
}
