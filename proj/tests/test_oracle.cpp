#include <doctest.h>

#include "regzeta/oracle.hpp"
#include "regzeta/orders.hpp"

using namespace regzeta;

namespace {

NType t(int n, std::vector<std::array<int, 3>> entries) {
    return NType::make(n, std::move(entries));
}

const GroupForm GL{Family::GL};
const GroupForm GU{Family::GU};
const GroupForm SL{Family::SL};
const GroupForm SU{Family::SU};

}  // namespace

TEST_CASE("polynomial type census, gl") {
    const FieldDesc F3 = FieldDesc::make(3, 1);
    const auto counts = census_types_gl(2, F3);
    CHECK(counts.at(t(2, {{1, 1, 2}})) == 3);
    CHECK(counts.at(t(2, {{1, 2, 1}})) == 3);
    CHECK(counts.at(t(2, {{2, 1, 1}})) == 3);

    const auto single = census_types_gl(1, F3);
    CHECK(single.at(t(1, {{1, 1, 1}})) == 3);

    // q = 4 exercises even characteristic on the polynomial side.
    const FieldDesc F4 = FieldDesc::make(2, 2);
    const auto even = census_types_gl(2, F4);
    Integer total = 0;
    for (const auto& [tau, c] : even) {
        CHECK(c == type_combinatorial_factor(tau, Integer(4)));
        total += c;
    }
    CHECK(total == 16);
}

TEST_CASE("polynomial type census, gu equals gl") {
    const FieldDesc F3 = FieldDesc::make(3, 1);
    const FieldDesc F9 = FieldDesc::make(3, 2);
    for (int n = 1; n <= 3; ++n) {
        const auto gl = census_types_gl(n, F3);
        const auto gu = census_types_gu(n, F9);
        CHECK(gl == gu);
    }
    const auto single = census_types_gu(1, F9);
    CHECK(single.at(t(1, {{1, 1, 1}})) == 3);  // the 3 trace-zero constants
}

TEST_CASE("type census reports") {
    const FieldDesc F3 = FieldDesc::make(3, 1);
    const FieldDesc F9 = FieldDesc::make(3, 2);
    CHECK(check_type_census(GL, 2, F3).pass());
    CHECK(check_type_census(GU, 2, F9).pass());
    CHECK(check_type_census(GL, 3, F3).pass());  // q = n: census matches the formula here
}

TEST_CASE("self-dual irreducibles") {
    const FieldDesc F9 = FieldDesc::make(3, 2);
    const LemmaReport rep = verify_lemma_4_3(3, F9);
    CHECK(rep.pass);
    REQUIRE(rep.rows.size() == 3);
    CHECK(rep.rows[0].self_dual_irreducible == 3);  // w_1(3)
    CHECK(rep.rows[1].self_dual_irreducible == 0);  // even degree: none
    CHECK(rep.rows[2].self_dual_irreducible == 8);  // w_3(3)

    // Even characteristic: over F_4 with q = 2, w_1(2) = 2 self-dual linears.
    const FieldDesc F4 = FieldDesc::make(2, 2);
    const LemmaReport even = verify_lemma_4_3(2, F4);
    CHECK(even.pass);
    CHECK(even.rows[0].self_dual_irreducible == 2);
    CHECK(even.rows[1].self_dual_irreducible == 0);
}

TEST_CASE("matrix census, gl") {
    const FieldDesc F3 = FieldDesc::make(3, 1);
    const CensusReport rep = census_regular_matrices(GL, 2, F3, 200, 2);
    CHECK(rep.pass());
    REQUIRE(rep.rows.size() == 3);
    // 78 regular of 81: per-type 3 * 48/u = (36, 24, 18).
    CHECK(rep.rows[0].element_count == 36);
    CHECK(rep.rows[1].element_count == 24);
    CHECK(rep.rows[2].element_count == 18);
    CHECK(rep.rows[0].centralizer_expected == 4);
    CHECK(rep.rows[0].centralizer_checked > 0);

    const CensusReport one = census_regular_matrices(GL, 1, F3, 10, 1);
    CHECK(one.pass());
    CHECK(one.rows[0].element_count == 3);
    CHECK(one.rows[0].centralizer_expected == 2);  // q - 1
}

TEST_CASE("matrix census, gu") {
    const FieldDesc F9 = FieldDesc::make(3, 2);
    const CensusReport rep = census_regular_matrices(GU, 2, F9, 200, 2);
    CHECK(rep.pass());
    REQUIRE(rep.rows.size() == 3);
    // 81 anti-hermitian matrices, 78 regular: 3 * 96/u_{-1} = (18, 24, 36).
    CHECK(rep.rows[0].element_count == 18);
    CHECK(rep.rows[1].element_count == 24);
    CHECK(rep.rows[2].element_count == 36);
    CHECK(rep.rows[0].centralizer_expected == 16);  // (q+1)^2
    CHECK(rep.rows[1].centralizer_expected == 12);  // q(q+1)
    CHECK(rep.rows[2].centralizer_expected == 8);   // q^2 - 1
}

TEST_CASE("matrix census is schedule independent") {
    const FieldDesc F3 = FieldDesc::make(3, 1);
    const MatrixScan a = scan_matrices(GL, 2, F3, 5, 1);
    const MatrixScan b = scan_matrices(GL, 2, F3, 5, 3);
    CHECK(a.regular_total == b.regular_total);
    CHECK(a.tallies == b.tallies);
    REQUIRE(a.samples.size() == b.samples.size());
    for (const auto& [tau, sam] : a.samples) {
        const auto& other = b.samples.at(tau);
        REQUIRE(sam.size() == other.size());
        for (std::size_t i = 0; i < sam.size(); ++i) CHECK(sam[i] == other[i]);
    }
}

TEST_CASE("determinant image indices") {
    const FieldDesc F3 = FieldDesc::make(3, 1);
    const CensusReport sl = verify_det_index(SL, 2, F3, 50, 2);
    CHECK(sl.pass());
    REQUIRE(sl.rows.size() == 3);
    CHECK(sl.rows[0].det_image_expected == 2);  // iota = 1: all of F_3^x
    CHECK(*sl.rows[0].det_image_size == 2);
    CHECK(sl.rows[1].det_image_expected == 1);  // iota = 2: the squares only
    CHECK(*sl.rows[1].det_image_size == 1);
    CHECK(sl.rows[2].det_image_expected == 2);

    const FieldDesc F9 = FieldDesc::make(3, 2);
    const CensusReport su = verify_det_index(SU, 2, F9, 50, 2);
    CHECK(su.pass());
    CHECK(su.rows[0].det_image_expected == 4);  // iota = 1: all of GU_1(F_3)
    CHECK(su.rows[1].det_image_expected == 2);  // iota = 2
    CHECK(su.rows[2].det_image_expected == 4);  // iota = 1
    CHECK(*su.rows[2].det_image_size == 4);
}

TEST_CASE("regular element counts") {
    const FieldDesc F3 = FieldDesc::make(3, 1);
    const FieldDesc F9 = FieldDesc::make(3, 2);
    CHECK(count_regular_elements(GL, 2, F3) == 78);  // 81 minus the 3 scalars
    CHECK(count_regular_elements(GL, 1, F3) == 3);
    CHECK(count_regular_elements(SL, 2, F3) == 26);  // 27 traceless minus zero
    CHECK(count_regular_elements(GU, 2, F9) == 78);
    CHECK(count_regular_elements(SU, 2, F9) == 26);
}

TEST_CASE("matrix census guards") {
    const FieldDesc F4 = FieldDesc::make(2, 2);
    CHECK_THROWS_AS(scan_matrices(GL, 2, F4, 0, 1), std::invalid_argument);  // even q
    const FieldDesc F9 = FieldDesc::make(3, 2);
    CHECK_THROWS_AS(scan_matrices(GL, 4, F9, 0, 1), BoundExceeded);  // 9^16 matrices
}
