#include "talex/invariant.hpp"

#include "doctest.h"
#include "fixture_io.hpp"
#include "helpers.hpp"
#include "talex/parse.hpp"

using namespace talex;
using talex::testing::fixture_path;
using talex::testing::load_matrix_fixture;

namespace {

const VarSet TZ = VarSet::of({kVarT, kVarZ});
const VarSet TZA = VarSet::all();

LaurentPoly P(const char* text) { return parse_poly(text, TZ); }

}  // namespace

TEST_CASE("b3 under tym: the invariant is 1 + t*z^3 up to a unit") {
    InvariantResult r = twisted_alexander(braid_group(3), tym(3), GcdStrategy::exhaustive_scan());
    CHECK(r.column == 0);
    CHECK(r.minors_evaluated == 1);
    CHECK(r.flag == Certification::exact);
    CHECK(r.denominator == P("(1 - z)*(1 - t*z^2)"));
    CHECK(r.numerator == normal_form(P("(z - 1)*(1 - t*z^2)*(1 + t*z^3)")));
    CHECK(equal_up_to_unit(r, P("1 + t*z^3")));
    CHECK(r.is_polynomial());
    CHECK(r.delta_string() == "1 + t*z^3");
}

TEST_CASE("b4 under tym: exhaustive over 495 minors gives 1") {
    InvariantResult r = twisted_alexander(braid_group(4), tym(4), GcdStrategy::exhaustive_scan(2));
    CHECK(r.minors_evaluated + r.minors_skipped == 495);
    CHECK(associates(r.numerator, P("(1 - z)^2*(1 - t*z^2)")));
    CHECK(equal_up_to_unit(r, P("1")));
    CHECK(r.delta_string() == "1");
}

TEST_CASE("b3 under reduced burau gives 1 - t*z^2") {
    InvariantResult r = twisted_alexander(braid_group(3), burau_reduced(3), GcdStrategy::exhaustive_scan());
    CHECK(equal_up_to_unit(r, P("1 - t*z^2")));
}

TEST_CASE("alexander matrix shapes and the printed fixtures") {
    AlexanderMatrix b3 = alexander_matrix(braid_group(3), tym(3));
    CHECK(b3.matrix().rows() == 3);
    CHECK(b3.matrix().cols() == 6);

    AlexanderMatrix b4 = alexander_matrix(braid_group(4), tym(4));
    PolyMatrix m3 = b4.without_column(*braid_group(4).generator_index("s3"));
    PolyMatrix fixture = load_matrix_fixture(fixture_path("b4_tym_m3.txt"), TZ);
    REQUIRE(m3.rows() == fixture.rows());
    REQUIRE(m3.cols() == fixture.cols());
    for (int r = 0; r < m3.rows(); ++r)
        for (int c = 0; c < m3.cols(); ++c) CHECK(m3.at(r, c).str() == fixture.at(r, c).str());

    AlexanderMatrix wb3 = alexander_matrix(welded_braid_group(3), wtym(3));
    PolyMatrix m2 = wb3.without_column(*welded_braid_group(3).generator_index("s2")).promoted(TZA);
    PolyMatrix wfixture = load_matrix_fixture(fixture_path("wb3_wtym_m2.txt"), TZA);
    REQUIRE(m2.rows() == 18);
    REQUIRE(m2.cols() == 9);
    for (int r = 0; r < m2.rows(); ++r)
        for (int c = 0; c < m2.cols(); ++c) CHECK(m2.at(r, c).str() == wfixture.at(r, c).str());
}

TEST_CASE("the printed 8x8 minor of the b4 matrix") {
    AlexanderMatrix b4 = alexander_matrix(braid_group(4), tym(4));
    PolyMatrix m3 = b4.without_column(2);
    std::vector<int> rows{0, 1, 4, 5, 6, 7, 10, 11};  // 1-based (1,2,5,6,7,8,11,12)
    std::vector<int> cols{0, 1, 2, 3, 4, 5, 6, 7};
    LaurentPoly d = det(minor_matrix(m3, rows, cols));
    CHECK(d == P("(1 - z)^2*(1 - t*z^2)^2*(1 - t*z^2 + 2*t*z^3 - t*z^4)"));
    CHECK(d == det_cofactor(minor_matrix(m3, rows, cols)));
}

TEST_CASE("column choice") {
    Presentation wb = welded_braid_group(3);
    MatrixRep rep = wtym(3);
    // t columns are singular: the 2x2 block of 1 - rho(t1) has determinant 0
    CHECK(det(phi_one_minus(rep, wb.abelianization(), 2)).is_zero());
    CHECK(det(phi_one_minus(rep, wb.abelianization(), 3)).is_zero());
    CHECK(choose_column(wb, rep) == 0);

    CHECK(choose_column(braid_group(3), tym(3)) == 0);

    // one-generator free group with the trivial one-dimensional representation
    Presentation z_group("z", {"x"}, {}, {1});
    MatrixRep triv("triv", VarSet::of({}), 1, {PolyMatrix::identity(1, VarSet::of({}))});
    CHECK(choose_column(z_group, triv) == 0);
    CHECK(det(phi_one_minus(triv, z_group.abelianization(), 0)) == parse_poly("1 - z", VarSet::of({kVarZ})));

    // alpha = 0 makes Phi(1 - x) vanish for the trivial representation
    Presentation dead("dead", {"x"}, {}, {0});
    CHECK_THROWS_AS(choose_column(dead, triv), error);
}

TEST_CASE("degenerate presentations give exactly 0") {
    Presentation free2("free2", {"x", "y"}, {}, {1, 1});
    MatrixRep triv("triv", VarSet::of({}), 1,
                   {PolyMatrix::identity(1, VarSet::of({})), PolyMatrix::identity(1, VarSet::of({}))});
    InvariantResult r = twisted_alexander(free2, triv, GcdStrategy::exhaustive_scan());
    CHECK(r.degenerate);
    CHECK(r.reduced_num.is_zero());
    CHECK(r.delta_string() == "0");
}

TEST_CASE("equal_up_to_unit") {
    CHECK(equal_up_to_unit(P("-(1 + t*z^3)"), P("1"), P("1 + t*z^3"), P("1")));
    CHECK(equal_up_to_unit(P("t^2*z^-1*(1 - t*z^2)"), P("1"), P("1 - t*z^2"), P("1")));
    CHECK_FALSE(equal_up_to_unit(P("1 + t*z^3"), P("1"), P("1 - t*z^2"), P("1")));
    // fraction form: (z-1)(1+tz^3) / (1-z) ~ 1+tz^3
    CHECK(equal_up_to_unit(P("(z - 1)*(1 + t*z^3)"), P("1 - z"), P("1 + t*z^3"), P("1")));
    CHECK_THROWS_AS(equal_up_to_unit(P("1"), LaurentPoly(TZ), P("1"), P("1")), std::invalid_argument);
}

TEST_CASE("drop-column override agrees with the chosen column") {
    InvariantResult by_choice = twisted_alexander(braid_group(4), tym(4), GcdStrategy::exhaustive_scan(2));
    InvariantResult by_override = twisted_alexander(braid_group(4), tym(4), GcdStrategy::exhaustive_scan(2), 2);
    CHECK(by_override.column == 2);
    CHECK(equal_up_to_unit(by_choice, by_override));
    CHECK_THROWS_AS(twisted_alexander(welded_braid_group(3), wtym(3), GcdStrategy::exhaustive_scan(), 2), error);
}

TEST_CASE("cross validation") {
    CrossValidateOptions options;
    options.sampled_sets = 50;
    options.jobs = 2;
    CrossValidateReport b4 = cross_validate(braid_group(4), tym(4), options);
    CHECK(b4.ok);
    CHECK(b4.valid_columns == 3);
    CHECK(b4.identity_checks >= 50);
    // the representation dimension is even, so the identity must hold with +
    CHECK(b4.strict_plus);

    CrossValidateReport b3 = cross_validate(braid_group(3), tym(3), options);
    CHECK(b3.ok);
    CHECK(b3.valid_columns == 2);
}

TEST_CASE("presentation independence through the file fixtures") {
    Presentation alt = load_presentation(fixture_path("b3_alt.pres"));
    CHECK(alt.generator_count() == 2);
    CHECK(validate(alt).ok);
    MatrixRep rep = load_rep(fixture_path("b3_alt.rep"), alt);
    CHECK(validate_rep(alt, rep).ok);
    InvariantResult r = twisted_alexander(alt, rep, GcdStrategy::exhaustive_scan());
    CHECK(equal_up_to_unit(r, P("1 + t*z^3")));
}

TEST_CASE("divisibility of sampled b4 minors by (1-z)^2 (1-t*z^2)") {
    AlexanderMatrix b4 = alexander_matrix(braid_group(4), tym(4));
    PolyMatrix m3 = b4.without_column(2);
    RowSetStream sets = RowSetStream::sampled(12, 8, 99, 100);
    LaurentPoly divisor = P("(1 - z)^2*(1 - t*z^2)");
    std::vector<int> cols{0, 1, 2, 3, 4, 5, 6, 7};
    for (std::uint64_t i = 0; i < sets.size(); ++i) {
        LaurentPoly d = det(minor_matrix(m3, sets.at(i), cols));
        LaurentPoly q;
        CHECK(try_exact_div(d, divisor, q));
    }
}

TEST_CASE("structured row selections at n = 4") {
    BraidSeedRows seeds = braid_seed_rows(4);
    AlexanderMatrix b4 = alexander_matrix(braid_group(4), tym(4));
    PolyMatrix m3 = b4.without_column(2);
    std::vector<int> cols{0, 1, 2, 3, 4, 5, 6, 7};

    // adjacent chain: exactly the product of the chain blocks
    LaurentPoly adjacent = det(minor_matrix(m3, seeds.adjacent, cols));
    LaurentPoly expected = P("((1 - z)*(1 - t*z^2)*(1 + t*z^3))^2 * (1 - z + z^2)^2");
    CHECK(adjacent == expected);

    // swapped-row pattern: the stated product up to sign
    LaurentPoly swapped = det(minor_matrix(m3, seeds.row_swapped, cols));
    LaurentPoly expected_swapped = P("(1 - t*z^2)*(1 + t*z^3)*(1 - z + z^2)^2*(1 - z)^3");
    CHECK((swapped == expected_swapped || swapped == -expected_swapped));

    CHECK(seeds.last_generator.empty());
}

TEST_CASE("seeded strategies and certification") {
    AlexanderMatrix b4 = alexander_matrix(braid_group(4), tym(4));
    PolyMatrix m3 = b4.without_column(2);
    LaurentPoly divisor = P("(1 - z)^2*(1 - t*z^2)");

    GcdStrategy seeded;
    seeded.mode = GcdStrategy::Mode::seeded;
    seeded.seed_sets = braid_seed_rows(4).all();
    seeded.samples = 40;
    seeded.seed = 11;
    seeded.jobs = 2;

    // without a divisor the result is only an upper bound
    MinorGcdResult bare = minor_gcd(m3, seeded);
    CHECK(bare.flag == Certification::subset_upper_bound);

    // with the divisor and enough samples the sandwich closes
    seeded.divisor = divisor;
    MinorGcdResult certified = minor_gcd(m3, seeded);
    CHECK(certified.flag == Certification::exact);
    CHECK(associates(certified.value, divisor));

    // a seeded subset too small to reach the divisor stays uncertified
    GcdStrategy tiny;
    tiny.mode = GcdStrategy::Mode::seeded;
    tiny.seed_sets = {braid_seed_rows(4).adjacent};
    tiny.divisor = divisor;
    MinorGcdResult partial = minor_gcd(m3, tiny);
    CHECK(partial.flag == Certification::subset_upper_bound);
    LaurentPoly q;
    CHECK(try_exact_div(partial.value, divisor, q));  // still a multiple of the divisor
}

TEST_CASE("b2: the empty minor convention gives a rational expression") {
    // One generator, no relators: the 0x0 minor has determinant 1, so the
    // invariant is 1 / det Phi(1 - s1).
    InvariantResult r = twisted_alexander(braid_group(2), tym(2), GcdStrategy::exhaustive_scan());
    CHECK(r.numerator == P("1"));
    CHECK(r.denominator == P("1 - t*z^2"));
    CHECK_FALSE(r.is_polynomial());
    CHECK(r.delta_string() == "1 / (1 - t*z^2)");
}

TEST_CASE("cross_validate reports when only one column is valid") {
    CrossValidateOptions options;
    CrossValidateReport report = cross_validate(braid_group(2), tym(2), options);
    CHECK_FALSE(report.ok);
    CHECK(report.valid_columns == 1);
}

TEST_CASE("minor_gcd zero-row fast path and all-zero selections") {
    PolyMatrix m(3, 1, TZ);
    m.at(0, 0) = P("z");
    // row 1 is zero; selections containing it are skipped
    m.at(2, 0) = P("z^2");
    GcdStrategy strategy = GcdStrategy::exhaustive_scan();
    MinorGcdResult r = minor_gcd(m, strategy);
    CHECK(r.evaluated == 2);
    CHECK(r.skipped_zero == 1);
    CHECK(r.value == P("1"));  // z and z^2 are associates of 1

    PolyMatrix zero(2, 1, TZ);
    MinorGcdResult rz = minor_gcd(zero, strategy);
    CHECK(rz.value.is_zero());
    CHECK(rz.flag == Certification::exact);
    CHECK(rz.skipped_zero == 2);
}
