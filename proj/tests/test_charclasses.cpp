#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pinlef/charclasses.hpp"
#include "pinlef/errors.hpp"
#include "pinlef/lefschetz.hpp"

using namespace pinlef;

namespace {

EmbeddedSurfaceData rp2_in_rp4() {
    EmbeddedSurfaceData d;
    d.euler_char = 1;
    d.self_intersection = 1;
    d.w1sq_sigma = 1;
    return d;
}

EmbeddedSurfaceData from_bits(unsigned bits) {
    EmbeddedSurfaceData d;
    d.euler_char = bits & 1u;
    d.self_intersection = (bits >> 1) & 1u;
    d.cup_term = (bits >> 2) & 1u;
    d.w1sq_sigma = (bits >> 3) & 1u;
    d.w1sq_normal = (bits >> 4) & 1u;
    return d;
}

}  // namespace

TEST_CASE("w2 and w1 squared on small data") {
    CHECK(eval_w2(rp2_in_rp4()) == 0);
    CHECK(eval_w1sq(rp2_in_rp4()) == 1);
    CHECK(eval_w2(EmbeddedSurfaceData{}) == 0);
    CHECK(eval_w1sq(EmbeddedSurfaceData{}) == 0);
    CHECK(eval_w2(EmbeddedSurfaceData{1, 1, 1, 0, 0}) == 1);
    CHECK(eval_w1sq(EmbeddedSurfaceData{0, 0, 0, 1, 1}) == 0);
}

TEST_CASE("both evaluators are linear in their fields") {
    for (unsigned bits = 0; bits < 32; ++bits) {
        const auto d = from_bits(bits);
        CHECK(eval_w2(d) == ((bits & 1u) ^ ((bits >> 1) & 1u) ^ ((bits >> 2) & 1u)));
        CHECK(eval_w1sq(d) == (((bits >> 3) & 1u) ^ ((bits >> 4) & 1u)));
        for (unsigned f = 0; f < 3; ++f) CHECK(eval_w2(from_bits(bits ^ (1u << f))) != eval_w2(d));
        for (unsigned f = 3; f < 5; ++f) CHECK(eval_w1sq(from_bits(bits ^ (1u << f))) != eval_w1sq(d));
    }
}

TEST_CASE("obstruction summary") {
    const std::vector<EmbeddedSurfaceData> rp4{rp2_in_rp4()};
    const auto s = pin_obstruction_summary(rp4);
    CHECK_FALSE(s.pin_plus_obstructed);
    CHECK(s.pin_minus_obstructed);
    CHECK_FALSE(s.no_surfaces);

    const auto empty = pin_obstruction_summary({});
    CHECK_FALSE(empty.pin_plus_obstructed);
    CHECK_FALSE(empty.pin_minus_obstructed);
    CHECK(empty.no_surfaces);

    const std::vector<EmbeddedSurfaceData> two{EmbeddedSurfaceData{}, EmbeddedSurfaceData{1, 0, 0, 0, 0}};
    CHECK(pin_obstruction_summary(two).pin_plus_obstructed);

    EmbeddedSurfaceData bad;
    bad.cup_term = 2;
    CHECK_THROWS_AS(validate(bad), InputError);
    const std::vector<EmbeddedSurfaceData> bads{bad};
    CHECK_THROWS_AS(pin_obstruction_summary(bads), InputError);
}

TEST_CASE("RP4 verdicts agree between the surface formulas and the fibration") {
    const std::vector<EmbeddedSurfaceData> rp4{rp2_in_rp4()};
    const auto s = pin_obstruction_summary(rp4);
    const LefschetzFibration f(SurfaceModel::non_orientable(1, 1), {HomologyClass::z4({2})});
    CHECK(decide_pin_plus(f).exists == !s.pin_plus_obstructed);
    CHECK(decide_pin_minus(f).exists == !s.pin_minus_obstructed);
}
