#include "doctest.h"

#include "irrec/multirat.hpp"

using namespace irrec;

TEST_CASE("tower arithmetic and canonical equality") {
    MultiRat z1 = MultiRat::var(1), z2 = MultiRat::var(2);
    MultiRat one{Rational(1)};
    CHECK((z1 / (one + z1) + one / (one + z1)) == one);
    // cross-variable: (z1+z2)^2 - (z1-z2)^2 = 4 z1 z2
    MultiRat lhs = (z1 + z2).pow(2) - (z1 - z2).pow(2);
    CHECK(lhs == MultiRat(Rational(4)) * z1 * z2);
    // equality through different construction routes
    MultiRat a = one / (z1 - z2);
    MultiRat b = (z1 + z2) / (z1 * z1 - z2 * z2);
    CHECK(a == b);
    CHECK(a != one / (z1 + z2));
}

TEST_CASE("substitution in towers") {
    MultiRat z1 = MultiRat::var(1), z2 = MultiRat::var(2);
    MultiRat one{Rational(1)};
    // f(z1,z2) = 1/(z1-z2)^2 with z2 -> -z1 gives 1/(4 z1^2)
    MultiRat f = one / ((z1 - z2) * (z1 - z2));
    CHECK(f.substituted(2, -z1) == one / (MultiRat(Rational(4)) * z1 * z1));
    // y(1/z) + y(z) = 1 for y = z/(1+z)
    MultiRat y = z1 / (one + z1);
    CHECK(y.substituted(1, one / z1) + y == one);
    // involutivity of z -> 1/z
    MultiRat g = (z1 * z1 - one) / (z1 * z1 * z1 + MultiRat(Rational(7)));
    CHECK(g.substituted(1, one / z1).substituted(1, one / z1) == g);
}

TEST_CASE("residues in the active (top) variable") {
    MultiRat z1 = MultiRat::var(1), z2 = MultiRat::var(2);
    MultiRat one{Rational(1)};
    // dz/z at 0 (univariate case, top variable z1)
    CHECK((one / z1).residue_top(0) == one);
    CHECK((one / ((z1 - one) * (z1 - one))).residue_top(1).is_zero());
    CHECK((z1 / ((z1 - one) * (z1 + one))).residue_top(1) == MultiRat(ratio(1, 2)));
    // coefficients carried symbolically in the lower variable:
    // f = z1 / ((z2-2) z2): residue at z2=2 is z1/2.
    MultiRat f = z1 / ((z2 - MultiRat(Rational(2))) * z2);
    CHECK(f.residue_top(2) == z1 / MultiRat(Rational(2)));
    // higher-order pole with passenger-dependent coefficients:
    // z1/((z2-z1) z2^2) at z2=0: expand z1/(z2-z1) = -1 - z2/z1 - ...
    MultiRat g = z1 / ((z2 - z1) * z2 * z2);
    CHECK(g.residue_top(0) == -(one / z1));
}

TEST_CASE("to_ratfunc round trip") {
    MultiRat z1 = MultiRat::var(1);
    MultiRat one{Rational(1)};
    MultiRat f = (z1 + one) / (z1 * z1 - MultiRat(Rational(3)));
    RatFunc rf = f.to_ratfunc();
    CHECK(MultiRat::from_ratfunc(rf, 1) == f);
}
