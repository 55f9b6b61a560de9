// Property suites at reduced size; the acceptance binary runs them in full.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "suites_calculus.hpp"
#include "suites_decompose.hpp"

using namespace suites;

#define CHECK_REPORT(rep)                                                                                              \
    do {                                                                                                               \
        auto r_ = (rep);                                                                                               \
        INFO(r_.summary());                                                                                            \
        CHECK(r_.ok());                                                                                                \
        MESSAGE(r_.summary());                                                                                         \
    } while (0)

TEST_CASE("replacement is order independent") { CHECK_REPORT(replacement(11, 300)); }

TEST_CASE("gluing equals replacement of an interface edge") { CHECK_REPORT(gluing_vs_replacement(12, 300)); }

TEST_CASE("canonical form agrees with brute-force isomorphism") { CHECK_REPORT(iso_vs_canonical(13)); }

TEST_CASE("decompositions agree with the brute-force oracle") { CHECK_REPORT(decomposition(14, 150)); }

TEST_CASE("product and right division are invertible") { CHECK_REPORT(invertibility(15, 60)); }

TEST_CASE("cut is admissible in HL") {
    auto r = cut_hl(16, 40);
    CHECK(r.unknown == 0);
    CHECK_REPORT(r);
}

TEST_CASE("mix is admissible in HMEL0") { CHECK_REPORT(mix_hmel(17, 10)); }

TEST_CASE("star over the floating template matches its unfoldings") { CHECK_REPORT(star_bang(18, 60)); }

TEST_CASE("dereliction and weakening at search level") { CHECK_REPORT(bang_laws(19, 30)); }
