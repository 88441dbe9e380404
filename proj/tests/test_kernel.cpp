#include <doctest.h>

#include <vector>

#include "nctrace/enumerate.hpp"
#include "nctrace/kernel.hpp"
#include "support.hpp"

using namespace nctrace;

namespace {

std::vector<Star> star_pattern(unsigned long mask, int r) {
    std::vector<Star> stars(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i)
        stars[static_cast<size_t>(i)] = (mask >> i) & 1 ? Star::star : Star::plain;
    return stars;
}

LaurentPoly block_value(int r, std::initializer_list<Star> stars) {
    return brown_block_value(r, std::vector<Star>(stars));
}

LaurentPoly entry_cumulant(std::initializer_list<EntryLabel> entries) {
    return brown_entry_cumulant(std::vector<EntryLabel>(entries));
}

}  // namespace

TEST_CASE("catalan numbers") {
    const long expected[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012};
    for (int k = 0; k <= 12; ++k) CHECK(catalan(k) == Integer(expected[k]));
    // Segner's recurrence
    for (int k = 1; k <= 12; ++k) {
        Integer sum = 0;
        for (int i = 0; i < k; ++i) sum += catalan(i) * catalan(k - 1 - i);
        CHECK(catalan(k) == sum);
    }
    CHECK_THROWS_AS(catalan(-1), std::invalid_argument);
}

TEST_CASE("alternating block values") {
    auto alt = [](int r) {
        std::vector<Star> stars;
        for (int i = 0; i < r; ++i) stars.push_back(i % 2 ? Star::star : Star::plain);
        return stars;
    };
    CHECK(brown_block_value(2, alt(2)) == LaurentPoly::monomial(-1, Rational(1)));
    CHECK(brown_block_value(4, alt(4)) == LaurentPoly::monomial(-3, Rational(-1)));
    CHECK(brown_block_value(6, alt(6)) == LaurentPoly::monomial(-5, Rational(2)));
    CHECK(brown_block_value(8, alt(8)) == LaurentPoly::monomial(-7, Rational(-5)));

    // odd length or a repeat anywhere kills the value
    CHECK(block_value(3, {Star::plain, Star::star, Star::plain}).is_zero());
    CHECK(block_value(1, {Star::plain}).is_zero());
    CHECK(block_value(4, {Star::plain, Star::plain, Star::star, Star::star}).is_zero());
    CHECK(block_value(2, {Star::star, Star::star}).is_zero());
}

TEST_CASE("block value is rotation invariant") {
    for (int r = 1; r <= 8; ++r) {
        for (unsigned long mask = 0; mask < (1ul << r); ++mask) {
            const auto stars = star_pattern(mask, r);
            const LaurentPoly base = brown_block_value(r, stars);
            for (int shift = 1; shift < r; ++shift) {
                std::vector<Star> rotated;
                for (int i = 0; i < r; ++i)
                    rotated.push_back(stars[static_cast<size_t>((i + shift) % r)]);
                CHECK(brown_block_value(r, rotated) == base);
            }
        }
    }
}

TEST_CASE("entry cumulants need a full index cycle") {
    CHECK(entry_cumulant({{Star::plain, 1, 2}, {Star::star, 2, 1}}) ==
          LaurentPoly::monomial(-1, Rational(1)));
    CHECK(entry_cumulant({{Star::plain, 1, 2}, {Star::star, 3, 1}}).is_zero());
    CHECK(entry_cumulant({{Star::plain, 1, 1}}).is_zero());
    // cycle present but the star pattern repeats
    CHECK(entry_cumulant({{Star::plain, 1, 2}, {Star::plain, 2, 1}}).is_zero());
    // length four cycle, alternating
    CHECK(entry_cumulant({{Star::plain, 1, 2},
                          {Star::star, 2, 3},
                          {Star::plain, 3, 4},
                          {Star::star, 4, 1}}) ==
          LaurentPoly::monomial(-3, Rational(-1)));
}

TEST_CASE("adaptedness matches nonvanishing of the block product") {
    // a partition is adapted to the labels iff every block value is nonzero
    for (int p = 2; p <= 7; ++p) {
        for (const NcPartition& pi : enumerate_nc(p)) {
            for (unsigned long mask = 0; mask < (1ul << p); ++mask) {
                const auto stars = star_pattern(mask, p);
                bool nonzero = true;
                for (const auto& blk : pi.blocks()) {
                    std::vector<Star> sub;
                    for (int v : blk) sub.push_back(stars[static_cast<size_t>(v - 1)]);
                    nonzero = nonzero &&
                              !brown_block_value(static_cast<int>(sub.size()), sub).is_zero();
                }
                CHECK(is_adapted(pi, stars) == nonzero);
            }
        }
    }
}

TEST_CASE("kappa pi fixed examples") {
    std::vector<Star> alt4 = {Star::plain, Star::star, Star::plain, Star::star};
    BrownKernel kernel;
    CHECK(kappa_pi(NcPartition(4, {{1, 2}, {3, 4}}), kernel, alt4) ==
          LaurentPoly::monomial(-2, Rational(1)));
    CHECK(kappa_pi(NcPartition::full(4), kernel, alt4) ==
          LaurentPoly::monomial(-3, Rational(-1)));
    CHECK(kappa_pi(NcPartition(4, {{1, 4}, {2, 3}}), kernel, alt4) ==
          LaurentPoly::monomial(-2, Rational(1)));
    // {1,3} picks plain,plain: zero block
    CHECK(kappa_pi(NcPartition(4, {{1, 3}, {2}, {4}}), kernel, alt4).is_zero());
}

TEST_CASE("kappa pi is the product over blocks") {
    testsupport::Rng rng(0x5eed0006);
    BrownKernel kernel;
    for (int trial = 0; trial < 200; ++trial) {
        const int p = static_cast<int>(rng.integer(1, 7));
        const auto all = enumerate_nc(p);
        const NcPartition& pi = all[rng.below(all.size())];
        const auto stars = star_pattern(rng.next(), p);
        LaurentPoly product = LaurentPoly::constant(Rational(1));
        for (const auto& blk : pi.blocks()) {
            std::vector<Star> sub;
            for (int v : blk) sub.push_back(stars[static_cast<size_t>(v - 1)]);
            product *= brown_block_value(static_cast<int>(sub.size()), sub);
        }
        CHECK(kappa_pi(pi, kernel, stars) == product);
    }
}

TEST_CASE("generic kernel interface rejects labels outside the family") {
    BrownKernel kernel;
    const std::vector<int> bad = {0, 2};
    CHECK_THROWS_AS(kernel.block_value(bad), std::invalid_argument);
    const std::vector<int> good = {0, 1};
    CHECK(kernel.block_value(good) == LaurentPoly::monomial(-1, Rational(1)));
}
