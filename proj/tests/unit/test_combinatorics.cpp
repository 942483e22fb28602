#include "mfil/combinatorics.hpp"
#include "mfil/scalar.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace mfil;

TEST_CASE("scalars are canonical and parse strictly")
{
	CHECK(make_scalar(2, 4) == Scalar(1, 2));
	CHECK(make_scalar(3, -6) == Scalar(-1, 2));
	CHECK_THROWS_AS(make_scalar(1, 0), std::invalid_argument);
	CHECK(parse_scalar("3/6") == Scalar(1, 2));
	CHECK(parse_scalar("-7") == Scalar(-7));
	CHECK(to_string(parse_scalar("-10/4")) == "-5/2");
	for (const char* bad : {"", "1/0", "a", "1/", "/2", "1.5", "1/-2x"})
		CHECK_THROWS_AS(parse_scalar(bad), std::invalid_argument);
	CHECK(parse_integer("-123") == -123);
	CHECK_THROWS_AS(parse_integer("1/2"), std::invalid_argument);
}

TEST_CASE("binomial agrees with the falling-product oracle, zero convention included")
{
	for (long a = -6; a <= 40; ++a)
		for (long b = -6; b <= 42; ++b)
			REQUIRE(binomial(a, b) == test::naive_binomial(a, b));
	CHECK(binomial(-1, 0) == 0);
	CHECK(binomial(0, 0) == 1);
	CHECK(factorial(0) == 1);
	CHECK(factorial(10) == 3628800);
}

TEST_CASE("exact partition counts match enumeration")
{
	for (int q = 1; q <= 6; ++q)
		for (long k = -2; k <= 45; ++k)
			REQUIRE(partitions_exact(q, k) == test::brute_partitions(q, k));
	CHECK(partitions_exact(3, 9) == 7);
	CHECK_THROWS_AS(partitions_exact(0, 3), std::invalid_argument);
}
