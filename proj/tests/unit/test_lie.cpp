#include "mfil/fixtures.hpp"
#include "mfil/lie.hpp"
#include "mfil/oracle.hpp"

#include <doctest.h>

using namespace mfil;

TEST_CASE("LieElement never stores zeros")
{
	auto e = LieElement::basis(3, 2);
	e.add(3, -2);
	CHECK(e.is_zero());
	CHECK(e.max_index() == 0);
	CHECK(LieElement::basis(4, 0).is_zero());
	auto f = LieElement::basis(2) + LieElement::basis(7, make_scalar(1, 3));
	CHECK(f.max_index() == 7);
	CHECK(f.coefficient(7) == Scalar(1, 3));
	CHECK(to_string(LieElement{}) == "0");
}

TEST_CASE("structure validation and antisymmetry")
{
	using R = LieStructure::Relations;
	CHECK_THROWS_AS(LieStructure("bad", 5, Extent::finite, R{{{3, 2}, LieElement::basis(5)}}), std::invalid_argument);
	CHECK_THROWS_AS(LieStructure("bad", 5, Extent::finite, R{{{1, 6}, LieElement::basis(5)}}), std::invalid_argument);
	LieStructure s("t", 4, Extent::cutoff, R{{{1, 2}, LieElement::basis(3)}, {{1, 4}, LieElement::basis(5)}});
	CHECK(s.truncated());
	CHECK(s.bracket(1, 4).is_zero());
	CHECK(s.bracket(2, 1) == -LieElement::basis(3));
	CHECK(s.bracket(3, 3).is_zero());
	CHECK_THROWS_AS(s.bracket(1, 5), std::out_of_range);
	CHECK_THROWS_AS(bracket_eval(s, LieElement::basis(6), LieElement::basis(1)), std::out_of_range);
}

TEST_CASE("named fixtures are Lie algebras at every truncation")
{
	for (int n : {3, 8, 20})
		CHECK(jacobi_scan(make_fixture(FixtureId::m0, {.n = n})).empty());
	for (int n = 6; n <= 16; n += 2)
		CHECK(jacobi_scan(make_fixture(FixtureId::m1, {.n = n})).empty());
	CHECK(jacobi_scan(make_fixture(FixtureId::m2, {.n = 15})).empty());
	for (int k = 2; k <= 7; ++k)
		CHECK(jacobi_scan(make_fixture(FixtureId::mk, {.n = 16, .k = k})).empty());
	CHECK(jacobi_scan(make_fixture(FixtureId::L1, {.n = 14})).empty());
	CHECK(jacobi_scan(make_fixture(FixtureId::Lk, {.n = 14, .k = 3})).empty());
	for (auto base : {FixtureId::m0, FixtureId::m2, FixtureId::L1})
		for (int s = 1; s <= 3; ++s)
			CHECK(jacobi_scan(make_fixture(FixtureId::lacuna_of, {.n = 16, .s = s, .base = base})).empty());
}

TEST_CASE("fixture shapes")
{
	auto m0 = make_fixture(FixtureId::m0, {.n = 6});
	CHECK_FALSE(m0.truncated());
	CHECK(m0.extent() == Extent::finite);
	CHECK(m0.bracket(1, 5) == LieElement::basis(6));
	CHECK(m0.bracket(1, 6).is_zero());

	auto m1 = make_fixture(FixtureId::m1, {.n = 8});
	CHECK(m1.bracket(2, 7) == LieElement::basis(8));
	CHECK(m1.bracket(3, 6) == -LieElement::basis(8));
	CHECK(m1.bracket(4, 5) == LieElement::basis(8));
	CHECK(m1.name() == "m1(8)");

	auto m2 = make_fixture(FixtureId::m2, {.n = 8});
	CHECK(m2.truncated());
	CHECK(m2.bracket(2, 5) == LieElement::basis(7));
	CHECK(m2.bracket(2, 7).is_zero());

	auto m4 = make_fixture(FixtureId::mk, {.n = 12, .k = 4});
	CHECK(m4.bracket(4, 7) == LieElement::basis(11));
	CHECK(m4.bracket(1, 2).is_zero());  // e2, e3 are not generators of m4
	CHECK(m4.name() == "m4(12)");

	auto L1 = make_fixture(FixtureId::L1, {.n = 10});
	CHECK(L1.bracket(2, 5) == LieElement::basis(7, 3));

	auto lac = make_fixture(FixtureId::lacuna_of, {.n = 12, .s = 2, .base = FixtureId::L1});
	CHECK(lac.name() == "L1(2)[12]");
	CHECK(lac.bracket(1, 3).is_zero());
	CHECK(lac.bracket(1, 4) == LieElement::basis(5, 3));
	CHECK(lac.bracket(4, 5) == LieElement::basis(9));
}

TEST_CASE("fixture parameter errors")
{
	CHECK_THROWS_AS(make_fixture(FixtureId::m1, {.n = 7}), std::invalid_argument);
	CHECK_THROWS_AS(make_fixture(FixtureId::m1, {.n = 4}), std::invalid_argument);
	CHECK_THROWS_AS(make_fixture(FixtureId::mk, {.n = 5, .k = 6}), std::invalid_argument);
	CHECK_THROWS_AS(make_fixture(FixtureId::m0, {.n = 0}), std::invalid_argument);
	CHECK_THROWS_AS(make_fixture(FixtureId::lacuna_of, {.n = 9, .s = 0}), std::invalid_argument);
	CHECK_THROWS_AS(make_fixture(FixtureId::lacuna_of, {.n = 9, .s = 1, .base = FixtureId::m1}),
	                std::invalid_argument);
	CHECK_THROWS_AS(parse_fixture_id("m9"), std::invalid_argument);
	CHECK(parse_fixture_id("lacuna-of") == FixtureId::lacuna_of);
	CHECK(fixture_name(FixtureId::mk) == "mk");
}

TEST_CASE("Jacobi defect is alternating")
{
	auto s = make_fixture(FixtureId::m0, {.n = 12});
	CHECK(jacobi_defect(s, 2, 3, 4).is_zero());
	CHECK(jacobi_defect(s, 2, 2, 4).is_zero());
}
