#include "mfil/combinatorics.hpp"
#include "mfil/fixtures.hpp"
#include "mfil/oracle.hpp"
#include "mfil/system.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace mfil;

namespace {

Scalar eval(const DeformPolynomial& p, const Assignment& a)
{
	return p.evaluate([&](const DeformVariable& v) { return a.value(v); });
}

Assignment random_small_support(std::mt19937& rng, int n, int size)
{
	auto inv = pair_inventory(n);
	std::uniform_int_distribution<std::size_t> pick(0, inv.size() - 1);
	Assignment a;
	for (int i = 0; i < size; ++i)
		a.set(inv[pick(rng)], test::small_rational(rng, true));
	return a;
}

}  // namespace

TEST_CASE("oracle on small labels")
{
	auto inv = VariableInventory::for_dimension(9);
	CHECK(oracle_coefficient(2, 3, 0, inv) == f_poly(2, 3, 0));
	auto l1 = known_solution(KnownSolution::L1, {.bound = 13});
	auto inv13 = VariableInventory::for_dimension(13);
	for (const auto& l : labels_up_to(13))
		CHECK(eval(oracle_coefficient(l.j, l.q, l.r, inv13), l1) == 0);
	CHECK(oracle_coefficient(2, 3, 0, {9, {}}).is_zero());
	CHECK_THROWS_AS(oracle_coefficient(2, 3, 1, inv), InconclusiveOracle);
	CHECK_THROWS_AS(oracle_coefficient(2, 4, -1, VariableInventory::for_dimension(10)), std::invalid_argument);
	CHECK_THROWS_AS(oracle_coefficient(3, 3, 0, inv), std::invalid_argument);
	CHECK_THROWS_AS(VariableInventory::for_dimension(11, true), std::invalid_argument);
	auto top = VariableInventory::for_dimension(10, true);
	CHECK(top.has_top());
	// (-1)^(k-j-q) = -1 for k = 5, j = 2, q = 4
	CHECK(oracle_coefficient(2, 4, -1, top) == -(g_poly(2, 4, -1) * DeformPolynomial::variable(DeformVariable::top())));
}

TEST_CASE("known families")
{
	auto l1 = known_solution(KnownSolution::L1, {.bound = 11});
	CHECK(l1.value(DeformVariable::pair(2, 0)) == 1);
	CHECK(l1.value(DeformVariable::pair(3, 0)) == make_scalar(1, 10));
	CHECK(l1.value(DeformVariable::pair(4, 0)) == make_scalar(1, 70));
	CHECK(l1.value(DeformVariable::pair(5, 0)) == make_scalar(1, 420));
	CHECK(l1.values.size() == 4);
	auto mk = known_solution(KnownSolution::mk, {.t = 3, .k = 5});
	CHECK(mk.values.size() == 1);
	CHECK(mk.value(DeformVariable::pair(2, 3)) == 3);
	CHECK_THROWS_AS(known_solution(KnownSolution::mk, {.k = 1}), std::invalid_argument);
	CHECK(parse_known_solution("L1-lacuna2") == KnownSolution::L1_lacuna2);
	CHECK_THROWS_AS(parse_known_solution("L2"), std::invalid_argument);
	auto lac = known_solution(KnownSolution::L1_lacuna2);
	CHECK(lac.value(DeformVariable::pair(2, 2)) == make_scalar(1, 70));
	CHECK(lac.value(DeformVariable::pair(8, 2)) == make_scalar(1, 1385670));

	Assignment bounded = l1;
	bounded.weight_bound = -1;
	CHECK(bounded.value(DeformVariable::pair(2, 0)) == 0);
}

TEST_CASE("deformed brackets reproduce the named algebras")
{
	for (int n = 9; n <= 14; ++n) {
		Assignment m2;
		m2.set(DeformVariable::pair(2, 0), 1);
		CHECK(deformed_structure(m2, n).relations() == make_fixture(FixtureId::m2, {.n = n}).relations());
		if (n % 2 == 0) {
			Assignment m1;
			m1.set(DeformVariable::top(), 1);
			CHECK(deformed_structure(m1, n).relations() == make_fixture(FixtureId::m1, {.n = n}).relations());
		} else {
			Assignment bad;
			bad.set(DeformVariable::top(), 1);
			CHECK_THROWS_AS(deformed_structure(bad, n), std::invalid_argument);
		}
	}
	const int n = 13;
	auto l1 = deformed_structure(known_solution(KnownSolution::L1, {.bound = n}), n);
	for (int k = 2; k <= n; ++k)
		for (int m = k + 1; k + m <= n; ++m) {
			Scalar want(6 * factorial(k - 2) * factorial(m - 2) * (m - k), factorial(k + m - 2));
			want.canonicalize();
			CHECK(l1.bracket(k, m) == LieElement::basis(k + m, want));
		}
	CHECK(jacobi_scan(l1).empty());
}

TEST_CASE("Jacobi scan finds the defect of a single cocycle")
{
	Assignment a;
	a.set(DeformVariable::pair(3, 0), 1);
	auto v = jacobi_scan(deformed_structure(a, 10));
	bool found = false;
	for (const auto& j : v)
		if (j.triple == std::array<int, 3>{2, 3, 4}) {
			found = true;
			CHECK(j.defect == LieElement::basis(9, 3));
		}
	CHECK(found);
}

TEST_CASE("soundness: points on the known lines pass everything")
{
	std::mt19937 rng(11);
	for (int n = 9; n <= 16; ++n) {
		auto sys = system_finite(n);
		for (int k = 2; 2 * k - 1 <= n - 2; ++k) {
			auto a = known_solution(KnownSolution::mk, {.t = test::small_rational(rng, true), .k = k});
			for (const auto& [l, r] : evaluate_system(sys, a))
				REQUIRE(r == 0);
			REQUIRE(jacobi_scan(deformed_structure(a, n)).empty());
		}
	}
}

TEST_CASE("completeness: the Jacobi defect equals the residual")
{
	std::mt19937 rng(5);
	for (int n = 9; n <= 14; ++n)
		for (int trial = 0; trial < 6; ++trial) {
			auto a = random_small_support(rng, n, 3);
			auto g = deformed_structure(a, n);
			for (const auto& l : labels_up_to(n)) {
				auto defect = jacobi_defect(g, l.j, l.q, l.q + 1);
				REQUIRE(defect.coefficient(l.total()) == eval(f_poly(l.j, l.q, l.r), a));
			}
			const bool zero = std::ranges::all_of(evaluate_system(system_finite(n), a),
			                                      [](const auto& kv) { return kv.second == 0; });
			CHECK(zero == jacobi_scan(g).empty());
		}
}
