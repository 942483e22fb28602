#include "mfil/oracle.hpp"

#include "mfil/cochain.hpp"
#include "mfil/combinatorics.hpp"

#include <algorithm>

namespace mfil {

Scalar Assignment::value(const DeformVariable& v) const
{
	if (weight_bound && !v.is_top() && v.s() > *weight_bound)
		return 0;
	auto it = values.find(v);
	return it == values.end() ? Scalar(0) : it->second;
}

void Assignment::set(const DeformVariable& v, const Scalar& value)
{
	if (value == 0)
		values.erase(v);
	else
		values[v] = value;
}

VariableInventory VariableInventory::for_dimension(int n, bool top)
{
	if (top && n % 2 != 0)
		throw std::invalid_argument("x exists only in even dimension");
	VariableInventory inv{n, pair_inventory(n)};
	if (top)
		inv.variables.push_back(DeformVariable::top());
	return inv;
}

bool VariableInventory::has_top() const
{
	return std::any_of(variables.begin(), variables.end(), [](const auto& v) { return v.is_top(); });
}

namespace {

// Element of m0(n) with polynomial coefficients.
using SymbolicElement = std::map<int, DeformPolynomial>;

void accumulate(SymbolicElement& into, int index, const DeformPolynomial& p)
{
	auto& slot = into[index];
	slot += p;
	if (slot.is_zero())
		into.erase(index);
}

class SymbolicPsi {
public:
	explicit SymbolicPsi(const VariableInventory& inv) : inv_(inv) {}

	// Psi(e_a, e_b) for arbitrary a, b.
	SymbolicElement on_basis(int a, int b) const
	{
		SymbolicElement out;
		if (a == b || a == 1 || b == 1)
			return out;
		Integer sgn = 1;
		if (a > b) {
			std::swap(a, b);
			sgn = -1;
		}
		for (const auto& v : inv_.variables) {
			const int j = v.is_top() ? inv_.bound / 2 : v.j();
			const int s = v.is_top() ? -1 : v.s();
			for (const auto value = psi2_value(j, s, inv_.bound, a, b); const auto& [index, c] : value.terms())
				accumulate(out, index, DeformPolynomial::variable(v, sgn * c.get_num()));
		}
		return out;
	}

	// Psi(u, e_b) for a symbolic u.
	SymbolicElement on_element(const SymbolicElement& u, int b) const
	{
		SymbolicElement out;
		for (const auto& [a, p] : u)
			for (const auto& [index, q] : on_basis(a, b))
				accumulate(out, index, p * q);
		return out;
	}

private:
	const VariableInventory& inv_;
};

}  // namespace

DeformPolynomial oracle_coefficient(int j, int q, int r, const VariableInventory& inventory)
{
	if (j < 2 || q <= j)
		throw std::invalid_argument("oracle needs 2 <= j < q");
	if (r < -1)
		throw std::invalid_argument("oracle needs r >= -1");
	if (r == -1 && !inventory.has_top())
		throw std::invalid_argument("r = -1 needs x in the inventory");
	const int target = j + 2 * q + 1 + r;
	if (target > inventory.bound)
		throw InconclusiveOracle("label (" + std::to_string(j) + "," + std::to_string(q) + "," +
		                         std::to_string(r) + ") lies above the inventory bound " +
		                         std::to_string(inventory.bound));
	if (inventory.variables.empty())
		return {};

	// [a,b](x,y,z) with a = b = Psi: six terms, then halved.
	SymbolicPsi psi(inventory);
	const int x = j, y = q, z = q + 1;
	const int cyc[3][3] = {{x, y, z}, {y, z, x}, {z, x, y}};
	SymbolicElement total;
	for (int twice = 0; twice < 2; ++twice)
		for (const auto& c : cyc)
			for (const auto& [index, p] : psi.on_element(psi.on_basis(c[0], c[1]), c[2]))
				accumulate(total, index, p);
	auto it = total.find(target);
	if (it == total.end())
		return {};
	DeformPolynomial half;
	for (const auto& [m, c] : it->second.terms()) {
		if (!mpz_divisible_ui_p(c.get_mpz_t(), 2))
			throw std::logic_error("odd coefficient in [Psi,Psi]");
		half.add(m, c / 2);
	}
	return half;
}

KnownSolution parse_known_solution(std::string_view name)
{
	if (name == "m2")
		return KnownSolution::m2;
	if (name == "L1")
		return KnownSolution::L1;
	if (name == "mk")
		return KnownSolution::mk;
	if (name == "L1-lacuna2")
		return KnownSolution::L1_lacuna2;
	throw std::invalid_argument("unknown solution family '" + std::string(name) + "'");
}

Assignment known_solution(KnownSolution which, const KnownParams& p)
{
	Assignment a;
	switch (which) {
	case KnownSolution::m2:
		a.set(DeformVariable::pair(2, 0), p.t);
		break;
	case KnownSolution::mk:
		if (p.k < 2)
			throw std::invalid_argument("mk needs k >= 2");
		a.set(DeformVariable::pair(2, p.k - 2), p.t);
		break;
	case KnownSolution::L1:
		// 6 t (k-2)! (k-1)! / (2k-1)!
		for (int k = 2; 2 * k + 1 <= p.bound; ++k) {
			Scalar c(6 * factorial(k - 2) * factorial(k - 1), factorial(2 * k - 1));
			c.canonicalize();
			a.set(DeformVariable::pair(k, 0), p.t * c);
		}
		break;
	case KnownSolution::L1_lacuna2:
		// 6 t j! (j+1)! / (2j+3)!, j = 2..8
		for (int j = 2; j <= 8; ++j) {
			Scalar c(6 * factorial(j) * factorial(j + 1), factorial(2 * j + 3));
			c.canonicalize();
			a.set(DeformVariable::pair(j, 2), p.t * c);
		}
		break;
	}
	return a;
}

std::map<Label, Scalar> evaluate_system(const EquationSystem& sys, const Assignment& a)
{
	std::map<Label, Scalar> out;
	for (const auto& e : sys.equations)
		out[e.label] = e.poly.evaluate([&](const DeformVariable& v) { return a.value(v); });
	return out;
}

LieStructure deformed_structure(const Assignment& a, int n)
{
	if (n < 3)
		throw std::invalid_argument("deformed structure needs n >= 3");
	LieStructure::Relations rel;
	for (int i = 2; i < n; ++i)
		rel[{1, i}] = LieElement::basis(i + 1);
	for (const auto& [v, c] : a.values) {
		if (c == 0 || (a.weight_bound && !v.is_top() && v.s() > *a.weight_bound))
			continue;
		if (v.is_top() && n % 2 != 0)
			throw std::invalid_argument("x is assigned but the dimension is odd");
		const int j = v.is_top() ? n / 2 : v.j();
		const int s = v.is_top() ? -1 : v.s();
		for (int k = 2; k <= n; ++k)
			for (int m = k + 1; m <= n; ++m) {
				auto value = psi2_value(j, s, n, k, m);
				if (!value.is_zero())
					rel[{k, m}] += c * value;
			}
	}
	std::erase_if(rel, [](const auto& kv) { return kv.second.is_zero(); });
	return {"deformed(" + std::to_string(n) + ")", n, Extent::finite, std::move(rel)};
}

std::vector<JacobiViolation> jacobi_scan(const LieStructure& s)
{
	std::vector<JacobiViolation> out;
	const int n = s.dimension();
	for (int i = 1; i <= n; ++i)
		for (int j = i + 1; j <= n; ++j)
			for (int k = j + 1; k <= n; ++k) {
				auto d = jacobi_defect(s, i, j, k);
				if (!d.is_zero())
					out.push_back({{i, j, k}, std::move(d)});
			}
	return out;
}

}  // namespace mfil
