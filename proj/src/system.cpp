#include "mfil/system.hpp"

#include "mfil/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace mfil {

std::string to_string(const Label& l)
{
	return "(" + std::to_string(l.j) + "," + std::to_string(l.q) + "," + std::to_string(l.r) + ")";
}

namespace {

int sign(long e) { return e % 2 == 0 ? 1 : -1; }

DeformPolynomial product(const Integer& c, int l, int t, int m, int u)
{
	return DeformPolynomial::variable(DeformVariable::pair(l, t), c) *
	       DeformPolynomial::variable(DeformVariable::pair(m, u));
}

}  // namespace

// Loop ranges run past the printed floor bounds; the binomial convention
// zeroes the extra terms.
DeformPolynomial f_poly(int j, int q, int r)
{
	if (j < 2 || q <= j)
		throw std::invalid_argument("F_{j,q,r} requires 2 <= j < q");
	if (r < 0)
		throw std::invalid_argument("F_{j,q,r} requires r >= 0");
	DeformPolynomial f;
	for (int t = 0; t <= r; ++t) {
		for (int l = j; l <= q; ++l)
			for (int m = q + 1; m <= j + q + t; ++m) {
				Integer c = binomial(q - l - 1, l - j) * binomial(j + q - m + t - 1, m - q - 1);
				if (c != 0)
					f += product(sign(l - j + m - q) * c, l, t, m, r - t);
			}
		for (int l = j; l <= q; ++l)
			for (int m = q; m <= j + q + t; ++m) {
				Integer c = binomial(q - l, l - j) * binomial(j + q - m + t, m - q);
				if (c != 0)
					f += product(sign(l - j + m - q) * c, l, t, m, r - t);
			}
		for (int m = j; m <= 2 * q + t; ++m) {
			Integer c = binomial(2 * q - m + t, m - j);
			if (c != 0)
				f += product(sign(m - j + 1) * c, q, t, m, r - t);
		}
	}
	return f;
}

DeformPolynomial g_poly(int j, int q, int r)
{
	if (j < 2 || q <= j)
		throw std::invalid_argument("G_{j,q,r} requires 2 <= j < q");
	if (r < -1)
		throw std::invalid_argument("G_{j,q,r} requires r >= -1");
	const int s = r + 1;
	DeformPolynomial g;
	for (int l = j; l <= q; ++l) {
		Integer c = binomial(q - l - 1, l - j) + binomial(q - l, l - j);
		if (c != 0)
			g += DeformPolynomial::variable(DeformVariable::pair(l, s), sign(l) * c);
	}
	g += DeformPolynomial::variable(DeformVariable::pair(q, s), -sign(q));
	return g;
}

std::string to_string(XMode m)
{
	switch (m) {
	case XMode::fixed0:
		return "0";
	case XMode::fixed1:
		return "1";
	case XMode::free:
		break;
	}
	return "free";
}

XMode parse_x_mode(std::string_view text)
{
	if (text == "0")
		return XMode::fixed0;
	if (text == "1")
		return XMode::fixed1;
	if (text == "free")
		return XMode::free;
	throw std::invalid_argument("x mode must be free, 0 or 1");
}

std::string EquationSystem::id() const
{
	return (kind == Kind::finite ? "M_Fil(" : "truncated(") + std::to_string(bound) + ")";
}

const Equation* EquationSystem::find(const Label& l) const
{
	for (const auto& e : equations)
		if (e.label == l)
			return &e;
	return nullptr;
}

std::vector<DeformVariable> pair_inventory(int n)
{
	std::vector<DeformVariable> out;
	for (int j = 2; 2 * j + 1 <= n; ++j)
		for (int s = 0; 2 * j + 1 + s <= n; ++s)
			out.push_back(DeformVariable::pair(j, s));
	std::sort(out.begin(), out.end());
	return out;
}

std::vector<Label> labels_up_to(int total_max)
{
	std::vector<Label> out;
	for (int j = 2; j + 2 * (j + 1) + 1 <= total_max; ++j)
		for (int q = j + 1; j + 2 * q + 1 <= total_max; ++q)
			for (int r = 0; j + 2 * q + 1 + r <= total_max; ++r)
				out.push_back({j, q, r});
	std::sort(out.begin(), out.end());
	return out;
}

namespace {

// Every variable of a generated row should already be in the inventory.
void check_inventory(const EquationSystem& sys)
{
	for (const auto& e : sys.equations)
		for (const auto& v : e.poly.variables())
			if (!std::binary_search(sys.variables.begin(), sys.variables.end(), v))
				throw std::logic_error("row " + to_string(e.label) + " uses " + to_string(v) +
				                       " outside the inventory");
}

}  // namespace

std::vector<Label> system_labels(int n)
{
	if (n < 9)
		throw std::invalid_argument("M_Fil(n) needs n >= 9");
	auto labels = labels_up_to(n);
	if (n % 2 == 0)
		for (int j = 2; j + 2 * (j + 1) <= n; ++j)
			if ((n - j) % 2 == 0)
				labels.push_back({j, (n - j) / 2, -1});
	std::stable_sort(labels.begin(), labels.end());
	return labels;
}

EquationSystem system_finite(int n, XMode x_mode)
{
	const auto labels = system_labels(n);
	EquationSystem sys{EquationSystem::Kind::finite, n, x_mode, pair_inventory(n), {}};
	if (n % 2 != 0) {
		for (const auto& l : labels)
			sys.equations.push_back({l, false, f_poly(l.j, l.q, l.r)});
		check_inventory(sys);
		return sys;
	}

	const int k = n / 2;
	const auto x = DeformVariable::top();
	if (x_mode == XMode::free)
		sys.variables.push_back(x);
	auto finish = [&](DeformPolynomial p) {
		if (x_mode == XMode::fixed0)
			return p.substitute(x, 0);
		if (x_mode == XMode::fixed1)
			return p.substitute(x, 1);
		return p;
	};
	for (const auto& l : labels) {
		if (l.total() < n) {
			sys.equations.push_back({l, false, f_poly(l.j, l.q, l.r)});
			continue;
		}
		auto xg = sign(k - l.j - l.q) * (DeformPolynomial::variable(x) * g_poly(l.j, l.q, l.r));
		if (l.r >= 0)
			xg += f_poly(l.j, l.q, l.r);
		sys.equations.push_back({l, true, finish(std::move(xg))});
	}
	check_inventory(sys);
	return sys;
}

EquationSystem system_truncated(int total_max)
{
	if (total_max < 9)
		throw std::invalid_argument("truncation bound must be >= 9");
	EquationSystem sys{EquationSystem::Kind::truncated, total_max, XMode::fixed0, pair_inventory(total_max), {}};
	for (const auto& l : labels_up_to(total_max))
		sys.equations.push_back({l, false, f_poly(l.j, l.q, l.r)});
	check_inventory(sys);
	return sys;
}

bool DimsReport::consistent() const
{
	return num_vars == num_vars_enumerated && num_vars == num_vars_partitions && num_eqs == num_eqs_enumerated &&
	       h3_by_weight == h3_enumerated;
}

DimsReport dims_report(int n)
{
	if (n < 9)
		throw std::invalid_argument("dims needs n >= 9");
	DimsReport d{};
	d.n = n;
	const bool even = n % 2 == 0;
	d.num_vars = even ? std::int64_t(n - 2) * (n - 4) / 4 : std::int64_t(n - 3) * (n - 3) / 4;
	for (int r = 2; r <= n - 3; ++r)
		d.num_vars_partitions += partitions_exact(2, r);
	const auto inventory = pair_inventory(n);
	d.num_vars_enumerated = static_cast<std::int64_t>(inventory.size());
	for (const auto& v : inventory)
		++d.h2_by_weight[v.s()];

	for (int r = 3; r <= (even ? n - 7 : n - 6); ++r)
		d.num_eqs += partitions_exact(3, r);
	if (even)
		d.num_eqs += partitions_exact(3, n - 5);
	for (int r = 0; n - r - 6 >= 3; ++r)
		d.h3_by_weight[r] = partitions_exact(3, n - r - 6);
	if (even && partitions_exact(3, n - 5) != partitions_exact(3, n - 6))
		d.h3_by_weight[-1] = partitions_exact(3, n - 5) - partitions_exact(3, n - 6);

	const auto labels = system_labels(n);
	d.num_eqs_enumerated = static_cast<std::int64_t>(labels.size());
	for (const auto& l : labels)
		++d.h3_enumerated[l.r];
	return d;
}

}  // namespace mfil
