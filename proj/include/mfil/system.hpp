#pragma once

// The quadratic generators F_{j,q,r}, the linear corrections G_{j,q,r}, and
// the equation systems of the varieties M_Fil (truncated) and M_Fil(n).

#include "mfil/polynomial.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace mfil {

/// Equation label (j, q, r); r = -1 only for the even-dimension x*G rows.
struct Label {
	int j, q, r;

	/// j + 2q + 1 + r: the index of the basis vector the equation lives on.
	int total() const { return j + 2 * q + 1 + r; }

	/// Ordered by (total, j, q).
	friend std::strong_ordering operator<=>(const Label& a, const Label& b)
	{
		if (auto c = a.total() <=> b.total(); c != 0)
			return c;
		if (auto c = a.j <=> b.j; c != 0)
			return c;
		return a.q <=> b.q;
	}
	friend bool operator==(const Label&, const Label&) = default;
};

std::string to_string(const Label& l);

/// Closed-form F_{j,q,r}: 2 <= j < q, r >= 0.
DeformPolynomial f_poly(int j, int q, int r);
/// Closed-form G_{j,q,r}: 2 <= j < q, r >= -1.
DeformPolynomial g_poly(int j, int q, int r);

enum class XMode { fixed0, fixed1, free };

/// "0", "1", "free".
std::string to_string(XMode m);
XMode parse_x_mode(std::string_view text);

struct Equation {
	Label label;
	bool tilde;  ///< carries an x*G correction (even dimension, top total)
	DeformPolynomial poly;
};

struct EquationSystem {
	enum class Kind { finite, truncated };
	Kind kind;
	int bound;  ///< n for finite, total_max for truncated
	XMode x_mode;
	std::vector<DeformVariable> variables;
	std::vector<Equation> equations;

	/// "M_Fil(n)" or "truncated(T)".
	std::string id() const;
	const Equation* find(const Label& l) const;
};

/// {x_{j,s} : j >= 2, s >= 0, 2j+1+s <= n}, sorted.
std::vector<DeformVariable> pair_inventory(int n);

/// Defining system of M_Fil(n), n >= 9. For even n = 2k the rows of total
/// n carry (-1)^(k-j-q) x G_{j,q,r}; x is kept, or replaced by 0 or 1.
/// Rows that become identically zero under x = 0 are kept.
EquationSystem system_finite(int n, XMode x_mode = XMode::free);

/// Row labels of system_finite(n) in row order, without the polynomials.
std::vector<Label> system_labels(int n);

/// Every F_{j,q,r} with j+2q+1+r <= total_max, total_max >= 9.
EquationSystem system_truncated(int total_max);

/// Labels (j,q,r), r >= 0, with 2 <= j < q and 9 <= total <= total_max.
std::vector<Label> labels_up_to(int total_max);

struct DimsReport {
	int n;
	std::int64_t num_vars;             ///< closed form
	std::int64_t num_vars_enumerated;  ///< size of the inventory
	std::int64_t num_vars_partitions;  ///< sum_{r=2}^{n-3} P2(r)
	std::int64_t num_eqs;              ///< closed form
	std::int64_t num_eqs_enumerated;   ///< rows of system_finite(n), via system_labels
	std::map<int, std::int64_t> h2_by_weight;  ///< variables of each weight s
	std::map<int, std::int64_t> h3_by_weight;  ///< closed-form rows of each weight r
	std::map<int, std::int64_t> h3_enumerated;

	bool consistent() const;
};

DimsReport dims_report(int n);

}  // namespace mfil
