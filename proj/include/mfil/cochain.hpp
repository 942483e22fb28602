#pragma once

// Cochains of m0(n) with coefficients in the adjoint module, the basis
// cocycles Psi_{j,s} and Psi_{i,j,s}, the Chevalley-Eilenberg differential
// and the Nijenhuis-Richardson bracket of two 2-cochains.

#include "mfil/lie.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

namespace mfil {

/// A degree-q alternating map on basis tuples, stored as a rule. The rule is
/// only ever asked about strictly increasing tuples and returns the raw
/// value; anything landing above the dimension bound is cut off here.
///
/// Weight mu means the value on (e_{i1}, ..., e_{iq}) sits on e_{i1+...+iq+mu}.
class AdjointCochain {
public:
	using Rule = std::function<LieElement(std::span<const int>)>;

	struct Probe {
		LieElement value;  ///< the part within the dimension bound
		bool truncated;    ///< a nonzero part was cut off
	};

	AdjointCochain(int degree, int weight, int bound, Rule rule);

	int degree() const { return degree_; }
	int weight() const { return weight_; }
	int bound() const { return bound_; }

	/// Value on basis vectors in any order (sign of the sort applied, zero on
	/// repeats). Throws std::out_of_range above the bound.
	LieElement at(std::span<const int> indices) const;
	LieElement at(std::initializer_list<int> indices) const;

	Probe probe(std::span<const int> increasing) const;
	/// The rule's value before the cut.
	LieElement raw(std::span<const int> increasing) const;

	/// Multilinear extension to arbitrary arguments.
	LieElement apply(std::span<const LieElement> args) const;
	LieElement apply_raw(std::span<const LieElement> args) const;

	/// Whether any increasing tuple within the bound had its value cut.
	/// Computed once on first use.
	bool truncated() const;

	/// True iff every increasing tuple within the bound evaluates to zero.
	bool is_zero() const;

private:
	int degree_;
	int weight_;
	int bound_;
	Rule rule_;
	struct Lazy {
		std::once_flag once;
		bool truncated = false;
	};
	std::shared_ptr<Lazy> lazy_;
};

/// Calls f on every strictly increasing q-tuple drawn from 1..n.
void for_each_increasing(int q, int n, const std::function<void(std::span<const int>)>& f);

/// (-1)^(j-k) C(m-j-1, j-k): the coefficient of Psi_{j,s}(e_k, e_m), k < m,
/// independent of s. Zero outside 2 <= k <= j < m, k + m >= 2j + 1.
Integer psi2_coefficient(int j, int k, int m);

/// Psi_{j,s}(e_k, e_m) = psi2_coefficient(j,k,m) e_{m+k+s}, truncated at n.
/// Requires 2 <= k < m; k = 1 is rejected since adapted cocycles vanish on e1.
/// s = -1 is allowed only for the top cocycle, n = 2j.
LieElement psi2_value(int j, int s, int n, int k, int m);

enum class Construction {
	value_table,  ///< closed-form table of values
	series,       ///< sum_k e_{2j+1+s+k} (x) D-1^k omega(e^j ^ e^(j+1))
};

/// Psi_{j,s} on m0(n): j >= 2, s >= 0, 2j+1+s <= n, or the top cocycle
/// (s = -1, n = 2j).
AdjointCochain psi2(int j, int s, int n, Construction how = Construction::value_table);

/// Psi_{k,-1} = e_{2k} (x) omega(e^k ^ e^(k+1)) on m0(2k), k >= 3.
AdjointCochain psi_top(int k, int n);

/// Psi_{i,j,s} on m0(n) from the D-1 series of omega(e^i ^ e^j ^ e^(j+1)):
/// 2 <= i < j, i+2j+1+s <= n, s >= 0 (or s = -1 with i + 2j = n).
AdjointCochain psi3(int i, int j, int s, int n);

/// Chevalley-Eilenberg differential with adjoint coefficients over `base`.
/// Uses the standard signs (-1)^(i+1) and (-1)^(i+j).
AdjointCochain d_adjoint(const AdjointCochain& c, const LieStructure& base);

/// [a,b](x,y,z) = a(b(x,y),z) + a(b(y,z),x) + a(b(z,x),y) + (a <-> b)
AdjointCochain nr_bracket22(const AdjointCochain& a, const AdjointCochain& b);

/// Sum of c_i * cochain_i; all terms must share degree, weight and bound.
AdjointCochain linear_combination(const std::vector<std::pair<Scalar, AdjointCochain>>& terms);

struct Label3 {
	int j, q, r;
	friend auto operator<=>(const Label3&, const Label3&) = default;
};

/// Coordinates of an adapted closed 3-cochain in the Psi_{j,q,r} basis, read
/// off as the coefficient of e_{j+2q+1+r} in phi(e_j, e_q, e_(q+1)).
/// Throws std::invalid_argument naming the offending tuple when phi does
/// not vanish on e1 or is not closed over m0(bound).
std::map<Label3, Scalar> decompose3(const AdjointCochain& phi);

/// sum coeff * Psi_{j,q,r} on m0(n).
AdjointCochain reconstruct3(const std::map<Label3, Scalar>& coefficients, int weight, int n);

}  // namespace mfil
