#pragma once

// Exterior algebra on the dual generators e^1, e^2, ... together with the
// weight-lowering derivation D1, its right inverse D-1, the differential
// of the trivial-coefficient complex of m0, and the closed forms omega(...).

#include "mfil/scalar.hpp"

#include <initializer_list>
#include <map>
#include <span>
#include <vector>

namespace mfil {

/// e^{i1} ^ ... ^ e^{iq} with i1 < ... < iq. The empty monomial is the unit.
class ExtMonomial {
public:
	ExtMonomial() = default;
	/// Requires strictly increasing indices >= 1.
	explicit ExtMonomial(std::vector<int> increasing);

	const std::vector<int>& indices() const { return indices_; }
	int degree() const { return static_cast<int>(indices_.size()); }
	int weight() const;
	bool contains(int index) const;

	friend auto operator<=>(const ExtMonomial&, const ExtMonomial&) = default;

private:
	std::vector<int> indices_;
};

class ExtForm {
public:
	ExtForm() = default;

	/// coeff * e^{i1} ^ ... ^ e^{iq} for indices in any order; the sorting
	/// permutation's sign goes into the coefficient, repeats give zero.
	static ExtForm monomial(std::span<const int> indices, const Scalar& coeff = 1);
	static ExtForm monomial(std::initializer_list<int> indices, const Scalar& coeff = 1);
	static ExtForm unit(const Scalar& coeff = 1);

	void add(const ExtMonomial& m, const Scalar& coeff);

	const std::map<ExtMonomial, Scalar>& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	Scalar coefficient(const ExtMonomial& m) const;
	bool contains_index(int index) const;

	ExtForm& operator+=(const ExtForm& other);
	ExtForm& operator-=(const ExtForm& other);
	ExtForm& operator*=(const Scalar& factor);
	friend ExtForm operator+(ExtForm a, const ExtForm& b) { return a += b; }
	friend ExtForm operator-(ExtForm a, const ExtForm& b) { return a -= b; }
	friend ExtForm operator*(const Scalar& f, ExtForm a) { return a *= f; }
	friend bool operator==(const ExtForm&, const ExtForm&) = default;

private:
	std::map<ExtMonomial, Scalar> terms_;
};

std::string to_string(const ExtForm& form);

ExtForm wedge(const ExtForm& a, const ExtForm& b);

/// Degree-zero derivation with e^2 -> 0, e^i -> e^(i-1). Throws
/// std::invalid_argument if e^1 occurs.
ExtForm d1(const ExtForm& f);

/// D-1(xi ^ e^i) = sum_l (-1)^l D1^l(xi) ^ e^(i+1+l), where e^i is the
/// largest factor of each monomial. Throws on e^1 and on degree-0 terms.
ExtForm dminus1(const ExtForm& f);

/// Anti-derivation with d e^1 = d e^2 = 0 and d e^i = e^1 ^ e^(i-1).
/// On e^1-free forms this is e^1 ^ D1.
ExtForm d_trivial(const ExtForm& f);

/// omega(e^{i1} ^ ... ^ e^{iq} ^ e^{iq+1}) for the prefix i1 < ... < iq,
/// all >= 2. Closed, of degree q+1 and weight i1 + ... + 2 iq + 1.
ExtForm omega(std::span<const int> prefix);
ExtForm omega(std::initializer_list<int> prefix);

}  // namespace mfil
