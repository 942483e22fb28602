#pragma once

// Integer polynomials in the deformation coordinates x_{j,s} and the
// even-dimension marker x.

#include "mfil/scalar.hpp"

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mfil {

/// x_{j,s} (j >= 2, s >= 0), or the marker x of weight -1.
class DeformVariable {
public:
	static DeformVariable pair(int j, int s);
	static DeformVariable top();

	bool is_top() const { return top_; }
	int j() const { return j_; }
	int s() const { return s_; }
	/// s for x_{j,s}; -1 for x.
	int weight() const { return top_ ? -1 : s_; }

	/// (j,s) lexicographically, x last.
	friend std::strong_ordering operator<=>(const DeformVariable& a, const DeformVariable& b)
	{
		if (a.top_ != b.top_)
			return a.top_ ? std::strong_ordering::greater : std::strong_ordering::less;
		if (auto c = a.j_ <=> b.j_; c != 0)
			return c;
		return a.s_ <=> b.s_;
	}
	friend bool operator==(const DeformVariable&, const DeformVariable&) = default;

private:
	DeformVariable(bool top, int j, int s) : top_(top), j_(j), s_(s) {}
	bool top_;
	int j_;
	int s_;
};

/// "x_{j,s}" or "x".
std::string to_string(const DeformVariable& v);

/// Product of variables with positive powers, sorted by variable.
class Monomial {
public:
	Monomial() = default;
	explicit Monomial(const DeformVariable& v, int power = 1);

	const std::vector<std::pair<DeformVariable, int>>& factors() const { return factors_; }
	int degree() const;
	/// Sum of variable weights, with multiplicity.
	int weight() const;
	int power_of(const DeformVariable& v) const;

	friend Monomial operator*(const Monomial& a, const Monomial& b);
	friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
	std::vector<std::pair<DeformVariable, int>> factors_;
};

class DeformPolynomial {
public:
	DeformPolynomial() = default;
	static DeformPolynomial variable(const DeformVariable& v, const Integer& coeff = 1);
	static DeformPolynomial constant(const Integer& c);

	void add(const Monomial& m, const Integer& coeff);

	const std::map<Monomial, Integer>& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	Integer coefficient(const Monomial& m) const;
	std::vector<DeformVariable> variables() const;

	Scalar evaluate(const std::function<Scalar(const DeformVariable&)>& value) const;
	/// Replaces every occurrence of v by the integer c.
	DeformPolynomial substitute(const DeformVariable& v, const Integer& c) const;
	/// Drops every monomial that mentions a variable rejected by keep.
	DeformPolynomial restrict_to(const std::function<bool(const DeformVariable&)>& keep) const;

	DeformPolynomial& operator+=(const DeformPolynomial& other);
	DeformPolynomial& operator-=(const DeformPolynomial& other);
	DeformPolynomial& operator*=(const Integer& factor);
	friend DeformPolynomial operator+(DeformPolynomial a, const DeformPolynomial& b) { return a += b; }
	friend DeformPolynomial operator-(DeformPolynomial a, const DeformPolynomial& b) { return a -= b; }
	friend DeformPolynomial operator-(DeformPolynomial a) { return a *= Integer(-1); }
	friend DeformPolynomial operator*(const Integer& f, DeformPolynomial a) { return a *= f; }
	friend DeformPolynomial operator*(const DeformPolynomial& a, const DeformPolynomial& b);
	friend bool operator==(const DeformPolynomial&, const DeformPolynomial&) = default;

private:
	std::map<Monomial, Integer> terms_;
};

/// Renders with the given variable names, e.g. "3*x_{3,0}^2 - x_{3,0}*x_{4,0}".
/// With compact set the separators carry no spaces.
std::string render(const DeformPolynomial& p, const std::function<std::string(const DeformVariable&)>& name,
                   bool compact = false);
std::string to_string(const DeformPolynomial& p);

}  // namespace mfil
