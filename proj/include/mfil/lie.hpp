#pragma once

// Sparse structure constants of graded Lie algebras on a 1-based basis
// e_1, e_2, ... with exact rational coefficients.

#include "mfil/scalar.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mfil {

/// Finite linear combination of basis vectors. Zero coefficients are never stored.
class LieElement {
public:
	LieElement() = default;

	static LieElement basis(int index, const Scalar& coeff = 1);

	void add(int index, const Scalar& coeff);

	const std::map<int, Scalar>& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	Scalar coefficient(int index) const;
	/// Largest index with a nonzero coefficient, 0 for the zero element.
	int max_index() const;

	LieElement& operator+=(const LieElement& other);
	LieElement& operator-=(const LieElement& other);
	LieElement& operator*=(const Scalar& factor);

	friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
	friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
	friend LieElement operator-(LieElement a) { return a *= Scalar(-1); }
	friend LieElement operator*(const Scalar& f, LieElement a) { return a *= f; }
	friend bool operator==(const LieElement&, const LieElement&) = default;

private:
	std::map<int, Scalar> terms_;
};

std::string to_string(const LieElement& value);

/// A finite-dimensional algebra, or a window e_1..e_N onto an infinite one.
enum class Extent { finite, cutoff };

/// Structure constants stored only for i < j; [e_j, e_i] = -[e_i, e_j] is
/// implied. Immutable after construction.
class LieStructure {
public:
	using Relations = std::map<std::pair<int, int>, LieElement>;

	/// Targets above `dimension` are dropped and recorded by truncated().
	/// Keys must satisfy 1 <= i < j <= dimension.
	LieStructure(std::string name, int dimension, Extent extent, Relations relations);

	const std::string& name() const { return name_; }
	int dimension() const { return dimension_; }
	Extent extent() const { return extent_; }
	bool truncated() const { return truncated_; }
	const Relations& relations() const { return relations_; }

	/// [e_i, e_j] for any pair of in-range indices.
	LieElement bracket(int i, int j) const;

private:
	std::string name_;
	int dimension_;
	Extent extent_;
	bool truncated_ = false;
	Relations relations_;
};

/// Bilinear extension of the stored table. Throws std::out_of_range on an
/// index above the dimension bound.
LieElement bracket_eval(const LieStructure& s, const LieElement& a, const LieElement& b);

/// [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
LieElement jacobi_defect(const LieStructure& s, int i, int j, int k);

}  // namespace mfil
