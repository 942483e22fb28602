#include "mfil/lie.hpp"

#include <stdexcept>

namespace mfil {

LieElement LieElement::basis(int index, const Scalar& coeff)
{
	LieElement e;
	e.add(index, coeff);
	return e;
}

void LieElement::add(int index, const Scalar& coeff)
{
	if (index < 1)
		throw std::invalid_argument("basis index must be >= 1");
	if (coeff == 0)
		return;
	auto [it, inserted] = terms_.try_emplace(index, coeff);
	if (!inserted) {
		it->second += coeff;
		if (it->second == 0)
			terms_.erase(it);
	}
}

Scalar LieElement::coefficient(int index) const
{
	auto it = terms_.find(index);
	return it == terms_.end() ? Scalar(0) : it->second;
}

int LieElement::max_index() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

LieElement& LieElement::operator+=(const LieElement& other)
{
	for (const auto& [i, c] : other.terms_)
		add(i, c);
	return *this;
}

LieElement& LieElement::operator-=(const LieElement& other)
{
	for (const auto& [i, c] : other.terms_)
		add(i, -c);
	return *this;
}

LieElement& LieElement::operator*=(const Scalar& factor)
{
	if (factor == 0) {
		terms_.clear();
		return *this;
	}
	for (auto& [i, c] : terms_)
		c *= factor;
	return *this;
}

std::string to_string(const LieElement& value)
{
	if (value.is_zero())
		return "0";
	std::string out;
	for (const auto& [i, c] : value.terms()) {
		std::string coeff = to_string(c);
		if (!out.empty())
			out += c < 0 ? " - " : " + ";
		else if (c < 0)
			out += "-";
		Scalar mag = abs(c);
		if (mag != 1)
			out += to_string(mag) + "*";
		out += "e" + std::to_string(i);
	}
	return out;
}

LieStructure::LieStructure(std::string name, int dimension, Extent extent, Relations relations)
    : name_(std::move(name)), dimension_(dimension), extent_(extent)
{
	if (dimension < 1)
		throw std::invalid_argument("dimension bound must be positive");
	for (auto& [key, value] : relations) {
		auto [i, j] = key;
		if (i < 1 || i >= j || j > dimension)
			throw std::invalid_argument("relation keys must satisfy 1 <= i < j <= dimension");
		LieElement kept;
		for (const auto& [t, c] : value.terms()) {
			if (t > dimension)
				truncated_ = true;
			else
				kept.add(t, c);
		}
		if (!kept.is_zero())
			relations_.emplace(key, std::move(kept));
	}
}

LieElement LieStructure::bracket(int i, int j) const
{
	if (i < 1 || j < 1 || i > dimension_ || j > dimension_)
		throw std::out_of_range("basis index outside the dimension bound of " + name_);
	if (i == j)
		return {};
	if (i > j)
		return -bracket(j, i);
	auto it = relations_.find({i, j});
	return it == relations_.end() ? LieElement{} : it->second;
}

LieElement bracket_eval(const LieStructure& s, const LieElement& a, const LieElement& b)
{
	LieElement out;
	for (const auto& [i, ci] : a.terms())
		for (const auto& [j, cj] : b.terms()) {
			if (i == j) {
				if (i > s.dimension())
					throw std::out_of_range("basis index outside the dimension bound");
				continue;
			}
			out += (ci * cj) * s.bracket(i, j);
		}
	return out;
}

LieElement jacobi_defect(const LieStructure& s, int i, int j, int k)
{
	auto ei = LieElement::basis(i), ej = LieElement::basis(j), ek = LieElement::basis(k);
	return bracket_eval(s, s.bracket(i, j), ek) + bracket_eval(s, s.bracket(j, k), ei) +
	       bracket_eval(s, s.bracket(k, i), ej);
}

}  // namespace mfil
