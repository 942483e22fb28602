#include "mfil/exterior.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mfil {

ExtMonomial::ExtMonomial(std::vector<int> increasing) : indices_(std::move(increasing))
{
	for (std::size_t p = 0; p < indices_.size(); ++p) {
		if (indices_[p] < 1)
			throw std::invalid_argument("dual index must be >= 1");
		if (p > 0 && indices_[p - 1] >= indices_[p])
			throw std::invalid_argument("monomial indices must be strictly increasing");
	}
}

int ExtMonomial::weight() const { return std::accumulate(indices_.begin(), indices_.end(), 0); }

bool ExtMonomial::contains(int index) const
{
	return std::binary_search(indices_.begin(), indices_.end(), index);
}

ExtForm ExtForm::monomial(std::span<const int> indices, const Scalar& coeff)
{
	std::vector<int> v(indices.begin(), indices.end());
	int sign = 1;
	// insertion sort, counting transpositions
	for (std::size_t a = 1; a < v.size(); ++a)
		for (std::size_t b = a; b > 0 && v[b - 1] > v[b]; --b) {
			std::swap(v[b - 1], v[b]);
			sign = -sign;
		}
	ExtForm f;
	if (std::adjacent_find(v.begin(), v.end()) != v.end())
		return f;
	f.add(ExtMonomial(std::move(v)), sign * coeff);
	return f;
}

ExtForm ExtForm::monomial(std::initializer_list<int> indices, const Scalar& coeff)
{
	return monomial(std::span<const int>(indices.begin(), indices.size()), coeff);
}

ExtForm ExtForm::unit(const Scalar& coeff)
{
	ExtForm f;
	f.add(ExtMonomial{}, coeff);
	return f;
}

void ExtForm::add(const ExtMonomial& m, const Scalar& coeff)
{
	if (coeff == 0)
		return;
	auto [it, inserted] = terms_.try_emplace(m, coeff);
	if (!inserted) {
		it->second += coeff;
		if (it->second == 0)
			terms_.erase(it);
	}
}

Scalar ExtForm::coefficient(const ExtMonomial& m) const
{
	auto it = terms_.find(m);
	return it == terms_.end() ? Scalar(0) : it->second;
}

bool ExtForm::contains_index(int index) const
{
	return std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first.contains(index); });
}

ExtForm& ExtForm::operator+=(const ExtForm& other)
{
	for (const auto& [m, c] : other.terms_)
		add(m, c);
	return *this;
}

ExtForm& ExtForm::operator-=(const ExtForm& other)
{
	for (const auto& [m, c] : other.terms_)
		add(m, -c);
	return *this;
}

ExtForm& ExtForm::operator*=(const Scalar& factor)
{
	if (factor == 0)
		terms_.clear();
	for (auto& [m, c] : terms_)
		c *= factor;
	return *this;
}

std::string to_string(const ExtForm& form)
{
	if (form.is_zero())
		return "0";
	std::string out;
	for (const auto& [m, c] : form.terms()) {
		if (!out.empty())
			out += c < 0 ? " - " : " + ";
		else if (c < 0)
			out += "-";
		Scalar mag = abs(c);
		std::string body;
		for (int i : m.indices())
			body += (body.empty() ? "e^" : "^e^") + std::to_string(i);
		if (body.empty())
			out += to_string(mag);
		else
			out += (mag != 1 ? to_string(mag) + "*" : std::string()) + body;
	}
	return out;
}

namespace {

// Product of two monomials as (sign, merged); sign 0 when they share an index.
std::pair<int, ExtMonomial> merge(const ExtMonomial& a, const ExtMonomial& b)
{
	const auto& x = a.indices();
	const auto& y = b.indices();
	std::vector<int> out;
	out.reserve(x.size() + y.size());
	long inversions = 0;
	std::size_t p = 0, q = 0;
	while (p < x.size() && q < y.size()) {
		if (x[p] == y[q])
			return {0, {}};
		if (x[p] < y[q]) {
			out.push_back(x[p++]);
		} else {
			inversions += static_cast<long>(x.size() - p);
			out.push_back(y[q++]);
		}
	}
	out.insert(out.end(), x.begin() + p, x.end());
	out.insert(out.end(), y.begin() + q, y.end());
	return {inversions % 2 == 0 ? 1 : -1, ExtMonomial(std::move(out))};
}

void reject_e1(const ExtForm& f, const char* op)
{
	if (f.contains_index(1))
		throw std::invalid_argument(std::string(op) + ": form contains e^1");
}

ExtForm d1_unchecked(const ExtForm& f)
{
	ExtForm out;
	for (const auto& [m, c] : f.terms()) {
		const auto& idx = m.indices();
		for (std::size_t p = 0; p < idx.size(); ++p) {
			if (idx[p] <= 2)
				continue;
			if (p > 0 && idx[p - 1] == idx[p] - 1)
				continue;  // repeated factor
			auto lowered = idx;
			--lowered[p];
			out.add(ExtMonomial(std::move(lowered)), c);
		}
	}
	return out;
}

}  // namespace

ExtForm wedge(const ExtForm& a, const ExtForm& b)
{
	ExtForm out;
	for (const auto& [ma, ca] : a.terms())
		for (const auto& [mb, cb] : b.terms()) {
			auto [sign, m] = merge(ma, mb);
			if (sign != 0)
				out.add(m, sign * ca * cb);
		}
	return out;
}

ExtForm d1(const ExtForm& f)
{
	reject_e1(f, "D1");
	return d1_unchecked(f);
}

ExtForm dminus1(const ExtForm& f)
{
	reject_e1(f, "D-1");
	ExtForm out;
	for (const auto& [m, c] : f.terms()) {
		if (m.degree() == 0)
			throw std::invalid_argument("D-1 is not defined on degree-0 terms");
		std::vector<int> head(m.indices().begin(), m.indices().end() - 1);
		const int top = m.indices().back();
		ExtForm xi;
		xi.add(ExtMonomial(std::move(head)), c);
		for (int l = 0; !xi.is_zero(); ++l) {
			out += wedge(xi, ExtForm::monomial({top + 1 + l}, l % 2 == 0 ? 1 : -1));
			xi = d1_unchecked(xi);
		}
	}
	return out;
}

ExtForm d_trivial(const ExtForm& f)
{
	ExtForm out;
	for (const auto& [m, c] : f.terms()) {
		const auto& idx = m.indices();
		for (std::size_t p = 0; p < idx.size(); ++p) {
			if (idx[p] <= 2)
				continue;
			ExtForm prefix = ExtForm::unit((p % 2 == 0) ? c : -c);
			prefix = wedge(prefix, ExtForm::monomial(std::span<const int>(idx.data(), p)));
			auto image = ExtForm::monomial({1, idx[p] - 1});
			auto suffix = ExtForm::monomial(std::span<const int>(idx.data() + p + 1, idx.size() - p - 1));
			out += wedge(wedge(prefix, image), suffix);
		}
	}
	return out;
}

ExtForm omega(std::span<const int> prefix)
{
	if (prefix.empty())
		throw std::invalid_argument("omega needs at least one index");
	for (std::size_t p = 0; p < prefix.size(); ++p) {
		if (prefix[p] < 2)
			throw std::invalid_argument("omega indices must be >= 2");
		if (p > 0 && prefix[p - 1] >= prefix[p])
			throw std::invalid_argument("omega indices must be strictly increasing");
	}
	const int q = static_cast<int>(prefix.size());
	const int weight = std::accumulate(prefix.begin(), prefix.end(), 0);
	// D1 lowers the weight by one; nothing survives below 2 + 3 + ... + (q+1).
	const int last_l = weight - q * (q + 3) / 2;
	const int tail = prefix.back() + 1;

	ExtForm out;
	ExtForm xi = ExtForm::monomial(prefix);
	for (int l = 0; l <= last_l; ++l) {
		out += wedge(xi, ExtForm::monomial({tail + l}, l % 2 == 0 ? 1 : -1));
		xi = d1_unchecked(xi);
	}
	return out;
}

ExtForm omega(std::initializer_list<int> prefix)
{
	return omega(std::span<const int>(prefix.begin(), prefix.size()));
}

}  // namespace mfil
