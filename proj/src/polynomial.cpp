#include "mfil/polynomial.hpp"

#include <set>
#include <stdexcept>

namespace mfil {

DeformVariable DeformVariable::pair(int j, int s)
{
	if (j < 2 || s < 0)
		throw std::invalid_argument("x_{j,s} requires j >= 2 and s >= 0");
	return {false, j, s};
}

DeformVariable DeformVariable::top() { return {true, 0, -1}; }

std::string to_string(const DeformVariable& v)
{
	if (v.is_top())
		return "x";
	return "x_{" + std::to_string(v.j()) + "," + std::to_string(v.s()) + "}";
}

Monomial::Monomial(const DeformVariable& v, int power)
{
	if (power < 0)
		throw std::invalid_argument("negative power");
	if (power > 0)
		factors_.emplace_back(v, power);
}

int Monomial::degree() const
{
	int d = 0;
	for (const auto& [v, p] : factors_)
		d += p;
	return d;
}

int Monomial::weight() const
{
	int w = 0;
	for (const auto& [v, p] : factors_)
		w += p * v.weight();
	return w;
}

int Monomial::power_of(const DeformVariable& v) const
{
	for (const auto& [u, p] : factors_)
		if (u == v)
			return p;
	return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
	Monomial out;
	auto p = a.factors_.begin();
	auto q = b.factors_.begin();
	while (p != a.factors_.end() || q != b.factors_.end()) {
		if (q == b.factors_.end() || (p != a.factors_.end() && p->first < q->first)) {
			out.factors_.push_back(*p++);
		} else if (p == a.factors_.end() || q->first < p->first) {
			out.factors_.push_back(*q++);
		} else {
			out.factors_.emplace_back(p->first, p->second + q->second);
			++p;
			++q;
		}
	}
	return out;
}

DeformPolynomial DeformPolynomial::variable(const DeformVariable& v, const Integer& coeff)
{
	DeformPolynomial p;
	p.add(Monomial(v), coeff);
	return p;
}

DeformPolynomial DeformPolynomial::constant(const Integer& c)
{
	DeformPolynomial p;
	p.add(Monomial{}, c);
	return p;
}

void DeformPolynomial::add(const Monomial& m, const Integer& coeff)
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

Integer DeformPolynomial::coefficient(const Monomial& m) const
{
	auto it = terms_.find(m);
	return it == terms_.end() ? Integer(0) : it->second;
}

std::vector<DeformVariable> DeformPolynomial::variables() const
{
	std::set<DeformVariable> seen;
	for (const auto& [m, c] : terms_)
		for (const auto& [v, p] : m.factors())
			seen.insert(v);
	return {seen.begin(), seen.end()};
}

Scalar DeformPolynomial::evaluate(const std::function<Scalar(const DeformVariable&)>& value) const
{
	Scalar total = 0;
	for (const auto& [m, c] : terms_) {
		Scalar term = c;
		for (const auto& [v, p] : m.factors()) {
			Scalar x = value(v);
			for (int i = 0; i < p; ++i)
				term *= x;
		}
		total += term;
	}
	return total;
}

DeformPolynomial DeformPolynomial::substitute(const DeformVariable& v, const Integer& c) const
{
	DeformPolynomial out;
	for (const auto& [m, coeff] : terms_) {
		Monomial rest;
		Integer k = coeff;
		for (const auto& [u, p] : m.factors()) {
			if (u == v) {
				for (int i = 0; i < p; ++i)
					k *= c;
			} else {
				rest = rest * Monomial(u, p);
			}
		}
		out.add(rest, k);
	}
	return out;
}

DeformPolynomial DeformPolynomial::restrict_to(const std::function<bool(const DeformVariable&)>& keep) const
{
	DeformPolynomial out;
	for (const auto& [m, c] : terms_) {
		bool ok = true;
		for (const auto& [v, p] : m.factors())
			ok = ok && keep(v);
		if (ok)
			out.add(m, c);
	}
	return out;
}

DeformPolynomial& DeformPolynomial::operator+=(const DeformPolynomial& other)
{
	for (const auto& [m, c] : other.terms_)
		add(m, c);
	return *this;
}

DeformPolynomial& DeformPolynomial::operator-=(const DeformPolynomial& other)
{
	for (const auto& [m, c] : other.terms_)
		add(m, -c);
	return *this;
}

DeformPolynomial& DeformPolynomial::operator*=(const Integer& factor)
{
	if (factor == 0)
		terms_.clear();
	for (auto& [m, c] : terms_)
		c *= factor;
	return *this;
}

DeformPolynomial operator*(const DeformPolynomial& a, const DeformPolynomial& b)
{
	DeformPolynomial out;
	for (const auto& [ma, ca] : a.terms_)
		for (const auto& [mb, cb] : b.terms_)
			out.add(ma * mb, ca * cb);
	return out;
}

std::string render(const DeformPolynomial& p, const std::function<std::string(const DeformVariable&)>& name,
                   bool compact)
{
	if (p.is_zero())
		return "0";
	std::string out;
	for (const auto& [m, c] : p.terms()) {
		if (!out.empty())
			out += compact ? (c < 0 ? "-" : "+") : (c < 0 ? " - " : " + ");
		else if (c < 0)
			out += "-";
		Integer mag = abs(c);
		std::string body;
		for (const auto& [v, pw] : m.factors()) {
			if (!body.empty())
				body += "*";
			body += name(v);
			if (pw > 1)
				body += "^" + std::to_string(pw);
		}
		if (body.empty())
			out += mag.get_str();
		else
			out += (mag != 1 ? mag.get_str() + "*" : std::string()) + body;
	}
	return out;
}

std::string to_string(const DeformPolynomial& p)
{
	return render(p, [](const DeformVariable& v) { return to_string(v); });
}

}  // namespace mfil
