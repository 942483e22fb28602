#pragma once

// Test-side reference implementations and generators. Nothing here calls
// the library routine it is used to check.

#include "mfil/cochain.hpp"
#include "mfil/exterior.hpp"
#include "mfil/polynomial.hpp"

#include <cctype>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace mfil::test {

// C(a,b) as a falling product; zero outside 0 <= b <= a.
inline Integer naive_binomial(long a, long b)
{
	if (a < 0 || b < 0 || b > a)
		return 0;
	Integer num = 1, den = 1;
	for (long i = 0; i < b; ++i) {
		num *= a - i;
		den *= i + 1;
	}
	return num / den;
}

// Partitions of k into exactly q parts, by listing non-increasing tuples.
inline std::int64_t brute_partitions(int q, long k)
{
	std::int64_t count = 0;
	auto rec = [&](auto&& self, int left, long rest, long cap) -> void {
		if (left == 0) {
			count += rest == 0;
			return;
		}
		for (long part = std::min(cap, rest); part >= 1; --part)
			if (part * left >= rest)
				self(self, left - 1, rest - part, part);
	};
	if (k >= 0)
		rec(rec, q, k, k);
	return count;
}

// Row rank over Q by Gaussian elimination.
inline int rank(std::vector<std::vector<Scalar>> rows)
{
	int r = 0;
	const std::size_t cols = rows.empty() ? 0 : rows[0].size();
	for (std::size_t c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
		std::size_t pivot = r;
		while (pivot < rows.size() && rows[pivot][c] == 0)
			++pivot;
		if (pivot == rows.size())
			continue;
		std::swap(rows[r], rows[pivot]);
		for (std::size_t i = 0; i < rows.size(); ++i) {
			if (i == static_cast<std::size_t>(r) || rows[i][c] == 0)
				continue;
			Scalar f = rows[i][c] / rows[r][c];
			for (std::size_t k = c; k < cols; ++k)
				rows[i][k] -= f * rows[r][k];
		}
		++r;
	}
	return r;
}

// Reads hand-written polynomials such as "-3x_{3,0}^2+x_{3,0}x_{2,0}",
// "5x_3^2-4x_2x_4" (single index: s = default_s) and "2x x_{2,4}" (bare x
// is the even-dimension marker). Like terms are combined.
inline DeformPolynomial parse_printed(const std::string& text, int default_s = 0)
{
	std::string s;
	for (char c : text)
		if (c != ' ' && c != '*')
			s += c;
	std::size_t p = 0;
	auto number = [&] {
		long v = 0;
		while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p])))
			v = v * 10 + (s[p++] - '0');
		return v;
	};
	DeformPolynomial out;
	while (p < s.size()) {
		int sign = 1;
		if (s[p] == '+' || s[p] == '-')
			sign = s[p++] == '-' ? -1 : 1;
		long coeff = 1;
		if (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p])))
			coeff = number();
		Monomial m;
		while (p < s.size() && s[p] == 'x') {
			++p;
			DeformVariable v = DeformVariable::top();
			if (p < s.size() && s[p] == '_') {
				++p;
				if (s[p] == '{') {
					++p;
					int j = static_cast<int>(number());
					if (s[p++] != ',')
						throw std::invalid_argument("bad variable in " + text);
					int sv = static_cast<int>(number());
					if (s[p++] != '}')
						throw std::invalid_argument("bad variable in " + text);
					v = DeformVariable::pair(j, sv);
				} else {
					v = DeformVariable::pair(static_cast<int>(number()), default_s);
				}
			}
			int power = 1;
			if (p < s.size() && s[p] == '^') {
				++p;
				power = static_cast<int>(number());
			}
			m = m * Monomial(v, power);
		}
		out.add(m, sign * coeff);
		if (p < s.size() && s[p] != '+' && s[p] != '-')
			throw std::invalid_argument("cannot parse '" + text + "' at " + std::to_string(p));
	}
	return out;
}

// Small rationals with numerator and denominator bounded by 7.
inline Scalar small_rational(std::mt19937& rng, bool nonzero = false)
{
	std::uniform_int_distribution<int> num(-7, 7), den(1, 7);
	int a = num(rng);
	while (nonzero && a == 0)
		a = num(rng);
	return make_scalar(a, den(rng));
}

// A form with up to `terms` monomials of degree `degree` in e^2..e^top.
inline ExtForm random_form(std::mt19937& rng, int degree, int top, int terms)
{
	ExtForm f;
	std::uniform_int_distribution<int> idx(2, top);
	for (int t = 0; t < terms; ++t) {
		std::vector<int> v;
		for (int d = 0; d < degree; ++d)
			v.push_back(idx(rng));
		f += ExtForm::monomial(v, small_rational(rng));
	}
	return f;
}

// A homogeneous cochain with pseudo-random values fixed by the seed.
inline AdjointCochain random_cochain(int degree, int weight, int bound, unsigned seed)
{
	return {degree, weight, bound, [=](std::span<const int> t) {
		        std::seed_seq seq{seed, static_cast<unsigned>(t[0]), static_cast<unsigned>(t.size() > 1 ? t[1] : 0),
		                          static_cast<unsigned>(t.size() > 2 ? t[2] : 0)};
		        std::mt19937 rng(seq);
		        int sum = weight;
		        for (int i : t)
			        sum += i;
		        return LieElement::basis(sum, small_rational(rng));
	        }};
}

}  // namespace mfil::test
