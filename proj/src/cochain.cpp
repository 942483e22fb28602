#include "mfil/cochain.hpp"

#include "mfil/combinatorics.hpp"
#include "mfil/exterior.hpp"
#include "mfil/fixtures.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace mfil {

namespace {

std::string tuple_text(std::span<const int> t)
{
	std::string s = "(";
	for (std::size_t p = 0; p < t.size(); ++p)
		s += (p ? "," : "") + std::to_string(t[p]);
	return s + ")";
}

}  // namespace

AdjointCochain::AdjointCochain(int degree, int weight, int bound, Rule rule)
    : degree_(degree), weight_(weight), bound_(bound), rule_(std::move(rule)), lazy_(std::make_shared<Lazy>())
{
	if (degree < 1)
		throw std::invalid_argument("cochain degree must be >= 1");
	if (bound < 1)
		throw std::invalid_argument("cochain dimension bound must be positive");
}

LieElement AdjointCochain::raw(std::span<const int> increasing) const
{
	if (static_cast<int>(increasing.size()) != degree_)
		throw std::invalid_argument("cochain of degree " + std::to_string(degree_) + " evaluated on " +
		                            tuple_text(increasing));
	return rule_(increasing);
}

AdjointCochain::Probe AdjointCochain::probe(std::span<const int> increasing) const
{
	Probe p{{}, false};
	const auto value = raw(increasing);
	for (const auto& [i, c] : value.terms()) {
		if (i > bound_)
			p.truncated = true;
		else
			p.value.add(i, c);
	}
	return p;
}

namespace {

// Sorts in place; returns the permutation sign or 0 on a repeated index.
int sort_with_sign(std::vector<int>& v)
{
	int sign = 1;
	for (std::size_t a = 1; a < v.size(); ++a)
		for (std::size_t b = a; b > 0 && v[b - 1] > v[b]; --b) {
			std::swap(v[b - 1], v[b]);
			sign = -sign;
		}
	if (std::adjacent_find(v.begin(), v.end()) != v.end())
		return 0;
	return sign;
}

}  // namespace

LieElement AdjointCochain::at(std::span<const int> indices) const
{
	std::vector<int> v(indices.begin(), indices.end());
	for (int i : v)
		if (i < 1 || i > bound_)
			throw std::out_of_range("basis index " + std::to_string(i) + " outside the cochain bound");
	int sign = sort_with_sign(v);
	if (sign == 0)
		return {};
	auto value = probe(v).value;
	if (sign < 0)
		value *= Scalar(-1);
	return value;
}

LieElement AdjointCochain::at(std::initializer_list<int> indices) const
{
	return at(std::span<const int>(indices.begin(), indices.size()));
}

namespace {

template <typename Eval>
LieElement expand_multilinear(std::span<const LieElement> args, int bound, Eval&& eval)
{
	LieElement out;
	std::vector<int> idx(args.size());
	std::vector<int> sorted;
	auto rec = [&](auto&& self, std::size_t p, const Scalar& coeff) -> void {
		if (p == args.size()) {
			sorted = idx;
			int sign = sort_with_sign(sorted);
			if (sign != 0)
				out += (sign * coeff) * eval(std::span<const int>(sorted));
			return;
		}
		for (const auto& [i, c] : args[p].terms()) {
			if (i > bound)
				throw std::out_of_range("argument index " + std::to_string(i) + " outside the cochain bound");
			idx[p] = i;
			self(self, p + 1, coeff * c);
		}
	};
	rec(rec, 0, Scalar(1));
	return out;
}

}  // namespace

LieElement AdjointCochain::apply(std::span<const LieElement> args) const
{
	if (static_cast<int>(args.size()) != degree_)
		throw std::invalid_argument("wrong number of cochain arguments");
	return expand_multilinear(args, bound_, [&](std::span<const int> t) { return probe(t).value; });
}

LieElement AdjointCochain::apply_raw(std::span<const LieElement> args) const
{
	if (static_cast<int>(args.size()) != degree_)
		throw std::invalid_argument("wrong number of cochain arguments");
	return expand_multilinear(args, bound_, [&](std::span<const int> t) { return raw(t); });
}

bool AdjointCochain::truncated() const
{
	std::call_once(lazy_->once, [&] {
		for_each_increasing(degree_, bound_, [&](std::span<const int> t) {
			if (!lazy_->truncated && probe(t).truncated)
				lazy_->truncated = true;
		});
	});
	return lazy_->truncated;
}

bool AdjointCochain::is_zero() const
{
	bool zero = true;
	for_each_increasing(degree_, bound_, [&](std::span<const int> t) {
		if (zero && !probe(t).value.is_zero())
			zero = false;
	});
	return zero;
}

void for_each_increasing(int q, int n, const std::function<void(std::span<const int>)>& f)
{
	if (q < 1 || q > n)
		return;
	std::vector<int> t(q);
	for (int p = 0; p < q; ++p)
		t[p] = p + 1;
	while (true) {
		f(t);
		int p = q - 1;
		while (p >= 0 && t[p] == n - (q - 1 - p))
			--p;
		if (p < 0)
			return;
		++t[p];
		for (int r = p + 1; r < q; ++r)
			t[r] = t[r - 1] + 1;
	}
}

Integer psi2_coefficient(int j, int k, int m)
{
	if (k < 2 || k > j || m <= j)
		return 0;
	Integer c = binomial(m - j - 1, j - k);
	return (j - k) % 2 == 0 ? c : Integer(-c);
}

namespace {

void check_psi2_range(int j, int s, int n)
{
	if (j < 2)
		throw std::invalid_argument("Psi_{j,s} requires j >= 2");
	if (s == -1) {
		if (n != 2 * j)
			throw std::invalid_argument("Psi_{j,-1} exists only in dimension 2j");
		return;
	}
	if (s < 0)
		throw std::invalid_argument("Psi_{j,s} requires s >= -1");
	if (2 * j + 1 + s > n)
		throw std::invalid_argument("Psi_{j,s} requires 2j+1+s <= n");
}

void check_psi3_range(int i, int j, int s, int n)
{
	if (i < 2 || j <= i)
		throw std::invalid_argument("Psi_{i,j,s} requires 2 <= i < j");
	if (s == -1) {
		if (i + 2 * j != n)
			throw std::invalid_argument("Psi_{i,j,-1} requires i + 2j = n");
		return;
	}
	if (s < 0)
		throw std::invalid_argument("Psi_{i,j,s} requires s >= -1");
	if (i + 2 * j + 1 + s > n)
		throw std::invalid_argument("Psi_{i,j,s} requires i+2j+1+s <= n");
}

// D-1^t applied to a closed form, extended on demand. Safe to share
// between threads.
class SeriesCache {
public:
	explicit SeriesCache(ExtForm start) { forms_.push_back(std::move(start)); }

	Scalar coefficient(int t, const ExtMonomial& m)
	{
		std::lock_guard lock(mutex_);
		while (static_cast<int>(forms_.size()) <= t)
			forms_.push_back(dminus1(forms_.back()));
		return forms_[t].coefficient(m);
	}

private:
	std::mutex mutex_;
	std::deque<ExtForm> forms_;
};

// Rule for sum_t e_{leading+t} (x) D-1^t(start), where start has weight
// `leading - weight`.
AdjointCochain::Rule series_rule(ExtForm start, int start_weight, int weight)
{
	auto cache = std::make_shared<SeriesCache>(std::move(start));
	return [cache, start_weight, weight](std::span<const int> t) -> LieElement {
		int sum = 0;
		for (int i : t)
			sum += i;
		int steps = sum - start_weight;
		if (steps < 0 || t.front() == 1)
			return {};
		Scalar c = cache->coefficient(steps, ExtMonomial(std::vector<int>(t.begin(), t.end())));
		if (c == 0)
			return {};
		return LieElement::basis(sum + weight, c);
	};
}

}  // namespace

LieElement psi2_value(int j, int s, int n, int k, int m)
{
	if (k == 1)
		throw std::invalid_argument("adapted cocycles vanish on e1; psi2_value rejects k = 1");
	if (k < 2 || m <= k)
		throw std::invalid_argument("psi2_value requires 2 <= k < m");
	if (s == -1 && n != 2 * j)
		throw std::invalid_argument("Psi_{j,-1} exists only in dimension 2j");
	if (s < -1)
		throw std::invalid_argument("Psi_{j,s} requires s >= -1");
	const int target = m + k + s;
	if (target > n)
		return {};
	Integer c = psi2_coefficient(j, k, m);
	if (c == 0)
		return {};
	return LieElement::basis(target, Scalar(c));
}

AdjointCochain psi2(int j, int s, int n, Construction how)
{
	check_psi2_range(j, s, n);
	if (how == Construction::series)
		return {2, s, n, series_rule(omega({j}), 2 * j + 1, s)};
	return {2, s, n, [j, s](std::span<const int> t) -> LieElement {
		        Integer c = psi2_coefficient(j, t[0], t[1]);
		        if (c == 0)
			        return {};
		        return LieElement::basis(t[0] + t[1] + s, Scalar(c));
	        }};
}

AdjointCochain psi_top(int k, int n)
{
	if (n % 2 != 0)
		throw std::invalid_argument("Psi_{k,-1} needs an even dimension bound");
	if (n != 2 * k || k < 3)
		throw std::invalid_argument("Psi_{k,-1} requires k >= 3 and n = 2k");
	return psi2(k, -1, n);
}

AdjointCochain psi3(int i, int j, int s, int n)
{
	check_psi3_range(i, j, s, n);
	return {3, s, n, series_rule(omega({i, j}), i + 2 * j + 1, s)};
}

AdjointCochain d_adjoint(const AdjointCochain& c, const LieStructure& base)
{
	if (c.degree() > 3)
		throw std::invalid_argument("d_adjoint supports cochains of degree <= 3");
	if (base.dimension() != c.bound())
		throw std::invalid_argument("d_adjoint: base dimension differs from the cochain bound");
	auto shared_base = std::make_shared<const LieStructure>(base);
	const int q = c.degree();
	return {q + 1, c.weight(), c.bound(), [c, shared_base, q](std::span<const int> x) -> LieElement {
		        const LieStructure& g = *shared_base;
		        LieElement out;
		        std::vector<int> rest;
		        // sum_i (-1)^(i+1) [X_i, c(..., X_i^, ...)]
		        for (int i = 0; i <= q; ++i) {
			        rest.clear();
			        for (int p = 0; p <= q; ++p)
				        if (p != i)
					        rest.push_back(x[p]);
			        auto term = bracket_eval(g, LieElement::basis(x[i]), c.at(rest));
			        out += (i % 2 == 0 ? Scalar(1) : Scalar(-1)) * term;
		        }
		        // sum_{i<j} (-1)^(i+j) c([X_i, X_j], ..., X_i^, ..., X_j^, ...)
		        std::vector<LieElement> args;
		        for (int i = 0; i <= q; ++i)
			        for (int j = i + 1; j <= q; ++j) {
				        auto br = g.bracket(x[i], x[j]);
				        if (br.is_zero())
					        continue;
				        args.clear();
				        args.push_back(std::move(br));
				        for (int p = 0; p <= q; ++p)
					        if (p != i && p != j)
						        args.push_back(LieElement::basis(x[p]));
				        out += ((i + j) % 2 == 0 ? Scalar(1) : Scalar(-1)) * c.apply(args);
			        }
		        return out;
	        }};
}

AdjointCochain nr_bracket22(const AdjointCochain& a, const AdjointCochain& b)
{
	if (a.degree() != 2 || b.degree() != 2)
		throw std::invalid_argument("nr_bracket22 needs two 2-cochains");
	if (a.bound() != b.bound())
		throw std::invalid_argument("nr_bracket22: dimension bounds differ");
	return {3, a.weight() + b.weight(), a.bound(), [a, b](std::span<const int> t) -> LieElement {
		        const int x = t[0], y = t[1], z = t[2];
		        auto half = [&](const AdjointCochain& outer, const AdjointCochain& inner) {
			        LieElement out;
			        const int cyc[3][3] = {{x, y, z}, {y, z, x}, {z, x, y}};
			        for (const auto& c : cyc) {
				        LieElement args[2] = {inner.at({c[0], c[1]}), LieElement::basis(c[2])};
				        out += outer.apply_raw(args);
			        }
			        return out;
		        };
		        return half(a, b) + half(b, a);
	        }};
}

AdjointCochain linear_combination(const std::vector<std::pair<Scalar, AdjointCochain>>& terms)
{
	if (terms.empty())
		throw std::invalid_argument("linear_combination of nothing");
	const auto& first = terms.front().second;
	for (const auto& [c, t] : terms)
		if (t.degree() != first.degree() || t.weight() != first.weight() || t.bound() != first.bound())
			throw std::invalid_argument("linear_combination: mismatched degree, weight or bound");
	return {first.degree(), first.weight(), first.bound(), [terms](std::span<const int> t) {
		        LieElement out;
		        for (const auto& [c, cochain] : terms)
			        out += c * cochain.raw(t);
		        return out;
	        }};
}

std::map<Label3, Scalar> decompose3(const AdjointCochain& phi)
{
	if (phi.degree() != 3)
		throw std::invalid_argument("decompose3 needs a 3-cochain");
	if (phi.weight() < -1)
		throw std::invalid_argument("decompose3 needs weight >= -1");
	const int n = phi.bound();
	for (int a = 2; a <= n; ++a)
		for (int b = a + 1; b <= n; ++b)
			if (!phi.at({1, a, b}).is_zero())
				throw std::invalid_argument("decompose3: nonzero on (1," + std::to_string(a) + "," +
				                            std::to_string(b) + ")");
	auto d = d_adjoint(phi, make_fixture(FixtureId::m0, {.n = n}));
	for_each_increasing(4, n, [&](std::span<const int> t) {
		if (!d.at(t).is_zero())
			throw std::invalid_argument("decompose3: not closed, d(phi)" + tuple_text(t) + " != 0");
	});

	std::map<Label3, Scalar> out;
	for (int j = 2; j <= n; ++j)
		for (int q = j + 1; q + 1 <= n; ++q)
			for (const auto value = phi.at({j, q, q + 1}); const auto& [target, c] : value.terms())
				out[{j, q, target - (j + 2 * q + 1)}] = c;
	return out;
}

AdjointCochain reconstruct3(const std::map<Label3, Scalar>& coefficients, int weight, int n)
{
	std::vector<std::pair<Scalar, AdjointCochain>> terms;
	for (const auto& [label, c] : coefficients) {
		if (label.r != weight)
			throw std::invalid_argument("reconstruct3: coefficient of a different weight");
		terms.emplace_back(c, psi3(label.j, label.q, label.r, n));
	}
	if (terms.empty())
		return {3, weight, n, [](std::span<const int>) { return LieElement{}; }};
	return linear_combination(terms);
}

}  // namespace mfil
