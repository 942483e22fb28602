#include "mfil/fixtures.hpp"

#include <stdexcept>
#include <string>

namespace mfil {

namespace {

constexpr std::pair<FixtureId, std::string_view> kNames[] = {
    {FixtureId::m0, "m0"}, {FixtureId::m1, "m1"}, {FixtureId::m2, "m2"},
    {FixtureId::mk, "mk"}, {FixtureId::L1, "L1"}, {FixtureId::Lk, "Lk"},
    {FixtureId::lacuna_of, "lacuna-of"},
};

// [e1, ei] = e(i+1) for first <= i. A window onto an infinite algebra also
// gets [e1, en] = e(n+1) so that the constructor records the cut.
void add_filiform_chain(LieStructure::Relations& rel, int n, int first, Extent extent)
{
	const int last = extent == Extent::cutoff ? n : n - 1;
	for (int i = first; i <= last; ++i)
		rel[{1, i}] += LieElement::basis(i + 1);
}

void add_witt(LieStructure::Relations& rel, int n, int first)
{
	for (int i = first; i <= n; ++i)
		for (int j = i + 1; j <= n; ++j)
			rel[{i, j}] += LieElement::basis(i + j, j - i);
}

std::string indexed_name(std::string_view stem, int n) { return std::string(stem) + "(" + std::to_string(n) + ")"; }

}  // namespace

FixtureId parse_fixture_id(std::string_view name)
{
	for (const auto& [id, text] : kNames)
		if (text == name)
			return id;
	throw std::invalid_argument("unknown fixture '" + std::string(name) + "'");
}

std::string_view fixture_name(FixtureId id)
{
	for (const auto& [fid, text] : kNames)
		if (fid == id)
			return text;
	return "?";
}

namespace {

struct Raw {
	std::string name;
	Extent extent;
	LieStructure::Relations relations;
};

Raw raw_fixture(FixtureId id, const FixtureParams& p)
{
	const int n = p.n;
	if (n < 1)
		throw std::invalid_argument("fixture dimension bound must be positive");
	LieStructure::Relations rel;
	switch (id) {
	case FixtureId::m0:
		add_filiform_chain(rel, n, 2, Extent::finite);
		return {indexed_name("m0", n), Extent::finite, std::move(rel)};
	case FixtureId::m1: {
		if (n % 2 != 0 || n < 6)
			throw std::invalid_argument("m1 requires an even dimension 2k >= 6");
		const int k = n / 2;
		add_filiform_chain(rel, n, 2, Extent::finite);
		for (int j = 2; j <= k; ++j)
			rel[{j, n + 1 - j}] += LieElement::basis(n, (j + k) % 2 == 0 ? 1 : -1);
		return {indexed_name("m1", n), Extent::finite, std::move(rel)};
	}
	case FixtureId::m2:
		add_filiform_chain(rel, n, 2, Extent::cutoff);
		for (int j = 3; j <= n; ++j)
			rel[{2, j}] += LieElement::basis(j + 2);
		return {indexed_name("m2", n), Extent::cutoff, std::move(rel)};
	case FixtureId::mk: {
		const int k = p.k;
		if (k < 2 || k > n)
			throw std::invalid_argument("mk requires 2 <= k <= dimension bound");
		add_filiform_chain(rel, n, k, Extent::cutoff);
		for (int i = k + 1; i <= n; ++i)
			rel[{k, i}] += LieElement::basis(k + i);
		return {"m" + std::to_string(k) + "(" + std::to_string(n) + ")", Extent::cutoff, std::move(rel)};
	}
	case FixtureId::L1:
		add_witt(rel, n, 1);
		return {indexed_name("L1", n), Extent::cutoff, std::move(rel)};
	case FixtureId::Lk: {
		const int k = p.k;
		if (k < 1 || k > n)
			throw std::invalid_argument("Lk requires 1 <= k <= dimension bound");
		add_witt(rel, n, k);
		return {"L" + std::to_string(k) + "(" + std::to_string(n) + ")", Extent::cutoff, std::move(rel)};
	}
	case FixtureId::lacuna_of: {
		if (p.s < 1)
			throw std::invalid_argument("lacuna width s must be >= 1");
		if (p.base != FixtureId::m0 && p.base != FixtureId::m2 && p.base != FixtureId::L1)
			throw std::invalid_argument("lacuna-of supports the bases m0, m2 and L1");
		// m0 is taken as a window here: the subalgebra of the infinite algebra is wanted.
		auto base = raw_fixture(p.base, {.n = n});
		if (p.base == FixtureId::m0)
			rel[{1, n}] += LieElement::basis(n + 1);
		auto kept = [&](int i) { return i == 1 || i >= p.s + 2; };
		for (auto& [key, value] : base.relations)
			if (kept(key.first) && kept(key.second))
				rel[key] += value;
		return {std::string(fixture_name(p.base)) + "(" + std::to_string(p.s) + ")[" + std::to_string(n) + "]",
		        Extent::cutoff, std::move(rel)};
	}
	}
	throw std::invalid_argument("unknown fixture");
}

}  // namespace

LieStructure make_fixture(FixtureId id, const FixtureParams& params)
{
	auto raw = raw_fixture(id, params);
	return {std::move(raw.name), params.n, raw.extent, std::move(raw.relations)};
}

}  // namespace mfil
