#pragma once

#include "mfil/lie.hpp"

#include <string_view>

namespace mfil {

enum class FixtureId { m0, m1, m2, mk, L1, Lk, lacuna_of };

/// Throws std::invalid_argument for an unknown name.
FixtureId parse_fixture_id(std::string_view name);
std::string_view fixture_name(FixtureId id);

struct FixtureParams {
	int n = 0;  ///< dimension bound
	int k = 0;  ///< for mk and Lk
	int s = 0;  ///< lacuna width for lacuna_of
	FixtureId base = FixtureId::L1;  ///< algebra the lacuna subalgebra is cut from
};

/// Named algebras, truncated at the dimension bound:
///   m0        [e1,ei] = e(i+1)
///   m1 (n=2k) m0 plus [ej,e(2k+1-j)] = (-1)^(j+k) e(2k), 2 <= j <= k
///   m2        m0 plus [e2,ej] = e(j+2)
///   mk        [e1,ei] = e(i+1) and [ek,ei] = e(k+i) on e1, ek, e(k+1), ...
///   L1, Lk    [ei,ej] = (j-i) e(i+j) on e1 (L1) or ek, e(k+1), ... (Lk)
///   lacuna_of the subalgebra spanned by e1 and e(s+2), e(s+3), ... of base
/// Indices keep their original labels; generators absent from an algebra
/// (e2..e(k-1) in mk, say) simply have zero brackets.
LieStructure make_fixture(FixtureId id, const FixtureParams& params);

}  // namespace mfil
