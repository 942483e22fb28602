#pragma once

// Brute-force checks that share nothing with the closed forms beyond the
// cocycle value table: symbolic expansion of [Psi,Psi], known solution
// families, residuals, and Jacobi scans of deformed brackets.

#include "mfil/lie.hpp"
#include "mfil/polynomial.hpp"
#include "mfil/system.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mfil {

/// Values of the deformation coordinates. Absent variables read as zero, as
/// does every x_{j,s} with s above weight_bound when one is set.
struct Assignment {
	std::map<DeformVariable, Scalar> values;
	std::optional<int> weight_bound;

	Scalar value(const DeformVariable& v) const;
	void set(const DeformVariable& v, const Scalar& value);
};

/// Variables the oracle sums over, and the dimension bound n of m0(n) in
/// which Psi is evaluated.
struct VariableInventory {
	int bound;
	std::vector<DeformVariable> variables;

	/// Every x_{j,s} with 2j+1+s <= n, plus x when top is set (n even).
	static VariableInventory for_dimension(int n, bool top = false);
	bool has_top() const;
};

/// Raised when the label lies beyond what the inventory can decide.
class InconclusiveOracle : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Coefficient of e_{j+2q+1+r} in (1/2)[Psi,Psi](e_j, e_q, e_(q+1)) for
/// Psi = sum x_v Psi_v over the inventory.
DeformPolynomial oracle_coefficient(int j, int q, int r, const VariableInventory& inventory);

enum class KnownSolution { m2, L1, mk, L1_lacuna2 };

/// "m2", "L1", "mk", "L1-lacuna2".
KnownSolution parse_known_solution(std::string_view name);

struct KnownParams {
	Scalar t = 1;
	int k = 3;       ///< for mk
	int bound = 25;  ///< L1 keeps x_{k,0} with 2k+1 <= bound
};

Assignment known_solution(KnownSolution which, const KnownParams& params = {});

std::map<Label, Scalar> evaluate_system(const EquationSystem& sys, const Assignment& a);

/// m0(n) plus sum a_v Psi_v on every pair (e_k, e_m), 2 <= k < m <= n.
LieStructure deformed_structure(const Assignment& a, int n);

struct JacobiViolation {
	std::array<int, 3> triple;
	LieElement defect;
};

/// Every increasing triple with a nonzero Jacobi defect.
std::vector<JacobiViolation> jacobi_scan(const LieStructure& s);

}  // namespace mfil
