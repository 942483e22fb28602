#pragma once

// Stable text and JSON formats. All JSON keeps a fixed key order and writes
// exact numbers as strings, so equal inputs give byte-identical output.

#include "mfil/exterior.hpp"
#include "mfil/lie.hpp"
#include "mfil/oracle.hpp"
#include "mfil/system.hpp"

#include <map>
#include <string>
#include <vector>

namespace mfil {

/// Malformed document; the message says where.
class FormatError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

std::string structure_to_json(const LieStructure& s);
std::string form_to_json(const ExtForm& f);

std::string system_to_json(const EquationSystem& sys);
EquationSystem system_from_json(const std::string& text);
/// Labeled rows in x_{j,s} / F_{j,q,r} notation, one per line.
std::string system_to_text(const EquationSystem& sys);
/// Ring line "QQ[x_2_0,...]" followed by one polynomial per line.
std::string system_to_cas(const EquationSystem& sys);

/// {entries: [{j, s, value: "p/q"}], x: "p/q"}; x is optional.
Assignment assignment_from_json(const std::string& text);
std::string assignment_to_json(const Assignment& a);

struct VerificationReport {
	std::string system_id;
	Assignment assignment;
	std::map<Label, Scalar> residuals;
	std::vector<JacobiViolation> jacobi;

	bool verified() const;
};

std::string report_to_json(const VerificationReport& r);

std::string dims_to_text(const DimsReport& d);
std::string dims_to_json(const DimsReport& d);

}  // namespace mfil
