#include "mfil/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace mfil {

using Json = nlohmann::ordered_json;

namespace {

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json element_json(const LieElement& e)
{
	Json out = Json::array();
	for (const auto& [i, c] : e.terms())
		out.push_back({{"index", i}, {"numerator", c.get_num().get_str()}, {"denominator", c.get_den().get_str()}});
	return out;
}

Json variable_json(const DeformVariable& v)
{
	if (v.is_top())
		return "x";
	return {{"j", v.j()}, {"s", v.s()}};
}

std::string cas_name(const DeformVariable& v)
{
	return v.is_top() ? "x" : "x_" + std::to_string(v.j()) + "_" + std::to_string(v.s());
}

template <typename T>
T field(const Json& j, const char* key, const char* where)
{
	if (!j.is_object() || !j.contains(key))
		throw FormatError(std::string(where) + ": missing '" + key + "'");
	try {
		return j.at(key).get<T>();
	} catch (const Json::exception&) {
		throw FormatError(std::string(where) + ": bad '" + key + "'");
	}
}

Scalar scalar_field(const Json& j, const char* key, const char* where)
{
	auto text = field<std::string>(j, key, where);
	try {
		return parse_scalar(text);
	} catch (const std::invalid_argument& e) {
		throw FormatError(std::string(where) + ": " + e.what());
	}
}

Json parse_json(const std::string& text)
{
	try {
		return Json::parse(text);
	} catch (const Json::parse_error& e) {
		throw FormatError(std::string("not valid JSON: ") + e.what());
	}
}

}  // namespace

std::string structure_to_json(const LieStructure& s)
{
	Json rel = Json::array();
	for (const auto& [key, value] : s.relations())
		rel.push_back({{"i", key.first}, {"j", key.second}, {"value", element_json(value)}});
	Json out = {{"name", s.name()},
	            {"dimension", s.dimension()},
	            {"extent", s.extent() == Extent::finite ? "finite" : "cutoff"},
	            {"truncated", s.truncated()},
	            {"relations", rel}};
	return dump(out);
}

std::string form_to_json(const ExtForm& f)
{
	Json terms = Json::array();
	for (const auto& [m, c] : f.terms())
		terms.push_back({{"indices", m.indices()}, {"coeff", to_string(c)}});
	return dump(Json{{"terms", terms}});
}

std::string system_to_json(const EquationSystem& sys)
{
	Json out;
	if (sys.kind == EquationSystem::Kind::finite) {
		out["kind"] = "M_Fil(n)";
		out["n"] = sys.bound;
	} else {
		out["kind"] = "truncated";
		out["total_max"] = sys.bound;
	}
	out["x_mode"] = to_string(sys.x_mode);
	out["variables"] = Json::array();
	for (const auto& v : sys.variables)
		out["variables"].push_back(variable_json(v));
	out["equations"] = Json::array();
	for (const auto& e : sys.equations) {
		Json monomials = Json::array();
		for (const auto& [m, c] : e.poly.terms()) {
			Json vars = Json::array();
			for (const auto& [v, p] : m.factors())
				vars.push_back(v.is_top() ? Json{"x", p} : Json{v.j(), v.s(), p});
			monomials.push_back({{"coeff", c.get_str()}, {"vars", vars}});
		}
		out["equations"].push_back({{"label", {e.label.j, e.label.q, e.label.r}}, {"monomials", monomials}});
	}
	return dump(out);
}

namespace {

DeformVariable parse_variable(const Json& v)
{
	if (v.is_string() && v.get<std::string>() == "x")
		return DeformVariable::top();
	try {
		return DeformVariable::pair(field<int>(v, "j", "variable"), field<int>(v, "s", "variable"));
	} catch (const std::invalid_argument& e) {
		throw FormatError(std::string("variable: ") + e.what());
	}
}

Monomial parse_factor(const Json& f)
{
	if (!f.is_array() || f.empty())
		throw FormatError("monomial factor must be [j,s,power] or [\"x\",power]");
	try {
		if (f.size() == 2 && f[0].is_string() && f[0].get<std::string>() == "x")
			return Monomial(DeformVariable::top(), f[1].get<int>());
		if (f.size() == 3)
			return Monomial(DeformVariable::pair(f[0].get<int>(), f[1].get<int>()), f[2].get<int>());
	} catch (const Json::exception&) {
	} catch (const std::invalid_argument&) {
	}
	throw FormatError("bad monomial factor " + f.dump());
}

}  // namespace

EquationSystem system_from_json(const std::string& text)
{
	const Json doc = parse_json(text);
	const auto kind = field<std::string>(doc, "kind", "system");
	EquationSystem sys{};
	if (kind == "M_Fil(n)") {
		sys.kind = EquationSystem::Kind::finite;
		sys.bound = field<int>(doc, "n", "system");
	} else if (kind == "truncated") {
		sys.kind = EquationSystem::Kind::truncated;
		sys.bound = field<int>(doc, "total_max", "system");
	} else {
		throw FormatError("system: unknown kind '" + kind + "'");
	}
	try {
		sys.x_mode = parse_x_mode(field<std::string>(doc, "x_mode", "system"));
	} catch (const std::invalid_argument& e) {
		throw FormatError(std::string("system: ") + e.what());
	}
	for (const auto& v : field<Json>(doc, "variables", "system"))
		sys.variables.push_back(parse_variable(v));
	for (const auto& e : field<Json>(doc, "equations", "system")) {
		auto label = field<std::vector<int>>(e, "label", "equation");
		if (label.size() != 3)
			throw FormatError("equation: label must have three entries");
		Equation eq{{label[0], label[1], label[2]}, false, {}};
		eq.tilde = sys.kind == EquationSystem::Kind::finite && sys.bound % 2 == 0 && eq.label.total() == sys.bound;
		for (const auto& m : field<Json>(e, "monomials", "equation")) {
			Monomial mono;
			for (const auto& f : field<Json>(m, "vars", "monomial"))
				mono = mono * parse_factor(f);
			Integer c;
			try {
				c = parse_integer(field<std::string>(m, "coeff", "monomial"));
			} catch (const std::invalid_argument& ex) {
				throw FormatError(std::string("monomial: ") + ex.what());
			}
			eq.poly.add(mono, c);
		}
		sys.equations.push_back(std::move(eq));
	}
	return sys;
}

std::string system_to_text(const EquationSystem& sys)
{
	std::ostringstream out;
	out << "# " << sys.id();
	if (sys.kind == EquationSystem::Kind::finite && sys.bound % 2 == 0)
		out << ", x " << to_string(sys.x_mode);
	out << "\n# " << sys.variables.size() << " variables, " << sys.equations.size() << " equations\n";
	for (const auto& e : sys.equations) {
		const auto& l = e.label;
		out << (e.tilde ? "F̃_{" : "F_{") << l.j << "," << l.q << "," << l.r << "} = " << to_string(e.poly)
		    << "\n";
	}
	return out.str();
}

std::string system_to_cas(const EquationSystem& sys)
{
	std::string out = "QQ[";
	for (std::size_t i = 0; i < sys.variables.size(); ++i)
		out += (i ? "," : "") + cas_name(sys.variables[i]);
	out += "]\n";
	for (const auto& e : sys.equations)
		out += render(e.poly, cas_name, true) + "\n";
	return out;
}

Assignment assignment_from_json(const std::string& text)
{
	const Json doc = parse_json(text);
	Assignment a;
	for (const auto& e : field<Json>(doc, "entries", "assignment")) {
		DeformVariable v = DeformVariable::top();
		try {
			v = DeformVariable::pair(field<int>(e, "j", "entry"), field<int>(e, "s", "entry"));
		} catch (const std::invalid_argument& ex) {
			throw FormatError(std::string("entry: ") + ex.what());
		}
		if (a.values.contains(v))
			throw FormatError("assignment: " + to_string(v) + " given twice");
		a.set(v, scalar_field(e, "value", "entry"));
	}
	if (doc.contains("x"))
		a.set(DeformVariable::top(), scalar_field(doc, "x", "assignment"));
	return a;
}

namespace {

Json assignment_json(const Assignment& a)
{
	Json entries = Json::array();
	for (const auto& [v, c] : a.values)
		if (!v.is_top())
			entries.push_back({{"j", v.j()}, {"s", v.s()}, {"value", to_string(c)}});
	Json out = {{"entries", entries}};
	if (auto x = a.value(DeformVariable::top()); x != 0)
		out["x"] = to_string(x);
	return out;
}

}  // namespace

std::string assignment_to_json(const Assignment& a) { return dump(assignment_json(a)); }

bool VerificationReport::verified() const
{
	return jacobi.empty() &&
	       std::all_of(residuals.begin(), residuals.end(), [](const auto& kv) { return kv.second == 0; });
}

std::string report_to_json(const VerificationReport& r)
{
	Json residuals = Json::array();
	for (const auto& [l, v] : r.residuals)
		residuals.push_back({{"label", {l.j, l.q, l.r}}, {"value", to_string(v)}});
	Json jacobi = Json::array();
	for (const auto& v : r.jacobi)
		jacobi.push_back({{"triple", v.triple}, {"defect", element_json(v.defect)}});
	Json out = {{"system-id", r.system_id},
	            {"assignment", assignment_json(r.assignment)},
	            {"residuals", residuals},
	            {"jacobi", jacobi},
	            {"verdict", r.verified() ? "verified" : "failed"}};
	return dump(out);
}

std::string dims_to_text(const DimsReport& d)
{
	std::ostringstream out;
	out << "n " << d.n << "\n";
	out << "num_vars " << d.num_vars << " (enumerated " << d.num_vars_enumerated << ", sum P2 "
	    << d.num_vars_partitions << ")\n";
	out << "num_eqs " << d.num_eqs << " (enumerated " << d.num_eqs_enumerated << ")\n";
	out << "h2 by weight:";
	for (const auto& [w, c] : d.h2_by_weight)
		out << " " << w << ":" << c;
	out << "\nh3 by weight:";
	for (const auto& [w, c] : d.h3_by_weight)
		out << " " << w << ":" << c;
	out << "\nh3 enumerated:";
	for (const auto& [w, c] : d.h3_enumerated)
		out << " " << w << ":" << c;
	out << "\n" << (d.consistent() ? "consistent" : "INCONSISTENT") << "\n";
	return out.str();
}

std::string dims_to_json(const DimsReport& d)
{
	auto slices = [](const std::map<int, std::int64_t>& m) {
		Json out = Json::array();
		for (const auto& [w, c] : m)
			out.push_back({{"weight", w}, {"count", c}});
		return out;
	};
	Json out = {{"n", d.n},
	            {"num_vars", d.num_vars},
	            {"num_vars_enumerated", d.num_vars_enumerated},
	            {"num_vars_partitions", d.num_vars_partitions},
	            {"num_eqs", d.num_eqs},
	            {"num_eqs_enumerated", d.num_eqs_enumerated},
	            {"h2_by_weight", slices(d.h2_by_weight)},
	            {"h3_by_weight", slices(d.h3_by_weight)},
	            {"h3_enumerated", slices(d.h3_enumerated)},
	            {"consistent", d.consistent()}};
	return dump(out);
}

}  // namespace mfil
