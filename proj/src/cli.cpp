#include "mfil/cli.hpp"

#include "mfil/fixtures.hpp"
#include "mfil/io.hpp"
#include "mfil/oracle.hpp"
#include "mfil/system.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace mfil {

namespace {

struct UsageError : std::runtime_error {
	using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

struct Config {
	int dim = 0;
	int truncate = 0;
	int max_total = 0;
	std::string x_mode = "free";
	std::string format = "text";
	std::string out_path;
	std::string known;
	std::string assign_path;
	std::string t = "1";
	int k = 0;
	int s = 0;
	std::string name;
	std::string base = "L1";
	bool verbose = false;
};

void emit(const std::string& text, const Config& cfg, std::ostream& out)
{
	if (cfg.out_path.empty()) {
		out << text;
		return;
	}
	std::ofstream file(cfg.out_path, std::ios::binary);
	if (!file)
		throw IoError("cannot open '" + cfg.out_path + "' for writing");
	file << text;
	if (!file)
		throw IoError("write to '" + cfg.out_path + "' failed");
}

std::string read_file(const std::string& path)
{
	std::ifstream file(path, std::ios::binary);
	if (!file)
		throw IoError("cannot read '" + path + "'");
	std::ostringstream buf;
	buf << file.rdbuf();
	return buf.str();
}

int cmd_gen(const Config& cfg, std::ostream& out)
{
	XMode mode = parse_x_mode(cfg.x_mode);
	EquationSystem sys = cfg.dim ? system_finite(cfg.dim, mode) : system_truncated(cfg.truncate);
	if (cfg.format == "json")
		emit(system_to_json(sys), cfg, out);
	else if (cfg.format == "cas")
		emit(system_to_cas(sys), cfg, out);
	else
		emit(system_to_text(sys), cfg, out);
	return exit_ok;
}

int cmd_dims(const Config& cfg, std::ostream& out)
{
	auto report = dims_report(cfg.dim);
	emit(cfg.format == "json" ? dims_to_json(report) : dims_to_text(report), cfg, out);
	return report.consistent() ? exit_ok : exit_failed;
}

int cmd_check(const Config& cfg, std::ostream& out, std::ostream& err)
{
	Assignment a;
	if (!cfg.known.empty()) {
		KnownParams p;
		p.t = parse_scalar(cfg.t);
		p.k = cfg.k ? cfg.k : 3;
		p.bound = cfg.dim;
		a = known_solution(parse_known_solution(cfg.known), p);
	} else {
		a = assignment_from_json(read_file(cfg.assign_path));
	}
	const bool has_x = a.value(DeformVariable::top()) != 0;
	if (has_x && cfg.dim % 2 != 0)
		throw UsageError("x is only meaningful in even dimension");
	auto sys = system_finite(cfg.dim, XMode::free);
	VerificationReport report{sys.id(), a, evaluate_system(sys, a), jacobi_scan(deformed_structure(a, cfg.dim))};
	emit(report_to_json(report), cfg, out);
	if (!report.verified()) {
		for (const auto& [l, v] : report.residuals)
			if (v != 0)
				err << "residual " << to_string(v) << " at " << to_string(l) << "\n";
		return exit_failed;
	}
	return exit_ok;
}

int cmd_verify_oracle(const Config& cfg, std::ostream& out)
{
	const bool finite = cfg.dim != 0;
	const int bound = finite ? cfg.dim : cfg.max_total;
	auto sys = finite ? system_finite(bound, XMode::free) : system_truncated(bound);
	const auto inventory = VariableInventory::for_dimension(bound, finite && bound % 2 == 0);
	std::size_t diffs = 0;
	for (const auto& e : sys.equations) {
		const auto& l = e.label;
		auto oracle = oracle_coefficient(l.j, l.q, l.r, inventory);
		if (oracle == e.poly) {
			if (cfg.verbose)
				out << "ok   " << to_string(l) << "\n";
			continue;
		}
		++diffs;
		out << "DIFF " << to_string(l) << "\n  closed form: " << to_string(e.poly) << "\n  oracle:      "
		    << to_string(oracle) << "\n";
	}
	out << sys.id() << ": " << sys.equations.size() << " labels compared, " << diffs << " diffs\n";
	return diffs == 0 ? exit_ok : exit_failed;
}

int cmd_fixture(const Config& cfg, std::ostream& out)
{
	FixtureParams p{.n = cfg.dim, .k = cfg.k, .s = cfg.s, .base = parse_fixture_id(cfg.base)};
	emit(structure_to_json(make_fixture(parse_fixture_id(cfg.name), p)), cfg, out);
	return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
	Config cfg;
	CLI::App app{"Deformation equations of filiform Lie algebras"};
	app.name("mfil");
	app.require_subcommand(1);

	auto* gen = app.add_subcommand("gen", "Emit the defining system of M_Fil(n) or its truncation");
	auto* gen_dim = gen->add_option("--dim", cfg.dim, "Dimension n >= 9");
	auto* gen_trunc = gen->add_option("--truncate", cfg.truncate, "Keep labels with j+2q+1+r <= T");
	gen_dim->excludes(gen_trunc);
	gen->add_option("--x", cfg.x_mode, "x mode for even n")->check(CLI::IsMember({"free", "0", "1"}));
	gen->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "cas"}));
	gen->add_option("--out", cfg.out_path, "Output file (default stdout)");

	auto* dims = app.add_subcommand("dims", "Variable and equation counts");
	dims->add_option("--dim", cfg.dim, "Dimension n >= 9")->required();
	dims->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
	dims->add_option("--out", cfg.out_path, "Output file (default stdout)");

	auto* check = app.add_subcommand("check", "Residuals and Jacobi scan for an assignment");
	check->add_option("--dim", cfg.dim, "Dimension n >= 9")->required();
	auto* known = check->add_option("--known", cfg.known, "m2, L1, mk or L1-lacuna2");
	auto* assign = check->add_option("--assign", cfg.assign_path, "Assignment JSON file");
	known->excludes(assign);
	check->add_option("--t", cfg.t, "Scale of the known family (p/q)");
	check->add_option("--k", cfg.k, "Index k of the mk family");
	check->add_option("--out", cfg.out_path, "Report file (default stdout)");

	auto* verify = app.add_subcommand("verify-oracle", "Compare closed forms with the brute-force expansion");
	auto* vmax = verify->add_option("--max-total", cfg.max_total, "All F_{j,q,r} with j+2q+1+r <= T");
	auto* vdim = verify->add_option("--dim", cfg.dim, "Rows of M_Fil(n), x included for even n");
	vmax->excludes(vdim);
	verify->add_flag("-v,--verbose", cfg.verbose, "List every compared label");

	auto* fixture = app.add_subcommand("fixture", "Emit a named algebra's structure constants");
	fixture->add_option("--name", cfg.name, "m0, m1, m2, mk, L1, Lk, lacuna-of")->required();
	fixture->add_option("--dim", cfg.dim, "Dimension bound")->required();
	fixture->add_option("--k", cfg.k, "Index for mk and Lk");
	fixture->add_option("--s", cfg.s, "Lacuna width for lacuna-of");
	fixture->add_option("--base", cfg.base, "Base algebra for lacuna-of");
	fixture->add_option("--out", cfg.out_path, "Output file (default stdout)");

	try {
		std::vector<std::string> reversed(args.rbegin(), args.rend());
		app.parse(reversed);
	} catch (const CLI::ParseError& e) {
		int code = app.exit(e, out, err);
		return code == 0 ? exit_ok : exit_usage;
	}

	try {
		if (gen->parsed()) {
			if (!cfg.dim && !cfg.truncate)
				throw UsageError("gen needs --dim or --truncate");
			return cmd_gen(cfg, out);
		}
		if (dims->parsed())
			return cmd_dims(cfg, out);
		if (check->parsed()) {
			if (cfg.known.empty() == cfg.assign_path.empty())
				throw UsageError("check needs exactly one of --known and --assign");
			return cmd_check(cfg, out, err);
		}
		if (verify->parsed()) {
			if (!cfg.dim && !cfg.max_total)
				throw UsageError("verify-oracle needs --max-total or --dim");
			return cmd_verify_oracle(cfg, out);
		}
		if (fixture->parsed())
			return cmd_fixture(cfg, out);
	} catch (const IoError& e) {
		err << "mfil: " << e.what() << "\n";
		return exit_io;
	} catch (const std::exception& e) {
		// range violations, malformed files and unknown names
		err << "mfil: " << e.what() << "\n";
		return exit_usage;
	}
	return exit_usage;
}

}  // namespace mfil
