#include "mfil/cli.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace mfil;

namespace {

struct Run {
	int code;
	std::string out, err;
};

Run run(std::vector<std::string> args)
{
	std::ostringstream out, err;
	int code = run_cli(args, out, err);
	return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name)
{
	auto dir = std::filesystem::temp_directory_path() / "mfil-unit";
	std::filesystem::create_directories(dir);
	return dir / name;
}

std::string write(const std::string& name, const std::string& body)
{
	auto p = scratch(name);
	std::ofstream(p) << body;
	return p.string();
}

}  // namespace

TEST_CASE("gen")
{
	auto r = run({"gen", "--dim", "12"});
	CHECK(r.code == exit_ok);
	CHECK(r.out.rfind("# M_Fil(12), x free", 0) == 0);
	CHECK(run({"gen", "--dim", "12", "--x", "0"}).out.rfind("# M_Fil(12), x 0", 0) == 0);
	auto cas = run({"gen", "--truncate", "25", "--format", "cas"});
	CHECK(cas.code == exit_ok);
	CHECK(std::count(cas.out.begin(), cas.out.end(), '\n') == 205);
	CHECK(run({"gen", "--dim", "14", "--format", "json"}).out == run({"gen", "--dim", "14", "--format", "json"}).out);
	auto path = scratch("m12.json").string();
	CHECK(run({"gen", "--dim", "12", "--format", "json", "--out", path}).code == exit_ok);
	CHECK(std::filesystem::file_size(path) > 100);
}

TEST_CASE("usage errors exit with 2")
{
	CHECK(run({}).code == exit_usage);
	CHECK(run({"gen"}).code == exit_usage);
	CHECK(run({"gen", "--dim", "8"}).code == exit_usage);
	CHECK(run({"gen", "--dim", "12", "--truncate", "20"}).code == exit_usage);
	CHECK(run({"gen", "--dim", "12", "--format", "xml"}).code == exit_usage);
	CHECK(run({"gen", "--dim", "twelve"}).code == exit_usage);
	CHECK(run({"frobnicate"}).code == exit_usage);
	CHECK(run({"check", "--dim", "12"}).code == exit_usage);
	CHECK(run({"check", "--dim", "12", "--known", "L7"}).code == exit_usage);
	CHECK(run({"fixture", "--name", "m9", "--dim", "5"}).code == exit_usage);
	CHECK(run({"verify-oracle"}).code == exit_usage);
	CHECK(run({"--help"}).code == exit_ok);
}

TEST_CASE("I/O errors exit with 3")
{
	CHECK(run({"check", "--dim", "12", "--assign", scratch("missing.json").string()}).code == exit_io);
	CHECK(run({"gen", "--dim", "9", "--out", "/nonexistent-dir/x.txt"}).code == exit_io);
	auto bad = write("bad.json", "{ not json");
	CHECK(run({"check", "--dim", "12", "--assign", bad}).code == exit_usage);
}

TEST_CASE("dims")
{
	auto r = run({"dims", "--dim", "18"});
	CHECK(r.code == exit_ok);
	CHECK(r.out.find("num_eqs 55") != std::string::npos);
	CHECK(run({"dims", "--dim", "12", "--format", "json"}).out.find("\"num_eqs\": 8") != std::string::npos);
}

TEST_CASE("check")
{
	auto ok = run({"check", "--dim", "12", "--known", "L1"});
	CHECK(ok.code == exit_ok);
	CHECK(ok.out.find("\"verdict\": \"verified\"") != std::string::npos);
	CHECK(run({"check", "--dim", "14", "--known", "mk", "--k", "4", "--t", "-2/3"}).code == exit_ok);
	auto path = write("a.json", R"({"entries":[{"j":2,"s":0,"value":"1"},{"j":3,"s":0,"value":"1"}]})");
	auto fail = run({"check", "--dim", "12", "--assign", path});
	CHECK(fail.code == exit_failed);
	CHECK(fail.out.find("\"verdict\": \"failed\"") != std::string::npos);
	CHECK(fail.err.find("(2,3,0)") != std::string::npos);
	auto top = write("x.json", R"({"entries":[],"x":"1"})");
	CHECK(run({"check", "--dim", "12", "--assign", top}).code == exit_ok);
	CHECK(run({"check", "--dim", "13", "--assign", top}).code == exit_usage);
}

TEST_CASE("verify-oracle and fixture")
{
	auto v = run({"verify-oracle", "--max-total", "15"});
	CHECK(v.code == exit_ok);
	CHECK(v.out.find("0 diffs") != std::string::npos);
	CHECK(run({"verify-oracle", "--dim", "12", "-v"}).out.find("ok   (2,5,-1)") != std::string::npos);
	auto f = run({"fixture", "--name", "L1", "--dim", "6"});
	CHECK(f.code == exit_ok);
	CHECK(f.out.find("\"relations\"") != std::string::npos);
	CHECK(run({"fixture", "--name", "lacuna-of", "--dim", "12", "--s", "2"}).code == exit_ok);
}
