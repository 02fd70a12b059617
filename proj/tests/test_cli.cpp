#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct Outcome
{
	int code = -1;
	std::string out;
};

std::string cli()
{
	const char *p = std::getenv("CYCLOGT_CLI");
	return p ? p : "";
}

Outcome run(const std::string &args)
{
	Outcome r;
	std::string cmd = cli() + " " + args + " 2>&1";
	FILE *f = popen(cmd.c_str(), "r");
	if (!f)
		return r;
	char buf[4096];
	size_t n;
	while ((n = fread(buf, 1, sizeof buf, f)) > 0)
		r.out.append(buf, n);
	int st = pclose(f);
	r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
	return r;
}

class Cli : public ::testing::Test
{
  protected:
	void SetUp() override
	{
		if (cli().empty())
			GTEST_SKIP() << "CYCLOGT_CLI is not set";
		dir = fs::temp_directory_path() / ("cyclogt_cli_" + std::to_string(::getpid()));
		fs::create_directories(dir);
	}
	void TearDown() override
	{
		if (!dir.empty())
			fs::remove_all(dir);
	}
	std::string write(const std::string &name, const std::string &text)
	{
		fs::path p = dir / name;
		std::ofstream(p) << text;
		return p.string();
	}
	static std::string slurp(const fs::path &p)
	{
		std::ifstream in(p, std::ios::binary);
		std::stringstream s;
		s << in.rdbuf();
		return s.str();
	}
	fs::path dir;
};

// sigma_3 with the degree-3 hexagon sign: AAB - 2ABA + BAA - ABB + 2BAB - BBA
const char *sigma3 = R"({"mode":"lie","N":1,"degree":3,"first":{"alphabet":["A","B"],"terms":[
	{"word":[0,0,1],"coeff":"1"},{"word":[0,1,0],"coeff":"-2"},{"word":[1,0,0],"coeff":"1"},
	{"word":[0,1,1],"coeff":"-1"},{"word":[1,0,1],"coeff":"2"},{"word":[1,1,0],"coeff":"-1"}]}})";

} // namespace

TEST_F(Cli, DimsOfGrt1)
{
	Outcome r = run("dims --system grt1 --max-degree 5");
	EXPECT_EQ(r.code, 0) << r.out;
	EXPECT_NE(r.out.find("dims [0,0,1,0,1]"), std::string::npos) << r.out;
}

TEST_F(Cli, DimsOfFreeControlAreWittNumbers)
{
	Outcome r = run("dims --system free --rank 2 --max-degree 6");
	EXPECT_EQ(r.code, 0) << r.out;
	EXPECT_NE(r.out.find("dims [2,1,2,3,6,9]"), std::string::npos) << r.out;
}

TEST_F(Cli, DimsOfGrtmb2)
{
	Outcome r = run("dims --system grtmb2 --N 2 --max-degree 3");
	EXPECT_EQ(r.code, 0) << r.out;
	EXPECT_NE(r.out.find("dims [1,0,1]"), std::string::npos) << r.out;
}

TEST_F(Cli, DeskCapsAndUsageErrors)
{
	EXPECT_EQ(run("dims --system grt1 --max-degree 7").code, 1);
	EXPECT_EQ(run("dims --system grtm --N 2 --max-degree 6").code, 1);
	EXPECT_EQ(run("no-such-command").code, 1);
	EXPECT_EQ(run("check --input " + (dir / "missing.json").string()).code, 1);
}

TEST_F(Cli, CheckExitCodes)
{
	std::string good = write("sigma3.json", sigma3);
	Outcome r = run("check --system grt1 --input " + good);
	EXPECT_EQ(r.code, 0) << r.out;

	std::string one = write("one.json", R"({"mode":"group","N":2,"degree":3})");
	EXPECT_EQ(run("check --system grtm --input " + one).code, 0);

	std::string bad = write("bad.json",
	                        R"({"mode":"lie","N":2,"degree":1,"second":{"terms":[{"word":["A"],"coeff":1}]}})");
	r = run("check --system grtm --residuals --input " + bad);
	EXPECT_EQ(r.code, 2) << r.out;

	std::string broken = write("broken.json", "{\"mode\": ");
	EXPECT_EQ(run("check --system grtm --input " + broken).code, 1);
}

TEST_F(Cli, BundlesRoundTrip)
{
	Outcome r = run("dims --system grtm --N 2 --max-degree 3 --bundle-dir " + dir.string());
	ASSERT_EQ(r.code, 0) << r.out;
	int found = 0;
	for (auto &e : fs::directory_iterator(dir))
		if (e.path().extension() == ".json")
		{
			++found;
			EXPECT_EQ(run("check --input " + e.path().string()).code, 0) << e.path();
		}
	EXPECT_GT(found, 0);
}

TEST_F(Cli, ReportsAreByteStable)
{
	fs::path a = dir / "a.json", b = dir / "b.json";
	ASSERT_EQ(run("dims --system grtmd --N 3 --max-degree 3 --out " + a.string()).code, 0);
	ASSERT_EQ(run("dims --system grtmd --N 3 --max-degree 3 --out " + b.string()).code, 0);
	std::string x = slurp(a);
	EXPECT_FALSE(x.empty());
	EXPECT_EQ(x, slurp(b));
}

TEST_F(Cli, VerifyTheorems)
{
	Outcome r = run("verify-theorems --theorem furusho --max-degree 4");
	EXPECT_EQ(r.code, 0) << r.out;
	r = run("verify-theorems --theorem octagon --N 2 --max-degree 3");
	EXPECT_EQ(r.code, 0) << r.out;
	EXPECT_EQ(run("verify-theorems --theorem nonsense").code, 1);
}

TEST_F(Cli, AxiomsRejectNonSolutions)
{
	std::string one = write("one.json", R"({"mode":"group","N":2,"degree":3})");
	EXPECT_EQ(run("axioms --max-length 3 --input " + one).code, 0);
	std::string expA = write("expA.json", R"({"mode":"group","N":2,"degree":3,"second":{"terms":[
		{"word":[],"coeff":1},{"word":["A"],"coeff":1},{"word":["A","A"],"coeff":"1/2"},
		{"word":["A","A","A"],"coeff":"1/6"}]}})");
	Outcome r = run("axioms --max-length 3 --input " + expA);
	EXPECT_EQ(r.code, 2) << r.out;
	EXPECT_NE(r.out.find("imc-I-mixed-pentagon"), std::string::npos) << r.out;
}
