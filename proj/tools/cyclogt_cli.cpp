#include "cyclogt/gtgroups.hpp"
#include "cyclogt/serialize.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace cyclogt;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMath = 2;

constexpr uint64_t kDefaultProbe = 2147483647;

struct RunConfig
{
	std::string command;
	std::string system = "grt1";
	int N = 1;
	int rank = 2;
	int max_degree = 5;
	std::string mode;
	std::string input;
	std::string out;
	std::string bundle_dir;
	std::string theorem = "all";
	std::string axioms = "all";
	int max_length = 4;
	uint64_t prime_probe = kDefaultProbe;
	bool exact_only = false;
	bool force = false;
	bool timestamp = false;
	bool with_residuals = false;

	Json to_json() const
	{
		Json j{{"command", command}};
		if (command == "dims")
			j.update(Json{{"system", system}, {"N", N}, {"rank", rank}, {"max_degree", max_degree}});
		else if (command == "check")
			j.update(Json{{"system", system}, {"mode", mode}, {"input", input}, {"with_residuals", with_residuals}});
		else if (command == "verify-theorems")
			j.update(Json{{"theorem", theorem}, {"N", N}, {"max_degree", max_degree}});
		else if (command == "axioms")
			j.update(Json{{"input", input}, {"axioms", axioms}, {"max_length", max_length}});
		j["prime_probe"] = exact_only ? Json(nullptr) : Json(prime_probe);
		j["exact_only"] = exact_only;
		j["force"] = force;
		return j;
	}

	SolveOptions solve_options() const
	{
		SolveOptions o;
		if (!exact_only)
			o.prime_probe = prime_probe;
		return o;
	}
};

struct UsageError : Error
{
	using Error::Error;
};

void check_cap(const RunConfig &c, int N, int d)
{
	int cap = N == 1 ? 6 : 5;
	if (d > cap && !c.force)
		throw UsageError("degree " + std::to_string(d) + " exceeds the desk-scale cap " + std::to_string(cap) +
		                 " for N=" + std::to_string(N) + " (use --force)");
	if (d > Word::kMaxLength)
		throw UsageError("degree exceeds the maximal word length " + std::to_string(Word::kMaxLength));
}

Json read_json(const std::string &path)
{
	std::ifstream in(path);
	if (!in)
		throw UsageError("cannot open " + path);
	try
	{
		return Json::parse(in);
	}
	catch (const Json::exception &e)
	{
		throw UsageError("cannot parse " + path + ": " + e.what());
	}
}

void write_file(const std::string &path, const std::string &text)
{
	std::string tmp = path + ".tmp";
	{
		std::ofstream out(tmp, std::ios::binary);
		if (!out)
			throw UsageError("cannot write " + path);
		out << text;
		if (!out)
			throw UsageError("cannot write " + path);
	}
	std::filesystem::rename(tmp, path);
}

Json envelope(const RunConfig &c)
{
	return Json{{"tool", "cyclogt"}, {"version", library_version()}, {"config", c.to_json()}};
}

std::string cell(const Json &v)
{
	if (v.is_null())
		return "-";
	if (v.is_boolean())
		return v.get<bool>() ? "yes" : "no";
	if (v.is_string())
		return v.get<std::string>();
	if (v.is_array())
	{
		std::string s;
		for (auto &x : v)
			s += (s.empty() ? "" : ",") + cell(x);
		return s;
	}
	return v.dump();
}

// Aligned text table over the listed keys of an array of JSON objects.
std::string table(const Json &rows, const std::vector<std::string> &keys)
{
	std::vector<std::vector<std::string>> cells{keys};
	for (auto &r : rows)
	{
		std::vector<std::string> line;
		for (auto &k : keys)
			line.push_back(r.contains(k) ? cell(r.at(k)) : "-");
		cells.push_back(line);
	}
	std::vector<size_t> width(keys.size(), 0);
	for (auto &line : cells)
		for (size_t k = 0; k < line.size(); ++k)
			width[k] = std::max(width[k], line[k].size());
	std::ostringstream os;
	for (auto &line : cells)
	{
		for (size_t k = 0; k < line.size(); ++k)
			os << (k ? "  " : "") << std::setw(static_cast<int>(width[k])) << line[k];
		os << "\n";
	}
	return os.str();
}

void emit(const RunConfig &c, const Json &report, const std::string &text)
{
	std::cout << text;
	if (!c.out.empty())
		write_file(c.out, report.dump(2) + "\n");
}

// ---- dims

int cmd_dims(const RunConfig &c)
{
	RelationSystem sys = named_system(c.system, c.N, c.rank);
	check_cap(c, sys.N, c.max_degree);
	auto opt = c.solve_options();
	Json report = envelope(c);
	report["system"] = sys.name;
	report["N"] = sys.N;
	std::vector<long> ambient;
	if (!sys.is_free())
	{
		ambient = pbw_ambient_dims(sys.N, std::min(c.max_degree, 4));
		report["ambient_dims"] = ambient;
	}
	Json rows = Json::array();
	Json dims = Json::array();
	for (int d = 1; d <= c.max_degree; ++d)
	{
		SolutionSpace s = graded_nullspace(sys, d, opt);
		DimsRow r{d, s.dim(), s.columns, s.rows, s.rank, s.nonzeros, s.probe_mismatch};
		rows.push_back(dims_row_to_json(r));
		dims.push_back(s.dim());
		if (!c.bundle_dir.empty())
		{
			std::filesystem::create_directories(c.bundle_dir);
			std::string name = sys.name + "_N" + std::to_string(sys.N) + "_d" + std::to_string(d) + ".json";
			write_file((std::filesystem::path(c.bundle_dir) / name).string(),
			           bundle_to_json(sys, s, ambient, c.timestamp).dump(2) + "\n");
		}
	}
	report["dims"] = dims;
	report["rows"] = rows;
	std::string text = "system " + sys.name + ", N=" + std::to_string(sys.N) + "\n" +
	                   table(report["rows"], {"degree", "dim", "columns", "rows", "rank", "nonzeros", "probe_mismatch"}) +
	                   "dims [" + cell(report["dims"]) + "]\n";
	emit(c, report, text);
	return kExitPass;
}

// ---- check

Json check_pair(const RunConfig &c, const RelationSystem &sys, const PairGH &p, bool &all_zero)
{
	// Lie data is graded, so promoting it one degree sees the special conditions on the top degree.
	int D = p.mode == Mode::Lie ? p.degree + 1 : p.degree;
	auto res = evaluate(sys, p.truncated(D), D);
	Json results = Json::array();
	for (size_t k = 0; k < res.size(); ++k)
	{
		results.push_back(residual_to_json(sys.predicates[k].name(), mode_name(p.mode), sys.N, D, res[k],
		                                   c.with_residuals));
		all_zero = all_zero && res[k].zero;
	}
	return results;
}

int cmd_check(const RunConfig &c)
{
	if (c.input.empty())
		throw UsageError("check needs --input");
	Json in = read_json(c.input);
	Json report = envelope(c);
	bool all_zero = true;
	std::string text;
	try
	{
		if (in.contains("basis"))
		{
			RelationSystem sys;
			SolutionSpace s = bundle_from_json(in, &sys);
			if (sys.is_free())
				throw UsageError("the free system has no residuals to check");
			report["system"] = sys.name;
			report["N"] = sys.N;
			report["degree"] = s.degree;
			Json elems = Json::array();
			for (auto &u : s.basis)
				elems.push_back(check_pair(c, sys, as_pair(sys, u), all_zero));
			report["basis_results"] = elems;
			text = "bundle " + sys.name + ", N=" + std::to_string(sys.N) + ", degree " + std::to_string(s.degree) +
			       ", " + std::to_string(s.basis.size()) + " basis elements\n";
			for (size_t k = 0; k < elems.size(); ++k)
				text += "element " + std::to_string(k + 1) + "\n" +
				        table(elems[k], {"relation", "variant", "zero", "lowest_nonzero_degree"});
		}
		else
		{
			Json pj = in;
			if (!c.mode.empty())
			{
				if (pj.contains("mode") && pj["mode"] != c.mode)
					throw UsageError("--mode " + c.mode + " conflicts with the input mode");
				pj["mode"] = c.mode;
			}
			PairGH p = pair_from_json(pj);
			RelationSystem sys = named_system(c.system, p.N, c.rank);
			if (sys.is_free())
				throw UsageError("the free system has no residuals to check");
			if (sys.N != p.N)
				throw UsageError("system " + sys.name + " is defined for N=" + std::to_string(sys.N));
			report["system"] = sys.name;
			report["N"] = sys.N;
			report["mode"] = mode_name(p.mode);
			report["degree"] = p.degree;
			report["results"] = check_pair(c, sys, p, all_zero);
			text = "system " + sys.name + ", N=" + std::to_string(sys.N) + ", " + mode_name(p.mode) + " mode\n" +
			       table(report["results"], {"relation", "variant", "degree", "zero", "lowest_nonzero_degree"});
		}
	}
	catch (const InternalError &)
	{
		throw;
	}
	catch (const UsageError &)
	{
		throw;
	}
	catch (const Error &e)
	{
		throw UsageError(std::string("bad input: ") + e.what());
	}
	catch (const Json::exception &e)
	{
		throw UsageError(std::string("bad input: ") + e.what());
	}
	report["zero"] = all_zero;
	text += all_zero ? "all residuals zero\n" : "nonzero residuals\n";
	emit(c, report, text);
	return all_zero ? kExitPass : kExitMath;
}

// ---- verify-theorems

struct Theorem
{
	std::string name;
	std::string premise;
	std::string conclusion;
	int N;
};

std::vector<std::string> theorem_names() { return {"furusho", "distribution", "octagon", "broadhurst"}; }

Json implication_rows(const RunConfig &c, const Theorem &t, bool &green)
{
	RelationSystem a = named_system(t.premise, t.N), b = named_system(t.conclusion, t.N);
	check_cap(c, t.N, c.max_degree);
	Json rows = Json::array();
	for (int d = 1; d <= c.max_degree; ++d)
	{
		auto r = implication_check(a, b, d, c.solve_options());
		Json row{{"theorem", t.name}, {"premise", t.premise}, {"conclusion", t.conclusion}, {"N", t.N},
		         {"degree", d},       {"holds", r.holds},     {"dim_premise", r.dim_a},   {"violated", r.violated}};
		rows.push_back(row);
		green = green && r.holds;
	}
	return rows;
}

PairGH graded_pair(const RelationSystem &sys, const Unknown &u, int D)
{
	PairGH v = as_pair(sys, u);
	return PairGH::make(v.first.with_degree(D), v.second.with_degree(D), Mode::Lie);
}

bool same_pair(const PairGH &x, const PairGH &y) { return x.first == y.first && x.second == y.second; }

// Broadhurst duality checks at N=2: tau and s are involutive of orders 2 and 4, the Lie
// algebra closes under the bracket, the group closes under the product, and alpha is additive.
Json broadhurst_rows(const RunConfig &c, bool &green)
{
	int N = 2, D = c.max_degree;
	check_cap(c, N, D);
	auto opt = c.solve_options();
	RelationSystem sys = named_system("grtmb2", N);
	Json rows = Json::array();
	auto push = [&](std::string check, int d, bool ok, Json extra = Json::object()) {
		Json row{{"theorem", "broadhurst"}, {"check", check}, {"N", N}, {"degree", d}, {"holds", ok}};
		row.update(extra);
		rows.push_back(row);
		green = green && ok;
	};

	auto &a = t03(2);
	bool tau_ok = true;
	for (int k = 0; k < a.alphabet()->size(); ++k)
	{
		Series x = a.letter(k, 1);
		tau_ok = tau_ok && automorphism(Automorphism::Tau, automorphism(Automorphism::Tau, x)) == x;
	}
	push("tau^2=id", 1, tau_ok);
	auto &t4 = PresentedAlgebra::get(t_alg(4, 2));
	bool s_ok = true;
	for (int k = 0; k < t4.alphabet()->size(); ++k)
	{
		Series x = t4.letter(k, 1), y = x;
		for (int r = 0; r < 4; ++r)
			y = automorphism(Automorphism::S, y);
		s_ok = s_ok && y == x;
	}
	push("s^4=id", 1, s_ok);

	std::vector<std::pair<int, PairGH>> lie;
	for (int d = 1; d <= D; ++d)
	{
		auto s = graded_nullspace(sys, d, opt);
		for (auto &u : s.basis)
			lie.push_back({d, graded_pair(sys, u, D)});
	}
	for (int d = 2; d <= D; ++d)
	{
		bool ok = true;
		int count = 0;
		for (size_t i = 0; i < lie.size(); ++i)
			for (size_t j = i + 1; j < lie.size(); ++j)
			{
				if (lie[i].first + lie[j].first != d)
					continue;
				PairGH br = bracket(lie[i].second, lie[j].second);
				ok = ok && valid_mod(sys, br.truncated(D + 1), D + 1);
				++count;
			}
		push("lie bracket closure", d, ok, Json{{"pairs", count}});
	}

	std::vector<PairGH> grp;
	for (auto &[d, v] : lie)
		grp.push_back(exp_flow(v, D));
	bool members = true;
	for (auto &g : grp)
		members = members && valid_mod(sys, g, D);
	push("group elements", D, members, Json{{"elements", grp.size()}});
	bool closed = true, additive = true;
	for (auto &p : grp)
		for (auto &q : grp)
		{
			PairGH m = multiply(p, q);
			closed = closed && valid_mod(sys, m, D);
			Rational ap = residual_broadhurst(p.second, Mode::Group, D).alpha;
			Rational aq = residual_broadhurst(q.second, Mode::Group, D).alpha;
			additive = additive && residual_broadhurst(m.second, Mode::Group, D).alpha == ap + aq;
		}
	push("group product closure", D, closed);
	push("alpha additivity", D, additive);
	return rows;
}

int cmd_verify(const RunConfig &c)
{
	std::vector<std::string> which;
	if (c.theorem == "all")
		which = theorem_names();
	else
	{
		auto names = theorem_names();
		if (std::find(names.begin(), names.end(), c.theorem) == names.end())
			throw UsageError("unknown theorem '" + c.theorem + "'");
		which = {c.theorem};
	}
	Json report = envelope(c);
	Json rows = Json::array();
	bool green = true;
	for (auto &t : which)
	{
		Json part;
		if (t == "furusho")
			part = implication_rows(c, {t, "furusho", "hexagons", 1}, green);
		else if (t == "distribution")
			part = implication_rows(c, {t, "mixed-pentagon", "distribution1", c.N}, green);
		else if (t == "octagon")
			part = implication_rows(c, {t, "mixed-pentagon-c", "octagon", c.N}, green);
		else
			part = broadhurst_rows(c, green);
		for (auto &r : part)
			rows.push_back(r);
	}
	report["results"] = rows;
	report["green"] = green;
	Json view = Json::array();
	for (auto &r : rows)
	{
		Json v = r;
		if (!v.contains("check"))
			v["check"] = r["premise"].get<std::string>() + " => " + r["conclusion"].get<std::string>();
		v["status"] = r["holds"].get<bool>() ? "green" : "red";
		view.push_back(v);
	}
	std::string text = table(view, {"theorem", "check", "N", "degree", "status"}) +
	                   (green ? "all green\n" : "red entries present\n");
	emit(c, report, text);
	return green ? kExitPass : kExitMath;
}

// ---- axioms

int cmd_axioms(const RunConfig &c)
{
	if (c.input.empty())
		throw UsageError("axioms needs --input");
	Json in = read_json(c.input);
	std::vector<Axiom> which;
	PairGH p;
	try
	{
		which = parse_axioms(c.axioms);
		p = pair_from_json(in);
	}
	catch (const Error &e)
	{
		throw UsageError(std::string("bad input: ") + e.what());
	}
	if (p.mode != Mode::Group)
		throw UsageError("axioms needs a group-mode pair");
	auto reports = check_axioms(TwistedStructure(p, p.degree), which, c.max_length);
	Json report = envelope(c);
	report["N"] = p.N;
	report["degree"] = p.degree;
	report["axioms"] = axiom_reports_to_json(reports);
	bool ok = all_zero(reports);
	report["zero"] = ok;
	std::string text = table(report["axioms"], {"axiom", "objects", "zero", "lowest_nonzero_degree"}) +
	                   (ok ? "all axioms hold\n" : "axioms violated\n");
	emit(c, report, text);
	return ok ? kExitPass : kExitMath;
}

} // namespace

int main(int argc, char **argv)
{
	RunConfig c;
	CLI::App app{"Exact computations with cyclotomic associators and their symmetry groups"};
	app.require_subcommand(1);
	app.set_version_flag("--version", library_version());

	auto common = [&](CLI::App *s) {
		s->add_option("--out", c.out, "write the JSON report to FILE");
		s->add_option("--prime-probe", c.prime_probe, "prime for the rank cross-check");
		s->add_flag("--exact-only", c.exact_only, "skip the prime-field cross-check");
		s->add_flag("--force", c.force, "lift the desk-scale degree caps");
	};

	auto dims = app.add_subcommand("dims", "graded dimensions of a relation system");
	dims->add_option("--system", c.system, "relation system")->check(CLI::IsMember(system_names()));
	dims->add_option("--N", c.N, "level N")->check(CLI::Range(1, 12));
	dims->add_option("--rank", c.rank, "rank of the free control system")->check(CLI::Range(1, 8));
	dims->add_option("--max-degree", c.max_degree, "largest degree")->check(CLI::Range(1, 12));
	dims->add_option("--bundle-dir", c.bundle_dir, "write one basis bundle per degree");
	dims->add_flag("--timestamp", c.timestamp, "record a timestamp in bundles");
	common(dims);

	auto check = app.add_subcommand("check", "residuals of a pair or of a basis bundle");
	check->add_option("--system", c.system, "relation system")->check(CLI::IsMember(system_names()));
	check->add_option("--input", c.input, "pair or bundle JSON")->required();
	check->add_option("--mode", c.mode, "lie or group")->check(CLI::IsMember({"lie", "group"}));
	check->add_option("--rank", c.rank, "rank of the free control system");
	check->add_flag("--residuals", c.with_residuals, "include nonzero residual series");
	common(check);

	auto verify = app.add_subcommand("verify-theorems", "elimination theorems and Broadhurst duality checks");
	verify->add_option("--theorem", c.theorem, "all, furusho, distribution, octagon or broadhurst");
	verify->add_option("--N", c.N, "level for the distribution and octagon theorems")->check(CLI::Range(1, 12));
	verify->add_option("--max-degree", c.max_degree, "largest degree")->check(CLI::Range(1, 12));
	common(verify);

	auto axioms = app.add_subcommand("axioms", "category axioms for the structure twisted by a pair");
	axioms->add_option("--input", c.input, "group-mode pair JSON")->required();
	axioms->add_option("--axioms", c.axioms, "all, ibmc, imc, i, iii, I, II, IV (comma separated)");
	axioms->add_option("--max-length", c.max_length, "bound on the total object length")->check(CLI::Range(1, 6));
	common(axioms);

	c.N = 0;
	c.max_degree = 0;
	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::CallForHelp &e)
	{
		return app.exit(e);
	}
	catch (const CLI::CallForAllHelp &e)
	{
		return app.exit(e);
	}
	catch (const CLI::CallForVersion &e)
	{
		return app.exit(e);
	}
	catch (const CLI::ParseError &e)
	{
		app.exit(e);
		return kExitUsage;
	}

	try
	{
		if (dims->parsed())
		{
			c.command = "dims";
			c.N = c.N ? c.N : 1;
			c.max_degree = c.max_degree ? c.max_degree : 5;
			return cmd_dims(c);
		}
		if (check->parsed())
		{
			c.command = "check";
			if (check->count("--system") == 0)
				c.system = "grtm";
			return cmd_check(c);
		}
		if (verify->parsed())
		{
			c.command = "verify-theorems";
			c.N = c.N ? c.N : 2;
			c.max_degree = c.max_degree ? c.max_degree : 4;
			return cmd_verify(c);
		}
		c.command = "axioms";
		return cmd_axioms(c);
	}
	catch (const UsageError &e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return kExitUsage;
	}
	catch (const InternalError &e)
	{
		std::cerr << "verification failure: " << e.what() << "\n";
		return kExitMath;
	}
	catch (const std::filesystem::filesystem_error &e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return kExitUsage;
	}
	catch (const Error &e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return kExitUsage;
	}
}
