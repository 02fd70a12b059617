#include "cyclogt/serialize.hpp"

#include <algorithm>
#include <functional>

namespace cyclogt {

namespace {

using Resolver = std::function<Series(const std::string &, int)>;

Rational coeff_from_json(const Json &c)
{
	if (c.is_string())
		return rational_from_string(c.get<std::string>());
	if (c.is_number_integer())
		return Rational(c.get<long>());
	throw Error("coefficient must be a \"p/q\" string or an integer");
}

int longest_word(const Json &terms)
{
	int D = 0;
	for (auto &t : terms)
		D = std::max(D, static_cast<int>(t.at("word").size()));
	return D;
}

Series parse_terms(const Json &j, const AlphabetPtr &alph, const Resolver &resolve)
{
	if (!j.is_object() || !j.contains("terms"))
		throw Error("series must be an object with \"terms\"");
	const Json &terms = j.at("terms");
	int D = j.contains("degree") ? j.at("degree").get<int>() : longest_word(terms);
	std::vector<std::string> labels;
	if (j.contains("alphabet"))
		labels = j.at("alphabet").get<std::vector<std::string>>();
	else
		for (auto &g : alph->generators())
			labels.push_back(g.label);
	std::vector<Series> letters;
	for (auto &l : labels)
		letters.push_back(resolve(l, D));
	Series out = Series::zero(alph, D);
	for (auto &t : terms)
	{
		Series prod = Series::constant(alph, D, coeff_from_json(t.at("coeff")));
		for (auto &k : t.at("word"))
		{
			Series x;
			if (k.is_string())
				x = resolve(k.get<std::string>(), D);
			else
			{
				int idx = k.get<int>();
				if (idx < 0 || idx >= static_cast<int>(letters.size()))
					throw Error("letter index out of range");
				x = letters[idx];
			}
			prod = prod * x;
		}
		out += prod;
	}
	return out;
}

Series parse_plain(const Json &j, const AlphabetPtr &alph)
{
	return parse_terms(j, alph, [&](const std::string &l, int D) { return Series::letter(alph, D, alph->index(l)); });
}

} // namespace

std::string library_version() { return "0.1.0"; }

Json series_to_json(const Series &s)
{
	Json j;
	Json labels = Json::array();
	for (auto &g : s.alphabet().generators())
		labels.push_back(g.label);
	j["alphabet"] = labels;
	j["N"] = s.alphabet().N();
	j["degree"] = s.degree();
	Json terms = Json::array();
	for (auto &[w, c] : s.sorted_terms())
		terms.push_back(Json{{"word", w.letters()}, {"coeff", rational_to_string(c)}});
	j["terms"] = terms;
	return j;
}

Series series_from_json(const Json &j, const PresentedAlgebra &target)
{
	Series s = parse_terms(j, target.alphabet(),
	                       [&](const std::string &l, int D) { return target.parse_label(l, D); });
	return target.is_free() ? s : target.normal_form(s);
}

Json algebra_id_to_json(const AlgebraId &id)
{
	return Json{{"family", family_name(id.family)}, {"n", id.n}, {"N", id.N}};
}

AlgebraId algebra_id_from_json(const Json &j)
{
	AlgebraId id;
	id.family = family_from_name(j.at("family").get<std::string>());
	id.n = j.at("n").get<int>();
	id.N = j.value("N", 1);
	return id;
}

Json generator_map_to_json(const GeneratorMap &m, const AlgebraId &source, const AlgebraId &target)
{
	Json images = Json::object();
	for (int k = 0; k < m.source->size(); ++k)
		images[(*m.source)[k].label] = series_to_json(m.images.at(k));
	return Json{{"source", algebra_id_to_json(source)}, {"target", algebra_id_to_json(target)}, {"images", images}};
}

Json pair_to_json(const PairGH &p)
{
	return Json{{"mode", mode_name(p.mode)},
	            {"N", p.N},
	            {"degree", p.degree},
	            {"first", series_to_json(p.first)},
	            {"second", series_to_json(p.second)}};
}

PairGH pair_from_json(const Json &j)
{
	if (!j.is_object())
		throw Error("pair must be a JSON object");
	Mode mode = mode_from_name(j.value("mode", std::string("lie")));
	int N = j.value("N", 1);
	if (N < 1)
		throw Error("N must be positive");
	auto &a1 = t03(1);
	auto &aN = t03(N);
	std::optional<Series> first, second;
	if (j.contains("first"))
		first = series_from_json(j.at("first"), a1);
	if (j.contains("second"))
		second = series_from_json(j.at("second"), aN);
	int D = j.contains("degree") ? j.at("degree").get<int>()
	                             : std::max(first ? first->degree() : 0, second ? second->degree() : 0);
	auto fill = [&](const PresentedAlgebra &a) { return mode == Mode::Lie ? a.zero(D) : a.one(D); };
	Series f = first ? first->with_degree(D) : fill(a1);
	Series s = second ? second->with_degree(D) : fill(aN);
	return PairGH::make(f, s, mode);
}

Json residual_to_json(const std::string &relation, const std::string &variant, int N, int degree,
                      const Residual &r, bool with_residual)
{
	Json j{{"relation", relation},
	       {"variant", variant},
	       {"N", N},
	       {"degree", degree},
	       {"zero", r.zero},
	       {"lowest_nonzero_degree", nullptr}};
	if (r.lowest_nonzero_degree)
		j["lowest_nonzero_degree"] = *r.lowest_nonzero_degree;
	if (with_residual && !r.zero)
		j["residual"] = series_to_json(r.value);
	return j;
}

Json unknown_to_json(const RelationSystem &sys, const Unknown &u)
{
	if (sys.is_free())
		return series_to_json(u.at(0));
	return pair_to_json(as_pair(sys, u));
}

Unknown unknown_from_json(const RelationSystem &sys, const Json &j, int degree)
{
	if (sys.is_free())
	{
		std::vector<std::string> labels;
		for (int k = 1; k <= sys.free_rank; ++k)
			labels.push_back("x" + std::to_string(k));
		return {parse_plain(j, make_plain_alphabet(labels)).with_degree(degree)};
	}
	PairGH p = pair_from_json(j);
	if (p.N != sys.N)
		throw Error("basis element N does not match the system");
	Unknown u;
	if (sys.has_phi)
		u.push_back(p.first.with_degree(degree));
	if (sys.has_psi)
		u.push_back(p.second.with_degree(degree));
	return u;
}

Json bundle_to_json(const RelationSystem &sys, const SolutionSpace &s, const std::vector<long> &ambient_dims,
                    bool with_timestamp)
{
	Json basis = Json::array();
	for (auto &u : s.basis)
		basis.push_back(unknown_to_json(sys, u));
	Json j{{"system", s.system}, {"N", s.N}, {"degree", s.degree}, {"basis", basis},
	       {"ambient_dims", ambient_dims}, {"rank", s.rank}};
	if (sys.is_free())
		j["free_rank"] = sys.free_rank;
	j["columns"] = s.columns;
	j["rows"] = s.rows;
	j["nonzeros"] = s.nonzeros;
	j["probe_mismatch"] = s.probe_mismatch;
	if (with_timestamp)
		j["timestamp"] = s.timestamp;
	return j;
}

SolutionSpace bundle_from_json(const Json &j, RelationSystem *sys_out)
{
	SolutionSpace s;
	s.system = j.at("system").get<std::string>();
	s.N = j.at("N").get<int>();
	s.degree = j.at("degree").get<int>();
	s.rank = j.value("rank", 0);
	s.columns = j.value("columns", 0);
	s.rows = j.value("rows", 0);
	s.nonzeros = j.value("nonzeros", 0L);
	s.probe_mismatch = j.value("probe_mismatch", false);
	s.timestamp = j.value("timestamp", std::string());
	RelationSystem sys = named_system(s.system, s.N, j.value("free_rank", 2));
	for (auto &b : j.at("basis"))
		s.basis.push_back(unknown_from_json(sys, b, s.degree));
	if (sys_out)
		*sys_out = sys;
	return s;
}

Json dims_row_to_json(const DimsRow &r)
{
	return Json{{"degree", r.degree}, {"dim", r.dim},     {"columns", r.columns},
	            {"rows", r.rows},     {"rank", r.rank},   {"nonzeros", r.nonzeros},
	            {"probe_mismatch", r.probe_mismatch}};
}

Json axiom_reports_to_json(const std::vector<AxiomReport> &r)
{
	Json out = Json::array();
	for (auto &a : r)
	{
		Json j{{"axiom", axiom_name(a.axiom)}, {"objects", a.objects}, {"zero", a.zero},
		       {"lowest_nonzero_degree", nullptr}};
		if (a.lowest_nonzero_degree)
			j["lowest_nonzero_degree"] = *a.lowest_nonzero_degree;
		if (a.group_mismatch)
			j["group_mismatch"] = true;
		out.push_back(j);
	}
	return out;
}

} // namespace cyclogt
