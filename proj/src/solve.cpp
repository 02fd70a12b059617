#include "cyclogt/solve.hpp"

#include "cyclogt/freelie.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <iostream>
#include <map>
#include <numeric>
#include <random>

namespace cyclogt {

std::string Predicate::name() const
{
	switch (kind)
	{
	case PredicateKind::Duality:
		return "duality";
	case PredicateKind::Hexagon:
		return "hexagon";
	case PredicateKind::HexagonM:
		return "hexagon-m";
	case PredicateKind::Special:
		return "special";
	case PredicateKind::Pentagon:
		return "pentagon";
	case PredicateKind::MixedPentagon:
		return "mixed-pentagon";
	case PredicateKind::Octagon:
		return "octagon";
	case PredicateKind::OctagonPseudo:
		return "octagon-pseudo";
	case PredicateKind::SpecialCyclotomic:
		return "special-b";
	case PredicateKind::Distribution:
		return "distribution(" + std::to_string(nprime) + ")";
	case PredicateKind::Broadhurst:
		return "broadhurst";
	case PredicateKind::CoeffZero:
	{
		std::string s = "c_";
		for (auto &l : word)
			s += l;
		return s + (on_psi ? "(psi)" : "(phi)") + "=0";
	}
	}
	return "?";
}

int Predicate::degree_offset() const
{
	return kind == PredicateKind::Special || kind == PredicateKind::SpecialCyclotomic ? 1 : 0;
}

Predicate coeff_zero(bool on_psi, std::vector<std::string> word)
{
	Predicate p;
	p.kind = PredicateKind::CoeffZero;
	p.on_psi = on_psi;
	p.word = std::move(word);
	return p;
}

bool RelationSystem::same_unknowns(const RelationSystem &o) const
{
	return N == o.N && has_phi == o.has_phi && has_psi == o.has_psi && free_rank == o.free_rank;
}

std::vector<std::string> system_names()
{
	return {"grt1",          "hexagons",    "pentagon", "furusho",       "m1",
	        "grtm",          "grtm-orig",   "grtmd",    "grtmb2",        "pseudo",
	        "mixed-pentagon", "mixed-pentagon-c", "octagon", "distribution1", "free"};
}

namespace {

Predicate pk(PredicateKind k, int nprime = 1)
{
	Predicate p;
	p.kind = k;
	p.nprime = nprime;
	return p;
}

std::vector<Predicate> grt1_predicates()
{
	return {pk(PredicateKind::Duality), pk(PredicateKind::Hexagon), pk(PredicateKind::Special),
	        pk(PredicateKind::Pentagon)};
}

RelationSystem phi_system(std::string name, std::vector<Predicate> preds)
{
	RelationSystem s;
	s.name = std::move(name);
	s.N = 1;
	s.has_phi = true;
	s.has_psi = false;
	s.predicates = std::move(preds);
	return s;
}

RelationSystem pair_system(std::string name, int N, std::vector<Predicate> preds)
{
	if (N < 1)
		throw Error("N must be positive");
	RelationSystem s;
	s.name = std::move(name);
	s.N = N;
	s.has_phi = true;
	s.has_psi = true;
	s.predicates = std::move(preds);
	return s;
}

} // namespace

RelationSystem named_system(std::string_view name, int N, int rank)
{
	using K = PredicateKind;
	std::string n(name);
	if (n == "grt1")
		return phi_system(n, grt1_predicates());
	if (n == "hexagons")
		return phi_system(n, {pk(K::Duality), pk(K::Hexagon)});
	if (n == "pentagon")
		return phi_system(n, {pk(K::Pentagon)});
	if (n == "furusho")
		return phi_system(n, {pk(K::Pentagon), coeff_zero(false, {"B"}), coeff_zero(false, {"A", "B"})});
	if (n == "m1")
		return phi_system(n, {pk(K::Duality), pk(K::HexagonM), pk(K::Pentagon)});
	if (n == "grtm" || n == "grtm-orig" || n == "grtmd" || n == "grtmb2")
	{
		if (n == "grtmb2")
			N = 2;
		auto preds = grt1_predicates();
		preds.push_back(pk(K::MixedPentagon));
		preds.push_back(pk(K::Octagon));
		preds.push_back(pk(K::SpecialCyclotomic));
		if (n != "grtm-orig")
			preds.push_back(coeff_zero(true, {"B(0)"}));
		if (n == "grtmd")
			for (int d = 1; d < N; ++d)
				if (N % d == 0)
					preds.push_back(pk(K::Distribution, d));
		if (n == "grtmb2")
			preds.push_back(pk(K::Broadhurst));
		return pair_system(n, N, preds);
	}
	if (n == "pseudo")
		return pair_system(n, N,
		                   {pk(K::Duality), pk(K::HexagonM), pk(K::Pentagon), pk(K::MixedPentagon),
		                    pk(K::OctagonPseudo), coeff_zero(true, {"B(0)"})});
	if (n == "mixed-pentagon")
		return pair_system(n, N, {pk(K::MixedPentagon)});
	if (n == "mixed-pentagon-c")
		return pair_system(n, N,
		                   {pk(K::MixedPentagon), coeff_zero(true, {"B(0)"}), coeff_zero(true, {"A", "B(0)"})});
	if (n == "octagon")
		return pair_system(n, N, {pk(K::Octagon)});
	if (n == "distribution1")
		return pair_system(n, N, {pk(K::Distribution, 1)});
	if (n == "free")
	{
		if (rank < 1 || rank > Word::kMaxLetters)
			throw Error("free system rank out of range");
		RelationSystem s;
		s.name = n;
		s.N = 1;
		s.has_phi = false;
		s.has_psi = false;
		s.free_rank = rank;
		return s;
	}
	throw Error("unknown relation system '" + n + "'");
}

namespace {

Residual coeff_residual(const Predicate &pr, const Series &x, Mode mode, int D)
{
	Series v = mode == Mode::Lie ? x.with_degree(D) : log_series(x.with_degree(D));
	auto &alph = x.alphabet_ptr();
	std::vector<int> letters;
	for (auto &l : pr.word)
	{
		auto k = alph->find(l);
		if (!k && l == "B(0)" && alph->N() == 1)
			k = alph->find("B");
		if (!k)
			throw Error("coefficient word has unknown letter " + l);
		letters.push_back(*k);
	}
	Word w(letters);
	Series r = Series::zero(alph, D);
	if (w.size() <= D)
		r.add_term(w, v.coeff(w));
	return make_residual(t0_alg(3, alph->N()), r);
}

} // namespace

std::vector<Residual> evaluate(const RelationSystem &sys, const PairGH &p, int D)
{
	using K = PredicateKind;
	if (sys.is_free())
		return {};
	if (p.N != sys.N)
		throw Error("pair N does not match the system");
	Mode m = p.mode;
	bool lie = m == Mode::Lie;
	std::vector<Residual> out;
	out.reserve(sys.predicates.size());
	for (auto &pr : sys.predicates)
	{
		switch (pr.kind)
		{
		case K::Duality:
			out.push_back(residual_duality(p.first, m, D));
			break;
		case K::Hexagon:
			out.push_back(residual_hexagon(p.first, lie ? HexagonVariant::Lie : HexagonVariant::Group, D));
			break;
		case K::HexagonM:
			out.push_back(residual_hexagon(p.first, lie ? HexagonVariant::Lie : HexagonVariant::M, D));
			break;
		case K::Special:
			out.push_back(residual_special(p.first, m, D));
			break;
		case K::Pentagon:
			out.push_back(residual_pentagon(p.first, m, D));
			break;
		case K::MixedPentagon:
			out.push_back(residual_mixed_pentagon(p, D));
			break;
		case K::Octagon:
			out.push_back(residual_octagon(p.second, lie ? OctagonVariant::Lie : OctagonVariant::Group, D));
			break;
		case K::OctagonPseudo:
			out.push_back(residual_octagon(p.second, lie ? OctagonVariant::Lie : OctagonVariant::Pseudo, D));
			break;
		case K::SpecialCyclotomic:
			out.push_back(residual_special_cyclotomic(p.second, m, D));
			break;
		case K::Distribution:
			out.push_back(residual_distribution(p.second, m, pr.nprime, D));
			break;
		case K::Broadhurst:
			out.push_back(residual_broadhurst(p.second, m, D).residual);
			break;
		case K::CoeffZero:
			out.push_back(coeff_residual(pr, pr.on_psi ? p.second : p.first, m, D));
			break;
		}
	}
	return out;
}

bool valid_mod(const RelationSystem &sys, const PairGH &p, int n)
{
	auto res = evaluate(sys, p, n);
	for (size_t k = 0; k < res.size(); ++k)
	{
		int bound = n - 1 + sys.predicates[k].degree_offset();
		if (res[k].lowest_nonzero_degree && *res[k].lowest_nonzero_degree <= bound)
			return false;
	}
	return true;
}

PairGH as_pair(const RelationSystem &sys, const Unknown &u, Mode mode)
{
	if (sys.is_free())
		throw Error("the free system has no pair unknown");
	int D = u.at(0).degree();
	auto fill = [&](const PresentedAlgebra &a) { return mode == Mode::Lie ? a.zero(D) : a.one(D); };
	Series first = sys.has_phi ? u.at(0) : fill(t03(1));
	Series second = sys.has_psi ? u.at(sys.has_phi ? 1 : 0) : fill(t03(sys.N));
	return PairGH::make(first, second, mode);
}

std::vector<Unknown> lyndon_columns(const RelationSystem &sys, int d)
{
	std::vector<Unknown> cols;
	if (sys.is_free())
	{
		std::vector<std::string> labels;
		for (int k = 1; k <= sys.free_rank; ++k)
			labels.push_back("x" + std::to_string(k));
		auto alph = make_plain_alphabet(labels);
		for (auto &e : lyndon_basis(alph, d))
			cols.push_back({e.expansion});
		return cols;
	}
	std::vector<const PresentedAlgebra *> comps;
	if (sys.has_phi)
		comps.push_back(&t03(1));
	if (sys.has_psi)
		comps.push_back(&t03(sys.N));
	for (size_t c = 0; c < comps.size(); ++c)
		for (auto &e : lyndon_basis(comps[c]->alphabet(), d))
		{
			Unknown u;
			for (size_t k = 0; k < comps.size(); ++k)
				u.push_back(k == c ? e.expansion : comps[k]->zero(d));
			cols.push_back(u);
		}
	return cols;
}

AssembledSystem assemble(const RelationSystem &sys, int d, const SolveOptions &opt)
{
	if (d < 1)
		throw Error("degree must be positive");
	AssembledSystem as;
	as.columns = lyndon_columns(sys, d);
	if (opt.permutation_seed != 0)
	{
		std::mt19937 rng(opt.permutation_seed);
		std::shuffle(as.columns.begin(), as.columns.end(), rng);
	}
	std::map<std::pair<int, uint64_t>, int> key_index;
	for (size_t c = 0; c < as.columns.size() && !sys.is_free(); ++c)
	{
		auto res = evaluate(sys, as_pair(sys, as.columns[c]), d + 1);
		for (size_t k = 0; k < res.size(); ++k)
		{
			int target = d + sys.predicates[k].degree_offset();
			for (auto &[w, q] : res[k].value.terms())
			{
				if (w.size() != target)
					throw InternalError("Lie residual of " + sys.predicates[k].name() + " is not homogeneous");
				auto key = std::make_pair(static_cast<int>(k), w.key());
				auto it = key_index.find(key);
				if (it == key_index.end())
				{
					it = key_index.emplace(key, static_cast<int>(as.rows.size())).first;
					as.rows.emplace_back();
					as.row_keys.emplace_back(static_cast<int>(k), w);
				}
				as.rows[it->second].emplace_back(static_cast<int>(c), q);
				++as.nonzeros;
			}
		}
	}
	return as;
}

std::string utc_timestamp()
{
	std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
	std::tm tm{};
	gmtime_r(&t, &tm);
	char buf[32];
	std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
	return buf;
}

SolutionSpace graded_nullspace(const RelationSystem &sys, int d, const SolveOptions &opt)
{
	AssembledSystem as = assemble(sys, d, opt);
	int ncols = static_cast<int>(as.columns.size());
	ExactEchelon ech(ncols);
	for (auto &r : as.rows)
	{
		ech.add_row(r);
		if (ech.full())
			break;
	}
	SolutionSpace out;
	out.system = sys.name;
	out.N = sys.N;
	out.degree = d;
	out.columns = ncols;
	out.rows = static_cast<int>(as.rows.size());
	out.rank = ech.rank();
	out.nonzeros = as.nonzeros;
	out.timestamp = utc_timestamp();
	if (opt.prime_probe)
	{
		ModpEchelon mp(ncols, *opt.prime_probe);
		for (auto &r : as.rows)
			mp.add_row(r);
		if (mp.rank() != ech.rank())
		{
			out.probe_mismatch = true;
			std::cerr << "prime probe mod " << *opt.prime_probe << " disagrees with the exact rank at degree " << d
			          << " (" << mp.rank() << " vs " << ech.rank() << "); using the exact result\n";
		}
	}
	for (auto &v : ech.nullspace())
	{
		Unknown u;
		for (size_t k = 0; k < as.columns[0].size(); ++k)
		{
			Series s = Series::zero(as.columns[0][k].alphabet_ptr(), d);
			for (int c = 0; c < ncols; ++c)
				if (sgn(v[c]) != 0)
					s += v[c] * as.columns[c][k];
			u.push_back(s);
		}
		out.basis.push_back(u);
	}
	if (opt.verify && !sys.is_free())
		for (auto &u : out.basis)
			for (auto &r : evaluate(sys, as_pair(sys, u), d + 1))
				if (!r.zero)
					throw InternalError("nullspace vector of " + sys.name + " fails a residual");
	return out;
}

ImplicationResult implication_check(const RelationSystem &a, const RelationSystem &b, int d,
                                    const SolveOptions &opt)
{
	if (!a.same_unknowns(b))
		throw Error("implication check needs systems over the same unknowns");
	auto space = graded_nullspace(a, d, opt);
	ImplicationResult out;
	out.dim_a = space.dim();
	for (auto &u : space.basis)
	{
		auto res = evaluate(b, as_pair(b, u), d + 1);
		std::vector<std::string> bad;
		for (size_t k = 0; k < res.size(); ++k)
			if (!res[k].zero)
				bad.push_back(b.predicates[k].name());
		if (!bad.empty())
		{
			out.holds = false;
			out.witness = u;
			out.violated = bad;
			break;
		}
	}
	return out;
}

std::vector<DimsRow> dims_report(const RelationSystem &sys, int dmax, const SolveOptions &opt)
{
	std::vector<DimsRow> out;
	for (int d = 1; d <= dmax; ++d)
	{
		auto s = graded_nullspace(sys, d, opt);
		out.push_back({d, s.dim(), s.columns, s.rows, s.rank, s.nonzeros, s.probe_mismatch});
	}
	return out;
}

std::vector<long> pbw_ambient_dims(int N, int dmax)
{
	auto &t4 = PresentedAlgebra::get(t_alg(4, N));
	int L = t4.alphabet()->size();
	// normal words of U(t_{4,N}) by degree, enumerated and tested one by one
	std::vector<long> full(dmax + 1, 0);
	std::vector<Word> layer{Word()};
	full[0] = 1;
	for (int d = 1; d <= dmax; ++d)
	{
		std::vector<Word> next;
		for (auto &w : layer)
			for (int x = 0; x < L; ++x)
			{
				Word v = w.append(x);
				Series s = t4.zero(d);
				s.add_term(v, 1);
				if (t4.is_normal(s))
					next.push_back(v);
			}
		full[d] = static_cast<long>(next.size());
		layer = std::move(next);
	}
	// U(t_{4,N}) = U(t0_{4,N}) (x) k[z]
	std::vector<long> out(dmax + 1);
	out[0] = 1;
	for (int d = 1; d <= dmax; ++d)
		out[d] = full[d] - full[d - 1];
	return out;
}

std::vector<long> linear_quotient_dims(int N, int dmax)
{
	auto &t4 = PresentedAlgebra::get(t_alg(4, N));
	int pole4 = t4.pole(4);
	std::vector<std::string> labels;
	std::vector<int> old_to_new(t4.alphabet()->size(), -1);
	for (int k = 0; k < t4.alphabet()->size(); ++k)
		if (k != pole4)
		{
			old_to_new[k] = static_cast<int>(labels.size());
			labels.push_back((*t4.alphabet())[k].label);
		}
	auto alph = make_plain_alphabet(labels, N);
	int L = alph->size();
	// t0_{4,N} = t_{4,N}/(z): t^{14} is minus the sum of the other generators
	GeneratorMap m{t4.alphabet(), alph, {}, "drop-z"};
	for (int k = 0; k < t4.alphabet()->size(); ++k)
	{
		if (k == pole4)
		{
			Series s = Series::zero(alph, 2);
			for (int j = 0; j < L; ++j)
				s -= Series::letter(alph, 2, j);
			m.images.push_back(s);
		}
		else
			m.images.push_back(Series::letter(alph, 2, old_to_new[k]));
	}
	std::vector<std::vector<std::pair<std::pair<int, int>, Rational>>> rels;
	for (auto &r : t4.relations())
	{
		Series s = substitute(t4.relation_series(r, 2), m);
		std::vector<std::pair<std::pair<int, int>, Rational>> terms;
		for (auto &[w, c] : s.terms())
			terms.push_back({{w[0], w[1]}, c});
		if (!terms.empty())
			rels.push_back(terms);
	}
	std::vector<long> out(dmax + 1);
	out[0] = 1;
	long total = 1;
	for (int d = 1; d <= dmax; ++d)
	{
		total *= L;
		if (d == 1)
		{
			out[d] = L;
			continue;
		}
		SparseEchelon ech;
		long pre_count = 1;
		for (int i = 0; i <= d - 2; ++i)
		{
			long post_count = 1;
			for (int k = 0; k < d - 2 - i; ++k)
				post_count *= L;
			long mid = static_cast<long>(L) * L;
			for (long u = 0; u < pre_count; ++u)
				for (long v = 0; v < post_count; ++v)
					for (auto &terms : rels)
					{
						SparseRow row;
						for (auto &[xy, c] : terms)
						{
							long col = (u * mid + xy.first * L + xy.second) * post_count + v;
							row.emplace_back(static_cast<int>(col), c);
						}
						std::sort(row.begin(), row.end(),
						          [](auto &a, auto &b) { return a.first < b.first; });
						ech.add_row(row);
					}
			pre_count *= L;
		}
		out[d] = total - ech.rank();
	}
	return out;
}

} // namespace cyclogt
