#include "cyclogt/tkn.hpp"

#include "cyclogt/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cyclogt {

namespace {

int mod(int a, int N) { return ((a % N) + N) % N; }

std::string index_pair(int i, int j)
{
	if (i < 10 && j < 10)
		return std::to_string(i) + std::to_string(j);
	return std::to_string(i) + "," + std::to_string(j);
}

// Registry of presented algebras, each built once.
std::mutex registry_mutex;
std::map<std::tuple<int, int, int>, std::unique_ptr<PresentedAlgebra>> &registry()
{
	static std::map<std::tuple<int, int, int>, std::unique_ptr<PresentedAlgebra>> r;
	return r;
}

} // namespace

std::string family_name(Family f)
{
	switch (f)
	{
	case Family::T:
		return "t";
	case Family::T0:
		return "t0";
	case Family::U:
		return "u";
	case Family::Free:
		return "free";
	}
	return "?";
}

Family family_from_name(std::string_view s)
{
	if (s == "t")
		return Family::T;
	if (s == "t0")
		return Family::T0;
	if (s == "u")
		return Family::U;
	if (s == "free")
		return Family::Free;
	throw Error("unknown algebra family " + std::string(s));
}

std::string AlgebraId::name() const
{
	return family_name(family) + "(" + std::to_string(n) + "," + std::to_string(N) + ")";
}

AlgebraId t_alg(int n, int N) { return {Family::T, n, N}; }
AlgebraId t0_alg(int n, int N) { return {Family::T0, n, N}; }
AlgebraId u_alg(int n, int N) { return {Family::U, n, N}; }
AlgebraId free_alg(int rank) { return {Family::Free, rank, 1}; }

std::string t_label(int i, int j, int a, int N, bool pole)
{
	if (pole)
		return "t^{" + index_pair(1, j) + "}";
	if (N == 1)
		return "t^{" + index_pair(i, j) + "}";
	return "t(" + std::to_string(a) + ")^{" + index_pair(i, j) + "}";
}

const PresentedAlgebra &PresentedAlgebra::get(const AlgebraId &id_in)
{
	AlgebraId id = id_in;
	if (id.N < 1 || id.n < 0)
		throw Error("invalid algebra " + id.name());
	// t0_{n,N} for n>=4 lives inside U(t_{n,N})
	if (id.family == Family::T0 && id.n != 3)
		id.family = Family::T;
	if (id.family == Family::Free)
		id.N = 1;
	auto key = std::make_tuple(static_cast<int>(id.family), id.n, id.N);
	std::lock_guard<std::mutex> lock(registry_mutex);
	auto &r = registry();
	auto it = r.find(key);
	if (it == r.end())
		it = r.emplace(key, std::unique_ptr<PresentedAlgebra>(new PresentedAlgebra(id))).first;
	return *it->second;
}

PresentedAlgebra::PresentedAlgebra(const AlgebraId &id) : id_(id)
{
	std::vector<Generator> gens;
	int N = id.N;
	using K = GeneratorRole::Kind;
	switch (id.family)
	{
	case Family::T:
		for (int k = 2; k <= id.n; ++k)
		{
			gens.push_back({t_label(1, k, 0, N, true), {K::Pole, 1, k, 0}, k});
			for (int i = 2; i < k; ++i)
				for (int a = 0; a < N; ++a)
					gens.push_back({t_label(i, k, a, N, false), {K::Cyclotomic, i, k, a}, k});
		}
		break;
	case Family::U:
		for (int k = 2; k <= id.n; ++k)
			for (int i = 1; i < k; ++i)
				for (int a = 0; a < N; ++a)
					gens.push_back({"t(" + std::to_string(a) + ")^{" + index_pair(i, k) + "}",
					                {K::Cyclotomic, i, k, a},
					                k});
		break;
	case Family::T0:
		gens.push_back({"A", {K::Pole, 1, 2, 0}, 2});
		for (int a = 0; a < N; ++a)
			gens.push_back({N == 1 ? "B" : "B(" + std::to_string(a) + ")", {K::Cyclotomic, 2, 3, a}, 3});
		free_ = true;
		break;
	case Family::Free:
		for (int k = 1; k <= id.n; ++k)
			gens.push_back({"x" + std::to_string(k), {}, 0});
		free_ = true;
		break;
	}
	alphabet_ = std::make_shared<Alphabet>(std::move(gens), N);
	if (!free_)
	{
		build_relations();
		derive_table();
		verify_derivation_action();
	}
}

int PresentedAlgebra::pole(int j) const
{
	auto k = alphabet_->find_role({GeneratorRole::Kind::Pole, 1, j, 0});
	if (!k)
		throw Error("no generator t^{1" + std::to_string(j) + "} in " + id_.name());
	return *k;
}

int PresentedAlgebra::cyc(int i, int j, int a) const
{
	if (i == j)
		throw Error("t(a)^{ii} is not a generator");
	if (i > j)
	{
		std::swap(i, j);
		a = -a;
	}
	auto k = alphabet_->find_role({GeneratorRole::Kind::Cyclotomic, i, j, mod(a, id_.N)});
	if (!k)
		throw Error("no generator t(" + std::to_string(a) + ")^{" + index_pair(i, j) + "} in " + id_.name());
	return *k;
}

Series PresentedAlgebra::t_cyc(int i, int j, int a, int D) const { return letter(cyc(i, j, a), D); }

Series PresentedAlgebra::t_sum(int i, int j, int D) const
{
	if (i > j)
		std::swap(i, j);
	if (i == 1 && id_.family != Family::U)
		return letter(pole(j), D);
	Series s = zero(D);
	for (int c = 0; c < id_.N; ++c)
		s += t_cyc(i, j, c, D);
	return s;
}

Series PresentedAlgebra::C(int D) const
{
	if (id_.family != Family::T0)
		throw Error("C is defined in t0_{3,N} only");
	Series s = zero(D);
	for (int k = 0; k < alphabet_->size(); ++k)
		s -= letter(k, D);
	return s;
}

Series PresentedAlgebra::central_element(int D) const
{
	if (id_.family != Family::T)
		throw Error("central element is defined for t_{n,N}");
	Series z = zero(D);
	for (int i = 1; i <= id_.n; ++i)
		for (int j = i + 1; j <= id_.n; ++j)
			z += t_sum(i, j, D);
	return z;
}

Series PresentedAlgebra::parse_label(std::string_view label, int D) const
{
	if (auto k = alphabet_->find(label))
		return letter(*k, D);
	if (id_.family == Family::T0)
	{
		if (label == "C")
			return C(D);
		if (id_.N == 1 && label == "B(0)")
			return letter(1, D);
		if (label.size() > 3 && label.substr(0, 2) == "B(" && label.back() == ')')
		{
			int a = std::stoi(std::string(label.substr(2, label.size() - 3)));
			return letter(1 + mod(a, id_.N), D);
		}
		throw Error("unknown generator " + std::string(label));
	}
	// t(a)^{ij} or t^{ij}
	std::string s(label);
	if (s.size() < 5 || s[0] != 't')
		throw Error("unknown generator " + s);
	std::optional<int> a;
	size_t pos = 1;
	if (s[pos] == '(')
	{
		size_t close = s.find(')', pos);
		if (close == std::string::npos)
			throw Error("unknown generator " + s);
		a = std::stoi(s.substr(pos + 1, close - pos - 1));
		pos = close + 1;
	}
	if (s.compare(pos, 2, "^{") != 0 || s.back() != '}')
		throw Error("unknown generator " + s);
	std::string inner = s.substr(pos + 2, s.size() - pos - 3);
	int i, j;
	if (auto comma = inner.find(','); comma != std::string::npos)
	{
		i = std::stoi(inner.substr(0, comma));
		j = std::stoi(inner.substr(comma + 1));
	}
	else if (inner.size() == 2)
	{
		i = inner[0] - '0';
		j = inner[1] - '0';
	}
	else
		throw Error("unknown generator " + s);
	if (a)
		return t_cyc(i, j, *a, D);
	return t_sum(i, j, D);
}

void PresentedAlgebra::build_relations()
{
	int n = id_.n, N = id_.N;
	int lo = id_.family == Family::U ? 1 : 2;
	auto add = [&](LieRelation r) { relations_.push_back(std::move(r)); };
	for (int i = lo; i <= n; ++i)
		for (int j = lo; j <= n; ++j)
		{
			if (i == j)
				continue;
			for (int k = lo; k <= n; ++k)
			{
				if (k == i || k == j)
					continue;
				for (int a = 0; a < N; ++a)
					for (int b = 0; b < N; ++b)
						add({{{1, cyc(i, j, a), cyc(i, k, a + b)}, {1, cyc(i, j, a), cyc(j, k, b)}}, "R2"});
				for (int l = lo; l <= n; ++l)
				{
					if (l == i || l == j || l == k)
						continue;
					for (int a = 0; a < N; ++a)
						for (int b = 0; b < N; ++b)
							add({{{1, cyc(i, j, a), cyc(k, l, b)}}, "R5b"});
				}
				if (id_.family == Family::T)
					for (int a = 0; a < N; ++a)
						add({{{1, pole(i), cyc(j, k, a)}}, "R5a"});
			}
			if (id_.family != Family::T)
				continue;
			for (int a = 0; a < N; ++a)
			{
				LieRelation r{{{1, pole(i), cyc(i, j, a)}, {1, pole(j), cyc(i, j, a)}}, "R3"};
				for (int c = 0; c < N; ++c)
					r.terms.emplace_back(1, cyc(i, j, c), cyc(i, j, a));
				add(std::move(r));
			}
			LieRelation r{{{1, pole(i), pole(j)}}, "R4"};
			for (int c = 0; c < N; ++c)
				r.terms.emplace_back(1, pole(i), cyc(i, j, c));
			add(std::move(r));
		}
}

Series PresentedAlgebra::relation_series(const LieRelation &r, int D) const
{
	Series s = zero(D);
	for (auto &[c, p, q] : r.terms)
		s += c * commutator(letter(p, D), letter(q, D));
	return s;
}

const std::vector<std::pair<Word, Rational>> &PresentedAlgebra::table(int x, int y) const
{
	return table_[x][y];
}

void PresentedAlgebra::derive_table()
{
	int L = alphabet_->size();
	table_.assign(L, std::vector<Terms>(L));
	// columns: pairs p<q; mixed pairs first so that they become pivots
	std::vector<std::pair<int, int>> cols;
	for (int pass = 0; pass < 2; ++pass)
		for (int q = 0; q < L; ++q)
			for (int p = 0; p < q; ++p)
				if ((level(p) < level(q)) == (pass == 0))
					cols.emplace_back(p, q);
	std::map<std::pair<int, int>, int> col_of;
	for (size_t c = 0; c < cols.size(); ++c)
		col_of[cols[c]] = static_cast<int>(c);
	ExactEchelon ech(static_cast<int>(cols.size()));
	for (auto &r : relations_)
	{
		std::map<int, Rational> acc;
		for (auto &[c, p, q] : r.terms)
		{
			if (p == q)
				continue;
			if (p < q)
				acc[col_of.at({p, q})] += c;
			else
				acc[col_of.at({q, p})] -= c;
		}
		SparseRow row;
		for (auto &[col, v] : acc)
			if (sgn(v) != 0)
				row.emplace_back(col, v);
		ech.add_row(row);
	}
	std::set<int> mixed_done;
	for (auto &[piv, row] : ech.rref())
	{
		auto [x, y] = cols[piv];
		if (level(x) == level(y))
			throw InternalError("relations constrain the free ideal of " + id_.name());
		Terms t;
		for (size_t c = 0; c < cols.size(); ++c)
		{
			if (static_cast<int>(c) == piv || sgn(row[c]) == 0)
				continue;
			auto [a, b] = cols[c];
			if (level(a) != level(y) || level(b) != level(y))
				throw InternalError("mixed bracket does not close in the ideal for " + id_.name());
			t.emplace_back(Word({a, b}), -row[c]);
			t.emplace_back(Word({b, a}), row[c]);
		}
		table_[x][y] = std::move(t);
		mixed_done.insert(piv);
	}
	for (size_t c = 0; c < cols.size(); ++c)
		if (level(cols[c].first) < level(cols[c].second) && !mixed_done.count(static_cast<int>(c)))
			throw InternalError("mixed bracket left undetermined in " + id_.name());
}

void PresentedAlgebra::verify_derivation_action() const
{
	int L = alphabet_->size();
	const int D = 3;
	// D_x on a polynomial in the letters of one level, via the table
	auto derive = [&](int x, const Series &s) {
		Series r = zero(D);
		for (auto &[w, c] : s.terms())
			for (int k = 0; k < w.size(); ++k)
			{
				if (level(x) >= level(w[k]))
					throw InternalError("derivation applied outside its ideal");
				Series pre = zero(D), post = zero(D), mid = zero(D);
				pre.add_term(w.prefix(k), 1);
				Word suffix;
				for (int m = k + 1; m < w.size(); ++m)
					suffix = suffix.append(w[m]);
				post.add_term(suffix, 1);
				for (auto &[u, cu] : table_[x][w[k]])
					mid.add_term(u, cu);
				r += c * (pre * mid * post);
			}
		return r;
	};
	for (auto &rel : relations_)
	{
		int top = 0;
		for (auto &[c, p, q] : rel.terms)
			top = std::max({top, level(p), level(q)});
		for (int y = 0; y < L; ++y)
		{
			if (level(y) <= top)
				continue;
			Series ys = letter(y, D);
			Series total = zero(D);
			for (auto &[c, p, q] : rel.terms)
				total += c * (derive(p, derive(q, ys)) - derive(q, derive(p, ys)));
			if (!total.is_zero())
				throw InternalError("bracket table is not a Lie action in " + id_.name());
		}
	}
}

const PresentedAlgebra::Terms &PresentedAlgebra::nf_word(const Word &w) const
{
	{
		std::lock_guard<std::mutex> lock(cache_mutex_);
		auto it = nf_cache_.find(w.key());
		if (it != nf_cache_.end())
			return *it->second;
	}
	Terms result;
	if (w.size() <= 1)
		result.emplace_back(w, 1);
	else
	{
		std::unordered_map<Word, Rational, WordHash> acc;
		for (auto &[u, cu] : nf_word(w.pop_back()))
			for (auto &[v, cv] : rmul(u, w.back()))
			{
				auto [it, fresh] = acc.emplace(v, cu * cv);
				if (!fresh)
					it->second += cu * cv;
			}
		for (auto &[v, c] : acc)
			if (sgn(c) != 0)
				result.emplace_back(v, c);
	}
	std::lock_guard<std::mutex> lock(cache_mutex_);
	auto [it, fresh] = nf_cache_.emplace(w.key(), std::make_unique<Terms>(std::move(result)));
	return *it->second;
}

const PresentedAlgebra::Terms &PresentedAlgebra::rmul(const Word &u, int l) const
{
	Word key = u.append(l);
	{
		std::lock_guard<std::mutex> lock(cache_mutex_);
		auto it = rmul_cache_.find(key.key());
		if (it != rmul_cache_.end())
			return *it->second;
	}
	Terms result;
	if (u.empty() || level(u.back()) >= level(l))
		result.emplace_back(key, 1);
	else
	{
		// q x l = q l x + q [x,l]
		int x = u.back();
		Word q = u.pop_back();
		std::unordered_map<Word, Rational, WordHash> acc;
		auto push = [&](const Word &v, const Rational &c) {
			auto [it, fresh] = acc.emplace(v, c);
			if (!fresh)
				it->second += c;
		};
		for (auto &[r, cr] : rmul(q, l))
			for (auto &[v, cv] : rmul(r, x))
				push(v, cr * cv);
		for (auto &[yw, cy] : table_[x][l])
			for (auto &[r, cr] : rmul(q, yw[0]))
				for (auto &[v, cv] : rmul(r, yw[1]))
					push(v, cy * cr * cv);
		for (auto &[v, c] : acc)
			if (sgn(c) != 0)
				result.emplace_back(v, c);
	}
	std::lock_guard<std::mutex> lock(cache_mutex_);
	auto [it, fresh] = rmul_cache_.emplace(key.key(), std::make_unique<Terms>(std::move(result)));
	return *it->second;
}

Series PresentedAlgebra::normal_form(const Series &s) const
{
	if (!same_alphabet(s.alphabet_ptr(), alphabet_))
		throw Error("series is not over the generators of " + id_.name());
	if (free_)
		return s.with_alphabet(alphabet_);
	Series r(alphabet_, s.degree());
	for (auto &[w, c] : s.terms())
		for (auto &[u, cu] : nf_word(w))
			r.add_term(u, c * cu);
	return r;
}

bool PresentedAlgebra::is_normal(const Series &s) const
{
	if (free_)
		return true;
	for (auto &[w, c] : s.terms())
		for (int k = 1; k < w.size(); ++k)
			if (level(w[k - 1]) < level(w[k]))
				return false;
	return true;
}

Series PresentedAlgebra::mul(const Series &a, const Series &b) const { return normal_form(a * b); }

Series PresentedAlgebra::bracket(const Series &a, const Series &b) const
{
	return normal_form(commutator(a, b));
}

Series PresentedAlgebra::exp(const Series &x) const
{
	if (sgn(x.constant_term()) != 0)
		throw Error("exp requires zero constant term");
	Series result = one(x.degree());
	Series power = result;
	for (int k = 1; k <= x.degree(); ++k)
	{
		power = mul(power, x);
		power *= Rational(1, k);
		if (power.is_zero())
			break;
		result += power;
	}
	return result;
}

Series PresentedAlgebra::log(const Series &g) const
{
	if (g.constant_term() != 1)
		throw Error("log requires constant term 1");
	Series x = g - one(g.degree());
	Series result = zero(g.degree());
	Series power = one(g.degree());
	for (int k = 1; k <= g.degree(); ++k)
	{
		power = mul(power, x);
		if (power.is_zero())
			break;
		result += Rational(k % 2 ? 1 : -1, k) * power;
	}
	return normal_form(result);
}

Series PresentedAlgebra::inverse(const Series &g) const
{
	if (g.constant_term() != 1)
		throw Error("inverse requires constant term 1");
	Series x = one(g.degree()) - g;
	Series result = one(g.degree());
	Series power = result;
	for (int k = 1; k <= g.degree(); ++k)
	{
		power = mul(power, x);
		if (power.is_zero())
			break;
		result += power;
	}
	return normal_form(result);
}

Fibers parse_fibers(std::string_view text)
{
	Fibers f(1);
	for (char ch : text)
	{
		if (ch == ',')
			f.emplace_back();
		else if (ch == '_')
			continue; // explicit empty fiber marker
		else if (ch >= '0' && ch <= '9')
			f.back().push_back(ch - '0');
		else
			throw Error("malformed insertion text " + std::string(text));
	}
	return f;
}

namespace {

// Strand data of a source generator: (i, j, residue, pole)
struct Strands
{
	int i, j, a;
	bool pole;
};

Strands strands_of(const Generator &g)
{
	using K = GeneratorRole::Kind;
	if (g.role.kind == K::Plain)
		throw Error("generator " + g.label + " has no strand meaning");
	return {g.role.i, g.role.j, g.role.residue, g.role.kind == K::Pole};
}

void check_fibers(const Fibers &f, int n, int lo, int m)
{
	if (static_cast<int>(f.size()) < n)
		throw Error("insertion map does not cover all strands");
	std::set<int> seen;
	for (auto &fiber : f)
		for (int t : fiber)
		{
			if (t < lo || t > m)
				throw Error("insertion index out of range");
			if (!seen.insert(t).second)
				throw Error("insertion fibers overlap");
		}
}

int strand_count(const Alphabet &a)
{
	int n = 2;
	for (auto &g : a.generators())
		n = std::max(n, g.role.j);
	return n;
}

GeneratorMap t3_to_t0_map(int N, int D)
{
	auto &src = PresentedAlgebra::get(t_alg(3, N));
	auto &dst = PresentedAlgebra::get(t0_alg(3, N));
	GeneratorMap m{src.alphabet(), dst.alphabet(), {}, "t3->t0"};
	for (auto &g : src.alphabet()->generators())
	{
		if (g.role.kind == GeneratorRole::Kind::Pole)
			m.images.push_back(g.role.j == 2 ? dst.letter(0, D) : dst.C(D));
		else
			m.images.push_back(dst.letter(1 + g.role.residue, D));
	}
	return m;
}

} // namespace

GeneratorMap insert_upper_map(const AlphabetPtr &source, int N, int m, const Fibers &f, int D, bool target_t0)
{
	int n = strand_count(*source);
	check_fibers(f, n, 1, m);
	if (std::find(f[0].begin(), f[0].end(), 1) == f[0].end())
		throw Error("upper insertion requires f(1)=1");
	auto &tgt = PresentedAlgebra::get(t_alg(m, N));
	GeneratorMap map{source, tgt.alphabet(), {}, "insert_upper"};
	for (auto &g : source->generators())
	{
		Strands s = strands_of(g);
		Series img = tgt.zero(D);
		if (s.pole)
		{
			const auto &Fj = f[s.j - 1];
			for (int jp : Fj)
				img += tgt.letter(tgt.pole(jp), D);
			for (size_t x = 0; x < Fj.size(); ++x)
				for (size_t y = x + 1; y < Fj.size(); ++y)
					img += tgt.t_sum(Fj[x], Fj[y], D);
			for (int ip : f[0])
				if (ip != 1)
					for (int jp : Fj)
						img += tgt.t_sum(ip, jp, D);
		}
		else
		{
			for (int ip : f[s.i - 1])
				for (int jp : f[s.j - 1])
					img += tgt.t_cyc(ip, jp, s.a, D);
		}
		map.images.push_back(std::move(img));
	}
	if (target_t0)
	{
		if (m != 3)
			throw Error("t0 target supported for three strands");
		map = compose_maps(t3_to_t0_map(N, D), map);
	}
	return map;
}

Series insert_upper(const Series &x, int m, const Fibers &f, bool target_t0)
{
	int N = x.alphabet().N();
	auto map = insert_upper_map(x.alphabet_ptr(), N, m, f, x.degree(), target_t0);
	Series r = substitute(x, map);
	if (target_t0)
		return r;
	return PresentedAlgebra::get(t_alg(m, N)).normal_form(r);
}

Series insert_lower(const Series &x, int m, int N, const Fibers &g)
{
	if (x.alphabet().N() != 1)
		throw Error("lower insertion takes an element of t_n");
	int D = x.degree();
	check_fibers(g, strand_count(x.alphabet()), 2, m);
	auto &tgt = PresentedAlgebra::get(t_alg(m, N));
	GeneratorMap map{x.alphabet_ptr(), tgt.alphabet(), {}, "insert_lower"};
	for (auto &gen : x.alphabet().generators())
	{
		Strands s = strands_of(gen);
		Series img = tgt.zero(D);
		for (int ip : g[s.i - 1])
			for (int jp : g[s.j - 1])
				img += tgt.t_cyc(ip, jp, 0, D);
		map.images.push_back(std::move(img));
	}
	return tgt.normal_form(substitute(x, map));
}

Series insert_classical(const Series &x, int m, const Fibers &f)
{
	if (x.alphabet().N() != 1)
		throw Error("classical insertion takes an element of t_n");
	int D = x.degree();
	check_fibers(f, strand_count(x.alphabet()), 1, m);
	auto &tgt = PresentedAlgebra::get(t_alg(m, 1));
	GeneratorMap map{x.alphabet_ptr(), tgt.alphabet(), {}, "insert"};
	for (auto &gen : x.alphabet().generators())
	{
		Strands s = strands_of(gen);
		Series img = tgt.zero(D);
		for (int ip : f[s.i - 1])
			for (int jp : f[s.j - 1])
				img += tgt.t_sum(ip, jp, D);
		map.images.push_back(std::move(img));
	}
	return tgt.normal_form(substitute(x, map));
}

Series project_t3_to_t0(const Series &x)
{
	return substitute(x, t3_to_t0_map(x.alphabet().N(), x.degree()));
}

namespace {

const PresentedAlgebra &algebra_of(const Alphabet &a)
{
	if (a.find("A"))
		return PresentedAlgebra::get(t0_alg(3, a.N()));
	for (auto &g : a.generators())
		if (g.role.kind == GeneratorRole::Kind::Cyclotomic && g.role.i == 1)
			return PresentedAlgebra::get(u_alg(strand_count(a), a.N()));
	return PresentedAlgebra::get(t_alg(strand_count(a), a.N()));
}

Series project(const Series &x, int Np, bool pi)
{
	int N = x.alphabet().N();
	if (Np < 1 || N % Np != 0)
		throw Error("projection requires N' | N");
	int d = N / Np;
	auto &src = algebra_of(x.alphabet());
	AlgebraId tid = src.id();
	tid.N = Np;
	auto &tgt = PresentedAlgebra::get(tid);
	int D = x.degree();
	GeneratorMap map{x.alphabet_ptr(), tgt.alphabet(), {}, pi ? "pi" : "delta"};
	for (auto &g : x.alphabet().generators())
	{
		auto &r = g.role;
		if (r.kind == GeneratorRole::Kind::Pole)
		{
			Series img = tgt.letter(*tgt.alphabet()->find_role(r), D);
			map.images.push_back(pi ? Rational(d) * img : img);
		}
		else if (pi)
			map.images.push_back(tgt.t_cyc(r.i, r.j, r.residue % Np, D));
		else if (r.residue % d == 0)
			map.images.push_back(tgt.t_cyc(r.i, r.j, r.residue / d, D));
		else
			map.images.push_back(tgt.zero(D));
	}
	return tgt.normal_form(substitute(x, map));
}

} // namespace

Series project_pi(const Series &x, int Nprime) { return project(x, Nprime, true); }
Series project_delta(const Series &x, int Nprime) { return project(x, Nprime, false); }

Rational rho(const Series &psi, int Nprime)
{
	Series p = project_pi(psi, Nprime);
	auto &src = PresentedAlgebra::get(t0_alg(3, psi.alphabet().N()));
	auto &tgt = PresentedAlgebra::get(t0_alg(3, Nprime));
	if (!same_alphabet(psi.alphabet_ptr(), src.alphabet()))
		throw Error("rho takes an element of t0_{3,N}");
	return p.coeff(Word({tgt.cyc(2, 3, 0)})) - psi.coeff(Word({src.cyc(2, 3, 0)}));
}

GeneratorMap t03_map(int N, const std::vector<Series> &images, std::string tag)
{
	auto &src = PresentedAlgebra::get(t0_alg(3, N));
	if (static_cast<int>(images.size()) != N + 1)
		throw Error("t0_{3,N} map needs N+1 images");
	return GeneratorMap{src.alphabet(), images[0].alphabet_ptr(), images, std::move(tag)};
}

GeneratorMap automorphism_map(Automorphism which, int N, int D, int shift)
{
	switch (which)
	{
	case Automorphism::Tau:
	case Automorphism::SPrime:
	{
		if (N != 2)
			throw Error("this automorphism is defined for N=2");
		auto &a = PresentedAlgebra::get(t0_alg(3, 2));
		Series A = a.letter(0, D), B0 = a.letter(1, D), B1 = a.letter(2, D);
		if (which == Automorphism::Tau)
			return t03_map(2, {B0, A, a.C(D)}, "tau");
		return t03_map(2, {a.C(D), B1, B0}, "s'");
	}
	case Automorphism::TauShift:
	{
		auto &a = PresentedAlgebra::get(t0_alg(3, N));
		std::vector<Series> img{a.letter(0, D)};
		for (int c = 0; c < N; ++c)
			img.push_back(a.letter(1 + mod(c + shift, N), D));
		return t03_map(N, img, "tau_" + std::to_string(shift));
	}
	case Automorphism::S:
	{
		if (N != 2)
			throw Error("s is defined on t_{4,2}");
		auto &t = PresentedAlgebra::get(t_alg(4, 2));
		GeneratorMap m{t.alphabet(), t.alphabet(), {}, "s"};
		for (auto &g : t.alphabet()->generators())
		{
			auto &r = g.role;
			if (r.kind == GeneratorRole::Kind::Pole)
				m.images.push_back(t.letter(t.pole(r.j == 2 ? 3 : r.j == 3 ? 2 : 4), D));
			else if (r.i == 2 && r.j == 3)
				m.images.push_back(t.t_cyc(2, 3, r.residue + 1, D));
			else if (r.i == 2 && r.j == 4)
				m.images.push_back(t.t_cyc(3, 4, r.residue + 1, D));
			else
				m.images.push_back(t.t_cyc(2, 4, r.residue, D));
		}
		return m;
	}
	}
	throw Error("unknown automorphism");
}

Series automorphism(Automorphism which, const Series &x, int shift)
{
	auto m = automorphism_map(which, x.alphabet().N(), x.degree(), shift);
	if (!same_alphabet(m.source, x.alphabet_ptr()))
		throw Error("automorphism applied to an element of the wrong algebra");
	Series r = substitute(x, m);
	if (which == Automorphism::S)
		return PresentedAlgebra::get(t_alg(4, 2)).normal_form(r);
	return r;
}

Series substitute_nf(const Series &s, const GeneratorMap &m, const PresentedAlgebra &target)
{
	return target.normal_form(substitute(s, m));
}

} // namespace cyclogt
