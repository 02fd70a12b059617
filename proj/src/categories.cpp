#include "cyclogt/categories.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace cyclogt {

namespace {

int mod(int a, int N) { return ((a % N) + N) % N; }

} // namespace

// ---- objects

ParenObject ParenObject::bullet()
{
	ParenObject o;
	o.repr_ = ".";
	o.n_ = 1;
	return o;
}

ParenObject tensor(const ParenObject &x, const ParenObject &y)
{
	if (x.n_ == 0)
		return y;
	if (y.n_ == 0)
		return x;
	ParenObject o;
	o.repr_ = "(" + x.repr_ + y.repr_ + ")";
	o.n_ = x.n_ + y.n_;
	return o;
}

ParenObject ParenObject::parse(std::string_view s)
{
	size_t pos = 0;
	std::function<ParenObject()> term = [&]() -> ParenObject {
		if (pos >= s.size())
			throw Error("truncated parenthesization");
		if (s[pos] == '.')
		{
			++pos;
			return bullet();
		}
		if (s[pos] != '(')
			throw Error("unexpected character in parenthesization");
		++pos;
		ParenObject l = term();
		ParenObject r = term();
		if (pos >= s.size() || s[pos] != ')')
			throw Error("unbalanced parenthesization");
		++pos;
		return tensor(l, r);
	};
	if (s.empty())
		return ParenObject();
	ParenObject o = term();
	if (pos != s.size())
		throw Error("trailing characters in parenthesization");
	return o;
}

ParenObject ParenObject::left_comb(int n)
{
	ParenObject o;
	for (int k = 0; k < n; ++k)
		o = tensor(o, bullet());
	return o;
}

std::vector<ParenObject> ParenObject::all(int n)
{
	if (n == 0)
		return {ParenObject()};
	if (n == 1)
		return {bullet()};
	std::vector<ParenObject> out;
	for (int k = 1; k < n; ++k)
		for (auto &l : all(k))
			for (auto &r : all(n - k))
				out.push_back(tensor(l, r));
	return out;
}

std::string ParenObject::to_string() const { return repr_.empty() ? "I" : repr_; }

// ---- group parts

GroupPart GroupPart::identity(int n, int N)
{
	GroupPart g;
	g.N = N;
	g.c.assign(n, 0);
	g.perm.resize(n);
	std::iota(g.perm.begin(), g.perm.end(), 0);
	return g;
}

GroupPart GroupPart::residues(std::vector<int> c, int N)
{
	GroupPart g = identity(static_cast<int>(c.size()), N);
	for (size_t k = 0; k < c.size(); ++k)
		g.c[k] = mod(c[k], N);
	return g;
}

GroupPart GroupPart::permutation(std::vector<int> perm, int N)
{
	GroupPart g = identity(static_cast<int>(perm.size()), N);
	std::vector<int> sorted = perm;
	std::sort(sorted.begin(), sorted.end());
	for (size_t k = 0; k < sorted.size(); ++k)
		if (sorted[k] != static_cast<int>(k))
			throw Error("not a permutation");
	g.perm = std::move(perm);
	return g;
}

GroupPart GroupPart::operator*(const GroupPart &o) const
{
	if (size() != o.size() || N != o.N)
		throw Error("group parts of different size");
	int n = size();
	std::vector<int> inv(n);
	for (int k = 0; k < n; ++k)
		inv[perm[k]] = k;
	GroupPart r = identity(n, N);
	for (int k = 0; k < n; ++k)
	{
		r.c[k] = mod(c[k] + o.c[inv[k]], N);
		r.perm[k] = perm[o.perm[k]];
	}
	return r;
}

GroupPart GroupPart::inverse() const
{
	int n = size();
	GroupPart r = identity(n, N);
	for (int k = 0; k < n; ++k)
		r.perm[perm[k]] = k;
	for (int k = 0; k < n; ++k)
		r.c[k] = mod(-c[perm[k]], N);
	return r;
}

std::string GroupPart::to_string() const
{
	std::string s = "(c=[";
	for (int k = 0; k < size(); ++k)
		s += (k ? "," : "") + std::to_string(c[k]);
	s += "], s=[";
	for (int k = 0; k < size(); ++k)
		s += (k ? "," : "") + std::to_string(perm[k] + 1);
	return s + "])";
}

std::vector<GroupPart> enumerate_group(int n, int N)
{
	std::vector<GroupPart> out;
	std::vector<int> perm(n);
	std::iota(perm.begin(), perm.end(), 0);
	long ncs = 1;
	for (int k = 0; k < n; ++k)
		ncs *= N;
	do
	{
		for (long code = 0; code < ncs; ++code)
		{
			std::vector<int> c(n);
			long x = code;
			for (int k = 0; k < n; ++k)
			{
				c[k] = static_cast<int>(x % N);
				x /= N;
			}
			GroupPart g = GroupPart::residues(c, N);
			g.perm = perm;
			out.push_back(g);
		}
	} while (std::next_permutation(perm.begin(), perm.end()));
	return out;
}

// ---- morphisms

const PresentedAlgebra &side_algebra(Side side, int n, int N)
{
	return PresentedAlgebra::get(side == Side::C ? u_alg(n, N) : t_alg(n + 1, N));
}

namespace {

// Letter-to-letter morphism between presented algebras given on strand data.
Series map_letters(const Series &x, const PresentedAlgebra &src, const PresentedAlgebra &dst,
                   const std::function<int(const GeneratorRole &)> &f)
{
	int D = x.degree();
	GeneratorMap m{src.alphabet(), dst.alphabet(), {}, "letters"};
	for (int k = 0; k < src.alphabet()->size(); ++k)
		m.images.push_back(dst.letter(f((*src.alphabet())[k].role), D));
	return substitute_nf(x, m, dst);
}

// Embeds an element on bullets [0,len) into a larger algebra at bullet offset.
Series embed(const Series &x, Side from, int len, Side to, int n, int offset, int N)
{
	auto &src = side_algebra(from, len, N);
	auto &dst = side_algebra(to, n, N);
	int shift_src = from == Side::M ? 1 : 0;
	int shift_dst = to == Side::M ? 1 : 0;
	return map_letters(x, src, dst, [&](const GeneratorRole &r) {
		if (r.kind == GeneratorRole::Kind::Pole)
		{
			if (from != Side::M || to != Side::M || offset != 0)
				throw Error("pole generators embed only into the module side at offset 0");
			return dst.pole(r.j);
		}
		int i = r.i - shift_src + offset + shift_dst, j = r.j - shift_src + offset + shift_dst;
		return dst.cyc(i, j, r.residue);
	});
}

void expect_same(const CatMorphism &f, const CatMorphism &g)
{
	if (f.side != g.side || f.n != g.n || f.N != g.N)
		throw Error("morphisms are not composable");
}

CatMorphism make(Side side, GroupPart g, Series u)
{
	CatMorphism f;
	f.side = side;
	f.n = g.size();
	f.N = g.N;
	f.gamma = std::move(g);
	f.u = std::move(u);
	return f;
}

} // namespace

CatMorphism CatMorphism::identity(Side side, int n, int N, int D)
{
	return make(side, GroupPart::identity(n, N), side_algebra(side, n, N).one(D));
}

CatMorphism CatMorphism::group(Side side, const GroupPart &g, int D)
{
	return make(side, g, side_algebra(side, g.size(), g.N).one(D));
}

const PresentedAlgebra &CatMorphism::algebra() const { return side_algebra(side, n, N); }

Series act(const GroupPart &g, Side side, const Series &x)
{
	auto &a = side_algebra(side, g.size(), g.N);
	int sh = side == Side::M ? 1 : 0;
	return map_letters(x, a, a, [&](const GeneratorRole &r) {
		if (r.kind == GeneratorRole::Kind::Pole)
			return a.pole(g.perm[r.j - 2] + 2);
		int i = g.perm[r.i - 1 - sh], j = g.perm[r.j - 1 - sh];
		return a.cyc(i + 1 + sh, j + 1 + sh, r.residue + g.c[i] - g.c[j]);
	});
}

CatMorphism compose(const CatMorphism &f, const CatMorphism &g)
{
	expect_same(f, g);
	auto &a = f.algebra();
	return make(f.side, f.gamma * g.gamma, a.mul(f.u, act(f.gamma, f.side, g.u)));
}

CatMorphism inverse(const CatMorphism &f)
{
	GroupPart gi = f.gamma.inverse();
	return make(f.side, gi, act(gi, f.side, f.algebra().inverse(f.u)));
}

namespace {

GroupPart juxtapose(const GroupPart &f, const GroupPart &g)
{
	int m = f.size(), n = g.size();
	GroupPart r = GroupPart::identity(m + n, f.N);
	for (int k = 0; k < m; ++k)
	{
		r.c[k] = f.c[k];
		r.perm[k] = f.perm[k];
	}
	for (int k = 0; k < n; ++k)
	{
		r.c[m + k] = g.c[k];
		r.perm[m + k] = g.perm[k] + m;
	}
	return r;
}

} // namespace

CatMorphism tensor(const CatMorphism &f, const CatMorphism &g)
{
	if (f.side != Side::C || g.side != Side::C || f.N != g.N)
		throw Error("tensor needs two morphisms of the monoidal category");
	int n = f.n + g.n;
	auto &a = side_algebra(Side::C, n, f.N);
	Series uf = embed(f.u, Side::C, f.n, Side::C, n, 0, f.N);
	Series ug = embed(g.u, Side::C, g.n, Side::C, n, f.n, f.N);
	return make(Side::C, juxtapose(f.gamma, g.gamma), a.mul(uf, ug));
}

CatMorphism module_tensor(const CatMorphism &m, const CatMorphism &f)
{
	if (m.side != Side::M || f.side != Side::C || m.N != f.N)
		throw Error("module_tensor needs a module morphism and a monoidal morphism");
	int n = m.n + f.n;
	auto &a = side_algebra(Side::M, n, m.N);
	Series um = embed(m.u, Side::M, m.n, Side::M, n, 0, m.N);
	Series uf = embed(f.u, Side::C, f.n, Side::M, n, m.n, m.N);
	return make(Side::M, juxtapose(m.gamma, f.gamma), a.mul(um, uf));
}

Series adjoint(const CatMorphism &f, const Series &x)
{
	auto &a = f.algebra();
	return a.mul(a.mul(f.u, act(f.gamma, f.side, x)), a.inverse(f.u));
}

// ---- universal structure

Series t_XY(int x, int y, int N, int D)
{
	auto &a = side_algebra(Side::C, x + y, N);
	Series s = a.zero(D);
	for (int i = 1; i <= x; ++i)
		for (int j = 1; j <= y; ++j)
			s += a.letter(a.cyc(i, x + j, 0), D);
	return s;
}

Series t_MX(int m, int x, int N, int D)
{
	auto &a = side_algebra(Side::M, m + x, N);
	Series s = a.zero(D);
	for (int j = 1; j <= x; ++j)
		for (int i = 0; i <= m + j - 1; ++i)
			s += a.t_sum(i + 1, j + m + 1, D);
	return s;
}

GroupPart braiding(int x, int y, int N)
{
	std::vector<int> perm(x + y);
	for (int k = 0; k < x; ++k)
		perm[k] = y + k;
	for (int k = 0; k < y; ++k)
		perm[x + k] = k;
	return GroupPart::permutation(perm, N);
}

GroupPart sigma_on(int before, int len, int after, int N, int power)
{
	std::vector<int> c(before + len + after, 0);
	for (int k = before; k < before + len; ++k)
		c[k] = power;
	return GroupPart::residues(c, N);
}

TwistedStructure::TwistedStructure(PairGH p, int D) : p_(std::move(p)), D_(D)
{
	if (p_.mode != Mode::Group)
		throw Error("twisting needs a group-like pair");
	if (p_.degree < D)
		p_ = p_.truncated(D);
}

TwistedStructure TwistedStructure::untwisted(int N, int D)
{
	return TwistedStructure(PairGH::make(t03(1).one(D), t03(N).one(D), Mode::Group), D);
}

CatMorphism TwistedStructure::a(int x, int y, int z) const
{
	int n = x + y + z, N = p_.N;
	auto &alg = side_algebra(Side::C, n, N);
	Series A = embed(t_XY(x, y, N, D_), Side::C, x + y, Side::C, n, 0, N);
	Series B = embed(t_XY(y, z, N, D_), Side::C, y + z, Side::C, n, x, N);
	Series g = substitute_nf(p_.first.with_degree(D_), t03_map(1, {A, B}, "a~"), alg);
	return make(Side::C, GroupPart::identity(n, N), alg.inverse(g));
}

CatMorphism TwistedStructure::b(int m, int x, int y) const
{
	int n = m + x + y, N = p_.N;
	auto &alg = side_algebra(Side::M, n, N);
	std::vector<Series> images{embed(t_MX(m, x, N, D_), Side::M, m + x, Side::M, n, 0, N)};
	Series txy = embed(t_XY(x, y, N, D_), Side::C, x + y, Side::M, n, m, N);
	for (int a = 0; a < N; ++a)
		images.push_back(adjoint(CatMorphism::group(Side::M, sigma_on(m + x, y, 0, N, -a), D_), txy));
	Series h = substitute_nf(p_.second.with_degree(D_), t03_map(N, images, "b~"), alg);
	return make(Side::M, GroupPart::identity(n, N), alg.inverse(h));
}

// ---- axioms

std::string axiom_name(Axiom a)
{
	switch (a)
	{
	case Axiom::IbmcPentagon:
		return "ibmc-pentagon";
	case Axiom::IbmcHexagon1:
		return "ibmc-hexagon-1";
	case Axiom::IbmcHexagon2:
		return "ibmc-hexagon-2";
	case Axiom::IbmcT:
		return "ibmc-iii-t";
	case Axiom::IbmcTSymmetry:
		return "ibmc-iii-symmetry";
	case Axiom::ImcPentagon:
		return "imc-I-mixed-pentagon";
	case Axiom::ImcOctagon:
		return "imc-II-octagon";
	case Axiom::ImcT:
		return "imc-IV-t";
	case Axiom::ImcTSecond:
		return "imc-IV-second";
	}
	return "?";
}

std::vector<Axiom> all_axioms()
{
	return {Axiom::IbmcPentagon, Axiom::IbmcHexagon1, Axiom::IbmcHexagon2, Axiom::IbmcT, Axiom::IbmcTSymmetry,
	        Axiom::ImcPentagon,  Axiom::ImcOctagon,   Axiom::ImcT,         Axiom::ImcTSecond};
}

std::vector<Axiom> parse_axioms(std::string_view text)
{
	std::vector<Axiom> out;
	size_t start = 0;
	while (start <= text.size())
	{
		size_t end = text.find(',', start);
		if (end == std::string_view::npos)
			end = text.size();
		std::string_view tok = text.substr(start, end - start);
		if (tok == "all")
			return all_axioms();
		else if (tok == "ibmc")
			for (auto a : {Axiom::IbmcPentagon, Axiom::IbmcHexagon1, Axiom::IbmcHexagon2, Axiom::IbmcT,
			               Axiom::IbmcTSymmetry})
				out.push_back(a);
		else if (tok == "imc")
			for (auto a : {Axiom::ImcPentagon, Axiom::ImcOctagon, Axiom::ImcT, Axiom::ImcTSecond})
				out.push_back(a);
		else if (tok == "I")
			out.push_back(Axiom::ImcPentagon);
		else if (tok == "II")
			out.push_back(Axiom::ImcOctagon);
		else if (tok == "IV")
		{
			out.push_back(Axiom::ImcT);
			out.push_back(Axiom::ImcTSecond);
		}
		else if (tok == "i")
			for (auto a : {Axiom::IbmcPentagon, Axiom::IbmcHexagon1, Axiom::IbmcHexagon2})
				out.push_back(a);
		else if (tok == "iii")
		{
			out.push_back(Axiom::IbmcT);
			out.push_back(Axiom::IbmcTSymmetry);
		}
		else
			throw Error("unknown axiom '" + std::string(tok) + "'");
		start = end + 1;
	}
	return out;
}

namespace {

CatMorphism idC(int n, int N, int D) { return CatMorphism::identity(Side::C, n, N, D); }
CatMorphism idM(int n, int N, int D) { return CatMorphism::identity(Side::M, n, N, D); }
CatMorphism cC(int x, int y, int N, int D) { return CatMorphism::group(Side::C, braiding(x, y, N), D); }

AxiomReport group_report(Axiom ax, std::vector<int> objects, const CatMorphism &l, const CatMorphism &r)
{
	AxiomReport rep;
	rep.axiom = ax;
	rep.objects = std::move(objects);
	if (!(l.gamma == r.gamma))
	{
		rep.zero = false;
		rep.group_mismatch = true;
		rep.lowest_nonzero_degree = 0;
		return rep;
	}
	auto &a = l.algebra();
	Series v = a.log(a.mul(l.u, a.inverse(r.u)));
	rep.zero = v.is_zero();
	if (!rep.zero)
		rep.lowest_nonzero_degree = v.lowest_degree();
	return rep;
}

AxiomReport lie_report(Axiom ax, std::vector<int> objects, const Series &l, const Series &r)
{
	AxiomReport rep;
	rep.axiom = ax;
	rep.objects = std::move(objects);
	Series v = l - r;
	rep.zero = v.is_zero();
	if (!rep.zero)
		rep.lowest_nonzero_degree = v.lowest_degree();
	return rep;
}

// c_{XY} on the module side after an object of length m
CatMorphism cM(int m, int x, int y, int N, int D) { return module_tensor(idM(m, N, D), cC(x, y, N, D)); }

template <typename F> void tuples(int k, int max_total, int min_first, F &&f)
{
	std::vector<int> t(k);
	std::function<void(int, int)> rec = [&](int pos, int total) {
		if (pos == k)
		{
			f(t);
			return;
		}
		int lo = pos == 0 ? min_first : 1;
		for (int v = lo; total + v <= max_total; ++v)
		{
			t[pos] = v;
			rec(pos + 1, total + v);
		}
	};
	rec(0, 0);
}

} // namespace

std::vector<AxiomReport> check_axioms(const TwistedStructure &s, const std::vector<Axiom> &which, int max_length)
{
	int N = s.N(), D = s.D();
	std::vector<AxiomReport> out;
	for (Axiom ax : which)
	{
		switch (ax)
		{
		case Axiom::IbmcPentagon:
			tuples(4, max_length, 1, [&](const std::vector<int> &t) {
				int x = t[0], y = t[1], z = t[2], w = t[3];
				CatMorphism l = compose(s.a(x + y, z, w), s.a(x, y, z + w));
				CatMorphism r = compose(compose(tensor(s.a(x, y, z), idC(w, N, D)), s.a(x, y + z, w)),
				                        tensor(idC(x, N, D), s.a(y, z, w)));
				out.push_back(group_report(ax, t, l, r));
			});
			break;
		case Axiom::IbmcHexagon1:
			tuples(3, max_length, 1, [&](const std::vector<int> &t) {
				int x = t[0], y = t[1], z = t[2];
				CatMorphism l = compose(compose(s.a(z, x, y), cC(x + y, z, N, D)), s.a(x, y, z));
				CatMorphism r = compose(compose(tensor(cC(x, z, N, D), idC(y, N, D)), s.a(x, z, y)),
				                        tensor(idC(x, N, D), cC(y, z, N, D)));
				out.push_back(group_report(ax, t, l, r));
			});
			break;
		case Axiom::IbmcHexagon2:
			tuples(3, max_length, 1, [&](const std::vector<int> &t) {
				int x = t[0], y = t[1], z = t[2];
				CatMorphism l = compose(compose(inverse(s.a(y, z, x)), cC(x, y + z, N, D)), inverse(s.a(x, y, z)));
				CatMorphism r = compose(compose(tensor(idC(y, N, D), cC(x, z, N, D)), inverse(s.a(y, x, z))),
				                        tensor(cC(x, y, N, D), idC(z, N, D)));
				out.push_back(group_report(ax, t, l, r));
			});
			break;
		case Axiom::IbmcT:
			tuples(3, max_length, 1, [&](const std::vector<int> &t) {
				int x = t[0], y = t[1], z = t[2], n = x + y + z;
				Series l = t_XY(x + y, z, N, D);
				Series tyz = embed(t_XY(y, z, N, D), Side::C, y + z, Side::C, n, x, N);
				Series txz = embed(t_XY(x, z, N, D), Side::C, x + z, Side::C, n, y, N);
				CatMorphism f = compose(tensor(cC(y, x, N, D), idC(z, N, D)), s.a(y, x, z));
				Series r = adjoint(s.a(x, y, z), tyz) + adjoint(f, txz);
				out.push_back(lie_report(ax, t, l, r));
			});
			break;
		case Axiom::IbmcTSymmetry:
			tuples(2, max_length, 1, [&](const std::vector<int> &t) {
				int x = t[0], y = t[1];
				out.push_back(lie_report(ax, t, adjoint(cC(x, y, N, D), t_XY(x, y, N, D)), t_XY(y, x, N, D)));
			});
			break;
		case Axiom::ImcPentagon:
			tuples(4, max_length, 0, [&](const std::vector<int> &t) {
				int m = t[0], x = t[1], y = t[2], z = t[3];
				CatMorphism l = compose(compose(module_tensor(s.b(m, x, y), idC(z, N, D)), s.b(m, x + y, z)),
				                        module_tensor(idM(m, N, D), s.a(x, y, z)));
				CatMorphism r = compose(s.b(m + x, y, z), s.b(m, x, y + z));
				out.push_back(group_report(ax, t, l, r));
			});
			break;
		case Axiom::ImcOctagon:
			tuples(3, max_length, 0, [&](const std::vector<int> &t) {
				int m = t[0], x = t[1], y = t[2], n = m + x + y;
				CatMorphism l = CatMorphism::group(Side::M, sigma_on(m + x, y, 0, N), D);
				CatMorphism sy = CatMorphism::group(Side::M, sigma_on(m, y, x, N), D);
				CatMorphism r = s.b(m, x, y);
				for (const CatMorphism &f : {cM(m, y, x, N, D), inverse(s.b(m, y, x)), sy, s.b(m, y, x),
				                             cM(m, x, y, N, D), inverse(s.b(m, x, y))})
					r = compose(r, f);
				(void)n;
				out.push_back(group_report(ax, t, l, r));
			});
			break;
		case Axiom::ImcT:
			tuples(3, max_length, 0, [&](const std::vector<int> &t) {
				int m = t[0], x = t[1], y = t[2], n = m + x + y;
				Series l = t_MX(m + x, y, N, D);
				CatMorphism f = compose(compose(s.b(m, x, y), cM(m, y, x, N, D)), inverse(s.b(m, y, x)));
				Series tmy = embed(t_MX(m, y, N, D), Side::M, m + y, Side::M, n, 0, N);
				Series r = adjoint(f, tmy);
				Series txy = embed(t_XY(x, y, N, D), Side::C, x + y, Side::M, n, m, N);
				for (int a = 0; a < N; ++a)
				{
					CatMorphism g = compose(CatMorphism::group(Side::M, sigma_on(m + x, y, 0, N, a), D), s.b(m, x, y));
					r += adjoint(g, txy);
				}
				out.push_back(lie_report(ax, t, l, r));
			});
			break;
		case Axiom::ImcTSecond:
			tuples(3, max_length, 0, [&](const std::vector<int> &t) {
				int m = t[0], x = t[1], y = t[2], n = m + x + y;
				Series l = t_MX(m + x, y, N, D) + embed(t_MX(m, x, N, D), Side::M, m + x, Side::M, n, 0, N);
				Series r = adjoint(s.b(m, x, y), t_MX(m, x + y, N, D));
				out.push_back(lie_report(ax, t, l, r));
			});
			break;
		}
	}
	return out;
}

bool all_zero(const std::vector<AxiomReport> &r)
{
	return std::all_of(r.begin(), r.end(), [](const AxiomReport &a) { return a.zero; });
}

// ---- R(N)

namespace {

void check_N(int N)
{
	if (N < 1)
		throw Error("R(N) needs N >= 1");
}

} // namespace

RingRN ring_rn(int N, int a, const mpz_class &r)
{
	check_N(N);
	int m = mod(a, N);
	return RingRN{N, m, r + (a - m) / N};
}

int ring_sigma(int N, int a, int b)
{
	a = mod(a, N);
	b = mod(b, N);
	return (a + b - mod(a + b, N)) / N;
}

int ring_pi(int N, int a, int b)
{
	a = mod(a, N);
	b = mod(b, N);
	return (a * b - mod(a * b, N)) / N;
}

RingRN ring_rn_add(const RingRN &x, const RingRN &y)
{
	if (x.N != y.N)
		throw Error("R(N) elements with different N");
	return RingRN{x.N, mod(x.a + y.a, x.N), x.r + y.r + ring_sigma(x.N, x.a, y.a)};
}

RingRN ring_rn_mul(const RingRN &x, const RingRN &y)
{
	if (x.N != y.N)
		throw Error("R(N) elements with different N");
	int N = x.N;
	return RingRN{N, mod(x.a * y.a, N), x.a * y.r + y.a * x.r + N * x.r * y.r + ring_pi(N, x.a, y.a)};
}

RingRN ring_rn_neg(const RingRN &x)
{
	int a = mod(-x.a, x.N);
	// a~ + N r' = -(x.a~ + N x.r)
	return RingRN{x.N, a, mpz_class(-(x.a + a) / x.N) - x.r};
}

mpz_class ring_rn_value(const RingRN &x) { return x.a + x.N * x.r; }

} // namespace cyclogt
