#include "cyclogt/gtgroups.hpp"

#include "cyclogt/freelie.hpp"

#include <functional>
#include <map>

namespace cyclogt {

namespace {

const PresentedAlgebra &algebra_of(const Series &x)
{
	int N = x.alphabet().N();
	auto &a = t03(N);
	if (!same_alphabet(x.alphabet_ptr(), a.alphabet()))
		throw Error("series does not lie over t0_{3,N}");
	return a;
}

Series word_series(const AlphabetPtr &alph, int D, const Word &w)
{
	Series s = Series::zero(alph, D);
	s.add_term(w, 1);
	return s;
}

// Truncated power series in a formal time t with Series coefficients.
using TSeries = std::vector<Series>;

TSeries ts_mul(const TSeries &a, const TSeries &b)
{
	size_t J = a.size();
	TSeries r;
	for (size_t k = 0; k < J; ++k)
	{
		Series s = Series::zero(a[0].alphabet_ptr(), a[0].degree());
		for (size_t i = 0; i <= k; ++i)
			if (!a[i].is_zero() && !b[k - i].is_zero())
				s += a[i] * b[k - i];
		r.push_back(s);
	}
	return r;
}

TSeries ts_inverse(const TSeries &a)
{
	// a[0] is group-like with constant term 1
	size_t J = a.size();
	Series inv0 = inverse_series(a[0]);
	TSeries r{inv0};
	for (size_t k = 1; k < J; ++k)
	{
		Series s = Series::zero(a[0].alphabet_ptr(), a[0].degree());
		for (size_t i = 1; i <= k; ++i)
			if (!a[i].is_zero() && !r[k - i].is_zero())
				s -= a[i] * r[k - i];
		r.push_back(inv0 * s);
	}
	return r;
}

TSeries ts_constant(const Series &x, size_t J)
{
	TSeries r{x};
	for (size_t k = 1; k < J; ++k)
		r.push_back(Series::zero(x.alphabet_ptr(), x.degree()));
	return r;
}

TSeries ts_map(const TSeries &a, const std::function<Series(const Series &)> &f)
{
	TSeries r;
	for (auto &s : a)
		r.push_back(f(s));
	return r;
}

// x(images) for an algebra morphism with t-dependent generator images.
TSeries ts_substitute(const Series &x, const std::vector<TSeries> &images, size_t J)
{
	auto alph = images[0][0].alphabet_ptr();
	int D = images[0][0].degree();
	TSeries r = ts_constant(Series::zero(alph, D), J);
	for (auto &[w, c] : x.terms())
	{
		TSeries prod = ts_constant(Series::constant(alph, D, c), J);
		for (int k = 0; k < w.size(); ++k)
			prod = ts_mul(prod, images[w[k]]);
		for (size_t j = 0; j < J; ++j)
			r[j] += prod[j];
	}
	return r;
}

// Conjugated generator images of the flow: A -> A, B(a) -> (tau_a g)^-1 B(a) (tau_a g).
std::vector<TSeries> flow_images(const TSeries &g, int N, size_t J)
{
	auto &a = t03(N);
	int D = g[0].degree();
	std::vector<TSeries> images{ts_constant(a.letter(0, D), J)};
	for (int s = 0; s < N; ++s)
	{
		TSeries gs = ts_map(g, [&](const Series &x) { return apply_pattern(x, false, s, 1); });
		TSeries b = ts_constant(a.letter(1 + s, D), J);
		images.push_back(ts_mul(ts_mul(ts_inverse(gs), b), gs));
	}
	return images;
}

Series flow_component(const Series &v, int D)
{
	int N = v.alphabet().N();
	auto &a = algebra_of(v);
	Series x = v.with_degree(D);
	auto low = x.lowest_degree();
	if (!low)
		return a.one(D);
	if (*low < 1)
		throw Error("exp_flow needs a Lie element without constant term");
	size_t J = static_cast<size_t>(D / *low) + 1;
	TSeries g = ts_constant(a.one(D), J);
	for (size_t j = 0; j + 1 < J; ++j)
	{
		TSeries rhs = ts_mul(g, ts_substitute(x, flow_images(g, N, J), J));
		g[j + 1] = Rational(1, static_cast<long>(j + 1)) * rhs[j];
	}
	Series out = a.zero(D);
	for (auto &s : g)
		out += s;
	return out;
}

} // namespace

TangentialDerivation derivation_phi(const Series &phi)
{
	auto &a = algebra_of(phi);
	if (a.N() != 1)
		throw Error("D_phi is defined on t0_3");
	int D = phi.degree();
	TangentialDerivation d;
	d.kind = TangentialDerivation::Kind::Phi;
	d.defining = phi;
	d.images = {commutator(phi, a.letter(0, D)), a.zero(D)};
	return d;
}

TangentialDerivation derivation_psi(const Series &psi)
{
	auto &a = algebra_of(psi);
	int D = psi.degree();
	TangentialDerivation d;
	d.kind = TangentialDerivation::Kind::Psi;
	d.defining = psi;
	d.images.push_back(commutator(psi, a.letter(0, D)));
	for (int s = 0; s < a.N(); ++s)
		d.images.push_back(commutator(psi - apply_pattern(psi, false, s, 1), a.letter(1 + s, D)));
	return d;
}

Series apply_derivation(const TangentialDerivation &d, const Series &x)
{
	if (!same_alphabet(x.alphabet_ptr(), d.defining.alphabet_ptr()))
		throw Error("derivation applied to a series over another algebra");
	int D = std::min(x.degree(), d.defining.degree());
	auto alph = x.alphabet_ptr();
	std::vector<Series> img;
	for (auto &s : d.images)
		img.push_back(s.with_degree(D));
	Series out = Series::zero(alph, D);
	for (auto &[w, c] : x.terms())
	{
		if (w.size() > D)
			continue;
		for (int k = 0; k < w.size(); ++k)
		{
			if (img[w[k]].is_zero())
				continue;
			std::vector<int> letters = w.letters();
			Word pre(std::vector<int>(letters.begin(), letters.begin() + k));
			Word post(std::vector<int>(letters.begin() + k + 1, letters.end()));
			out += c * (word_series(alph, D, pre) * img[w[k]] * word_series(alph, D, post));
		}
	}
	return out;
}

PairGH bracket(const PairGH &x, const PairGH &y)
{
	if (x.mode != Mode::Lie || y.mode != Mode::Lie)
		throw Error("bracket needs Lie pairs");
	if (x.N != y.N || x.degree != y.degree)
		throw Error("bracket of pairs with different N or truncation");
	auto comp = [](const Series &a, const Series &b, const TangentialDerivation &da,
	               const TangentialDerivation &db) {
		return lie_bracket(a, b) + apply_derivation(db, a) - apply_derivation(da, b);
	};
	Series f = comp(x.first, y.first, derivation_phi(x.first), derivation_phi(y.first));
	Series s = comp(x.second, y.second, derivation_psi(x.second), derivation_psi(y.second));
	return PairGH::make(f, s, Mode::Lie);
}

GeneratorMap automorphism_A(const Series &g)
{
	auto &a = algebra_of(g);
	if (a.N() != 1)
		throw Error("A_g is defined on t0_3");
	int D = g.degree();
	return t03_map(1, {a.letter(0, D), inverse_series(g) * a.letter(1, D) * g}, "A_g");
}

GeneratorMap automorphism_Abar(const Series &h)
{
	auto &a = algebra_of(h);
	int D = h.degree();
	std::vector<Series> images{a.letter(0, D)};
	for (int s = 0; s < a.N(); ++s)
	{
		Series hs = apply_pattern(h, false, s, 1);
		images.push_back(inverse_series(hs) * a.letter(1 + s, D) * hs);
	}
	return t03_map(a.N(), images, "Abar_h");
}

PairGH multiply(const PairGH &p, const PairGH &q)
{
	if (p.mode != Mode::Group || q.mode != Mode::Group)
		throw Error("multiply needs group-like pairs");
	if (p.N != q.N || p.degree != q.degree)
		throw Error("multiply of pairs with different N or truncation");
	Series g = q.first * substitute(p.first, automorphism_A(q.first));
	Series h = q.second * substitute(p.second, automorphism_Abar(q.second));
	return PairGH::make(g, h, Mode::Group);
}

PairGH torsor_act(const PairGH &p, const PairGH &q) { return multiply(p, q); }

PairGH group_identity(int N, int D) { return PairGH::make(t03(1).one(D), t03(N).one(D), Mode::Group); }

PairGH exp_flow(const PairGH &v, int D)
{
	if (v.mode != Mode::Lie)
		throw Error("exp_flow needs a Lie pair");
	return PairGH::make(flow_component(v.first, D), flow_component(v.second, D), Mode::Group);
}

namespace {

// Residual coefficients at the constrained degree of each predicate, keyed by (predicate, word).
std::vector<std::pair<std::pair<int, uint64_t>, Rational>> constrained_part(const RelationSystem &sys,
                                                                            const PairGH &p, int n)
{
	auto res = evaluate(sys, p, n + 1);
	std::vector<std::pair<std::pair<int, uint64_t>, Rational>> out;
	for (size_t k = 0; k < res.size(); ++k)
	{
		int target = n + sys.predicates[k].degree_offset();
		for (auto &[w, c] : res[k].value.terms())
			if (w.size() == target)
				out.push_back({{static_cast<int>(k), w.key()}, c});
	}
	return out;
}

} // namespace

LiftResult lift(const RelationSystem &sys, const PairGH &p, int n)
{
	if (p.mode != Mode::Group)
		throw Error("lift needs a group-like pair");
	if (n < 1)
		throw Error("lift degree must be positive");
	if (p.N != sys.N)
		throw Error("pair N does not match the system");
	PairGH base = p.truncated(std::min(p.degree, n)).truncated(n + 1);
	if (!valid_mod(sys, base, n))
		throw Error("lift precondition: the pair is not valid mod degree " + std::to_string(n));

	auto cols = lyndon_columns(sys, n);
	std::map<std::pair<int, uint64_t>, int> row_of;
	std::vector<SparseRow> rows;
	auto row_index = [&](const std::pair<int, uint64_t> &key) {
		auto it = row_of.find(key);
		if (it == row_of.end())
		{
			it = row_of.emplace(key, static_cast<int>(rows.size())).first;
			rows.emplace_back();
		}
		return it->second;
	};
	for (size_t c = 0; c < cols.size(); ++c)
	{
		PairGH v = as_pair(sys, cols[c]);
		PairGH e = PairGH::make(exp_series(v.first.with_degree(n + 1)), exp_series(v.second.with_degree(n + 1)),
		                        Mode::Group);
		for (auto &[key, q] : constrained_part(sys, e, n))
			rows[row_index(key)].emplace_back(static_cast<int>(c), q);
	}
	auto rhs_terms = constrained_part(sys, base, n);
	for (auto &[key, q] : rhs_terms)
		row_index(key);
	DenseVector rhs(rows.size(), Rational(0));
	for (auto &[key, q] : rhs_terms)
		rhs[row_of[key]] = -q;

	auto sol = solve_affine(static_cast<int>(cols.size()), rows, rhs);
	if (!sol.consistent)
		throw Error("no lift exists at degree " + std::to_string(n));
	Series lf = log_series(base.first.with_degree(n)), ls = log_series(base.second.with_degree(n));
	for (size_t c = 0; c < cols.size(); ++c)
	{
		if (sgn(sol.particular[c]) == 0)
			continue;
		PairGH v = as_pair(sys, cols[c]);
		lf += sol.particular[c] * v.first.with_degree(n);
		ls += sol.particular[c] * v.second.with_degree(n);
	}
	PairGH out = PairGH::make(exp_series(lf), exp_series(ls), Mode::Group);
	if (!valid_mod(sys, out.truncated(n + 1), n + 1))
		throw InternalError("lifted pair fails the system at degree " + std::to_string(n));
	return {out, static_cast<int>(sol.homogeneous.size())};
}

} // namespace cyclogt
