#include "cyclogt/relations.hpp"

#include "cyclogt/freelie.hpp"

namespace cyclogt {

std::string mode_name(Mode m) { return m == Mode::Lie ? "lie" : "group"; }

Mode mode_from_name(std::string_view s)
{
	if (s == "lie")
		return Mode::Lie;
	if (s == "group")
		return Mode::Group;
	throw Error("unknown mode " + std::string(s));
}

const PresentedAlgebra &t03(int N) { return PresentedAlgebra::get(t0_alg(3, N)); }

PairGH PairGH::make(Series first, Series second, Mode mode)
{
	PairGH p;
	p.N = second.alphabet().N();
	p.degree = std::min(first.degree(), second.degree());
	p.first = std::move(first);
	p.second = std::move(second);
	p.mode = mode;
	p.validate();
	return p;
}

PairGH PairGH::truncated(int D) const
{
	if (mode == Mode::Lie)
		return make(first.with_degree(D), second.with_degree(D), mode);
	auto ext = [&](const Series &x) { return exp_series(log_series(x).with_degree(D)); };
	return make(ext(first), ext(second), mode);
}

void PairGH::validate() const
{
	if (!same_alphabet(first.alphabet_ptr(), t03(1).alphabet()))
		throw Error("first component must lie over t0_3");
	if (!same_alphabet(second.alphabet_ptr(), t03(N).alphabet()))
		throw Error("second component must lie over t0_{3,N}");
	if (mode == Mode::Lie)
	{
		if (!is_lie(first) || !is_lie(second))
			throw Error("Lie pair with non-Lie component");
	}
	else
	{
		if (first.constant_term() != 1 || second.constant_term() != 1)
			throw Error("group pair needs constant term 1");
		if (!is_lie(log_series(first)) || !is_lie(log_series(second)))
			throw Error("group pair with non group-like component");
	}
}

Residual make_residual(const AlgebraId &ambient, Series value)
{
	Residual r{ambient, std::move(value), true, std::nullopt};
	r.lowest_nonzero_degree = r.value.lowest_degree();
	r.zero = !r.lowest_nonzero_degree.has_value();
	return r;
}

Rational c_word(const Series &x, const std::vector<std::string> &labels)
{
	auto &alpha = x.alphabet();
	std::vector<int> idx;
	for (auto &l : labels)
	{
		auto k = alpha.find(l);
		if (!k && alpha.N() == 1 && l == "B(0)")
			k = alpha.find("B");
		if (!k)
			throw Error("unknown generator " + l);
		idx.push_back(*k);
	}
	return x.coeff(Word(idx));
}

GeneratorMap cyclic_pattern(int N, bool first_is_C, int shift, int sign, int D)
{
	auto &a = t03(N);
	std::vector<Series> img{first_is_C ? a.C(D) : a.letter(0, D)};
	for (int i = 0; i < N; ++i)
		img.push_back(a.letter(1 + (((shift + sign * i) % N) + N) % N, D));
	return t03_map(N, img, "pattern");
}

Series apply_pattern(const Series &x, bool first_is_C, int shift, int sign)
{
	return substitute(x, cyclic_pattern(x.alphabet().N(), first_is_C, shift, sign, x.degree()));
}

namespace {

void expect_t03(const Series &x, int N, const char *what)
{
	if (!same_alphabet(x.alphabet_ptr(), t03(N).alphabet()))
		throw Error(std::string(what) + ": argument over the wrong algebra");
}

Series two_letter_map(const Series &x, const Series &a, const Series &b)
{
	return substitute(x, t03_map(1, {a, b}, "args"));
}

// octagon argument patterns P1..P4
Series P1(const Series &x) { return apply_pattern(x, false, 0, 1); }
Series P2(const Series &x) { return apply_pattern(x, false, 1, 1); }
Series P3(const Series &x) { return apply_pattern(x, true, 1, -1); }
Series P4(const Series &x) { return apply_pattern(x, true, 0, -1); }

} // namespace

Residual residual_duality(const Series &x_in, Mode mode, int D)
{
	expect_t03(x_in, 1, "duality");
	auto &a = t03(1);
	Series x = x_in.with_degree(D);
	Series A = a.letter(0, D), B = a.letter(1, D);
	Series swapped = two_letter_map(x, B, A);
	if (mode == Mode::Lie)
		return make_residual(a.id(), x + swapped);
	return make_residual(a.id(), log_series(x * swapped));
}

Residual residual_hexagon(const Series &x_in, HexagonVariant v, int D)
{
	expect_t03(x_in, 1, "hexagon");
	auto &a = t03(1);
	Series x = x_in.with_degree(D);
	Series A = a.letter(0, D), B = a.letter(1, D), C = a.C(D);
	Series xBC = two_letter_map(x, B, C), xCA = two_letter_map(x, C, A);
	switch (v)
	{
	case HexagonVariant::Lie:
		return make_residual(a.id(), x + xBC + xCA);
	case HexagonVariant::Group:
		return make_residual(a.id(), log_series(xCA * xBC * x));
	case HexagonVariant::M:
	{
		Series eA = exp_series(Rational(1, 2) * A), eB = exp_series(Rational(1, 2) * B),
		       eC = exp_series(Rational(1, 2) * C);
		return make_residual(a.id(), log_series(eA * xCA * eC * xBC * eB * x));
	}
	}
	throw Error("unknown hexagon variant");
}

DualityHexagon residual_duality_hexagon(const Series &x, HexagonVariant v, int D)
{
	Mode m = v == HexagonVariant::Lie ? Mode::Lie : Mode::Group;
	return {residual_duality(x, m, D), residual_hexagon(x, v, D)};
}

Series rescale(const Series &g, const Rational &mu)
{
	if (!check_mu(g, mu))
		throw Error("mu does not satisfy mu^2 = 24 c_AB(g)");
	auto &a = t03(1);
	int D = g.degree();
	Rational inv = 1 / mu;
	return two_letter_map(g, inv * a.letter(0, D), inv * a.letter(1, D));
}

bool check_mu(const Series &g, const Rational &mu)
{
	expect_t03(g, 1, "check_mu");
	Rational cab = c_word(g, {"A", "B"});
	if (sgn(cab) == 0)
		throw Error("c_AB(g) = 0 admits no rescaling");
	if (sgn(mu) == 0)
		return false;
	return mu * mu == 24 * cab;
}

Residual residual_pentagon(const Series &x_in, Mode mode, int D)
{
	expect_t03(x_in, 1, "pentagon");
	Series x = x_in.with_degree(D);
	auto &t4 = PresentedAlgebra::get(t_alg(4, 1));
	Series a1 = insert_classical(x, 4, {{1}, {2}, {3, 4}});
	Series a2 = insert_classical(x, 4, {{1, 2}, {3}, {4}});
	Series b1 = insert_classical(x, 4, {{2}, {3}, {4}});
	Series b2 = insert_classical(x, 4, {{1}, {2, 3}, {4}});
	Series b3 = insert_classical(x, 4, {{1}, {2}, {3}});
	if (mode == Mode::Lie)
		return make_residual(t0_alg(4, 1), a1 + a2 - b1 - b2 - b3);
	Series v = t4.mul(t4.mul(a1, a2), t4.inverse(t4.mul(t4.mul(b1, b2), b3)));
	return make_residual(t0_alg(4, 1), t4.log(v));
}

Residual residual_special(const Series &x_in, Mode mode, int D)
{
	expect_t03(x_in, 1, "special");
	auto &a = t03(1);
	Series x = x_in.with_degree(D);
	Series A = a.letter(0, D), B = a.letter(1, D), C = a.C(D);
	Series xAC = two_letter_map(x, A, C);
	if (mode == Mode::Lie)
		return make_residual(a.id(), commutator(B, x) + commutator(C, xAC));
	Series v = A + inverse_series(x) * B * x + inverse_series(xAC) * C * xAC;
	return make_residual(a.id(), v);
}

Residual residual_special_cyclotomic(const Series &psi_in, Mode mode, int D)
{
	int N = psi_in.alphabet().N();
	expect_t03(psi_in, N, "special");
	auto &a = t03(N);
	Series psi = psi_in.with_degree(D);
	Series A = a.letter(0, D), C = a.C(D);
	Series p4 = P4(psi);
	if (mode == Mode::Lie)
	{
		// sign chosen so the group residual linearizes to this one
		Series r = commutator(C, psi - p4);
		for (int s = 0; s < N; ++s)
			r += commutator(a.letter(1 + s, D), apply_pattern(psi, false, s, 1));
		return make_residual(a.id(), r);
	}
	Series r = A;
	for (int s = 0; s < N; ++s)
	{
		Series hs = apply_pattern(psi, false, s, 1);
		r += inverse_series(hs) * a.letter(1 + s, D) * hs;
	}
	Series k = inverse_series(psi) * p4;
	r += k * C * inverse_series(k);
	return make_residual(a.id(), r);
}

Residual residual_mixed_pentagon(const PairGH &p, int D)
{
	int N = p.N;
	auto &t4 = PresentedAlgebra::get(t_alg(4, N));
	Series phi = p.first.with_degree(D), psi = p.second.with_degree(D);
	Series a1 = insert_upper(psi, 4, {{1}, {2}, {3, 4}});
	Series a2 = insert_upper(psi, 4, {{1, 2}, {3}, {4}});
	Series b1 = insert_lower(phi, 4, N, {{2}, {3}, {4}});
	Series b2 = insert_upper(psi, 4, {{1}, {2, 3}, {4}});
	Series b3 = insert_upper(psi, 4, {{1}, {2}, {3}});
	if (p.mode == Mode::Lie)
		return make_residual(t0_alg(4, N), a1 + a2 - b1 - b2 - b3);
	Series v = t4.mul(t4.mul(a1, a2), t4.inverse(t4.mul(t4.mul(b1, b2), b3)));
	return make_residual(t0_alg(4, N), t4.log(v));
}

Residual residual_octagon(const Series &psi_in, OctagonVariant v, int D)
{
	int N = psi_in.alphabet().N();
	expect_t03(psi_in, N, "octagon");
	auto &a = t03(N);
	Series psi = psi_in.with_degree(D);
	Series p1 = P1(psi), p2 = P2(psi), p3 = P3(psi), p4 = P4(psi);
	if (v == OctagonVariant::Lie)
		return make_residual(a.id(), p1 - p2 + p3 - p4);
	if (v == OctagonVariant::Group)
		return make_residual(a.id(), log_series(inverse_series(p2) * p3 * inverse_series(p4) * p1));
	Series B0 = a.letter(1, D), B1 = a.letter(1 + 1 % N, D);
	Series e1 = exp_series(Rational(1, 2) * B1), e2 = exp_series(Rational(1, N) * a.C(D)),
	       e3 = exp_series(Rational(1, 2) * B0), e4 = exp_series(Rational(1, N) * a.letter(0, D));
	return make_residual(a.id(),
	                     log_series(inverse_series(p2) * e1 * p3 * e2 * inverse_series(p4) * e3 * p1 * e4));
}

Series octagon_defect(const Series &psi)
{
	expect_t03(psi, 2, "octagon_defect");
	Series sp = automorphism(Automorphism::SPrime, psi);
	auto ins = [](const Series &x, const char *f) { return insert_upper(x, 3, parse_fibers(f), true); };
	return ins(psi, "1,2,3") - ins(psi, "1,3,2") + ins(sp, "1,2,3") - ins(sp, "1,3,2");
}

Residual residual_distribution(const Series &psi_in, Mode mode, int Nprime, int D)
{
	int N = psi_in.alphabet().N();
	expect_t03(psi_in, N, "distribution");
	if (Nprime < 1 || N % Nprime != 0)
		throw Error("distribution relation requires N' | N");
	auto &b = t03(Nprime);
	Series psi = psi_in.with_degree(D);
	Series pi = project_pi(psi, Nprime), de = project_delta(psi, Nprime);
	Rational r = rho(psi, Nprime);
	Series B0 = b.letter(1, D);
	if (mode == Mode::Lie)
		return make_residual(b.id(), pi - de - r * B0);
	return make_residual(b.id(), log_series(exp_series(-r * B0) * pi * inverse_series(de)));
}

BroadhurstResult residual_broadhurst(const Series &x_in, Mode mode, int D)
{
	if (x_in.alphabet().N() != 2)
		throw Error("Broadhurst duality is defined for N=2");
	expect_t03(x_in, 2, "broadhurst");
	auto &a = t03(2);
	Series x = x_in.with_degree(D);
	Series A = a.letter(0, D), B0 = a.letter(1, D);
	Series tx = automorphism(Automorphism::Tau, x);
	if (mode == Mode::Lie)
	{
		Rational alpha = c_word(x, {"B(1)"});
		return {make_residual(a.id(), tx + x + alpha * (A + B0)), alpha};
	}
	Rational alpha = c_word(log_series(x), {"B(1)"});
	Series v = tx * exp_series(alpha * B0) * x * exp_series(alpha * A);
	return {make_residual(a.id(), log_series(v)), alpha};
}

} // namespace cyclogt
