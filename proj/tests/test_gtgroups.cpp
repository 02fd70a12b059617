#include "cyclogt/freelie.hpp"
#include "cyclogt/gtgroups.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace cyclogt;

namespace {

PairGH random_pair(int N, int d, int D, std::mt19937 &g)
{
	return PairGH::make(oracle::random_lie(t03(1).alphabet(), d, D, g, 6),
	                    oracle::random_lie(t03(N).alphabet(), d, D, g, 6), Mode::Lie);
}

PairGH random_group(int N, int D, std::mt19937 &g)
{
	Series f = oracle::random_lie(t03(1).alphabet(), 1, D, g) + oracle::random_lie(t03(1).alphabet(), 2, D, g);
	Series s = oracle::random_lie(t03(N).alphabet(), 1, D, g) + oracle::random_lie(t03(N).alphabet(), 2, D, g);
	return PairGH::make(exp_series(f), exp_series(s), Mode::Group);
}

bool same(const PairGH &x, const PairGH &y) { return x.first == y.first && x.second == y.second; }

// Certified group elements: flows of the solver basis in degrees <= dmax.
std::vector<PairGH> certified(const RelationSystem &sys, int dmax, int D)
{
	std::vector<PairGH> out;
	for (int d = 1; d <= dmax; ++d)
		for (auto &u : graded_nullspace(sys, d).basis)
		{
			PairGH v = as_pair(sys, u);
			out.push_back(exp_flow(PairGH::make(v.first.with_degree(D), v.second.with_degree(D), Mode::Lie), D));
		}
	return out;
}

} // namespace

TEST(Derivations, Examples)
{
	int D = 4;
	auto &a = t03(1);
	Series phi = commutator(a.letter(0, D), a.letter(1, D));
	auto d = derivation_phi(phi);
	EXPECT_TRUE(apply_derivation(d, a.letter(1, D)).is_zero());
	EXPECT_EQ(apply_derivation(d, a.letter(0, D)), commutator(phi, a.letter(0, D)));
	Series AB = commutator(a.letter(0, D), a.letter(1, D));
	EXPECT_EQ(apply_derivation(d, AB), commutator(apply_derivation(d, a.letter(0, D)), a.letter(1, D)));

	// on solutions, D(C) = [psi(C, B(0), B(N-1), ..., B(1)), C]
	for (int N : {2, 3})
	{
		auto &b = t03(N);
		auto sys = named_system("grtm", N);
		for (int deg = 1; deg <= 3; ++deg)
			for (auto &u : graded_nullspace(sys, deg).basis)
			{
				Series psi = as_pair(sys, u).second.with_degree(D);
				auto dp = derivation_psi(psi);
				Series expected = commutator(apply_pattern(psi, true, 0, -1), b.C(D));
				EXPECT_EQ(apply_derivation(dp, b.C(D)), expected);
			}
	}
}

TEST(Bracket, AntisymmetryAndJacobi)
{
	std::mt19937 g(3);
	for (int N : {1, 2})
	{
		int D = 5;
		PairGH x = random_pair(N, 1, D, g), y = random_pair(N, 2, D, g), z = random_pair(N, 1, D, g);
		PairGH xx = bracket(x, x);
		EXPECT_TRUE(xx.first.is_zero() && xx.second.is_zero());
		PairGH xy = bracket(x, y), yx = bracket(y, x);
		EXPECT_EQ(xy.first, -yx.first);
		EXPECT_EQ(xy.second, -yx.second);
		PairGH j1 = bracket(x, bracket(y, z)), j2 = bracket(y, bracket(z, x)), j3 = bracket(z, bracket(x, y));
		EXPECT_TRUE((j1.first + j2.first + j3.first).is_zero());
		EXPECT_TRUE((j1.second + j2.second + j3.second).is_zero());
	}
}

TEST(Bracket, DerivationEmbeddingIsAnAntiMorphism)
{
	// D_<x,y> = [D_y, D_x] on generators
	std::mt19937 g(5);
	int N = 2, D = 5;
	for (auto [d1, d2] : std::vector<std::pair<int, int>>{{1, 2}, {2, 1}, {1, 3}})
	{
		PairGH x = random_pair(N, d1, D, g), y = random_pair(N, d2, D, g);
		PairGH b = bracket(x, y);
		ASSERT_FALSE(b.second.is_zero());
		auto dx = derivation_psi(x.second), dy = derivation_psi(y.second), db = derivation_psi(b.second);
		bool hom = true;
		for (int k = 0; k < t03(N).alphabet()->size(); ++k)
		{
			Series L = t03(N).letter(k, D);
			Series lhs = apply_derivation(db, L);
			Series rhs = apply_derivation(dy, apply_derivation(dx, L)) - apply_derivation(dx, apply_derivation(dy, L));
			EXPECT_EQ(lhs, rhs);
			hom = hom && lhs == -rhs;
		}
		EXPECT_FALSE(hom);
		auto fx = derivation_phi(x.first), fy = derivation_phi(y.first), fb = derivation_phi(b.first);
		for (int k = 0; k < 2; ++k)
		{
			Series L = t03(1).letter(k, D);
			EXPECT_EQ(apply_derivation(fb, L),
			          apply_derivation(fy, apply_derivation(fx, L)) - apply_derivation(fx, apply_derivation(fy, L)));
		}
	}
}

TEST(Bracket, SolutionsCloseUnderTheBracket)
{
	auto sys = named_system("grtm", 2);
	int D = 5;
	std::vector<PairGH> v;
	for (int d : {1, 3})
		for (auto &u : graded_nullspace(sys, d).basis)
		{
			PairGH p = as_pair(sys, u);
			v.push_back(PairGH::make(p.first.with_degree(D), p.second.with_degree(D), Mode::Lie));
		}
	ASSERT_GE(v.size(), 2u);
	PairGH b = bracket(v[0], v[1]);
	EXPECT_TRUE(valid_mod(sys, b.truncated(D + 1), D + 1));
}

TEST(Group, IdentityAndAssociativity)
{
	std::mt19937 g(8);
	for (int N : {1, 2})
	{
		int D = 4;
		PairGH p = random_group(N, D, g), q = random_group(N, D, g), r = random_group(N, D, g);
		PairGH e = group_identity(N, D);
		EXPECT_TRUE(same(multiply(p, e), p));
		EXPECT_TRUE(same(multiply(e, p), p));
		EXPECT_TRUE(same(multiply(multiply(p, q), r), multiply(p, multiply(q, r))));
	}
}

TEST(Group, LinearizationOfTheProduct)
{
	std::mt19937 g(10);
	int D = 3;
	PairGH x = random_pair(2, 1, D, g), y = random_pair(2, 1, D, g);
	PairGH p = PairGH::make(exp_series(x.first), exp_series(x.second), Mode::Group);
	PairGH q = PairGH::make(exp_series(y.first), exp_series(y.second), Mode::Group);
	PairGH m = multiply(p, q);
	EXPECT_EQ(log_series(m.second).homogeneous(1), x.second + y.second);
	EXPECT_EQ(log_series(m.first).homogeneous(1), x.first + y.first);
}

TEST(Group, AutomorphismsComposeInOppositeOrder)
{
	std::mt19937 g(12);
	int N = 2, D = 4;
	PairGH p = random_group(N, D, g), q = random_group(N, D, g);
	PairGH m = multiply(p, q);
	auto l = compose_maps(automorphism_Abar(q.second), automorphism_Abar(p.second));
	auto r = automorphism_Abar(m.second);
	auto wrong = compose_maps(automorphism_Abar(p.second), automorphism_Abar(q.second));
	bool anti = true, hom = true;
	for (size_t k = 0; k < r.images.size(); ++k)
	{
		anti = anti && l.images[k] == r.images[k];
		hom = hom && wrong.images[k] == r.images[k];
	}
	EXPECT_TRUE(anti);
	EXPECT_FALSE(hom);
}

TEST(Group, RightActionLaw)
{
	std::mt19937 g(14);
	int N = 2, D = 4;
	PairGH p = random_group(N, D, g), q = random_group(N, D, g), r = random_group(N, D, g);
	EXPECT_TRUE(same(torsor_act(torsor_act(p, q), r), torsor_act(p, multiply(q, r))));
	EXPECT_TRUE(same(torsor_act(p, group_identity(N, D)), p));
}

TEST(Flow, Examples)
{
	int D = 4;
	PairGH zero = PairGH::make(t03(1).zero(D), t03(2).zero(D), Mode::Lie);
	EXPECT_TRUE(same(exp_flow(zero, D), group_identity(2, D)));
	std::mt19937 g(2);
	PairGH v = random_pair(2, 2, 3, g);
	PairGH e = exp_flow(v, 3);
	EXPECT_EQ(e.first, t03(1).one(3) + v.first);
	EXPECT_EQ(e.second, t03(2).one(3) + v.second);
}

TEST(Flow, CertifiedElementsPassGroupResiduals)
{
	auto sys = named_system("grtm", 2);
	int D = 4;
	auto els = certified(sys, 4, D);
	ASSERT_EQ(els.size(), 3u);
	for (auto &e : els)
		EXPECT_TRUE(valid_mod(sys, e, D));
	for (auto &p : els)
		for (auto &q : els)
			EXPECT_TRUE(valid_mod(sys, multiply(p, q), D));
}

TEST(Lift, SolverElementsLift)
{
	auto sys = named_system("grtm", 2);
	auto grp = sys;
	grp.mode = Mode::Group;
	for (int d = 1; d <= 3; ++d)
		for (auto &u : graded_nullspace(sys, d).basis)
		{
			PairGH p = exp_flow(as_pair(sys, u), d);
			for (int n = d + 1; n <= 4; ++n)
			{
				auto r = lift(grp, p, n);
				EXPECT_TRUE(valid_mod(grp, r.lifted.truncated(n + 1), n + 1));
				EXPECT_EQ(r.solution_dim, graded_nullspace(sys, n).dim());
				p = r.lifted;
			}
		}
}

TEST(Lift, RejectsInvalidInput)
{
	auto grp = named_system("grtm", 2);
	grp.mode = Mode::Group;
	auto &a = t03(2);
	PairGH bad = PairGH::make(t03(1).one(2), a.exp(a.letter(0, 2)), Mode::Group);
	EXPECT_THROW(lift(grp, bad, 2), Error);
}

TEST(Broadhurst, AlphaIsAdditive)
{
	auto sys = named_system("grtmb2", 2);
	int D = 4;
	auto els = certified(sys, 3, D);
	ASSERT_GE(els.size(), 2u);
	for (auto &p : els)
		for (auto &q : els)
		{
			PairGH m = multiply(p, q);
			auto rp = residual_broadhurst(p.second, Mode::Group, D), rq = residual_broadhurst(q.second, Mode::Group, D);
			auto rm = residual_broadhurst(m.second, Mode::Group, D);
			EXPECT_TRUE(rm.residual.zero);
			EXPECT_EQ(rm.alpha, rp.alpha + rq.alpha);
		}
}
