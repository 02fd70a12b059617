#include "cyclogt/categories.hpp"
#include "cyclogt/gtgroups.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace cyclogt;

namespace {

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

long ipow(long b, int e)
{
	long p = 1;
	for (int k = 0; k < e; ++k)
		p *= b;
	return p;
}

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

bool failed(const std::vector<AxiomReport> &r, Axiom a)
{
	for (auto &x : r)
		if (x.axiom == a && !x.zero)
			return true;
	return false;
}

// (a,r) -> a~ + N r with a~ in [0,N)
mpz_class value(int N, int a, long r) { return a + N * mpz_class(r); }

} // namespace

TEST(ParenObject, ParseAndPrint)
{
	for (int n = 0; n <= 4; ++n)
		for (auto &o : ParenObject::all(n))
		{
			EXPECT_EQ(o.size(), n);
			EXPECT_EQ(ParenObject::parse(n == 0 ? "" : o.to_string()), o);
		}
	EXPECT_EQ(ParenObject::all(4).size(), 5u);
	EXPECT_EQ(ParenObject::left_comb(3).to_string(), "((..).)");
	EXPECT_EQ(tensor(ParenObject::bullet(), ParenObject::left_comb(2)).to_string(), "(.(..))");
	EXPECT_THROW(ParenObject::parse("(.."), Error);
}

TEST(GroupPart, EnumerationSizesAndGroupLaws)
{
	for (int n = 1; n <= 3; ++n)
		for (int N = 1; N <= 3; ++N)
		{
			auto all = enumerate_group(n, N);
			EXPECT_EQ(static_cast<long>(all.size()), factorial(n) * ipow(N, n));
			std::set<std::string> names;
			for (auto &g : all)
				names.insert(g.to_string());
			EXPECT_EQ(names.size(), all.size());
			GroupPart e = GroupPart::identity(n, N);
			for (auto &g : all)
			{
				EXPECT_EQ(g * e, g);
				EXPECT_EQ(e * g, g);
				EXPECT_EQ(g * g.inverse(), e);
				EXPECT_EQ(g.inverse() * g, e);
			}
			if (n == 3 && N == 2)
				for (auto &x : all)
					for (auto &y : all)
						EXPECT_EQ((x * y) * all[5], x * (y * all[5]));
		}
}

TEST(GroupPart, ActionOnLetters)
{
	auto &u = side_algebra(Side::C, 3, 3);
	int D = 2;
	GroupPart c = GroupPart::residues({1, 0, 2}, 3);
	// t(a)^{ij} -> t(a + c_i - c_j)^{ij}
	EXPECT_EQ(act(c, Side::C, u.t_cyc(1, 2, 0, D)), u.t_cyc(1, 2, 1, D));
	EXPECT_EQ(act(c, Side::C, u.t_cyc(2, 3, 1, D)), u.t_cyc(2, 3, 2, D));
	GroupPart s = GroupPart::permutation({1, 0, 2}, 3);
	EXPECT_EQ(act(s, Side::C, u.t_cyc(1, 3, 1, D)), u.t_cyc(2, 3, 1, D));
	// t(a)^{21} = t(-a)^{12}
	EXPECT_EQ(act(s, Side::C, u.t_cyc(1, 2, 1, D)), u.t_cyc(1, 2, 2, D));

	// the module side moves the poles with the strands
	auto &t = side_algebra(Side::M, 2, 2);
	GroupPart s2 = GroupPart::permutation({1, 0}, 2);
	EXPECT_EQ(act(s2, Side::M, t.letter(t.pole(2), D)), t.letter(t.pole(3), D));
	EXPECT_EQ(act(GroupPart::residues({1, 0}, 2), Side::M, t.letter(t.pole(2), D)), t.letter(t.pole(2), D));
}

TEST(GroupPart, ActionIsAHomomorphism)
{
	std::mt19937 g(7);
	int D = 3;
	for (Side side : {Side::C, Side::M})
	{
		auto &a = side_algebra(side, 3, 2);
		auto all = enumerate_group(3, 2);
		Series x = oracle::random_lie(a.alphabet(), 1, D, g) + oracle::random_lie(a.alphabet(), 2, D, g);
		x = a.normal_form(x);
		for (int k = 0; k < 6; ++k)
		{
			auto &p = all[(7 * k + 3) % all.size()];
			auto &q = all[(11 * k + 1) % all.size()];
			EXPECT_EQ(act(p * q, side, x), act(p, side, act(q, side, x)));
			EXPECT_EQ(act(p, side, a.bracket(x, x)), a.bracket(act(p, side, x), act(p, side, x)));
		}
	}
}

TEST(Morphisms, IdentityInverseAndTensor)
{
	int N = 2, D = 3;
	auto &a = side_algebra(Side::C, 3, N);
	CatMorphism f = CatMorphism::group(Side::C, GroupPart::residues({1, 0, 1}, N), D);
	f.u = a.exp(a.t_cyc(1, 2, 1, D) + a.t_cyc(2, 3, 0, D));
	CatMorphism id = CatMorphism::identity(Side::C, 3, N, D);
	auto eq = [](const CatMorphism &x, const CatMorphism &y) { return x.gamma == y.gamma && x.u == y.u; };
	EXPECT_TRUE(eq(compose(f, id), f));
	EXPECT_TRUE(eq(compose(id, f), f));
	EXPECT_TRUE(eq(compose(f, inverse(f)), id));
	EXPECT_TRUE(eq(compose(inverse(f), f), id));

	// tensor of braidings is a block permutation
	CatMorphism b = CatMorphism::group(Side::C, braiding(1, 2, N), D);
	CatMorphism t = tensor(b, CatMorphism::identity(Side::C, 1, N, D));
	EXPECT_EQ(t.gamma.perm, (std::vector<int>{2, 0, 1, 3}));
	EXPECT_EQ(braiding(2, 1, N).perm, (std::vector<int>{1, 2, 0}));
}

TEST(Axioms, UntwistedStructureSatisfiesAll)
{
	for (int N : {1, 2, 3})
	{
		auto r = check_axioms(TwistedStructure::untwisted(N, 3), all_axioms(), 4);
		EXPECT_FALSE(r.empty());
		EXPECT_TRUE(all_zero(r)) << "N=" << N;
	}
}

TEST(Axioms, CertifiedTwistsSatisfyAll)
{
	int N = 2, D = 3;
	auto els = certified(named_system("grtm", N), 2, D);
	ASSERT_FALSE(els.empty());
	for (auto &p : els)
		EXPECT_TRUE(all_zero(check_axioms(TwistedStructure(p, D), all_axioms(), 3)));
}

TEST(Axioms, NonSolutionsAreDetected)
{
	int N = 2, D = 3;
	auto &b = t03(N);
	PairGH p = PairGH::make(t03(1).one(D), b.exp(b.letter(0, D)), Mode::Group);
	auto r = check_axioms(TwistedStructure(p, D), all_axioms(), 3);
	EXPECT_TRUE(failed(r, Axiom::ImcPentagon));
	for (auto &x : r)
		if (!x.zero)
			EXPECT_EQ(x.lowest_nonzero_degree, 1);

	// satisfies the mixed pentagon but not the octagon
	auto imp = implication_check(named_system("mixed-pentagon", N), named_system("octagon", N), 2);
	ASSERT_TRUE(imp.witness.has_value());
	PairGH w = as_pair(named_system("mixed-pentagon", N), *imp.witness);
	PairGH g = exp_flow(PairGH::make(w.first.with_degree(D), w.second.with_degree(D), Mode::Lie), D);
	auto rw = check_axioms(TwistedStructure(g, D), parse_axioms("I,II"), 3);
	EXPECT_TRUE(failed(rw, Axiom::ImcOctagon));
	EXPECT_FALSE(failed(rw, Axiom::ImcPentagon));
}

TEST(Axioms, SelectionParsing)
{
	EXPECT_EQ(parse_axioms("all").size(), all_axioms().size());
	EXPECT_EQ(parse_axioms("ibmc").size(), 5u);
	EXPECT_EQ(parse_axioms("imc").size(), 4u);
	EXPECT_EQ(parse_axioms("II"), std::vector<Axiom>{Axiom::ImcOctagon});
	EXPECT_EQ(parse_axioms("IV").size(), 2u);
	EXPECT_THROW(parse_axioms("V"), Error);
	EXPECT_EQ(axiom_name(Axiom::ImcTSecond), "imc-IV-second");
}

TEST(Axioms, BraidingCommutesWithT)
{
	int N = 3, D = 2;
	for (int x = 1; x <= 2; ++x)
		for (int y = 1; x + y <= 3; ++y)
		{
			auto &a = side_algebra(Side::C, x + y, N);
			Series l = act(braiding(x, y, N), Side::C, t_XY(x, y, N, D));
			EXPECT_EQ(l, t_XY(y, x, N, D)) << x << "," << y;
			EXPECT_FALSE(t_XY(x, y, N, D).is_zero());
			(void)a;
		}
	auto r = check_axioms(TwistedStructure::untwisted(N, D), parse_axioms("iii,IV"), 3);
	EXPECT_TRUE(all_zero(r));
	bool second = false;
	for (auto &x : r)
		second = second || x.axiom == Axiom::ImcTSecond;
	EXPECT_TRUE(second);
}

TEST(RingRN, ExhaustiveAgainstIntegers)
{
	for (int N : {2, 3, 4})
		for (int a = 0; a < N; ++a)
			for (long r = -3; r <= 3; ++r)
			{
				RingRN x = ring_rn(N, a, r);
				EXPECT_EQ(ring_rn_value(x), value(N, a, r));
				RingRN nx = ring_rn_neg(x);
				EXPECT_EQ(ring_rn_value(nx), -value(N, a, r));
				EXPECT_EQ(ring_rn_add(x, nx), ring_rn(N, 0, 0));
				for (int b = 0; b < N; ++b)
					for (long s = -3; s <= 3; ++s)
					{
						RingRN y = ring_rn(N, b, s);
						EXPECT_EQ(ring_rn_value(ring_rn_add(x, y)), value(N, a, r) + value(N, b, s));
						EXPECT_EQ(ring_rn_value(ring_rn_mul(x, y)), value(N, a, r) * value(N, b, s));
						EXPECT_EQ(ring_rn_mul(x, y), ring_rn_mul(y, x));
					}
			}
}

TEST(RingRN, SmallExamples)
{
	EXPECT_EQ(ring_rn_add(ring_rn(2, 1, 0), ring_rn(2, 1, 0)), ring_rn(2, 0, 1));
	EXPECT_EQ(ring_rn_mul(ring_rn(2, 1, 0), ring_rn(2, 1, 0)), ring_rn(2, 1, 0));
	EXPECT_EQ(ring_sigma(3, 2, 2), 1);
	EXPECT_EQ(ring_pi(3, 2, 2), 1);
	EXPECT_EQ(ring_rn(3, 5, 0), ring_rn(3, 2, 1));
}
