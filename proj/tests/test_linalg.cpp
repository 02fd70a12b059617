#include "cyclogt/linalg.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace cyclogt;

namespace {

std::vector<SparseRow> random_rows(std::mt19937 &g, int nrows, int ncols, int rank)
{
	// rows are combinations of `rank` random generators, so the rank is known generically
	std::uniform_int_distribution<int> c(-4, 4);
	std::vector<std::vector<Rational>> gens(rank, std::vector<Rational>(ncols));
	for (auto &v : gens)
		for (auto &x : v)
			x = c(g);
	std::vector<SparseRow> rows;
	for (int r = 0; r < nrows; ++r)
	{
		std::vector<Rational> v(ncols, 0);
		for (auto &gv : gens)
		{
			int f = c(g);
			for (int k = 0; k < ncols; ++k)
				v[k] += f * gv[k];
		}
		SparseRow row;
		for (int k = 0; k < ncols; ++k)
			if (v[k] != 0)
				row.emplace_back(k, v[k]);
		rows.push_back(row);
	}
	return rows;
}

int oracle_rank(const std::vector<SparseRow> &rows)
{
	std::vector<std::map<uint64_t, Rational>> m;
	for (auto &r : rows)
	{
		std::map<uint64_t, Rational> x;
		for (auto &[k, v] : r)
			x[k] = v;
		m.push_back(x);
	}
	return oracle::rank(m);
}

} // namespace

TEST(ExactEchelon, NullspaceVectorsAreKernelVectors)
{
	std::mt19937 g(2);
	for (int trial = 0; trial < 10; ++trial)
	{
		int ncols = 9, rank = trial % 7;
		auto rows = random_rows(g, 12, ncols, rank);
		ExactEchelon e(ncols);
		for (auto &r : rows)
			e.add_row(r);
		EXPECT_EQ(e.rank(), oracle_rank(rows));
		auto ns = e.nullspace();
		EXPECT_EQ(static_cast<int>(ns.size()), ncols - e.rank());
		for (auto &v : ns)
			for (auto &r : rows)
			{
				Rational s = 0;
				for (auto &[k, x] : r)
					s += x * v[k];
				EXPECT_EQ(s, 0);
			}
	}
}

TEST(ExactEchelon, RrefHasUnitPivots)
{
	ExactEchelon e(3);
	e.add_row({{0, Rational(2)}, {1, Rational(4)}});
	e.add_row({{1, Rational(3)}, {2, Rational(1)}});
	EXPECT_FALSE(e.add_row({{0, Rational(2)}, {1, Rational(7)}, {2, Rational(1)}}));
	auto r = e.rref();
	ASSERT_EQ(r.size(), 2u);
	for (auto &[p, row] : r)
		EXPECT_EQ(row[p], 1);
	EXPECT_EQ(r[0].second[1], 0);
}

TEST(ModpEchelon, AgreesWithExactRank)
{
	std::mt19937 g(4);
	for (int trial = 0; trial < 10; ++trial)
	{
		auto rows = random_rows(g, 10, 8, trial % 6);
		ExactEchelon e(8);
		ModpEchelon m(8, 1000003);
		SparseEchelon s;
		for (auto &r : rows)
		{
			e.add_row(r);
			m.add_row(r);
			s.add_row(r);
		}
		EXPECT_EQ(e.rank(), m.rank());
		EXPECT_EQ(e.rank(), s.rank());
	}
}

TEST(ModpEchelon, SmallPrimeCanUndercount)
{
	// 3x is invertible over Q but not mod 3: the probe is only a cross-check
	ExactEchelon e(1);
	ModpEchelon m(1, 3);
	e.add_row({{0, Rational(3)}});
	m.add_row({{0, Rational(3)}});
	EXPECT_EQ(e.rank(), 1);
	EXPECT_EQ(m.rank(), 0);
}

TEST(SolveAffine, ParticularAndHomogeneous)
{
	// x + y = 2, y + z = 3
	std::vector<SparseRow> rows{{{0, Rational(1)}, {1, Rational(1)}}, {{1, Rational(1)}, {2, Rational(1)}}};
	auto s = solve_affine(3, rows, {Rational(2), Rational(3)});
	ASSERT_TRUE(s.consistent);
	EXPECT_EQ(s.particular[0] + s.particular[1], 2);
	EXPECT_EQ(s.particular[1] + s.particular[2], 3);
	ASSERT_EQ(s.homogeneous.size(), 1u);
	auto &h = s.homogeneous[0];
	EXPECT_EQ(h[0] + h[1], 0);
	EXPECT_EQ(h[1] + h[2], 0);
	auto bad = solve_affine(2, {{{0, Rational(1)}}, {{0, Rational(2)}}}, {Rational(1), Rational(1)});
	EXPECT_FALSE(bad.consistent);
}
