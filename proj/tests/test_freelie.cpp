#include "cyclogt/freelie.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace cyclogt;

namespace {

AlphabetPtr rank_alphabet(int r)
{
	std::vector<std::string> labels;
	for (int k = 1; k <= r; ++k)
		labels.push_back("x" + std::to_string(k));
	return make_plain_alphabet(labels);
}

} // namespace

TEST(Witt, FormulaMatchesBruteForceLyndonCount)
{
	for (int r : {2, 3})
		for (int d = 1; d <= 6; ++d)
			EXPECT_EQ(oracle::witt(r, d), oracle::lyndon_count(r, d)) << r << " " << d;
}

TEST(Lyndon, CountsAreWittNumbers)
{
	for (int r : {2, 3, 5})
		for (int d = 1; d <= (r == 5 ? 5 : 7); ++d)
		{
			EXPECT_EQ(static_cast<long>(lyndon_basis(rank_alphabet(r), d).size()), oracle::witt(r, d));
			EXPECT_EQ(witt_number(r, d), oracle::witt(r, d));
		}
}

TEST(Lyndon, ElementsAreIndependentLieElements)
{
	auto a = rank_alphabet(2);
	for (int d = 1; d <= 6; ++d)
	{
		std::vector<std::map<uint64_t, Rational>> rows;
		for (auto &e : lyndon_basis(a, d))
		{
			EXPECT_TRUE(is_lie(e.expansion));
			EXPECT_EQ(e.expansion.lowest_degree(), d);
			// leading word of the standard bracketing is the Lyndon word itself
			EXPECT_EQ(e.expansion.coeff(e.word), 1);
			rows.push_back(oracle::coords(e.expansion));
		}
		EXPECT_EQ(oracle::rank(rows), oracle::witt(2, d));
		// and they span the left-normed brackets
		auto span = oracle::left_normed(a, d, d);
		std::vector<std::map<uint64_t, Rational>> all = rows;
		for (auto &s : span)
			all.push_back(oracle::coords(s));
		EXPECT_EQ(oracle::rank(all), oracle::witt(2, d));
	}
}

TEST(Lyndon, StandardBracketingText)
{
	auto b = lyndon_basis(make_plain_alphabet({"A", "B"}), 3);
	ASSERT_EQ(b.size(), 2u);
	EXPECT_EQ(b[0].bracket, "[A,[A,B]]");
	EXPECT_EQ(b[1].bracket, "[[A,B],B]");
}

TEST(Lie, JacobiIdentity)
{
	auto a = rank_alphabet(3);
	std::mt19937 g(5);
	for (int k = 0; k < 5; ++k)
	{
		Series x = oracle::random_lie(a, 1, 5, g), y = oracle::random_lie(a, 2, 5, g),
		       z = oracle::random_lie(a, 1, 5, g);
		Series j = lie_bracket(x, lie_bracket(y, z)) + lie_bracket(y, lie_bracket(z, x)) +
		           lie_bracket(z, lie_bracket(x, y));
		EXPECT_TRUE(j.is_zero());
	}
}

TEST(Lie, ProjectionDetectsNonLieElements)
{
	auto a = make_plain_alphabet({"A", "B"});
	Series ab = Series::letter(a, 2, 0) * Series::letter(a, 2, 1);
	EXPECT_FALSE(is_lie(ab));
	Series c = lie_bracket(Series::letter(a, 2, 0), Series::letter(a, 2, 1));
	EXPECT_TRUE(is_lie(c));
	// the normalized Dynkin projection fixes Lie elements and is idempotent
	EXPECT_EQ(lie_project(c), c);
	EXPECT_EQ(lie_project(lie_project(ab)), lie_project(ab));
	EXPECT_EQ(lie_project(ab), Rational(1, 2) * c);
}

TEST(Bch, LowDegreeTermsAreClassical)
{
	auto a = make_plain_alphabet({"A", "B"});
	int D = 3;
	Series x = Series::letter(a, D, 0), y = Series::letter(a, D, 1);
	Series z = bch(x, y, D);
	Series expected = x + y + Rational(1, 2) * lie_bracket(x, y) +
	                  Rational(1, 12) * (lie_bracket(x, lie_bracket(x, y)) + lie_bracket(y, lie_bracket(y, x)));
	EXPECT_EQ(z, expected);
}
