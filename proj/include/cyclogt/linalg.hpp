#pragma once

#include "cyclogt/series.hpp"

#include <map>

namespace cyclogt {

using SparseRow = std::vector<std::pair<int, Rational>>;
using DenseVector = std::vector<Rational>;

// Fraction-free row echelon over the integers for dense rows of fixed width.
// Rows are kept primitive (content divided out); pivot rows vanish at all
// earlier pivot columns, so reduction in insertion order is exact.
class ExactEchelon
{
  public:
	explicit ExactEchelon(int ncols);

	bool add_row(const SparseRow &row); // true if the row was independent
	int rank() const { return static_cast<int>(rows_.size()); }
	int ncols() const { return ncols_; }
	bool full() const { return rank() == ncols_; }
	const std::vector<int> &pivots() const { return pivots_; }

	// Basis of {x : M x = 0}, one vector per free column, primitive integral.
	std::vector<DenseVector> nullspace() const;
	// Reduced row echelon form: (pivot column, row with 1 at the pivot), sorted by pivot.
	std::vector<std::pair<int, DenseVector>> rref() const;

  private:
	int ncols_;
	std::vector<std::vector<mpz_class>> rows_;
	std::vector<int> pivots_;
};

// Same elimination modulo a prime, used as a cross-check.
class ModpEchelon
{
  public:
	ModpEchelon(int ncols, uint64_t prime);
	bool add_row(const SparseRow &row);
	int rank() const { return static_cast<int>(rows_.size()); }

  private:
	int ncols_;
	uint64_t p_;
	std::vector<std::vector<uint64_t>> rows_;
	std::vector<int> pivots_;
};

// Sparse fraction-free elimination with leading-column pivots, for the wide
// systems of the linear-quotient oracle.
class SparseEchelon
{
  public:
	bool add_row(const SparseRow &row);
	int rank() const { return static_cast<int>(rows_.size()); }

  private:
	using IntRow = std::vector<std::pair<int, mpz_class>>;
	std::vector<IntRow> rows_;
	std::map<int, size_t> pivot_of_;
};

// Exact solution set of M x = b given as rows of M and entries of b.
struct AffineSolution
{
	bool consistent = false;
	DenseVector particular;
	std::vector<DenseVector> homogeneous;
};
AffineSolution solve_affine(int ncols, const std::vector<SparseRow> &rows, const DenseVector &rhs);

} // namespace cyclogt
