#pragma once

#include "cyclogt/tkn.hpp"

namespace cyclogt {

enum class Mode
{
	Lie,
	Group
};

std::string mode_name(Mode m);
Mode mode_from_name(std::string_view s);

// (phi, psi) or (g, h); first over t0_3 (A, B), second over t0_{3,N}.
struct PairGH
{
	Series first;
	Series second;
	int N = 1;
	int degree = 0;
	Mode mode = Mode::Lie;

	static PairGH make(Series first, Series second, Mode mode);
	void validate() const;
	// Same data at truncation D; group components are extended through their logarithms.
	PairGH truncated(int D) const;
};

struct Residual
{
	AlgebraId ambient;
	Series value;
	bool zero = true;
	std::optional<int> lowest_nonzero_degree;
};

Residual make_residual(const AlgebraId &ambient, Series value);

const PresentedAlgebra &t03(int N);

// Coefficient of a word given by labels, e.g. c(x, {"A","B(0)"}).
Rational c_word(const Series &x, const std::vector<std::string> &labels);

// A-slot -> A or C, B(i)-slot -> B(shift + sign*i), in t0_{3,N}.
GeneratorMap cyclic_pattern(int N, bool first_is_C, int shift, int sign, int D);
Series apply_pattern(const Series &x, bool first_is_C, int shift, int sign);

enum class HexagonVariant
{
	Lie,
	Group,
	M
};

struct DualityHexagon
{
	Residual duality;
	Residual hexagon;
};

DualityHexagon residual_duality_hexagon(const Series &x, HexagonVariant v, int D);
Residual residual_duality(const Series &x, Mode mode, int D);
Residual residual_hexagon(const Series &x, HexagonVariant v, int D);

Series rescale(const Series &g, const Rational &mu);
bool check_mu(const Series &g, const Rational &mu);

Residual residual_pentagon(const Series &x, Mode mode, int D);

// Special derivation / action condition. The group versions carry one degree
// more than the Lie data they constrain (the defining identity is A+B+C=0 in
// degree 1), so D should exceed the data degree by one.
Residual residual_special(const Series &x, Mode mode, int D);
Residual residual_special_cyclotomic(const Series &psi, Mode mode, int D);

Residual residual_mixed_pentagon(const PairGH &p, int D);

enum class OctagonVariant
{
	Lie,
	Group,
	Pseudo
};
Residual residual_octagon(const Series &psi, OctagonVariant v, int D);
Series octagon_defect(const Series &psi);

Residual residual_distribution(const Series &psi, Mode mode, int Nprime, int D);

struct BroadhurstResult
{
	Residual residual;
	Rational alpha;
};
BroadhurstResult residual_broadhurst(const Series &x, Mode mode, int D);

} // namespace cyclogt
