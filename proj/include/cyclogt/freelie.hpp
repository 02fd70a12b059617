#pragma once

#include "cyclogt/series.hpp"

namespace cyclogt {

struct LyndonBasisElement
{
	Word word;
	std::string bracket; // standard bracketing, e.g. [A,[A,B]]
	Series expansion;
};

// All Lyndon elements of degree exactly d; expansions are truncated at trunc (default d).
std::vector<LyndonBasisElement> lyndon_basis(const AlphabetPtr &alphabet, int d, int trunc = -1);
long witt_number(int rank, int d);

Series lie_bracket(const Series &a, const Series &b);
Series lie_project(const Series &s);
bool is_lie(const Series &s);
Series bch(const Series &x, const Series &y, int D);

} // namespace cyclogt
