#include "cyclogt/freelie.hpp"

#include <map>

namespace cyclogt {

namespace {

// Duval's algorithm restricted to words of length exactly n.
std::vector<std::vector<int>> lyndon_words(int k, int n)
{
	std::vector<std::vector<int>> out;
	if (k <= 0 || n <= 0)
		return out;
	std::vector<int> w{-1};
	while (!w.empty())
	{
		++w.back();
		if (static_cast<int>(w.size()) == n)
			out.push_back(w);
		size_t m = w.size();
		while (static_cast<int>(w.size()) < n)
			w.push_back(w[w.size() - m]);
		while (!w.empty() && w.back() == k - 1)
			w.pop_back();
	}
	return out;
}

bool is_lyndon(const std::vector<int> &w)
{
	for (size_t s = 1; s < w.size(); ++s)
	{
		std::vector<int> suffix(w.begin() + s, w.end());
		if (!(w < suffix))
			return false;
	}
	return !w.empty();
}

struct Expander
{
	const AlphabetPtr &alphabet;
	int trunc;
	std::map<std::vector<int>, std::pair<std::string, Series>> memo;

	const std::pair<std::string, Series> &get(const std::vector<int> &w)
	{
		auto it = memo.find(w);
		if (it != memo.end())
			return it->second;
		std::pair<std::string, Series> r;
		if (w.size() == 1)
		{
			r = {(*alphabet)[w[0]].label, Series::letter(alphabet, trunc, w[0])};
		}
		else
		{
			// standard factorization: right factor is the longest proper Lyndon suffix
			size_t split = w.size() - 1;
			for (size_t s = 1; s < w.size(); ++s)
				if (is_lyndon(std::vector<int>(w.begin() + s, w.end())))
				{
					split = s;
					break;
				}
			std::vector<int> u(w.begin(), w.begin() + split), v(w.begin() + split, w.end());
			auto pu = get(u);
			auto pv = get(v);
			r = {"[" + pu.first + "," + pv.first + "]", lie_bracket(pu.second, pv.second)};
		}
		return memo.emplace(w, std::move(r)).first->second;
	}
};

int mobius(int n)
{
	int result = 1;
	for (int p = 2; p * p <= n; ++p)
		if (n % p == 0)
		{
			n /= p;
			if (n % p == 0)
				return 0;
			result = -result;
		}
	return n > 1 ? -result : result;
}

Series theta(const Series &s)
{
	// left-normed bracketing: theta(w a) = theta(w) a - a theta(w)
	auto d = s.lowest_degree();
	if (!d || *d <= 1)
		return s;
	std::map<int, Series> split;
	for (auto &[w, c] : s.terms())
	{
		auto it = split.try_emplace(w.back(), s.alphabet_ptr(), s.degree()).first;
		it->second.add_term(w.pop_back(), c);
	}
	Series r(s.alphabet_ptr(), s.degree());
	for (auto &[a, part] : split)
	{
		Series t = theta(part);
		Series letter = Series::letter(s.alphabet_ptr(), s.degree(), a);
		r += t * letter - letter * t;
	}
	return r;
}

} // namespace

std::vector<LyndonBasisElement> lyndon_basis(const AlphabetPtr &alphabet, int d, int trunc)
{
	if (d < 1)
		throw Error("Lyndon degree must be positive");
	if (trunc < 0)
		trunc = d;
	Expander ex{alphabet, trunc, {}};
	std::vector<LyndonBasisElement> out;
	for (auto &w : lyndon_words(alphabet->size(), d))
	{
		auto &e = ex.get(w);
		out.push_back({Word(w), e.first, e.second});
	}
	return out;
}

long witt_number(int rank, int d)
{
	mpz_class total = 0;
	for (int e = 1; e <= d; ++e)
		if (d % e == 0)
		{
			mpz_class p;
			mpz_ui_pow_ui(p.get_mpz_t(), rank, d / e);
			total += mobius(e) * p;
		}
	total /= d;
	return total.get_si();
}

Series lie_bracket(const Series &a, const Series &b) { return commutator(a, b); }

Series lie_project(const Series &s)
{
	if (sgn(s.constant_term()) != 0)
		throw Error("lie_project requires zero constant term");
	Series r(s.alphabet_ptr(), s.degree());
	for (int n = 1; n <= s.degree(); ++n)
	{
		Series part = s.homogeneous(n);
		if (part.is_zero())
			continue;
		r += Rational(1, n) * theta(part);
	}
	return r;
}

bool is_lie(const Series &s)
{
	if (sgn(s.constant_term()) != 0)
		return false;
	return lie_project(s) == s;
}

Series bch(const Series &x, const Series &y, int D)
{
	if (!is_lie(x) || !is_lie(y))
		throw Error("bch requires Lie elements");
	return log_series(exp_series(x.with_degree(D)) * exp_series(y.with_degree(D)));
}

} // namespace cyclogt
