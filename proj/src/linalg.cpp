#include "cyclogt/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace cyclogt {

namespace {

mpz_class denominator_lcm(const SparseRow &row)
{
	mpz_class l = 1;
	for (auto &[c, v] : row)
		mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
	return l;
}

void make_primitive(std::vector<mpz_class> &r)
{
	mpz_class g = 0;
	for (auto &x : r)
		if (x != 0)
		{
			mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
			if (g == 1)
				return;
		}
	if (g > 1)
		for (auto &x : r)
			if (x != 0)
				mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

} // namespace

ExactEchelon::ExactEchelon(int ncols) : ncols_(ncols) {}

bool ExactEchelon::add_row(const SparseRow &row)
{
	if (full())
		return false;
	std::vector<mpz_class> r(ncols_);
	mpz_class l = denominator_lcm(row);
	bool any = false;
	for (auto &[c, v] : row)
	{
		if (c < 0 || c >= ncols_)
			throw Error("matrix column out of range");
		mpz_class num = v.get_num() * (l / v.get_den());
		r[c] += num;
		any = any || r[c] != 0;
	}
	if (!any)
		return false;
	for (size_t k = 0; k < rows_.size(); ++k)
	{
		int pc = pivots_[k];
		if (r[pc] == 0)
			continue;
		const auto &p = rows_[k];
		mpz_class a = p[pc], b = r[pc];
		mpz_class g = gcd(a, b);
		a /= g;
		b /= g;
		for (int c = 0; c < ncols_; ++c)
		{
			if (p[c] == 0)
			{
				if (r[c] != 0)
					r[c] *= a;
				continue;
			}
			r[c] = a * r[c] - b * p[c];
		}
		make_primitive(r);
	}
	auto it = std::find_if(r.begin(), r.end(), [](const mpz_class &x) { return x != 0; });
	if (it == r.end())
		return false;
	make_primitive(r);
	pivots_.push_back(static_cast<int>(it - r.begin()));
	rows_.push_back(std::move(r));
	return true;
}

std::vector<std::pair<int, DenseVector>> ExactEchelon::rref() const
{
	size_t rk = rows_.size();
	std::vector<int> order(rk);
	std::iota(order.begin(), order.end(), 0);
	std::sort(order.begin(), order.end(), [&](int x, int y) { return pivots_[x] < pivots_[y]; });
	std::vector<std::pair<int, DenseVector>> R;
	for (int k : order)
	{
		DenseVector v(ncols_);
		for (int c = 0; c < ncols_; ++c)
			v[c] = rows_[k][c];
		R.emplace_back(pivots_[k], std::move(v));
	}
	// back substitution from the last pivot keeps the work triangular
	for (size_t k = rk; k-- > 0;)
	{
		int pk = R[k].first;
		Rational inv = 1 / R[k].second[pk];
		for (auto &x : R[k].second)
			if (sgn(x) != 0)
				x *= inv;
		for (size_t o = 0; o < k; ++o)
		{
			if (sgn(R[o].second[pk]) == 0)
				continue;
			Rational f = R[o].second[pk];
			for (int c = pk; c < ncols_; ++c)
				if (sgn(R[k].second[c]) != 0)
					R[o].second[c] -= f * R[k].second[c];
		}
	}
	return R;
}

std::vector<DenseVector> ExactEchelon::nullspace() const
{
	auto R = rref();
	std::vector<bool> is_pivot(ncols_, false);
	for (auto &[p, row] : R)
		is_pivot[p] = true;
	std::vector<DenseVector> basis;
	for (int f = 0; f < ncols_; ++f)
	{
		if (is_pivot[f])
			continue;
		DenseVector v(ncols_);
		v[f] = 1;
		for (auto &[p, row] : R)
			v[p] = -row[f];
		mpz_class l = 1;
		for (auto &x : v)
			mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
		for (auto &x : v)
			x *= l;
		basis.push_back(std::move(v));
	}
	return basis;
}

ModpEchelon::ModpEchelon(int ncols, uint64_t prime) : ncols_(ncols), p_(prime)
{
	if (prime < 3 || prime >= (uint64_t(1) << 62))
		throw Error("probe modulus out of range");
}

namespace {
uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p)
{
	return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}
uint64_t powmod(uint64_t a, uint64_t e, uint64_t p)
{
	uint64_t r = 1;
	while (e)
	{
		if (e & 1)
			r = mulmod(r, a, p);
		a = mulmod(a, a, p);
		e >>= 1;
	}
	return r;
}
uint64_t reduce_mod(const mpz_class &z, uint64_t p)
{
	mpz_class m;
	mpz_fdiv_r_ui(m.get_mpz_t(), z.get_mpz_t(), p);
	return m.get_ui();
}
} // namespace

bool ModpEchelon::add_row(const SparseRow &row)
{
	std::vector<uint64_t> r(ncols_, 0);
	for (auto &[c, v] : row)
	{
		uint64_t den = reduce_mod(v.get_den(), p_);
		if (den == 0)
			throw Error("probe modulus divides a denominator");
		uint64_t x = mulmod(reduce_mod(v.get_num(), p_), powmod(den, p_ - 2, p_), p_);
		r[c] = (r[c] + x) % p_;
	}
	for (size_t k = 0; k < rows_.size(); ++k)
	{
		int pc = pivots_[k];
		if (r[pc] == 0)
			continue;
		uint64_t f = r[pc]; // pivot rows are monic
		for (int c = 0; c < ncols_; ++c)
			if (rows_[k][c])
				r[c] = (r[c] + p_ - mulmod(f, rows_[k][c], p_)) % p_;
	}
	auto it = std::find_if(r.begin(), r.end(), [](uint64_t x) { return x != 0; });
	if (it == r.end())
		return false;
	uint64_t inv = powmod(*it, p_ - 2, p_);
	for (auto &x : r)
		x = mulmod(x, inv, p_);
	pivots_.push_back(static_cast<int>(it - r.begin()));
	rows_.push_back(std::move(r));
	return true;
}

bool SparseEchelon::add_row(const SparseRow &row)
{
	std::map<int, mpz_class> acc;
	mpz_class l = denominator_lcm(row);
	for (auto &[c, v] : row)
		acc[c] += v.get_num() * (l / v.get_den());
	IntRow r;
	for (auto &[c, v] : acc)
		if (v != 0)
			r.emplace_back(c, v);
	while (!r.empty())
	{
		auto it = pivot_of_.find(r.front().first);
		if (it == pivot_of_.end())
		{
			mpz_class g = 0;
			for (auto &[c, v] : r)
				mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
			for (auto &[c, v] : r)
				mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
			pivot_of_[r.front().first] = rows_.size();
			rows_.push_back(std::move(r));
			return true;
		}
		const IntRow &p = rows_[it->second];
		mpz_class a = p.front().second, b = r.front().second;
		mpz_class g = gcd(a, b);
		a /= g;
		b /= g;
		IntRow out;
		size_t i = 0, j = 0;
		while (i < r.size() || j < p.size())
		{
			if (j == p.size() || (i < r.size() && r[i].first < p[j].first))
			{
				out.emplace_back(r[i].first, a * r[i].second);
				++i;
			}
			else if (i == r.size() || p[j].first < r[i].first)
			{
				out.emplace_back(p[j].first, -b * p[j].second);
				++j;
			}
			else
			{
				mpz_class v = a * r[i].second - b * p[j].second;
				if (v != 0)
					out.emplace_back(r[i].first, std::move(v));
				++i;
				++j;
			}
		}
		r = std::move(out);
	}
	return false;
}

AffineSolution solve_affine(int ncols, const std::vector<SparseRow> &rows, const DenseVector &rhs)
{
	if (rows.size() != rhs.size())
		throw Error("right-hand side length mismatch");
	ExactEchelon e(ncols + 1);
	for (size_t k = 0; k < rows.size(); ++k)
	{
		SparseRow r = rows[k];
		if (sgn(rhs[k]) != 0)
			r.emplace_back(ncols, -rhs[k]);
		e.add_row(r);
	}
	AffineSolution sol;
	for (auto &v : e.nullspace())
	{
		if (sgn(v[ncols]) == 0)
		{
			v.pop_back();
			sol.homogeneous.push_back(std::move(v));
		}
		else
		{
			Rational s = 1 / v[ncols];
			v.pop_back();
			for (auto &x : v)
				x *= s;
			sol.particular = std::move(v);
			sol.consistent = true;
		}
	}
	return sol;
}

} // namespace cyclogt
