#include "cyclogt/series.hpp"

#include <algorithm>
#include <sstream>

namespace cyclogt {

std::string rational_to_string(const Rational &q)
{
	Rational c = q;
	c.canonicalize();
	return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational rational_from_string(std::string_view s)
{
	std::string str(s);
	Rational q;
	if (q.set_str(str, 10) != 0)
		throw Error("malformed rational: " + str);
	if (q.get_den() == 0)
		throw Error("zero denominator: " + str);
	q.canonicalize();
	return q;
}

Alphabet::Alphabet(std::vector<Generator> gens, int N) : gens_(std::move(gens)), N_(N)
{
	if (N < 1)
		throw Error("cyclotomic order must be positive");
	if (static_cast<int>(gens_.size()) > Word::kMaxLetters)
		throw Error("alphabet too large for packed words");
	for (size_t a = 0; a < gens_.size(); ++a)
		for (size_t b = a + 1; b < gens_.size(); ++b)
			if (gens_[a].label == gens_[b].label)
				throw Error("duplicate generator label " + gens_[a].label);
}

std::optional<int> Alphabet::find(std::string_view label) const
{
	for (size_t k = 0; k < gens_.size(); ++k)
		if (gens_[k].label == label)
			return static_cast<int>(k);
	return std::nullopt;
}

int Alphabet::index(std::string_view label) const
{
	auto k = find(label);
	if (!k)
		throw Error("unknown generator " + std::string(label));
	return *k;
}

std::optional<int> Alphabet::find_role(const GeneratorRole &role) const
{
	for (size_t k = 0; k < gens_.size(); ++k)
		if (gens_[k].role == role)
			return static_cast<int>(k);
	return std::nullopt;
}

bool Alphabet::operator==(const Alphabet &o) const
{
	if (N_ != o.N_ || gens_.size() != o.gens_.size())
		return false;
	for (size_t k = 0; k < gens_.size(); ++k)
		if (gens_[k].label != o.gens_[k].label)
			return false;
	return true;
}

bool same_alphabet(const AlphabetPtr &a, const AlphabetPtr &b)
{
	if (a == b)
		return true;
	if (!a || !b)
		return false;
	return *a == *b;
}

AlphabetPtr make_plain_alphabet(const std::vector<std::string> &labels, int N)
{
	std::vector<Generator> gens;
	for (auto &l : labels)
		gens.push_back(Generator{l, {}, 0});
	return std::make_shared<Alphabet>(std::move(gens), N);
}

Word::Word(const std::vector<int> &letters)
{
	if (static_cast<int>(letters.size()) > kMaxLength)
		throw Error("word longer than supported maximum");
	bits_ = letters.size();
	for (size_t k = 0; k < letters.size(); ++k)
	{
		if (letters[k] < 0 || letters[k] >= kMaxLetters)
			throw Error("letter index out of range");
		bits_ |= static_cast<uint64_t>(letters[k]) << (4 + 5 * k);
	}
}

Word Word::append(int letter) const
{
	int n = size();
	if (n >= kMaxLength)
		throw Error("word longer than supported maximum");
	Word w;
	w.bits_ = ((bits_ & ~uint64_t(15)) | static_cast<uint64_t>(n + 1)) |
	          (static_cast<uint64_t>(letter) << (4 + 5 * n));
	return w;
}

Word Word::concat(const Word &o) const
{
	int n = size(), m = o.size();
	if (n + m > kMaxLength)
		throw Error("word longer than supported maximum");
	Word w;
	w.bits_ = (bits_ & ~uint64_t(15)) | static_cast<uint64_t>(n + m);
	w.bits_ |= (o.bits_ >> 4) << (4 + 5 * n);
	return w;
}

Word Word::prefix(int k) const
{
	Word w;
	uint64_t mask = k == 0 ? 0 : ((uint64_t(1) << (5 * k)) - 1) << 4;
	w.bits_ = (bits_ & mask) | static_cast<uint64_t>(k);
	return w;
}

std::vector<int> Word::letters() const
{
	std::vector<int> r(size());
	for (int k = 0; k < size(); ++k)
		r[k] = (*this)[k];
	return r;
}

bool word_less(const Word &a, const Word &b)
{
	if (a.size() != b.size())
		return a.size() < b.size();
	for (int k = 0; k < a.size(); ++k)
		if (a[k] != b[k])
			return a[k] < b[k];
	return false;
}

Series::Series(AlphabetPtr alphabet, int degree) : alphabet_(std::move(alphabet)), degree_(degree)
{
	if (!alphabet_)
		throw Error("series without alphabet");
	if (degree < 0 || degree > Word::kMaxLength)
		throw Error("truncation degree out of supported range");
}

Series Series::one(AlphabetPtr alphabet, int degree)
{
	return constant(std::move(alphabet), degree, 1);
}

Series Series::constant(AlphabetPtr alphabet, int degree, const Rational &c)
{
	Series s(std::move(alphabet), degree);
	s.add_term(Word(), c);
	return s;
}

Series Series::letter(AlphabetPtr alphabet, int degree, int index)
{
	if (index < 0 || index >= alphabet->size())
		throw Error("generator index out of range");
	Series s(std::move(alphabet), degree);
	if (degree >= 1)
		s.add_term(Word({index}), 1);
	return s;
}

Series Series::letter(AlphabetPtr alphabet, int degree, std::string_view label)
{
	int k = alphabet->index(label);
	return letter(std::move(alphabet), degree, k);
}

Rational Series::coeff(const Word &w) const
{
	if (w.size() > degree_)
		throw Error("coefficient requested above truncation degree");
	for (int k = 0; k < w.size(); ++k)
		if (w[k] >= alphabet_->size())
			throw Error("word not over this alphabet");
	auto it = terms_.find(w);
	return it == terms_.end() ? Rational(0) : it->second;
}

Rational Series::coeff(const std::vector<std::string> &labels) const
{
	std::vector<int> idx;
	for (auto &l : labels)
		idx.push_back(alphabet_->index(l));
	return coeff(Word(idx));
}

Rational Series::constant_term() const
{
	auto it = terms_.find(Word());
	return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> Series::lowest_degree() const
{
	std::optional<int> r;
	for (auto &[w, c] : terms_)
		if (!r || w.size() < *r)
			r = w.size();
	return r;
}

std::optional<int> Series::lowest_nonconstant_degree() const
{
	std::optional<int> r;
	for (auto &[w, c] : terms_)
		if (w.size() > 0 && (!r || w.size() < *r))
			r = w.size();
	return r;
}

Series Series::homogeneous(int d) const
{
	Series r(alphabet_, degree_);
	for (auto &[w, c] : terms_)
		if (w.size() == d)
			r.terms_.emplace(w, c);
	return r;
}

Series Series::from_degree(int d) const
{
	Series r(alphabet_, degree_);
	for (auto &[w, c] : terms_)
		if (w.size() >= d)
			r.terms_.emplace(w, c);
	return r;
}

Series Series::with_degree(int D) const
{
	Series r(alphabet_, D);
	for (auto &[w, c] : terms_)
		if (w.size() <= D)
			r.terms_.emplace(w, c);
	return r;
}

Series Series::with_alphabet(AlphabetPtr alphabet) const
{
	if (!same_alphabet(alphabet, alphabet_))
		throw Error("relabel onto a different alphabet");
	Series r = *this;
	r.alphabet_ = std::move(alphabet);
	return r;
}

void Series::add_term(const Word &w, const Rational &c)
{
	if (w.size() > degree_ || sgn(c) == 0)
		return;
	auto [it, fresh] = terms_.emplace(w, c);
	if (!fresh)
	{
		it->second += c;
		if (sgn(it->second) == 0)
			terms_.erase(it);
	}
}

void check_compatible(const Series &a, const Series &b)
{
	if (!same_alphabet(a.alphabet_ptr(), b.alphabet_ptr()))
		throw Error("alphabet mismatch");
}

Series &Series::operator+=(const Series &o)
{
	check_compatible(*this, o);
	if (o.degree_ < degree_)
		*this = with_degree(o.degree_);
	for (auto &[w, c] : o.terms_)
		add_term(w, c);
	return *this;
}

Series &Series::operator-=(const Series &o)
{
	check_compatible(*this, o);
	if (o.degree_ < degree_)
		*this = with_degree(o.degree_);
	for (auto &[w, c] : o.terms_)
		add_term(w, -c);
	return *this;
}

Series &Series::operator*=(const Rational &c)
{
	if (sgn(c) == 0)
	{
		terms_.clear();
		return *this;
	}
	for (auto &[w, v] : terms_)
		v *= c;
	return *this;
}

bool Series::operator==(const Series &o) const
{
	return same_alphabet(alphabet_, o.alphabet_) && degree_ == o.degree_ && terms_ == o.terms_;
}

std::vector<std::pair<Word, Rational>> Series::sorted_terms() const
{
	std::vector<std::pair<Word, Rational>> r(terms_.begin(), terms_.end());
	std::sort(r.begin(), r.end(), [](auto &x, auto &y) { return word_less(x.first, y.first); });
	return r;
}

std::string Series::to_string() const
{
	if (terms_.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (auto &[w, c] : sorted_terms())
	{
		if (!first)
			os << " + ";
		first = false;
		os << c.get_str();
		for (int k = 0; k < w.size(); ++k)
			os << (k == 0 ? "*" : "") << (*alphabet_)[w[k]].label << (k + 1 < w.size() ? " " : "");
	}
	return os.str();
}

Series operator+(const Series &a, const Series &b)
{
	Series r = a;
	r += b;
	return r;
}

Series operator-(const Series &a, const Series &b)
{
	Series r = a;
	r -= b;
	return r;
}

Series operator-(const Series &a)
{
	Series r = a;
	r *= -1;
	return r;
}

Series operator*(const Rational &c, const Series &a)
{
	Series r = a;
	r *= c;
	return r;
}

Series operator*(const Series &a, const Series &b)
{
	check_compatible(a, b);
	int D = std::min(a.degree(), b.degree());
	Series r(a.alphabet_ptr(), D);
	for (auto &[u, cu] : a.terms())
	{
		if (u.size() > D)
			continue;
		for (auto &[v, cv] : b.terms())
			if (u.size() + v.size() <= D)
				r.add_term(u.concat(v), cu * cv);
	}
	return r;
}

Series add(const Series &a, const Series &b) { return a + b; }
Series scale(const Rational &c, const Series &a) { return c * a; }
Series mul(const Series &a, const Series &b) { return a * b; }
Series commutator(const Series &a, const Series &b) { return a * b - b * a; }

Series exp_series(const Series &s)
{
	if (sgn(s.constant_term()) != 0)
		throw Error("exp requires zero constant term");
	Series result = Series::one(s.alphabet_ptr(), s.degree());
	Series power = result;
	for (int k = 1; k <= s.degree(); ++k)
	{
		power = power * s;
		power *= Rational(1, k);
		if (power.is_zero())
			break;
		result += power;
	}
	return result;
}

Series log_series(const Series &s)
{
	if (s.constant_term() != 1)
		throw Error("log requires constant term 1");
	Series x = s - Series::one(s.alphabet_ptr(), s.degree());
	Series result(s.alphabet_ptr(), s.degree());
	Series power = Series::one(s.alphabet_ptr(), s.degree());
	for (int k = 1; k <= s.degree(); ++k)
	{
		power = power * x;
		if (power.is_zero())
			break;
		result += Rational(k % 2 ? 1 : -1, k) * power;
	}
	return result;
}

Series inverse_series(const Series &s)
{
	if (s.constant_term() != 1)
		throw Error("inverse requires constant term 1");
	Series x = Series::one(s.alphabet_ptr(), s.degree()) - s;
	Series result = Series::one(s.alphabet_ptr(), s.degree());
	Series power = result;
	for (int k = 1; k <= s.degree(); ++k)
	{
		power = power * x;
		if (power.is_zero())
			break;
		result += power;
	}
	return result;
}

Series substitute(const Series &s, const GeneratorMap &m)
{
	if (!same_alphabet(s.alphabet_ptr(), m.source))
		throw Error("substitution source alphabet mismatch");
	if (static_cast<int>(m.images.size()) != m.source->size())
		throw Error("substitution is missing generator images");
	int D = s.degree();
	if (!m.images.empty())
	{
		D = m.images[0].degree();
		for (auto &img : m.images)
		{
			if (!same_alphabet(img.alphabet_ptr(), m.target))
				throw Error("image not over the target alphabet");
			if (sgn(img.constant_term()) != 0)
				throw Error("generator image with nonzero constant term");
			D = std::min(D, img.degree());
		}
		if (D < s.degree())
			throw Error("target truncation below source truncation");
	}
	Series result(m.target, D);
	std::unordered_map<Word, Series, WordHash> memo;
	memo.emplace(Word(), Series::one(m.target, D));
	// products of prefixes are shared between words
	auto product = [&](auto &&self, const Word &w) -> const Series & {
		auto it = memo.find(w);
		if (it != memo.end())
			return it->second;
		Series p = self(self, w.pop_back()) * m.images[w.back()];
		return memo.emplace(w, std::move(p)).first->second;
	};
	for (auto &[w, c] : s.terms())
	{
		if (w.size() > D)
			continue;
		const Series &p = product(product, w);
		for (auto &[u, cu] : p.terms())
			result.add_term(u, c * cu);
	}
	return result;
}

GeneratorMap compose_maps(const GeneratorMap &second, const GeneratorMap &first)
{
	if (!same_alphabet(first.target, second.source))
		throw Error("maps are not composable");
	GeneratorMap r{first.source, second.target, {}, second.tag + "*" + first.tag};
	for (auto &img : first.images)
		r.images.push_back(substitute(img, second));
	return r;
}

} // namespace cyclogt
