#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cyclogt {

using Rational = mpq_class;

std::string rational_to_string(const Rational &q); // always "p/q"
Rational rational_from_string(std::string_view s);

class Error : public std::runtime_error
{
  public:
	using std::runtime_error::runtime_error;
};

// Raised when an internal consistency check fails (a bug, never bad input).
class InternalError : public Error
{
  public:
	using Error::Error;
};

// Strand data attached to a generator. Pole is t^{1j}; Cyclotomic is t(a)^{ij}
// with i<j (u-algebras allow i=1). Plain letters carry no strand meaning.
struct GeneratorRole
{
	enum class Kind
	{
		Plain,
		Pole,
		Cyclotomic
	};
	Kind kind = Kind::Plain;
	int i = 0;
	int j = 0;
	int residue = 0;

	bool operator==(const GeneratorRole &) const = default;
};

struct Generator
{
	std::string label;
	GeneratorRole role;
	int level = 0; // PBW level, used by presented algebras
};

class Alphabet
{
  public:
	Alphabet(std::vector<Generator> gens, int N);

	int size() const { return static_cast<int>(gens_.size()); }
	int N() const { return N_; }
	const Generator &operator[](int k) const { return gens_[k]; }
	const std::vector<Generator> &generators() const { return gens_; }
	std::optional<int> find(std::string_view label) const;
	int index(std::string_view label) const; // throws if missing
	std::optional<int> find_role(const GeneratorRole &role) const;

	bool operator==(const Alphabet &o) const;

  private:
	std::vector<Generator> gens_;
	int N_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

bool same_alphabet(const AlphabetPtr &a, const AlphabetPtr &b);

// Plain alphabet with the given labels.
AlphabetPtr make_plain_alphabet(const std::vector<std::string> &labels, int N = 1);

// Word packed into 64 bits: 4 bits length, then 5 bits per letter.
class Word
{
  public:
	static constexpr int kMaxLength = 12;
	static constexpr int kMaxLetters = 32;

	Word() = default;
	explicit Word(const std::vector<int> &letters);
	static Word from_key(uint64_t key)
	{
		Word w;
		w.bits_ = key;
		return w;
	}

	int size() const { return static_cast<int>(bits_ & 15u); }
	bool empty() const { return size() == 0; }
	int operator[](int k) const { return static_cast<int>((bits_ >> (4 + 5 * k)) & 31u); }
	int back() const { return (*this)[size() - 1]; }
	uint64_t key() const { return bits_; }

	Word append(int letter) const;
	Word concat(const Word &o) const;
	Word prefix(int k) const;
	Word pop_back() const { return prefix(size() - 1); }
	std::vector<int> letters() const;

	bool operator==(const Word &o) const { return bits_ == o.bits_; }
	bool operator!=(const Word &o) const { return bits_ != o.bits_; }

  private:
	uint64_t bits_ = 0;
};

// Order used for serialization: degree first, then lexicographic.
bool word_less(const Word &a, const Word &b);

struct WordHash
{
	size_t operator()(const Word &w) const noexcept
	{
		uint64_t x = w.key();
		x ^= x >> 33;
		x *= 0xff51afd7ed558ccdULL;
		x ^= x >> 33;
		return static_cast<size_t>(x);
	}
};

// Truncated noncommutative series: words of length <= degree() only.
class Series
{
  public:
	using Terms = std::unordered_map<Word, Rational, WordHash>;

	Series() = default;
	Series(AlphabetPtr alphabet, int degree);

	static Series zero(AlphabetPtr alphabet, int degree) { return Series(std::move(alphabet), degree); }
	static Series one(AlphabetPtr alphabet, int degree);
	static Series constant(AlphabetPtr alphabet, int degree, const Rational &c);
	static Series letter(AlphabetPtr alphabet, int degree, int index);
	static Series letter(AlphabetPtr alphabet, int degree, std::string_view label);

	const Alphabet &alphabet() const { return *alphabet_; }
	const AlphabetPtr &alphabet_ptr() const { return alphabet_; }
	int degree() const { return degree_; }
	const Terms &terms() const { return terms_; }
	size_t size() const { return terms_.size(); }

	Rational coeff(const Word &w) const;
	Rational coeff(const std::vector<std::string> &labels) const;
	Rational constant_term() const;
	bool is_zero() const { return terms_.empty(); }
	std::optional<int> lowest_degree() const;
	std::optional<int> lowest_nonconstant_degree() const;

	Series homogeneous(int d) const;
	Series from_degree(int d) const; // drops degrees < d
	// Same terms at a new truncation: drops words above D, or promotes as a polynomial.
	Series with_degree(int D) const;
	Series with_alphabet(AlphabetPtr alphabet) const; // relabel onto an equal alphabet

	// builder access; zero coefficients are never stored
	void add_term(const Word &w, const Rational &c);

	Series &operator+=(const Series &o);
	Series &operator-=(const Series &o);
	Series &operator*=(const Rational &c);

	bool operator==(const Series &o) const;
	bool operator!=(const Series &o) const { return !(*this == o); }

	std::vector<std::pair<Word, Rational>> sorted_terms() const;
	std::string to_string() const;

  private:
	AlphabetPtr alphabet_;
	int degree_ = 0;
	Terms terms_;
};

void check_compatible(const Series &a, const Series &b);

Series operator+(const Series &a, const Series &b);
Series operator-(const Series &a, const Series &b);
Series operator-(const Series &a);
Series operator*(const Rational &c, const Series &a);
Series operator*(const Series &a, const Series &b); // concatenation product

Series add(const Series &a, const Series &b);
Series scale(const Rational &c, const Series &a);
Series mul(const Series &a, const Series &b);
Series commutator(const Series &a, const Series &b);

Series exp_series(const Series &s);
Series log_series(const Series &s);
Series inverse_series(const Series &s); // requires constant term 1

// Algebra morphism given by images of generators.
struct GeneratorMap
{
	AlphabetPtr source;
	AlphabetPtr target;
	std::vector<Series> images; // indexed by source generator
	std::string tag;
};

// Applies the algebra homomorphism; the source is read as a polynomial, the
// result is truncated at the common truncation of the images.
Series substitute(const Series &s, const GeneratorMap &m);
GeneratorMap compose_maps(const GeneratorMap &second, const GeneratorMap &first); // second after first

} // namespace cyclogt
