#pragma once

#include "cyclogt/series.hpp"

#include <mutex>
#include <tuple>

namespace cyclogt {

enum class Family
{
	T,    // t_{n,N}; t_{n,1} is t_n
	T0,   // t0_{n,N}; n=3 is the free algebra on A, B(a)
	U,    // u_{n,N}
	Free  // free algebra of rank n on x1..xn
};

struct AlgebraId
{
	Family family = Family::T;
	int n = 0;
	int N = 1;

	bool operator==(const AlgebraId &) const = default;
	std::string name() const;
};

AlgebraId t_alg(int n, int N = 1);
AlgebraId t0_alg(int n, int N = 1);
AlgebraId u_alg(int n, int N = 1);
AlgebraId free_alg(int rank);
std::string family_name(Family f);
Family family_from_name(std::string_view s);

// Sum of c [x_p, x_q] over the listed terms.
struct LieRelation
{
	std::vector<std::tuple<Rational, int, int>> terms;
	std::string family;
};

// A presented algebra together with its PBW normal form.
//
// The generators are graded by level: level k of t_{n,N} is {t^{1k}, t(a)^{ik}}
// (the free ideal f_{k,N}), level k of u_{n,N} is {t(a)^{ik}, i<k}. Normal words
// have non-increasing levels. A letter of lower level written to the left of a
// higher-level letter y is moved right using the bracket table [x,y], which is
// solved out of the defining relations and lies in the level of y.
//
// t0_{n,N} for n>=4 is handled inside U(t_{n,N}), so normal forms of its
// elements may contain t^{1n}. t0_{3,N} is free on A, B(a) with C = -A-sum B(a).
class PresentedAlgebra
{
  public:
	static const PresentedAlgebra &get(const AlgebraId &id);

	const AlgebraId &id() const { return id_; }
	const AlphabetPtr &alphabet() const { return alphabet_; }
	int N() const { return id_.N; }
	bool is_free() const { return free_; }
	int level(int letter) const { return (*alphabet_)[letter].level; }

	Series normal_form(const Series &s) const;
	bool is_normal(const Series &s) const;
	Series mul(const Series &a, const Series &b) const;
	Series bracket(const Series &a, const Series &b) const;
	Series exp(const Series &x) const;
	Series log(const Series &g) const;
	Series inverse(const Series &g) const;

	Series letter(int index, int D) const { return Series::letter(alphabet_, D, index); }
	Series zero(int D) const { return Series::zero(alphabet_, D); }
	Series one(int D) const { return Series::one(alphabet_, D); }

	// generator lookup by strand data; cyclotomic indices are normalized
	int pole(int j) const;
	int cyc(int i, int j, int a) const;
	// t^{ij}: the pole generator for i=1 in t-families, else sum over residues
	Series t_sum(int i, int j, int D) const;
	Series t_cyc(int i, int j, int a, int D) const;
	// C = -A - sum B(a) in t0_{3,N}
	Series C(int D) const;
	// z_{n,N}; only for the t family
	Series central_element(int D) const;
	// Parses a label, including aliases (C, t(a)^{ji}, B(0) for N=1, t(0)^{ij} for N=1).
	Series parse_label(std::string_view label, int D) const;

	const std::vector<LieRelation> &relations() const { return relations_; }
	Series relation_series(const LieRelation &r, int D) const;
	// [x,y] for level(x) < level(y), as a degree-2 series in level(y) letters
	const std::vector<std::pair<Word, Rational>> &table(int x, int y) const;

  private:
	explicit PresentedAlgebra(const AlgebraId &id);
	void build_relations();
	void derive_table();
	void verify_derivation_action() const;

	using Terms = std::vector<std::pair<Word, Rational>>;
	const Terms &rmul(const Word &u, int letter) const;
	const Terms &nf_word(const Word &w) const;

	AlgebraId id_;
	AlphabetPtr alphabet_;
	bool free_ = false;
	std::vector<LieRelation> relations_;
	std::vector<std::vector<Terms>> table_;

	mutable std::mutex cache_mutex_;
	mutable std::unordered_map<uint64_t, std::unique_ptr<Terms>> rmul_cache_;
	mutable std::unordered_map<uint64_t, std::unique_ptr<Terms>> nf_cache_;
};

std::string t_label(int i, int j, int a, int N, bool pole);

// Fibers: fibers[k] lists f^{-1}(k+1) (1-based strands of the target).
using Fibers = std::vector<std::vector<int>>;
Fibers parse_fibers(std::string_view text); // "1,23,4" -> {{1},{2,3},{4}}

// x -> x^f for f(1)=1, target t_{m,N} (or t0_{3,N} when target_t0 and m=3).
Series insert_upper(const Series &x, int m, const Fibers &f, bool target_t0 = false);
GeneratorMap insert_upper_map(const AlphabetPtr &source, int N, int m, const Fibers &f, int D,
                              bool target_t0 = false);
// x -> x^g for x over t_n (N=1), g defined on {2..m}; target t_{m,N}.
Series insert_lower(const Series &x, int m, int N, const Fibers &g);
// Classical insertion t_n -> t_m, (t^{ij})^f = sum t^{i'j'}.
Series insert_classical(const Series &x, int m, const Fibers &f);

// t_{3,N} -> t0_{3,N}, t^{13} -> C (quotient by the central z).
Series project_t3_to_t0(const Series &x);

Series project_pi(const Series &x, int Nprime);
Series project_delta(const Series &x, int Nprime);
Rational rho(const Series &psi, int Nprime);

enum class Automorphism
{
	Tau,      // t0_{3,2}: A<->B(0), B(1)->C
	TauShift, // t0_{3,N}: B(c)->B(c+a)
	S,        // t_{4,2}
	SPrime    // t0_{3,2}: A->C, B(0)<->B(1)
};
GeneratorMap automorphism_map(Automorphism which, int N, int D, int shift = 0);
Series automorphism(Automorphism which, const Series &x, int shift = 0);

// Substitution that normal-forms in the target algebra.
Series substitute_nf(const Series &s, const GeneratorMap &m, const PresentedAlgebra &target);

// For t0_{3,N}: the map A -> images[0], B(a) -> images[1+a].
GeneratorMap t03_map(int N, const std::vector<Series> &images, std::string tag);

} // namespace cyclogt
