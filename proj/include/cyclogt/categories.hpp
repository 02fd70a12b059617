#pragma once

#include "cyclogt/relations.hpp"

namespace cyclogt {

// A full parenthesization of a word of bullets; the empty word is the unit.
class ParenObject
{
  public:
	ParenObject() = default; // empty word
	static ParenObject bullet();
	static ParenObject parse(std::string_view s); // "", ".", "(..)", "((..).)"
	static ParenObject left_comb(int n);
	static std::vector<ParenObject> all(int n);

	int size() const { return n_; }
	std::string to_string() const;
	bool operator==(const ParenObject &) const = default;

	friend ParenObject tensor(const ParenObject &x, const ParenObject &y);

  private:
	std::string repr_; // "." for a bullet, "(xy)" for a product, "" for the unit
	int n_ = 0;
};

// Element of G_{n,N} = C_N^n x| S_n acting by x -> c.(s.x):
// s.t(a)^{ij} = t(a)^{s(i)s(j)}, c.t(a)^{ij} = t(a+c_i-c_j)^{ij} (positions 1-based).
struct GroupPart
{
	int N = 1;
	std::vector<int> c;    // residues, c[k] for position k+1
	std::vector<int> perm; // perm[k] = image of position k (0-based)

	static GroupPart identity(int n, int N);
	static GroupPart residues(std::vector<int> c, int N);
	static GroupPart permutation(std::vector<int> perm, int N);
	int size() const { return static_cast<int>(perm.size()); }
	GroupPart operator*(const GroupPart &o) const;
	GroupPart inverse() const;
	bool operator==(const GroupPart &) const = default;
	std::string to_string() const;
};

std::vector<GroupPart> enumerate_group(int n, int N);

enum class Side
{
	C, // unipotent part over u_{n,N}
	M  // unipotent part over t_{n+1,N}; strand 1 is the module base
};

// Morphism u.gamma of the universal IBMC (C) or IMC (M) on n bullets.
struct CatMorphism
{
	Side side = Side::C;
	int n = 0;
	int N = 1;
	GroupPart gamma;
	Series u; // group-like, normal form in the enveloping algebra

	static CatMorphism identity(Side side, int n, int N, int D);
	static CatMorphism group(Side side, const GroupPart &g, int D);
	const PresentedAlgebra &algebra() const;
	int degree() const { return u.degree(); }
};

const PresentedAlgebra &side_algebra(Side side, int n, int N);
// gamma acting on an element of the side algebra
Series act(const GroupPart &g, Side side, const Series &x);
CatMorphism compose(const CatMorphism &f, const CatMorphism &g); // f after g
CatMorphism inverse(const CatMorphism &f);
CatMorphism tensor(const CatMorphism &f, const CatMorphism &g);        // C (x) C
CatMorphism module_tensor(const CatMorphism &m, const CatMorphism &f); // M (x) C
// f x f^-1 for a Lie element x of the side algebra
Series adjoint(const CatMorphism &f, const Series &x);

// Universal structure elements.
Series t_XY(int x, int y, int N, int D);                // in u_{x+y,N}
Series t_MX(int m, int x, int N, int D);                // in t_{m+x+1,N}
GroupPart braiding(int x, int y, int N);                // c_{XY}
GroupPart sigma_on(int before, int len, int after, int N, int power = 1);

// Structure twisted by a group-like pair; (1,1) is the untwisted universal one.
class TwistedStructure
{
  public:
	TwistedStructure(PairGH p, int D);
	static TwistedStructure untwisted(int N, int D);

	int N() const { return p_.N; }
	int D() const { return D_; }
	CatMorphism a(int x, int y, int z) const; // a~_{XYZ} on C
	CatMorphism b(int m, int x, int y) const; // b~_{MXY} on M

  private:
	PairGH p_;
	int D_;
};

enum class Axiom
{
	IbmcPentagon,
	IbmcHexagon1,
	IbmcHexagon2,
	IbmcT,         // (iii) t_{X(x)Y,Z}
	IbmcTSymmetry, // (iii) c t = t c
	ImcPentagon,   // (I)
	ImcOctagon,    // (II)
	ImcT,          // (IV) first identity
	ImcTSecond     // (IV) second identity
};

std::string axiom_name(Axiom a);
std::vector<Axiom> all_axioms();
std::vector<Axiom> parse_axioms(std::string_view text); // "ibmc", "imc", "I", "II", "IV", comma separated

struct AxiomReport
{
	Axiom axiom;
	std::vector<int> objects; // lengths of the objects involved
	bool zero = true;
	bool group_mismatch = false;
	std::optional<int> lowest_nonzero_degree;
};

// Instantiates the axioms on all length tuples with total at most max_length.
std::vector<AxiomReport> check_axioms(const TwistedStructure &s, const std::vector<Axiom> &which,
                                      int max_length = 4);
bool all_zero(const std::vector<AxiomReport> &r);

// R(N) = Z/N x Z with the corrected operations (a,r) ~ a~ + N r.
struct RingRN
{
	int N = 2;
	int a = 0;
	mpz_class r = 0;

	bool operator==(const RingRN &) const = default;
};

RingRN ring_rn(int N, int a, const mpz_class &r); // a outside [0,N) carries into r
int ring_sigma(int N, int a, int b); // (a~ + b~ - (a+b)~) / N
int ring_pi(int N, int a, int b);    // (a~ b~ - (ab)~) / N
RingRN ring_rn_add(const RingRN &x, const RingRN &y);
RingRN ring_rn_mul(const RingRN &x, const RingRN &y);
RingRN ring_rn_neg(const RingRN &x);
mpz_class ring_rn_value(const RingRN &x); // a~ + N r

} // namespace cyclogt
