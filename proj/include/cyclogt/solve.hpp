#pragma once

#include "cyclogt/linalg.hpp"
#include "cyclogt/relations.hpp"

namespace cyclogt {

enum class PredicateKind
{
	Duality,
	Hexagon,
	HexagonM,
	Special,
	Pentagon,
	MixedPentagon,
	Octagon,
	OctagonPseudo,
	SpecialCyclotomic,
	Distribution,
	Broadhurst,
	CoeffZero
};

struct Predicate
{
	PredicateKind kind = PredicateKind::Duality;
	int nprime = 1;                 // Distribution
	bool on_psi = true;             // CoeffZero: which component
	std::vector<std::string> word;  // CoeffZero: labels of the word

	std::string name() const;
	// Special conditions constrain data of degree d in residual degree d+1.
	int degree_offset() const;
};

Predicate coeff_zero(bool on_psi, std::vector<std::string> word);

// Unknowns: phi over t0_3, psi over t0_{3,N} (cyclotomic systems), or a single
// element of the free Lie algebra of rank free_rank (the control system).
struct RelationSystem
{
	std::string name;
	int N = 1;
	Mode mode = Mode::Lie;
	bool has_phi = true;
	bool has_psi = false;
	int free_rank = 0;
	std::vector<Predicate> predicates;

	bool is_free() const { return free_rank > 0; }
	bool same_unknowns(const RelationSystem &o) const;
};

std::vector<std::string> system_names();
RelationSystem named_system(std::string_view name, int N = 1, int rank = 2);

// One residual per predicate; Lie or group mode is taken from the pair.
std::vector<Residual> evaluate(const RelationSystem &sys, const PairGH &p, int D);
// Residuals vanish in degrees < n (special conditions through degree n).
bool valid_mod(const RelationSystem &sys, const PairGH &p, int n);

// An unknown of the system: component series (phi, psi) or the free element.
using Unknown = std::vector<Series>;
PairGH as_pair(const RelationSystem &sys, const Unknown &u, Mode mode = Mode::Lie);

struct SolveOptions
{
	std::optional<uint64_t> prime_probe;
	uint32_t permutation_seed = 0; // nonzero: shuffle the Lyndon columns
	bool verify = true;
};

struct SolutionSpace
{
	std::string system;
	int N = 1;
	int degree = 0;
	std::vector<Unknown> basis;
	int columns = 0;
	int rows = 0;
	int rank = 0;
	long nonzeros = 0;
	bool probe_mismatch = false;
	std::string timestamp;

	int dim() const { return static_cast<int>(basis.size()); }
};

// Degree-d columns of the unknown: Lyndon elements of each component.
std::vector<Unknown> lyndon_columns(const RelationSystem &sys, int d);

struct AssembledSystem
{
	std::vector<Unknown> columns;
	std::vector<SparseRow> rows;
	std::vector<std::pair<int, Word>> row_keys; // (predicate, word)
	long nonzeros = 0;
};
AssembledSystem assemble(const RelationSystem &sys, int d, const SolveOptions &opt = {});

SolutionSpace graded_nullspace(const RelationSystem &sys, int d, const SolveOptions &opt = {});

struct ImplicationResult
{
	bool holds = true;
	int dim_a = 0;
	std::optional<Unknown> witness;
	std::vector<std::string> violated; // predicates of B failing on the witness
};
ImplicationResult implication_check(const RelationSystem &a, const RelationSystem &b, int d,
                                    const SolveOptions &opt = {});

struct DimsRow
{
	int degree = 0;
	int dim = 0;
	int columns = 0;
	int rows = 0;
	int rank = 0;
	long nonzeros = 0;
	bool probe_mismatch = false;
};
std::vector<DimsRow> dims_report(const RelationSystem &sys, int dmax, const SolveOptions &opt = {});

// Graded dimensions of U(t0_{4,N}) from the PBW normal words of U(t_{4,N})
// (dividing out the central z), and the same numbers from the independent
// linear quotient of the free associative algebra by the relation ideal.
std::vector<long> pbw_ambient_dims(int N, int dmax);
std::vector<long> linear_quotient_dims(int N, int dmax);

std::string utc_timestamp();

} // namespace cyclogt
