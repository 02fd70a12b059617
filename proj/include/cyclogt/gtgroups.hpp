#pragma once

#include "cyclogt/solve.hpp"

namespace cyclogt {

// D_phi on t0_3 (A -> [phi,A], B -> 0) or Dbar_psi on t0_{3,N}
// (A -> [psi,A], B(a) -> [psi - tau_a psi, B(a)]).
struct TangentialDerivation
{
	enum class Kind
	{
		Phi,
		Psi
	};
	Kind kind = Kind::Phi;
	Series defining;
	std::vector<Series> images; // indexed by generator of t0_{3,N}
};

TangentialDerivation derivation_phi(const Series &phi);
TangentialDerivation derivation_psi(const Series &psi);
Series apply_derivation(const TangentialDerivation &d, const Series &x);

// <x,y> = [x,y] + D_y(x) - D_x(y), componentwise on Lie pairs.
PairGH bracket(const PairGH &x, const PairGH &y);

// Group law on group-like pairs:
// (g1,h1) o (g2,h2) = (g2 g1(A, Ad(g2^-1)B), h2 h1(A, Ad(tau_a h2^-1)B(a))).
PairGH multiply(const PairGH &p, const PairGH &q);
// Right action of the group on the associator side; the same formula.
PairGH torsor_act(const PairGH &p, const PairGH &q);
PairGH group_identity(int N, int D);

// A_g: A -> A, B -> g^-1 B g;  Abar_h: A -> A, B(a) -> (tau_a h)^-1 B(a) (tau_a h).
GeneratorMap automorphism_A(const Series &g);
GeneratorMap automorphism_Abar(const Series &h);

// One-parameter subgroup through a Lie pair, integrated degree by degree:
// g' = g phi(A, Ad(g^-1)B), h' = h psi(A, Ad(tau_a h^-1)B(a)), at time 1.
PairGH exp_flow(const PairGH &v, int D);

struct LiftResult
{
	PairGH lifted;     // truncated at degree n
	int solution_dim;  // dimension of the affine space of degree-n corrections
};
// p valid mod degree n for the group-mode system -> p' = p mod degree n,
// valid mod degree n+1.
LiftResult lift(const RelationSystem &sys, const PairGH &p, int n);

} // namespace cyclogt
