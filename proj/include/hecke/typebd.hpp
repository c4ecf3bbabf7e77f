#pragma once

#include <optional>

#include "hecke/invariants.hpp"
#include "hecke/partition.hpp"

/*
  Hecke algebras of types B/C and D at a primitive l-th root of unity q,
  reached through Morita equivalence with products of type A factors
  H_q(j) (x) H_q(n-j). The equivalences hold when

      type B:  f_n(Q, q) = prod_{i=1-n}^{n-1} (Q + q^i)  is invertible,
      type D:  f_n(q)    = 2 prod_{i=1}^{n-1} (1 + q^i)  is invertible.

  Q is restricted to +-q^m, which is exactly the family where every
  possible collision Q = -q^i is visible. Each invertibility test has a
  closed form and an exact oracle evaluating the product in Z[q]/Phi_l(q);
  the two are paired in the verification suite.

  Under the equivalence, complexities transport from type A and add over
  outer tensor factors, so the simple object labelled (lambda, mu) has
  complexity |lambda1| + |mu1| and everything is bounded by floor(n/l),
  the complexity of the trivial module.
*/

namespace hecke {

struct Bipartition {
    Partition left;
    Partition right;

    int n() const { return left.size() + right.size(); }
    bool operator==(const Bipartition&) const = default;
};

// Q = sign * q^power with sign in {+1, -1}; power is reduced mod l on use.
struct QSpec {
    int sign = 1;
    int power = 0;
};

// Closed forms.
bool f_D_invertible(int n, int l);                     // n >= 1, l >= 2
bool f_B_invertible(int n, int l, QSpec Q);

// Exact route: evaluate the product in Z[q]/Phi_l(q) and test nonzero.
bool f_D_invertible_eval(int n, int l);
bool f_B_invertible_eval(int n, int l, QSpec Q);

// Index j of the Morita factor H_q(j) (x) H_q(n-j) holding (left, right).
int morita_component(const Bipartition& bipartition);

struct TypeBComplexity {
    int complexity = 0;
    SupportDatum support;
};

// |left1| + |right1| under the type B equivalence; requires f_B(n, l, Q)
// invertible and names the vanishing factor otherwise.
TypeBComplexity typeB_young_complexity(const Bipartition& bipartition, int l, QSpec Q);

enum class ClassicalType { B, D };

// floor(n/l): the complexity of the trivial module and the universal
// bound for every module of the type B/D algebra. Requires the relevant
// f_n invertible (Q mandatory for type B).
int typeBD_trivial_complexity(int n, int l, ClassicalType type,
                              std::optional<QSpec> Q = std::nullopt);

// Complexity over A = H_q((m,m)) of the outer tensor Young module with
// the two labels, which equals the Clifford-extension complexity.
int typeD_clifford_complexity(const Partition& left, const Partition& right, int l);

} // namespace hecke
