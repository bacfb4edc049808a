#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "parqsym/element.hpp"

namespace parqsym {

// ParQSym structure maps on the M basis (the computational anchor).
// Deconcatenation at every tensor factorization; l(d) + 1 terms.
Combo<std::pair<Diagram, Diagram>> comul_M(const Diagram& d);
// Quasi-shuffle of the tensor-irreducible factor sequences, adjacent
// letters merging under the bullet operation.
Combo<Diagram> mul_M(const Diagram& a, const Diagram& b);

// Shuffle product of the atom words with forced connectives: bullet at a
// (left-word, right-word) adjacency, tensor at the reverse, and the
// original connective inside each word.
Combo<Diagram> mul_L(const Diagram& a, const Diagram& b);
// Splits of the atom word at every position plus the trivial terms.
Combo<std::pair<Diagram, Diagram>> comul_L(const Diagram& d);

// Shuffles of the tensor-irreducible factor sequences where a mixed
// adjacency may carry either connective; a bullet at a (left, right)
// adjacency contributes a factor q, at a (right, left) adjacency -1.
Combo<Diagram> mul_eta_q(const Diagram& a, const Diagram& b, const QParam& qp);
Combo<Diagram> mul_eta(const Diagram& a, const Diagram& b);  // q = 1

// Key-level basis expansions.
Combo<Diagram> expand_L_in_M(const Diagram& d);
Combo<Diagram> expand_M_in_L(const Diagram& d);
Combo<Diagram> expand_ETAQ_in_M(const Diagram& d, const QParam& qp);
Combo<Diagram> expand_M_in_ETAQ(const Diagram& d, const QParam& qp);
// Direct conversions between the L and eta^(q) bases (sums over the whole
// similarity class), independent of the route through M.
Combo<Diagram> expand_ETAQ_in_L(const Diagram& d, const QParam& qp);
Combo<Diagram> expand_L_in_ETAQ(const Diagram& d, const QParam& qp);

// Element-level conversions.
DiagElement l_to_m(const DiagElement& x);
DiagElement m_to_l(const DiagElement& x);
DiagElement eta_q_to_m(const DiagElement& x);
DiagElement m_to_eta_q(const DiagElement& x, const QParam& qp);
DiagElement eta_q_to_l(const DiagElement& x);
DiagElement l_to_eta_q(const DiagElement& x, const QParam& qp);

// Closed-form antipode on the M basis: alternating sum over grids of
// possibly-empty tensor-irreducible diagrams de-padding to the factor
// sequence, with grid columns joined by tensor and entries within a
// column by bullet (reversed for the inverse antipode).
Combo<Diagram> antipode_M_explicit(const Diagram& d);
Combo<Diagram> antipode_inverse_M_explicit(const Diagram& d);

// The canonical character: 1 on M_pi for tensor-irreducible pi (including
// the empty diagram), 0 otherwise, extended over the M-expansion.
Rational zeta(const DiagElement& x);

// A scalar weight on non-empty diagrams, extended multiplicatively over
// refinement pieces. Nonsingular when nonzero on every non-empty
// tensor-irreducible diagram up to a stated order bound.
struct WeightFunction {
    std::function<Rational(const Diagram&)> value;
};

// f(pi, rho) = product of f over the pieces of pi aligned with rho's
// tensor-irreducible factors; f(empty, empty) = 1. Requires refines(pi, rho).
Rational extend_weight(const WeightFunction& f, const Diagram& pi, const Diagram& rho);

// Conversion tables of the deconcatenation basis generated by f from the
// M basis: forward[pi] expands Q_pi in M, backward[pi] expands M_pi in Q.
struct DeconcatBasisPair {
    int max_order = 0;
    std::map<Diagram, Combo<Diagram>> forward;
    std::map<Diagram, Combo<Diagram>> backward;
    std::map<Diagram, Rational> inverse_weight;  // the unique g solving the
                                                 // triangular system
};
// Throws InvariantError if f vanishes on a non-empty tensor-irreducible
// diagram within the bound.
DeconcatBasisPair deconcat_basis_pair(const WeightFunction& f, int max_order);

}  // namespace parqsym
