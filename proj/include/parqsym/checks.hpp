#pragma once

#include <string>
#include <vector>

#include "parqsym/element.hpp"

namespace parqsym {

// A structured verification result. A check fails iff counterexamples is
// non-empty; expected_failures records witnesses of behavior the claims
// predict to fail (reproducing them is part of the check, their absence
// is a counterexample). All checks run on order-truncated spans; the note
// records that limitation.
struct Counterexample {
    std::string inputs;
    std::string offending;
};

struct CheckReport {
    std::string suite;
    int max_order = 0;
    std::vector<Rational> q_values;
    std::vector<Counterexample> counterexamples;
    std::vector<Counterexample> expected_failures;
    std::string note = "verified on the order-truncated span only";

    bool pass() const { return counterexamples.empty(); }
};

enum class DiagramPredicate {
    planar,
    propagation0,
    isolated_upper,
    matching,
    perfect_matching,
    permuting,
    partial_permutation,
};

bool eval_predicate(DiagramPredicate p, const Diagram& d);
std::string predicate_name(DiagramPredicate p);
DiagramPredicate predicate_from_name(const std::string& name);

enum class GradingId { order, length, atoms };
std::string grading_name(GradingId g);
int grade_of(GradingId g, const Diagram& d);

// Every coproduct tensor factor of a predicate-satisfying basis diagram
// satisfies the predicate (spaces: parsym uses the H coproduct, parqsym
// the M coproduct).
CheckReport check_coproduct_closure(Space space, DiagramPredicate p, int max_order);
// Every product term of a predicate-satisfying pair satisfies it.
CheckReport check_product_closure(Space space, DiagramPredicate p, int max_order);

// All non-empty tensor-irreducible diagrams of the order.
std::vector<Diagram> primitive_basis(int order);
// Exact kernel computation: within each order component, the kernel of the
// reduced M coproduct equals the span of the tensor-irreducible keys.
CheckReport verify_strict_grading(int max_order);

// Least n with vanishing n-fold iterated reduced coproduct.
int coradical_degree(const DiagElement& x);

// Graded-algebra and graded-coalgebra closure of the anchor structure maps
// under the given grading, within the order truncation. Reports observed
// violations; the length grading is expected to fail on one side per space.
CheckReport grading_report(Space space, GradingId g, int max_order);

// Span containments between the three filtrations, closure of the claimed
// Hopf filtrations, the reproduced coproduct failure of the ParSym length
// filtration, and coradical degree = length.
CheckReport filtration_report(int max_order);

}  // namespace parqsym
