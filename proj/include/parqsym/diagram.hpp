#pragma once

#include <string>
#include <utility>
#include <vector>

#include "parqsym/composition.hpp"
#include "parqsym/rational.hpp"

namespace parqsym {

// Nodes of a partition diagram of order k are encoded as signed columns:
// top node in column c is +c, bottom node is -c. The node order is
// (column, top before bottom): 1 < -1 < 2 < -2 < ...
bool node_less(int a, int b);

enum class Connective { tensor, bullet };

// A partition diagram: a set partition of the 2k nodes of a two-row
// diagram of order k, stored canonically (nodes within a block sorted by
// node order, blocks sorted by their least node).
class Diagram {
  public:
    Diagram() = default;  // the empty diagram

    // Validates that the blocks partition the 2k nodes exactly, then
    // canonicalizes. Throws InvariantError otherwise.
    static Diagram from_blocks(int order, std::vector<std::vector<int>> blocks);

    int order() const { return order_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    bool empty() const { return order_ == 0; }

    bool operator==(const Diagram&) const = default;
    bool operator<(const Diagram& rhs) const;  // (order, canonical form)

    std::string text() const;  // compact form, e.g. [[1],[-1,2,-2]]

  private:
    int order_ = 0;
    std::vector<std::vector<int>> blocks_;
};

// The unique expression of a non-empty diagram as a word in atoms
// (diagrams irreducible under both operations). Empty diagram: no atoms.
struct AtomDecomposition {
    std::vector<Diagram> atoms;
    std::vector<Connective> joins;  // size atoms.size() - 1

    bool operator==(const AtomDecomposition&) const = default;
};

Diagram tensor(const Diagram& a, const Diagram& b);
Diagram bullet(const Diagram& a, const Diagram& b);
Diagram join(Connective c, const Diagram& a, const Diagram& b);

// Positions i in 1..k-1 where no block crosses the column cut.
std::vector<int> tensor_cuts(const Diagram& d);
// Positions i where exactly one block crosses the cut and that block
// contains bottom nodes i and i+1.
std::vector<int> bullet_cuts(const Diagram& d);

bool tensor_irreducible(const Diagram& d);  // l(d) <= 1

// Maximal factorization at all tensor cuts; empty diagram gives ().
std::vector<Diagram> tensor_factorize(const Diagram& d);

// Splits d at column i into two diagrams with tensor(a, b) == d.
// Requires i to be a tensor cut.
std::pair<Diagram, Diagram> tensor_split(const Diagram& d, int i);
// Splits the crossing block at column i; bullet(a, b) == d.
// Requires i to be a bullet cut.
std::pair<Diagram, Diagram> bullet_split(const Diagram& d, int i);

AtomDecomposition atoms(const Diagram& d);
// Left fold of the atoms under the connectives; inverse of atoms().
// Throws InvariantError if an empty atom is supplied.
Diagram assemble(const AtomDecomposition& a);
// Assembles the same atom word with a replacement tensor-position set
// (1-based positions into the joins).
Diagram assemble_with_tensor_set(const AtomDecomposition& a, const std::vector<int>& tensor_positions);

int length(const Diagram& d);              // number of tensor-irreducible factors
std::vector<int> s_set(const Diagram& d);  // 1-based tensor positions in the atom word
int atom_count(const Diagram& d);

bool similar(const Diagram& a, const Diagram& b);  // identical atom words
bool refines(const Diagram& a, const Diagram& b);  // a <= b

// All diagrams obtained by flipping subsets of tensor (resp. bullet)
// positions; sorted, both include d.
std::vector<Diagram> coarsenings(const Diagram& d);
std::vector<Diagram> refinements(const Diagram& d);

// All Bell(2k) diagrams of order k, canonical and sorted.
std::vector<Diagram> enumerate_diagrams(int k);

// Non-crossing in the boundary cycle 1,...,k,k',(k-1)',...,1'.
bool is_planar(const Diagram& d);
// Number of blocks with at least one top and one bottom node.
int propagation_number(const Diagram& d);

struct DiagramClass {
    bool matching = false;
    bool perfect_matching = false;
    bool permuting = false;
    bool partial_permutation = false;
    bool isolated_upper = false;
};
DiagramClass classify(const Diagram& d);

// pi_(n) = {{1},...,{n},{1',...,n'}}; pi_of_composition joins them by tensor.
Diagram pi_line(int n);
Diagram pi_of_composition(const Composition& alpha);
// Orders of the tensor-irreducible factors.
Composition alpha_of(const Diagram& d);

}  // namespace parqsym
