#pragma once

#include <string>
#include <vector>

#include "parqsym/rational.hpp"

namespace parqsym {

// A composition: finite sequence of positive integers. The empty
// composition () is allowed and has size 0, length 0.
class Composition {
  public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;  // |alpha|, the sum of the parts
    int len() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    bool operator==(const Composition&) const = default;
    // Total order used for deterministic term output: (size, parts lex).
    bool operator<(const Composition& rhs) const;

    std::string text() const;  // "(2,1)" or "()"

  private:
    std::vector<int> parts_;
};

Composition concat(const Composition& a, const Composition& b);
// (a_1,...,a_n + b_1, b_2,...,b_m); both arguments must be non-empty.
Composition near_concat(const Composition& a, const Composition& b);

// True when a refines b, i.e. a splits into consecutive pieces summing to
// the parts of b. Requires |a| == |b| to hold for a true result.
bool comp_refines(const Composition& a, const Composition& b);

// The pieces a^(1),...,a^(l(b)) of a along b. Requires comp_refines(a, b).
std::vector<Composition> split_along(const Composition& a, const Composition& b);

// Last part of alpha; lp(()) = 0.
int lp(const Composition& a);

// All compositions coarsening a (merging consecutive parts), including a.
std::vector<Composition> comp_coarsenings(const Composition& a);

// All compositions of n >= 0, deterministically ordered; n = 0 gives {()}.
std::vector<Composition> compositions_of(int n);

}  // namespace parqsym
