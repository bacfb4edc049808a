#pragma once

#include <utility>

#include "parqsym/element.hpp"

namespace parqsym {

// ParSym structure maps on the H basis (the computational anchor).
Combo<Diagram> mul_H(const Diagram& a, const Diagram& b);  // single term H_{a(x)b}
Combo<std::pair<Diagram, Diagram>> comul_H(const Diagram& d);

// R_a R_b = R_{a(x)b} + R_{a.b}; both arguments non-empty.
Combo<Diagram> mul_R(const Diagram& a, const Diagram& b);
// kappa_a kappa_b = kappa_{a(x)b}.
Combo<Diagram> mul_kappa(const Diagram& a, const Diagram& b);

// Key-level basis expansions.
Combo<Diagram> expand_R_in_H(const Diagram& d);
Combo<Diagram> expand_H_in_R(const Diagram& d);
Combo<Diagram> expand_KQ_in_H(const Diagram& d, const QParam& qp);
Combo<Diagram> expand_H_in_KQ(const Diagram& d, const QParam& qp);

// Element-level conversions.
DiagElement r_to_h(const DiagElement& x);
DiagElement h_to_r(const DiagElement& x);
DiagElement kappa_to_h(const DiagElement& x);
DiagElement h_to_kappa(const DiagElement& x, const QParam& qp);

// Closed-form coproduct of kappa_{pi_(n)}: the sum over composition pairs
// (beta, gamma) with |beta| + |gamma| = n and |l(beta) - l(gamma)| <= 1 of
// (-q)^(max(l(beta), l(gamma)) - 1) (q-1)^[l(beta) = l(gamma)]
// kappa_{pi_beta} (x) kappa_{pi_gamma}.
DiagTensor2 comul_kappa_line(int n, const QParam& qp);

}  // namespace parqsym
