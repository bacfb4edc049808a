#pragma once

#include <utility>

#include "parqsym/element.hpp"

namespace parqsym {

// Minimal models of QSym (monomial basis), NSym (complete homogeneous
// basis) and the shuffle algebra Sh, on abstract composition keys.

// Quasi-shuffle (overlapping shuffle) product and deconcatenation coproduct.
Combo<Composition> qsym_mul(const Composition& a, const Composition& b);
Combo<std::pair<Composition, Composition>> qsym_comul(const Composition& a);

// Concatenation product; coproduct is the adjoint of the quasi-shuffle,
// i.e. Delta H_n = sum_{i+j=n} H_(i) (x) H_(j) extended multiplicatively.
Combo<Composition> nsym_mul(const Composition& a, const Composition& b);
Combo<std::pair<Composition, Composition>> nsym_comul(const Composition& a);

// Plain shuffles and deconcatenation.
Combo<Composition> sh_mul(const Composition& a, const Composition& b);
Combo<std::pair<Composition, Composition>> sh_comul(const Composition& a);

// zeta_QSym(M_alpha) = 1 iff alpha = (n) or (); linear extension.
Rational zeta_qsym(const CompElement& x);
// eta(M_alpha) = (-1)^(l(alpha)-1) lp(alpha); eta(M_()) = 0 via lp(()) = 0.
Rational eta_char(const CompElement& x);
// xi_s(x_alpha) = 1 iff l(alpha) = 1.
Rational xi_s(const CompElement& x);

// delta-orthogonal pairing of the QSym monomial and NSym complete bases.
Rational pair_classical(const CompElement& qsym_side, const CompElement& nsym_side);

}  // namespace parqsym
