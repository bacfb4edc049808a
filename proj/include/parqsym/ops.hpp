#pragma once

#include "parqsym/element.hpp"

namespace parqsym {

// Basis-aware element operations. Products, coproducts, antipodes and
// counits are computed in the anchor basis of the element's space (H for
// ParSym, M for ParQSym, the natural basis elsewhere) and converted back.

// Converts between bases of the same space. target_q is required exactly
// when the target basis is parameterized; the source q is read from x.
DiagElement convert(const DiagElement& x, Basis target, std::optional<Rational> target_q = {});

DiagElement product(const DiagElement& x, const DiagElement& y);
DiagTensor2 coproduct(const DiagElement& x);
DiagElement antipode(const DiagElement& x);
Rational counit(const DiagElement& x);

CompElement product(const CompElement& x, const CompElement& y);
CompTensor2 coproduct(const CompElement& x);
CompElement antipode(const CompElement& x);
Rational counit(const CompElement& x);

// Applies the basis conversion to both legs of a tensor.
DiagTensor2 convert_tensor(const DiagTensor2& t, Basis target, std::optional<Rational> target_q = {});

}  // namespace parqsym
