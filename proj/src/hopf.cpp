#include "parqsym/hopf.hpp"

#include "parqsym/classical.hpp"
#include "parqsym/parqsym_ops.hpp"
#include "parqsym/parsym_ops.hpp"

namespace parqsym {

int ParSymHandle::grade(const Diagram& d) const {
    return d.order();
}
Diagram ParSymHandle::unit() const {
    return Diagram{};
}
Combo<Diagram> ParSymHandle::product(const Diagram& a, const Diagram& b) const {
    return mul_H(a, b);
}
Combo<std::pair<Diagram, Diagram>> ParSymHandle::coproduct(const Diagram& d) const {
    return comul_H(d);
}
Rational ParSymHandle::counit(const Diagram& d) const {
    return d.empty() ? 1 : 0;
}

int ParQSymHandle::grade(const Diagram& d) const {
    return d.order();
}
Diagram ParQSymHandle::unit() const {
    return Diagram{};
}
Combo<Diagram> ParQSymHandle::product(const Diagram& a, const Diagram& b) const {
    return mul_M(a, b);
}
Combo<std::pair<Diagram, Diagram>> ParQSymHandle::coproduct(const Diagram& d) const {
    return comul_M(d);
}
Rational ParQSymHandle::counit(const Diagram& d) const {
    return d.empty() ? 1 : 0;
}

int QSymHandle::grade(const Composition& a) const {
    return a.size();
}
Composition QSymHandle::unit() const {
    return Composition{};
}
Combo<Composition> QSymHandle::product(const Composition& a, const Composition& b) const {
    return qsym_mul(a, b);
}
Combo<std::pair<Composition, Composition>> QSymHandle::coproduct(const Composition& a) const {
    return qsym_comul(a);
}
Rational QSymHandle::counit(const Composition& a) const {
    return a.empty() ? 1 : 0;
}

int NSymHandle::grade(const Composition& a) const {
    return a.size();
}
Composition NSymHandle::unit() const {
    return Composition{};
}
Combo<Composition> NSymHandle::product(const Composition& a, const Composition& b) const {
    return nsym_mul(a, b);
}
Combo<std::pair<Composition, Composition>> NSymHandle::coproduct(const Composition& a) const {
    return nsym_comul(a);
}
Rational NSymHandle::counit(const Composition& a) const {
    return a.empty() ? 1 : 0;
}

int ShHandle::grade(const Composition& a) const {
    return a.size();
}
Composition ShHandle::unit() const {
    return Composition{};
}
Combo<Composition> ShHandle::product(const Composition& a, const Composition& b) const {
    return sh_mul(a, b);
}
Combo<std::pair<Composition, Composition>> ShHandle::coproduct(const Composition& a) const {
    return sh_comul(a);
}
Rational ShHandle::counit(const Composition& a) const {
    return a.empty() ? 1 : 0;
}

}  // namespace parqsym
