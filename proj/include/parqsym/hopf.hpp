#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "parqsym/element.hpp"

namespace parqsym {

// Structure maps of a connected graded bialgebra on a distinguished basis.
// grade(unit) = 0, product and coproduct are graded, the coproduct is
// counital. The antipode engine below needs nothing else.
template <class Key>
class BialgebraHandle {
  public:
    virtual ~BialgebraHandle() = default;
    virtual int grade(const Key& key) const = 0;
    virtual Key unit() const = 0;
    virtual Combo<Key> product(const Key& a, const Key& b) const = 0;
    virtual Combo<std::pair<Key, Key>> coproduct(const Key& key) const = 0;
    virtual Rational counit(const Key& key) const = 0;
};

template <class Key>
Rational counit_of(const BialgebraHandle<Key>& h, const Combo<Key>& x) {
    Rational out = 0;
    for (const auto& [key, coeff] : x) out += coeff * h.counit(key);
    return out;
}

// (id - u eps) applied to a combination.
template <class Key>
Combo<Key> project_augmentation(const BialgebraHandle<Key>& h, const Combo<Key>& x) {
    Combo<Key> out = x;
    Rational e = counit_of(h, x);
    if (e != 0) add_term(out, h.unit(), -e);
    return out;
}

// (id - u eps) tensor (id - u eps) applied to the coproduct of one key.
template <class Key>
Combo<std::pair<Key, Key>> reduced_coproduct_key(const BialgebraHandle<Key>& h, const Key& key) {
    Combo<std::pair<Key, Key>> out;
    const Key u = h.unit();
    for (const auto& [ab, c] : h.coproduct(key)) {
        Rational ea = h.counit(ab.first);
        Rational eb = h.counit(ab.second);
        add_term(out, ab, c);
        if (eb != 0) add_term(out, {ab.first, u}, -c * eb);
        if (ea != 0) add_term(out, {u, ab.second}, -c * ea);
        if (ea != 0 && eb != 0) add_term(out, {u, u}, c * ea * eb);
    }
    return out;
}

template <class Key>
Combo<std::pair<Key, Key>> reduced_coproduct(const BialgebraHandle<Key>& h, const Combo<Key>& x) {
    Combo<std::pair<Key, Key>> out;
    for (const auto& [key, c] : x) {
        for (const auto& [ab, rc] : reduced_coproduct_key(h, key)) add_term(out, ab, c * rc);
    }
    return out;
}

// Combinations over k-fold tensors, used by the antipode and coradical
// machinery. Slots are kept projected onto the augmentation ideal.
template <class Key>
using TupleCombo = Combo<std::vector<Key>>;

// Expands the last slot by the reduced coproduct.
template <class Key>
TupleCombo<Key> reduce_last_slot(const BialgebraHandle<Key>& h, const TupleCombo<Key>& t) {
    TupleCombo<Key> out;
    for (const auto& [tup, c] : t) {
        for (const auto& [ab, rc] : reduced_coproduct_key(h, tup.back())) {
            std::vector<Key> next(tup.begin(), tup.end() - 1);
            next.push_back(ab.first);
            next.push_back(ab.second);
            add_term(out, next, c * rc);
        }
    }
    return out;
}

// Multiplies all slots together, left to right.
template <class Key>
Combo<Key> multiply_slots(const BialgebraHandle<Key>& h, const TupleCombo<Key>& t) {
    Combo<Key> out;
    for (const auto& [tup, c] : t) {
        Combo<Key> acc;
        acc.emplace(tup.front(), 1);
        for (std::size_t i = 1; i < tup.size(); ++i) {
            Combo<Key> next;
            for (const auto& [key, kc] : acc) {
                for (const auto& [pk, pc] : h.product(key, tup[i])) add_term(next, pk, kc * pc);
            }
            acc = std::move(next);
        }
        add_combo(out, acc, c);
    }
    return out;
}

// Takeuchi's alternating series for the antipode of a connected graded
// bialgebra. Terminates because every projected slot has positive grade;
// a defensive bound of (max grade + 1) iterations guards against a handle
// whose grading is broken.
template <class Key>
Combo<Key> takeuchi_antipode(const BialgebraHandle<Key>& h, const Combo<Key>& x) {
    Combo<Key> result;
    Rational e = counit_of(h, x);
    if (e != 0) add_term(result, h.unit(), e);

    int max_grade = 0;
    for (const auto& [key, c] : x) max_grade = std::max(max_grade, h.grade(key));

    TupleCombo<Key> t;
    for (const auto& [key, c] : project_augmentation(h, x)) t.emplace(std::vector<Key>{key}, c);

    int k = 1;
    while (!t.empty()) {
        if (k > max_grade + 1) throw InvariantError("takeuchi_antipode: iteration bound exceeded");
        Rational sign = (k % 2 == 0) ? 1 : -1;
        add_combo(result, multiply_slots(h, t), sign);
        t = reduce_last_slot(h, t);
        ++k;
    }
    return result;
}

// Least n >= 0 such that the n-fold iterated reduced coproduct vanishes;
// 0 exactly for multiples of the unit key.
template <class Key>
int coradical_degree_combo(const BialgebraHandle<Key>& h, const Combo<Key>& x) {
    TupleCombo<Key> t;
    for (const auto& [key, c] : project_augmentation(h, x)) t.emplace(std::vector<Key>{key}, c);
    int n = 0;
    while (!t.empty()) {
        ++n;
        t = reduce_last_slot(h, t);
    }
    return n;
}

// Concrete handles for the five algebras on their anchor bases.
class ParSymHandle : public BialgebraHandle<Diagram> {
  public:
    int grade(const Diagram& d) const override;
    Diagram unit() const override;
    Combo<Diagram> product(const Diagram& a, const Diagram& b) const override;
    Combo<std::pair<Diagram, Diagram>> coproduct(const Diagram& d) const override;
    Rational counit(const Diagram& d) const override;
};

class ParQSymHandle : public BialgebraHandle<Diagram> {
  public:
    int grade(const Diagram& d) const override;
    Diagram unit() const override;
    Combo<Diagram> product(const Diagram& a, const Diagram& b) const override;
    Combo<std::pair<Diagram, Diagram>> coproduct(const Diagram& d) const override;
    Rational counit(const Diagram& d) const override;
};

class QSymHandle : public BialgebraHandle<Composition> {
  public:
    int grade(const Composition& a) const override;
    Composition unit() const override;
    Combo<Composition> product(const Composition& a, const Composition& b) const override;
    Combo<std::pair<Composition, Composition>> coproduct(const Composition& a) const override;
    Rational counit(const Composition& a) const override;
};

class NSymHandle : public BialgebraHandle<Composition> {
  public:
    int grade(const Composition& a) const override;
    Composition unit() const override;
    Combo<Composition> product(const Composition& a, const Composition& b) const override;
    Combo<std::pair<Composition, Composition>> coproduct(const Composition& a) const override;
    Rational counit(const Composition& a) const override;
};

class ShHandle : public BialgebraHandle<Composition> {
  public:
    int grade(const Composition& a) const override;
    Composition unit() const override;
    Combo<Composition> product(const Composition& a, const Composition& b) const override;
    Combo<std::pair<Composition, Composition>> coproduct(const Composition& a) const override;
    Rational counit(const Composition& a) const override;
};

}  // namespace parqsym
