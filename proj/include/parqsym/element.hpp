#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "parqsym/composition.hpp"
#include "parqsym/diagram.hpp"
#include "parqsym/rational.hpp"

namespace parqsym {

enum class Space { parsym, parqsym, qsym, nsym, sh };
enum class Basis { H, R, KQ, M, L, ETA, ETAQ, natural };

std::string space_name(Space s);
std::string basis_name(Basis b);
Space space_from_name(const std::string& name);
Basis basis_from_name(const std::string& name);

bool basis_legal_for(Space s, Basis b);
bool basis_requires_q(Basis b);  // KQ and ETAQ

// The q parameter of the enriched bases; q + 1 must be invertible.
struct QParam {
    explicit QParam(Rational value);
    const Rational& q() const { return q_; }
    Rational r() const { return q_ + 1; }

  private:
    Rational q_;
};

// A linear combination over canonical basis keys. No zero coefficients
// are ever stored.
template <class Key>
using Combo = std::map<Key, Rational>;

template <class Key>
void add_term(Combo<Key>& combo, const Key& key, const Rational& coeff) {
    if (coeff == 0) return;
    auto it = combo.find(key);
    if (it == combo.end()) {
        combo.emplace(key, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) combo.erase(it);
}

template <class Key>
void add_combo(Combo<Key>& combo, const Combo<Key>& other, const Rational& factor = 1) {
    for (const auto& [key, coeff] : other) add_term(combo, key, coeff * factor);
}

template <class Key>
Rational coeff_of(const Combo<Key>& combo, const Key& key) {
    auto it = combo.find(key);
    return it == combo.end() ? Rational(0) : it->second;
}

// An element of one of the five spaces: a finite linear combination of
// basis keys tagged by space, basis, and (for KQ/ETAQ) the q parameter.
// The ETA tag is an input alias; stored elements use ETAQ with q = 1.
template <class Key>
struct Element {
    Space space = Space::parqsym;
    Basis basis = Basis::M;
    std::optional<Rational> q;
    Combo<Key> terms;

    bool operator==(const Element&) const = default;
};

using DiagElement = Element<Diagram>;
using CompElement = Element<Composition>;

template <class Key>
struct Tensor2 {
    Space space = Space::parqsym;
    Basis basis = Basis::M;
    std::optional<Rational> q;
    Combo<std::pair<Key, Key>> terms;

    bool operator==(const Tensor2&) const = default;
};

using DiagTensor2 = Tensor2<Diagram>;
using CompTensor2 = Tensor2<Composition>;

// Validates metadata (legal basis for the space, q present exactly for the
// parameterized bases, q != -1), normalizes ETA to ETAQ with q = 1, and
// drops zero coefficients.
template <class Key>
Element<Key> make_element(Space space, Basis basis, std::optional<Rational> q, Combo<Key> terms);

DiagElement make_diag_element(Space space, Basis basis, std::optional<Rational> q, Combo<Diagram> terms);
CompElement make_comp_element(Space space, Combo<Composition> terms);

// Single basis key with coefficient 1.
DiagElement basis_element(Space space, Basis basis, const Diagram& key, std::optional<Rational> q = {});
CompElement basis_element(Space space, const Composition& key);

void check_same_metadata(Space sa, Basis ba, const std::optional<Rational>& qa, Space sb, Basis bb,
                         const std::optional<Rational>& qb);

template <class Key>
Element<Key> add(const Element<Key>& x, const Element<Key>& y) {
    check_same_metadata(x.space, x.basis, x.q, y.space, y.basis, y.q);
    Element<Key> out = x;
    add_combo(out.terms, y.terms);
    return out;
}

template <class Key>
Element<Key> scale(const Rational& c, const Element<Key>& x) {
    Element<Key> out{x.space, x.basis, x.q, {}};
    add_combo(out.terms, x.terms, c);
    return out;
}

}  // namespace parqsym
