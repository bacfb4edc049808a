#include "parqsym/classical.hpp"

#include <functional>

#include "util.hpp"

namespace parqsym {

using detail::sign_pow;

Combo<Composition> qsym_mul(const Composition& a, const Composition& b) {
    Combo<Composition> out;
    const auto& pa = a.parts();
    const auto& pb = b.parts();
    // Overlapping shuffles: advance in a, in b, or merge the two heads.
    std::function<void(std::size_t, std::size_t, std::vector<int>&)> rec = [&](std::size_t i, std::size_t j,
                                                                               std::vector<int>& acc) {
        if (i == pa.size() && j == pb.size()) {
            add_term(out, Composition(acc), Rational(1));
            return;
        }
        if (i < pa.size()) {
            acc.push_back(pa[i]);
            rec(i + 1, j, acc);
            acc.pop_back();
        }
        if (j < pb.size()) {
            acc.push_back(pb[j]);
            rec(i, j + 1, acc);
            acc.pop_back();
        }
        if (i < pa.size() && j < pb.size()) {
            acc.push_back(pa[i] + pb[j]);
            rec(i + 1, j + 1, acc);
            acc.pop_back();
        }
    };
    std::vector<int> acc;
    rec(0, 0, acc);
    return out;
}

Combo<std::pair<Composition, Composition>> qsym_comul(const Composition& a) {
    Combo<std::pair<Composition, Composition>> out;
    const auto& parts = a.parts();
    for (std::size_t i = 0; i <= parts.size(); ++i) {
        Composition left(std::vector<int>(parts.begin(), parts.begin() + i));
        Composition right(std::vector<int>(parts.begin() + i, parts.end()));
        add_term(out, {left, right}, Rational(1));
    }
    return out;
}

Combo<Composition> nsym_mul(const Composition& a, const Composition& b) {
    Combo<Composition> out;
    out.emplace(concat(a, b), 1);
    return out;
}

Combo<std::pair<Composition, Composition>> nsym_comul(const Composition& a) {
    Combo<std::pair<Composition, Composition>> acc;
    acc.emplace(std::make_pair(Composition{}, Composition{}), 1);
    for (int n : a.parts()) {
        Combo<std::pair<Composition, Composition>> local;
        for (int i = 0; i <= n; ++i) {
            Composition left = i == 0 ? Composition{} : Composition({i});
            Composition right = i == n ? Composition{} : Composition({n - i});
            add_term(local, {left, right}, Rational(1));
        }
        Combo<std::pair<Composition, Composition>> next;
        for (const auto& [ab, ca] : acc) {
            for (const auto& [cd, cb] : local) {
                add_term(next, {concat(ab.first, cd.first), concat(ab.second, cd.second)}, ca * cb);
            }
        }
        acc = std::move(next);
    }
    return acc;
}

Combo<Composition> sh_mul(const Composition& a, const Composition& b) {
    Combo<Composition> out;
    const auto& pa = a.parts();
    const auto& pb = b.parts();
    std::function<void(std::size_t, std::size_t, std::vector<int>&)> rec = [&](std::size_t i, std::size_t j,
                                                                               std::vector<int>& acc) {
        if (i == pa.size() && j == pb.size()) {
            add_term(out, Composition(acc), Rational(1));
            return;
        }
        if (i < pa.size()) {
            acc.push_back(pa[i]);
            rec(i + 1, j, acc);
            acc.pop_back();
        }
        if (j < pb.size()) {
            acc.push_back(pb[j]);
            rec(i, j + 1, acc);
            acc.pop_back();
        }
    };
    std::vector<int> acc;
    rec(0, 0, acc);
    return out;
}

Combo<std::pair<Composition, Composition>> sh_comul(const Composition& a) {
    return qsym_comul(a);  // deconcatenation in both cases
}

namespace {

void expect_space(const CompElement& x, Space s, const char* what) {
    if (x.space != s) throw InvariantError(std::string(what) + ": wrong space");
}

}  // namespace

Rational zeta_qsym(const CompElement& x) {
    expect_space(x, Space::qsym, "zeta_qsym");
    Rational out = 0;
    for (const auto& [key, c] : x.terms) {
        if (key.len() <= 1) out += c;
    }
    return out;
}

Rational eta_char(const CompElement& x) {
    expect_space(x, Space::qsym, "eta_char");
    Rational out = 0;
    for (const auto& [key, c] : x.terms) {
        if (key.empty()) continue;  // lp(()) = 0
        out += c * sign_pow(key.len() - 1) * lp(key);
    }
    return out;
}

Rational xi_s(const CompElement& x) {
    expect_space(x, Space::sh, "xi_s");
    Rational out = 0;
    for (const auto& [key, c] : x.terms) {
        if (key.len() == 1) out += c;
    }
    return out;
}

Rational pair_classical(const CompElement& qsym_side, const CompElement& nsym_side) {
    expect_space(qsym_side, Space::qsym, "pair_classical");
    expect_space(nsym_side, Space::nsym, "pair_classical");
    Rational out = 0;
    for (const auto& [key, c] : qsym_side.terms) out += c * coeff_of(nsym_side.terms, key);
    return out;
}

}  // namespace parqsym
