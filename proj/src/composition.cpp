#include "parqsym/composition.hpp"

#include <numeric>
#include <sstream>

namespace parqsym {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 1) throw InvariantError("composition parts must be positive");
    }
}

int Composition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Composition::operator<(const Composition& rhs) const {
    int sa = size(), sb = rhs.size();
    if (sa != sb) return sa < sb;
    return parts_ < rhs.parts_;
}

std::string Composition::text() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

Composition concat(const Composition& a, const Composition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return Composition(std::move(parts));
}

Composition near_concat(const Composition& a, const Composition& b) {
    if (a.empty() || b.empty()) throw InvariantError("near_concat requires non-empty compositions");
    std::vector<int> parts = a.parts();
    parts.back() += b.parts().front();
    parts.insert(parts.end(), b.parts().begin() + 1, b.parts().end());
    return Composition(std::move(parts));
}

bool comp_refines(const Composition& a, const Composition& b) {
    if (a.size() != b.size()) return false;
    std::size_t i = 0;
    for (int target : b.parts()) {
        int acc = 0;
        while (acc < target) {
            if (i >= a.parts().size()) return false;
            acc += a.parts()[i++];
        }
        if (acc != target) return false;
    }
    return i == a.parts().size();
}

std::vector<Composition> split_along(const Composition& a, const Composition& b) {
    if (!comp_refines(a, b)) throw InvariantError("split_along: first composition does not refine second");
    std::vector<Composition> pieces;
    std::size_t i = 0;
    for (int target : b.parts()) {
        std::vector<int> piece;
        int acc = 0;
        while (acc < target) {
            acc += a.parts()[i];
            piece.push_back(a.parts()[i]);
            ++i;
        }
        pieces.emplace_back(std::move(piece));
    }
    return pieces;
}

int lp(const Composition& a) {
    return a.empty() ? 0 : a.parts().back();
}

std::vector<Composition> comp_coarsenings(const Composition& a) {
    std::vector<Composition> out;
    int gaps = a.len() > 0 ? a.len() - 1 : 0;
    for (int mask = 0; mask < (1 << gaps); ++mask) {
        std::vector<int> parts;
        for (int i = 0; i < a.len(); ++i) {
            // bit set at gap i-1 means "merge part i into the previous one"
            if (i > 0 && (mask >> (i - 1)) & 1)
                parts.back() += a.parts()[i];
            else
                parts.push_back(a.parts()[i]);
        }
        out.emplace_back(std::move(parts));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Composition> compositions_of(int n) {
    if (n < 0) throw InvariantError("compositions_of: negative size");
    std::vector<Composition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    // Subsets of the n-1 gaps of (1,1,...,1).
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
        std::vector<int> parts{1};
        for (int i = 0; i < n - 1; ++i) {
            if ((mask >> i) & 1)
                parts.push_back(1);
            else
                parts.back() += 1;
        }
        out.emplace_back(std::move(parts));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace parqsym
