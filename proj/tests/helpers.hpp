#pragma once

#include <string>
#include <vector>

#include "parqsym/diagram.hpp"
#include "parqsym/element.hpp"
#include "parqsym/io.hpp"

namespace testutil {

inline parqsym::Diagram D(const std::string& text) {
    return parqsym::io::parse_diagram_text(text);
}

inline parqsym::Diagram dot() {
    return D("[[1],[-1]]");
}
inline parqsym::Diagram bar() {
    return D("[[1,-1]]");
}
inline parqsym::Diagram E1() {
    return D("[[1],[2],[4],[3,-1,-2],[-3,-4]]");
}
inline parqsym::Diagram X() {
    return D("[[1,-2],[2,-1]]");
}
inline parqsym::Diagram D2() {
    return D("[[1],[2,-3],[3],[4],[-1],[-2],[-4]]");
}

inline parqsym::Composition C(std::vector<int> parts) {
    return parqsym::Composition(std::move(parts));
}

inline std::vector<parqsym::Diagram> diagrams_up_to(int max_order) {
    std::vector<parqsym::Diagram> out;
    for (int k = 0; k <= max_order; ++k) {
        auto at_k = parqsym::enumerate_diagrams(k);
        out.insert(out.end(), at_k.begin(), at_k.end());
    }
    return out;
}

}  // namespace testutil
