#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spinorb/weight.hpp"

namespace spinorb {

enum class Numeral { None, I, II };
const char* numeral_name(Numeral n);

// Signed Young diagram. Rows are counted by (length, start sign); sign 0 marks an
// unsigned (complex) diagram, in which case every row has sign 0.
struct SignedDiagram {
    std::map<std::pair<int, int>, int> rows;
    Numeral numeral = Numeral::None;

    bool is_complex() const;
    int count(int len, int sign) const;
    void add_rows(int len, int sign, int n);
    // Box count (a, b); for complex diagrams (size, 0).
    std::pair<int, int> signature() const;
    int size() const;
    // Row lengths in decreasing order.
    std::vector<int> shape() const;
    // Orthogonal validity: for each even length, rows starting + and - agree in
    // number (complex: each even length has even multiplicity).
    bool is_valid() const;

    std::string str() const;
    static SignedDiagram parse(const std::string& s);
    static SignedDiagram complex_from(const std::vector<int>& parts, Numeral n = Numeral::None);

    bool operator==(const SignedDiagram&) const = default;
    auto operator<=>(const SignedDiagram&) const = default;
};

// Zeta toggles the numeral; Eta exchanges + and -.
SignedDiagram apply_outer(OuterAut aut, const SignedDiagram& d);

// All partitions of m whose even parts have even multiplicity.
std::vector<std::vector<int>> orthogonal_partitions(int m);

}  // namespace spinorb
