#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinorb/clifford.hpp"
#include "spinorb/diagram.hpp"
#include "spinorb/realization.hpp"

namespace spinorb {

struct OrbitCase {
    int case_id = 0;
    int k = 0;
    int r_plus = 0;
    int r_minus = 0;
    SignedDiagram diagram;
    std::pair<int, int> signature;        // box count
    std::pair<int, int> label_signature;  // the table's parameter expressions
    bool label_mismatch() const { return signature != label_signature; }
};

// Diagram of a case for given (k, r); epsilon selects the left or right column
// of the table (the second orbit listed, when there is one).
std::optional<SignedDiagram> case_diagram(int case_id, int k, int r, bool second, Numeral n = Numeral::None);

std::vector<OrbitCase> enumerate_real_forms(int a, int b, int k);
std::optional<OrbitCase> classify_case(const SignedDiagram& d);
// Every diagram of the eight families for the given k and r range.
std::vector<OrbitCase> all_cases(int k, int rmax);

struct LieTriple {
    Realization realization;
    Matrix e;
    Matrix h;
    KType h_coords;
    std::string h_text;
    bool bracket_ok = false;  // [h, e] = 2e
    std::vector<int> jordan;
    bool jordan_ok = false;
};

LieTriple lie_triple(const SignedDiagram& d);

// Component group tag from the closed statements: the eight-case table for real
// diagrams and the odd-block count rule for complex ones.
GroupTag component_group(const SignedDiagram& d);
GroupTag component_group_complex(const std::vector<int>& parts);

struct OrbitDimension {
    int complex_dim = 0;
    int oracle_dim = -1;  // -1 when not computed
    int k_orbit_dim = 0;
    std::optional<int> small_bound;  // rank(k) + |positive roots of k|
    std::optional<bool> is_small;
};

int complex_orbit_dim(const std::vector<int>& parts);
// rank(k) + |Delta^+(k)| for k = so(a) x so(b).
int small_bound(int a, int b);
OrbitDimension orbit_dimension(const SignedDiagram& d, bool with_oracle = true);

}  // namespace spinorb
