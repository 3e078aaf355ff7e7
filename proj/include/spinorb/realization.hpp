#pragma once

#include <map>
#include <string>
#include <vector>

#include "spinorb/clifford.hpp"
#include "spinorb/diagram.hpp"
#include "spinorb/linalg.hpp"

namespace spinorb {

// Sparse vector over generator indices of a CliffordSpace.
using SparseVec = std::map<int, Rational>;

struct ChainEntry {
    SparseVec b;       // basis vector
    SparseVec image;   // N(b)
    SparseVec dual;    // Q(dual, b') = delta
};

// A non-isotropic vector with Q(u, u) = q in {1, -1}.
struct UnitVec {
    SparseVec u;
    int q = 1;
};

// Odd row realized so that its span is nondegenerate: pieces per factor.
struct OddRowPieces {
    std::string name;
    int length = 0;
    int sign = 0;
    std::vector<int> pairs[2];
    std::vector<UnitVec> units[2];
};

// One-parameter family inside the centralizer, in half-angle form.
struct CentralizerPath {
    std::string name;
    // Torus: prod over (pair, sigma) of [c + i sigma s (1 - e f)].
    std::vector<std::pair<int, int>> torus;
    // Plane: c + s * u w for two orthogonal unit vectors in one factor.
    bool plane = false;
    int factor = 0;
    UnitVec u, w;
};

struct Realization {
    SignedDiagram diagram;
    bool complex = false;
    int dims[2] = {0, 0};
    CliffordSpace space;
    std::vector<int> factor_pairs[2];  // pair indices owned by each factor
    std::vector<int> factor_single;    // single index per factor, -1 if none (size 2)
    std::vector<ChainEntry> chain;
    std::vector<int> h_pair;            // h coordinate on each pair
    std::vector<OddRowPieces> odd_rows;
    std::vector<CentralizerPath> paths;
    bool supports_components = true;

    int dim() const { return dims[0] + dims[1]; }
    int factor_of_generator(int g) const;
};

// Builds e from the block recipes (chains of basis vectors alternating between
// the two factors for real diagrams).
Realization realize(const SignedDiagram& d);

Rational quad(const CliffordSpace& sp, const SparseVec& x, const SparseVec& y);
CliffordG to_clifford(const CliffordSpace& sp, const SparseVec& v);

Matrix gram_matrix(const Realization& r);
Matrix n_matrix(const Realization& r);
Matrix h_matrix(const Realization& r);
// X = 1/4 sum N(b_i) b^i, so that ad X = N on V.
CliffordG x_element(const Realization& r);
// Semisimple element of the triple as (left | right) coordinates.
KType h_weight(const Realization& r);
std::string h_string(const Realization& r);

std::vector<int> jordan_type(const Matrix& n);
// Dimension of the adjoint orbit of N: rank of X -> [X, N] on so(V, Q).
int orbit_dim_oracle(const Matrix& n, const Matrix& gram);

}  // namespace spinorb
