#include "spinorb/realization.hpp"

#include <algorithm>

namespace spinorb {

namespace {

// Abstract coordinates during construction: pair P -> keys 2P (e), 2P+1 (f);
// single of factor f -> key -1-f.
struct Builder {
    bool complex = false;
    int dims[2] = {0, 0};
    std::vector<int> pair_factor, pair_h;
    int used[2] = {0, 0};

    int new_pair(int fac, int h) {
        pair_factor.push_back(fac);
        pair_h.push_back(h);
        ++used[fac];
        return static_cast<int>(pair_factor.size()) - 1;
    }
    // Factor holding box t (0-based) of a row starting with sign.
    int fac(int sign, int t) const {
        if (complex) return 0;
        int s = t % 2 ? -sign : sign;
        return s > 0 ? 0 : 1;
    }
};

SparseVec unit(int key) { return SparseVec{{key, Rational(1)}}; }
SparseVec e_of(int P) { return unit(2 * P); }
SparseVec f_of(int P) { return unit(2 * P + 1); }
int partner_key(int key) { return key ^ 1; }

SparseVec scale(const SparseVec& v, const Rational& k) {
    SparseVec r;
    if (k.is_zero()) return r;
    for (const auto& [g, c] : v) r[g] = c * k;
    return r;
}

}  // namespace

int Realization::factor_of_generator(int g) const {
    if (g < 2 * space.pairs) {
        int P = g / 2;
        return std::find(factor_pairs[0].begin(), factor_pairs[0].end(), P) != factor_pairs[0].end() ? 0 : 1;
    }
    int t = g - 2 * space.pairs;
    return factor_single[0] == t ? 0 : 1;
}

Rational quad(const CliffordSpace& sp, const SparseVec& x, const SparseVec& y) {
    Rational s;
    for (const auto& [g, c] : x) {
        auto it = y.find(sp.partner(g));
        if (it != y.end()) s += c * it->second;
    }
    return s;
}

CliffordG to_clifford(const CliffordSpace& sp, const SparseVec& v) {
    CliffordG x(sp);
    for (const auto& [g, c] : v) x.add(CliffordG::Mask(1) << g, Gauss(c));
    return x;
}

Realization realize(const SignedDiagram& d) {
    if (!d.is_valid()) throw Error(Errc::InvalidArgument, "diagram " + d.str() + " is not a valid orthogonal diagram");
    Builder B;
    B.complex = d.is_complex();
    auto [a, b] = d.signature();
    B.dims[0] = a;
    B.dims[1] = b;
    if (B.complex && a % 2) throw Error(Errc::InvalidArgument, "complex diagrams must have even size");

    Realization R;
    R.diagram = d;
    R.complex = B.complex;
    R.dims[0] = a;
    R.dims[1] = b;

    struct SelfDual { int len, sign; std::vector<int> pairs; int mid_factor, mid_slot; int odd_index; };
    struct Paired { int len, sign; std::vector<int> pairs; std::vector<int> keys; };
    std::vector<SelfDual> selfdual;
    std::vector<Paired> paired;
    std::vector<int> slot_is_middle[2];    // selfdual index or -1 for a one-row
    std::vector<std::pair<int, int>> one_rows;  // (factor, slot)

    // Rows by length descending.
    std::vector<std::pair<int, int>> keys;
    for (const auto& [k, c] : d.rows) keys.push_back(k);
    std::sort(keys.begin(), keys.end(), [](auto x, auto y) { return x.first != y.first ? x.first > y.first : x.second > y.second; });

    auto add_paired = [&](int len, int sign) {
        Paired p{len, sign, {}, {}};
        for (int t = 0; t < len; ++t) {
            int w = -(len - 1) + 2 * t;
            int P = B.new_pair(B.fac(sign, t), w < 0 ? -w : w);
            p.pairs.push_back(P);
            p.keys.push_back(w <= 0 ? 2 * P : 2 * P + 1);
        }
        paired.push_back(p);
    };

    for (auto [len, sign] : keys) {
        int c = d.count(len, sign);
        if (len % 2 == 0) {
            if (sign < 0) continue;  // consumed with the + rows
            int npairs = B.complex ? c / 2 : c;
            for (int i = 0; i < npairs; ++i) add_paired(len, B.complex ? 0 : 1);
            continue;
        }
        if (len == 1) continue;
        for (int i = 0; i < c / 2; ++i) {
            add_paired(len, sign);
            R.supports_components = false;
        }
        if (c % 2) {
            SelfDual s{len, sign, {}, 0, 0, 0};
            int k = (len - 1) / 2;
            for (int t = 0; t < k; ++t) s.pairs.push_back(B.new_pair(B.fac(sign, t), 2 * k - 2 * t));
            s.mid_factor = B.fac(sign, k);
            s.mid_slot = static_cast<int>(slot_is_middle[s.mid_factor].size());
            slot_is_middle[s.mid_factor].push_back(static_cast<int>(selfdual.size()));
            selfdual.push_back(s);
        }
    }
    for (auto [len, sign] : keys) {
        if (len != 1) continue;
        int f = B.complex ? 0 : (sign > 0 ? 0 : 1);
        for (int i = 0; i < d.count(1, sign); ++i) {
            one_rows.push_back({f, static_cast<int>(slot_is_middle[f].size())});
            slot_is_middle[f].push_back(-1);
        }
    }

    // Free pairs and singles realize the middle slots.
    std::vector<UnitVec> slot_vec[2];
    for (int f = 0; f < 2; ++f) {
        int rest = B.dims[f] - 2 * B.used[f];
        int n = static_cast<int>(slot_is_middle[f].size());
        if (rest != n) throw Error(Errc::InvalidArgument, "internal: slot count mismatch");
        for (int i = 0; i < rest / 2; ++i) {
            int P = B.new_pair(f, 0);
            SparseVec x{{2 * P, Rational(1)}, {2 * P + 1, Rational(1, 2)}};
            SparseVec y{{2 * P, Rational(1)}, {2 * P + 1, Rational(-1, 2)}};
            slot_vec[f].push_back({x, 1});
            slot_vec[f].push_back({y, -1});
        }
        if (rest % 2) slot_vec[f].push_back({unit(-1 - f), 1});
    }

    // Assign real pair indices: factor 0 first, then factor 1; within a factor by
    // decreasing h, ties by creation order.
    int npairs = static_cast<int>(B.pair_factor.size());
    std::vector<int> order(npairs);
    for (int i = 0; i < npairs; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        if (B.pair_factor[x] != B.pair_factor[y]) return B.pair_factor[x] < B.pair_factor[y];
        return B.pair_h[x] > B.pair_h[y];
    });
    std::vector<int> real_of(npairs);
    for (int i = 0; i < npairs; ++i) real_of[order[i]] = i;
    R.space = CliffordSpace{npairs, (a % 2) + (b % 2)};
    R.factor_single = {-1, -1};
    int st = 0;
    for (int f = 0; f < 2; ++f)
        if (B.dims[f] % 2) R.factor_single[f] = st++;
    R.h_pair.assign(npairs, 0);
    for (int i = 0; i < npairs; ++i) {
        R.factor_pairs[B.pair_factor[order[i]]].push_back(i);
        R.h_pair[i] = B.pair_h[order[i]];
    }
    auto remap_key = [&](int key) {
        if (key < 0) return R.space.v(R.factor_single[-1 - key]);
        return 2 * real_of[key / 2] + (key % 2);
    };
    auto remap = [&](const SparseVec& v) {
        SparseVec r;
        for (const auto& [k, c] : v) r[remap_key(k)] = c;
        return r;
    };
    auto remap_unit = [&](const UnitVec& u) { return UnitVec{remap(u.u), u.q}; };

    // Chains.
    for (const SelfDual& s : selfdual) {
        const UnitVec& m = slot_vec[s.mid_factor][s.mid_slot];
        int k = static_cast<int>(s.pairs.size());
        for (int t = 0; t < k; ++t) {
            SparseVec img = t + 1 < k ? e_of(s.pairs[t + 1]) : m.u;
            R.chain.push_back({e_of(s.pairs[t]), img, f_of(s.pairs[t])});
            SparseVec fimg = t > 0 ? scale(f_of(s.pairs[t - 1]), Rational(-1)) : SparseVec{};
            R.chain.push_back({f_of(s.pairs[t]), fimg, e_of(s.pairs[t])});
        }
        R.chain.push_back({m.u, scale(f_of(s.pairs[k - 1]), Rational(-m.q)), scale(m.u, Rational(m.q))});
        OddRowPieces piece;
        piece.length = s.len;
        piece.sign = s.sign;
        piece.name = std::to_string(s.len) + (s.sign > 0 ? "+" : s.sign < 0 ? "-" : "");
        for (int t = 0; t < k; ++t) piece.pairs[B.pair_factor[s.pairs[t]]].push_back(s.pairs[t]);
        piece.units[s.mid_factor].push_back(m);
        R.odd_rows.push_back(piece);
    }
    for (const Paired& p : paired) {
        int L = p.len;
        for (int t = 0; t < L; ++t) {
            SparseVec img = t + 1 < L ? unit(p.keys[t + 1]) : SparseVec{};
            R.chain.push_back({unit(p.keys[t]), img, unit(partner_key(p.keys[t]))});
            SparseVec dimg = t > 0 ? scale(unit(partner_key(p.keys[t - 1])), Rational(-1)) : SparseVec{};
            R.chain.push_back({unit(partner_key(p.keys[t])), dimg, unit(p.keys[t])});
        }
        CentralizerPath path;
        path.name = "torus on paired " + std::to_string(L) + "-rows";
        for (int t = 0; t < L; ++t) path.torus.push_back({p.pairs[t], p.keys[t] % 2 ? 1 : -1});
        R.paths.push_back(path);
    }
    std::vector<int> ones_in[2];
    int ones_seen[3] = {0, 0, 0};
    for (auto [f, slot] : one_rows) {
        const UnitVec& m = slot_vec[f][slot];
        R.chain.push_back({m.u, SparseVec{}, scale(m.u, Rational(m.q))});
        OddRowPieces piece;
        piece.length = 1;
        piece.sign = B.complex ? 0 : (f == 0 ? 1 : -1);
        piece.name = std::string("1") + (B.complex ? "" : f == 0 ? "+" : "-") + "#" + std::to_string(++ones_seen[f]);
        piece.units[f].push_back(m);
        ones_in[f].push_back(static_cast<int>(R.odd_rows.size()));
        R.odd_rows.push_back(piece);
    }
    for (int f = 0; f < 2; ++f)
        for (std::size_t i = 0; i + 1 < ones_in[f].size(); ++i) {
            CentralizerPath path;
            path.plane = true;
            path.factor = f;
            path.u = R.odd_rows[ones_in[f][i]].units[f][0];
            path.w = R.odd_rows[ones_in[f][i + 1]].units[f][0];
            path.name = "rotation of " + R.odd_rows[ones_in[f][i]].name + " into " + R.odd_rows[ones_in[f][i + 1]].name;
            R.paths.push_back(path);
        }

    // Move everything to real coordinates.
    for (auto& c : R.chain) {
        c.b = remap(c.b);
        c.image = remap(c.image);
        c.dual = remap(c.dual);
    }
    for (auto& o : R.odd_rows)
        for (int f = 0; f < 2; ++f) {
            for (int& P : o.pairs[f]) P = real_of[P];
            for (auto& u : o.units[f]) u = remap_unit(u);
        }
    for (auto& p : R.paths) {
        for (auto& [P, s] : p.torus) P = real_of[P];
        if (p.plane) {
            p.u = remap_unit(p.u);
            p.w = remap_unit(p.w);
        }
    }

    // Numeral II: conjugate by swapping e and f on the last pair of each even factor.
    if (d.numeral == Numeral::II) {
        std::vector<int> swapped;
        for (int f = 0; f < 2; ++f)
            if (B.dims[f] % 2 == 0 && !R.factor_pairs[f].empty()) swapped.push_back(R.factor_pairs[f].back());
        auto sw = [&](SparseVec& v) {
            SparseVec r;
            for (const auto& [g, c] : v) {
                bool hit = g < 2 * R.space.pairs && std::count(swapped.begin(), swapped.end(), g / 2);
                r[hit ? (g ^ 1) : g] = c;
            }
            v = r;
        };
        for (auto& c : R.chain) {
            sw(c.b);
            sw(c.image);
            sw(c.dual);
        }
        for (auto& o : R.odd_rows)
            for (int f = 0; f < 2; ++f)
                for (auto& u : o.units[f]) sw(u.u);
        for (auto& p : R.paths) {
            for (auto& [P, s] : p.torus)
                if (std::count(swapped.begin(), swapped.end(), P)) s = -s;
            if (p.plane) {
                sw(p.u.u);
                sw(p.w.u);
            }
        }
        for (int P : swapped) R.h_pair[P] = -R.h_pair[P];
    }
    return R;
}

Matrix gram_matrix(const Realization& r) {
    int n = r.space.generators();
    Matrix g = zero_matrix(n, n);
    for (int i = 0; i < n; ++i) g[i][r.space.partner(i)] = Rational(1);
    return g;
}

Matrix n_matrix(const Realization& r) {
    int n = r.space.generators();
    Matrix m = zero_matrix(n, n);
    for (int col = 0; col < n; ++col) {
        SparseVec z{{col, Rational(1)}};
        for (const auto& c : r.chain) {
            Rational k = quad(r.space, c.dual, z);
            if (k.is_zero()) continue;
            for (const auto& [g, x] : c.image) m[g][col] += k * x;
        }
    }
    return m;
}

Matrix h_matrix(const Realization& r) {
    int n = r.space.generators();
    Matrix m = zero_matrix(n, n);
    for (int P = 0; P < r.space.pairs; ++P) {
        m[2 * P][2 * P] = Rational(-r.h_pair[P]);
        m[2 * P + 1][2 * P + 1] = Rational(r.h_pair[P]);
    }
    return m;
}

CliffordG x_element(const Realization& r) {
    CliffordG x(r.space);
    for (const auto& c : r.chain) {
        if (c.image.empty()) continue;
        x += to_clifford(r.space, c.image) * to_clifford(r.space, c.dual);
    }
    return x.scaled(Gauss(Rational(1, 4)));
}

KType h_weight(const Realization& r) {
    KType k;
    for (int f = 0; f < 2; ++f) {
        Weight& w = f == 0 ? k.left : k.right;
        w.ambient = r.dims[f] % 2 ? Ambient::B : Ambient::D;
        for (int P : r.factor_pairs[f]) w.coords.push_back(HalfInt(r.h_pair[P]));
    }
    return k;
}

std::string h_string(const Realization& r) {
    KType k = h_weight(r);
    auto join = [](const Weight& w) {
        std::string s;
        for (std::size_t i = 0; i < w.coords.size(); ++i) s += (i ? "," : "") + w.coords[i].str();
        return s;
    };
    if (r.complex) return "(" + join(k.left) + ")";
    std::string s = "(" + join(k.left) + " | " + join(k.right);
    if (r.dims[0] % 2 && r.dims[1] % 2) s += "; 0";
    return s + ")";
}

std::vector<int> jordan_type(const Matrix& n) {
    int dim = static_cast<int>(n.size());
    std::vector<int> ranks{dim};
    Matrix p = identity_matrix(dim);
    while (ranks.back() > 0) {
        p = p * n;
        ranks.push_back(rank(p));
        if (ranks.size() > static_cast<std::size_t>(dim) + 2) throw Error(Errc::InvalidArgument, "matrix is not nilpotent");
    }
    // at_least[k] = number of blocks of size >= k.
    std::vector<int> parts;
    for (std::size_t k = 1; k < ranks.size(); ++k) {
        int at_least = ranks[k - 1] - ranks[k];
        int next = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
        for (int i = 0; i < at_least - next; ++i) parts.push_back(static_cast<int>(k));
    }
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

int orbit_dim_oracle(const Matrix& n, const Matrix& gram) {
    int dim = static_cast<int>(n.size());
    Matrix rows;
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            Matrix a = zero_matrix(dim, dim);
            a[i][j] = Rational(1);
            a[j][i] = Rational(-1);
            Matrix x = gram * a;
            Matrix br = x * n - n * x;
            std::vector<Rational> flat;
            for (const auto& row : br) flat.insert(flat.end(), row.begin(), row.end());
            rows.push_back(flat);
        }
    return rank(rows);
}

}  // namespace spinorb
