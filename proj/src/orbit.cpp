#include "spinorb/orbit.hpp"

#include <algorithm>
#include <functional>

namespace spinorb {

namespace {

SignedDiagram build(int k, int three_sign, int plus_ones, int minus_ones, Numeral n) {
    SignedDiagram d;
    d.add_rows(3, three_sign, 1);
    d.add_rows(2, 1, k);
    d.add_rows(2, -1, k);
    d.add_rows(1, 1, plus_ones);
    d.add_rows(1, -1, minus_ones);
    d.numeral = n;
    return d;
}

bool numbered(int case_id, bool second) {
    if (case_id == 1) return true;
    return (case_id == 2 || case_id == 3) && !second;
}

std::pair<int, int> label_signature(int c, int k, int r) {
    switch (c) {
        case 1: return {2 * k + 2, 2 * k + 2};
        case 2: return {2 * k + 2 + 2 * r, 2 * k + 2};
        case 3: return {2 * k + 2, 2 * k + 2 + 2 * r};
        case 4: return {2 * k + 1, 2 * k + 1};
        case 5: return {2 * k + 3 + 2 * r, 2 * k + 1};
        case 6: return {2 * k + 1, 2 * k + 3 + 2 * r};
        case 7: return {2 * k + 1 + 2 * r, 2 * k + 3};
        case 8: return {2 * k + 3, 2 * k + 1 + 2 * r};
    }
    return {0, 0};
}

OrbitCase make_case(int c, int k, int r, const SignedDiagram& d) {
    OrbitCase oc;
    oc.case_id = c;
    oc.k = k;
    if (c == 2 || c == 5 || c == 7) oc.r_plus = r;
    if (c == 3 || c == 6 || c == 8) oc.r_minus = r;
    oc.diagram = d;
    oc.signature = d.signature();
    oc.label_signature = label_signature(c, k, r);
    return oc;
}

}  // namespace

std::optional<SignedDiagram> case_diagram(int c, int k, int r, bool second, Numeral n) {
    if (k <= 0 || r < 0) return std::nullopt;
    if ((n != Numeral::None) != numbered(c, second)) return std::nullopt;
    bool has_second = c <= 4;
    if (second && !has_second) return std::nullopt;
    switch (c) {
        case 1:
            if (r != 0) return std::nullopt;
            return second ? build(k, -1, 1, 0, n) : build(k, 1, 0, 1, n);
        case 2:
            if (r < 1) return std::nullopt;
            return second ? build(k, 1, 2 * r, 1, n) : build(k, -1, 2 * r + 1, 0, n);
        case 3:
            if (r < 1) return std::nullopt;
            return second ? build(k, -1, 1, 2 * r, n) : build(k, 1, 0, 2 * r + 1, n);
        case 4:
            if (r != 0) return std::nullopt;
            return second ? build(k, -1, 2, 1, n) : build(k, 1, 1, 2, n);
        case 5: return build(k, 1, 2 * r + 1, 0, n);
        case 6: return build(k, -1, 0, 2 * r + 1, n);
        case 7:
            if (r < 2) return std::nullopt;
            return build(k, -1, 2 * r, 1, n);
        case 8:
            if (r < 2) return std::nullopt;
            return build(k, 1, 1, 2 * r, n);
    }
    return std::nullopt;
}

static void for_each_case(int k, int rmax, const std::function<void(const OrbitCase&)>& fn) {
    for (int c = 1; c <= 8; ++c)
        for (int r = 0; r <= rmax; ++r)
            for (bool second : {false, true})
                for (Numeral n : {Numeral::None, Numeral::I, Numeral::II}) {
                    auto d = case_diagram(c, k, r, second, n);
                    if (d) fn(make_case(c, k, r, *d));
                }
}

std::vector<OrbitCase> enumerate_real_forms(int a, int b, int k) {
    if (a < 0 || b < 0 || (a + b) % 2) throw Error(Errc::InvalidSignature, "signature must be nonnegative with even sum");
    if (k <= 0) throw Error(Errc::InvalidArgument, "k must be positive");
    std::vector<OrbitCase> out;
    if (a + b - 4 * k - 3 < 0) return out;
    for_each_case(k, a + b, [&](const OrbitCase& oc) {
        if (oc.signature == std::make_pair(a, b)) out.push_back(oc);
    });
    return out;
}

std::optional<OrbitCase> classify_case(const SignedDiagram& d) {
    if (d.is_complex() || !d.is_valid()) return std::nullopt;
    int k = d.count(2, 1);
    if (k <= 0) return std::nullopt;
    std::optional<OrbitCase> found;
    for_each_case(k, d.size(), [&](const OrbitCase& oc) {
        if (!found && oc.diagram == d) found = oc;
    });
    return found;
}

std::vector<OrbitCase> all_cases(int k, int rmax) {
    std::vector<OrbitCase> out;
    for_each_case(k, rmax, [&](const OrbitCase& oc) { out.push_back(oc); });
    return out;
}

LieTriple lie_triple(const SignedDiagram& d) {
    LieTriple t;
    t.realization = realize(d);
    t.e = n_matrix(t.realization);
    t.h = h_matrix(t.realization);
    t.h_coords = h_weight(t.realization);
    t.h_text = h_string(t.realization);
    t.bracket_ok = t.h * t.e - t.e * t.h == scaled(t.e, Rational(2));
    t.jordan = jordan_type(t.e);
    t.jordan_ok = t.jordan == d.shape();
    return t;
}

GroupTag component_group_complex(const std::vector<int>& parts) {
    std::map<int, int> odd;
    for (int p : parts)
        if (p % 2) ++odd[p];
    int m = static_cast<int>(odd.size());
    if (m == 0) return GroupTag::Z2;
    bool repeated = false;
    for (auto [p, c] : odd) repeated = repeated || c > 1;
    if (repeated) {
        // Isomorphic to the linear component group Z2^{m-1}.
        switch (m - 1) {
            case 0: return GroupTag::Trivial;
            case 1: return GroupTag::Z2;
            case 2: return GroupTag::Z2xZ2;
            case 3: return GroupTag::Z2xZ2xZ2;
            default: return GroupTag::Other;
        }
    }
    if (m == 2) {
        // (E_a E_b)^2 = -E_a^2 E_b^2 = -(-1)^{k_a + k_b}.
        auto it = odd.begin();
        int ka = (it->first - 1) / 2;
        int kb = (std::next(it)->first - 1) / 2;
        return (ka + kb) % 2 ? GroupTag::Z2xZ2 : GroupTag::Z4;
    }
    return GroupTag::Other;
}

GroupTag component_group(const SignedDiagram& d) {
    if (d.is_complex()) return component_group_complex(d.shape());
    auto oc = classify_case(d);
    if (!oc) throw Error(Errc::InvalidArgument, d.str() + " is outside the eight families");
    switch (oc->case_id) {
        case 1: return GroupTag::Z2xZ2;
        case 5: return oc->r_plus == 0 ? GroupTag::Z2 : GroupTag::Trivial;
        case 6: return oc->r_minus == 0 ? GroupTag::Z2 : GroupTag::Trivial;
        default: return GroupTag::Z2;
    }
}

int complex_orbit_dim(const std::vector<int>& parts) {
    int n = 0, odd = 0;
    for (int p : parts) {
        n += p;
        odd += p % 2;
    }
    int sq = 0;
    int top = parts.empty() ? 0 : *std::max_element(parts.begin(), parts.end());
    for (int i = 1; i <= top; ++i) {
        int c = 0;
        for (int p : parts) c += p >= i;
        sq += c * c;
    }
    return n * (n - 1) / 2 - (sq - odd) / 2;
}

int small_bound(int a, int b) {
    auto roots = [](int m) { int p = m / 2; return m % 2 ? p * p : p * (p - 1); };
    return a / 2 + b / 2 + roots(a) + roots(b);
}

OrbitDimension orbit_dimension(const SignedDiagram& d, bool with_oracle) {
    OrbitDimension od;
    od.complex_dim = complex_orbit_dim(d.shape());
    od.k_orbit_dim = od.complex_dim / 2;
    if (with_oracle) {
        Realization r = realize(d);
        od.oracle_dim = orbit_dim_oracle(n_matrix(r), gram_matrix(r));
    }
    if (!d.is_complex()) {
        auto [a, b] = d.signature();
        od.small_bound = small_bound(a, b);
        od.is_small = od.k_orbit_dim <= *od.small_bound;
    }
    return od;
}

}  // namespace spinorb
