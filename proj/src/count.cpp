#include "spinorb/count.hpp"

#include <algorithm>
#include <set>

#include "spinorb/error.hpp"
#include "spinorb/spectra.hpp"

namespace spinorb {

std::string CartanClass::str() const {
    std::string out = "H";
    if (numeral != Numeral::None) out += std::string("_") + numeral_name(numeral);
    out += "^{" + std::to_string(r_plus) + "," + std::to_string(r_minus) + "," + std::to_string(m) + "," +
           std::to_string(s) + "}";
    return out;
}

std::int64_t weyl_order_D(int r) {
    if (r <= 1) return 1;
    std::int64_t v = std::int64_t{1} << (r - 1);
    for (int i = 2; i <= r; ++i) v *= i;
    return v;
}

namespace {

void check_k(int n, int k) {
    if (k <= 0 || 2 * k > n - 2) throw Error(Errc::KOutOfRange, "need 0 < k <= n/2 - 1");
}

std::pair<int, int> normalized(int a, int b) { return a >= b ? std::make_pair(a, b) : std::make_pair(b, a); }

void check_signature(int a, int b) {
    if (a < 0 || b < 0 || a + b == 0 || (a + b) % 2 != 0)
        throw Error(Errc::InvalidSignature, "signature must have a + b even and positive");
}

int mirror_case(int c) {
    switch (c) {
        case 2: return 3;
        case 5: return 6;
        case 7: return 8;
        default: return c;
    }
}

}  // namespace

std::vector<std::pair<int, int>> admissible_groups(int n, int k) {
    check_k(n, k);
    const int ni = n - k - 1;  // integral coordinates of lambda
    const int nh = k + 1;      // half-integral ones
    std::set<std::pair<int, int>> out;
    // Even signatures: the compact Cartan sees p and q coordinates, one block each.
    for (int p = 0; p <= n; ++p) {
        int q = n - p;
        if (p >= q && ((p == ni && q == nh) || (p == nh && q == ni))) out.insert({2 * p, 2 * q});
    }
    // Odd signatures: p + q + 1 = n, the extra x taking either class.
    for (int p = 0; p < n; ++p) {
        int q = n - 1 - p;
        if (p < q) continue;
        auto fits = [&](int left, int right) {
            return (p == left && q + 1 == right) || (p + 1 == left && q == right);
        };
        if (fits(ni, nh) || fits(nh, ni)) out.insert({2 * p + 1, 2 * q + 1});
    }
    return {out.begin(), out.end()};
}

std::vector<std::pair<int, int>> admissible_groups_closed(int n, int k) {
    check_k(n, k);
    std::set<std::pair<int, int>> out;
    int p = n - k - 1, q = k + 1;
    out.insert(normalized(2 * p, 2 * q));
    p = n - k - 2;
    out.insert(normalized(2 * p + 1, 2 * q + 1));
    p = n - k - 1;
    q = k;
    out.insert(normalized(2 * p + 1, 2 * q + 1));
    return {out.begin(), out.end()};
}

std::vector<CartanClass> enumerate_cartans(int a, int b) {
    check_signature(a, b);
    const int eps = a % 2;
    const int p = (a - eps) / 2, q = (b - eps) / 2;
    std::vector<CartanClass> out;
    for (int sp = 0; sp <= std::min(p, q); ++sp)
        for (int m = 0; m + sp <= std::min(p, q); ++m) {
            CartanClass c{p - m - sp, q - m - sp, m, 2 * sp + eps, Numeral::None};
            if (eps == 0 && p == q && m == p) {
                c.numeral = Numeral::I;
                out.push_back(c);
                c.numeral = Numeral::II;
            }
            out.push_back(c);
        }
    return out;
}

std::int64_t cartan_component_count(const CartanClass& c) {
    if (c.s > 1) return (std::int64_t{1} << (c.s - 1)) * 4;
    return c.m == 0 ? 1 : 2;
}

bool is_abelian_cartan(const CartanClass& c) { return c.s < 3; }

std::optional<bool> x_half_integral(const CountContext& ctx) {
    if (ctx.a % 2 == 0) return std::nullopt;
    const int ni = ctx.n - ctx.k - 1;
    const int p = (ctx.a - 1) / 2;
    // Larger side integral when possible; otherwise the larger side is the half block.
    if (p == ni) return true;
    if (p + 1 == ni) return false;
    const int nh = ctx.k + 1;
    if (p == nh) return false;
    if (p + 1 == nh) return true;
    throw Error(Errc::InvalidSignature, "signature does not carry this infinitesimal character");
}

StabilizerProfile stabilizer_profile(const CartanClass& c, const CountContext& ctx) {
    StabilizerProfile sp;
    sp.m = c.m;
    const int s1 = c.s_prime();
    sp.real_part = {s1, c.s % 2 == 0 ? s1 : s1 + 1};
    sp.imag_part = {c.r_plus, c.r_minus};
    sp.extra_z2z2 = c.r_plus > 0 && c.r_minus > 0 && c.s >= 2;
    if (c.m != 0) {
        if (c.s >= 2) {
            sp.extra_z2_condition = 1;
        } else if (c.r_plus > 0 && c.r_minus > 0) {
            sp.extra_z2_condition = 2;
        } else if (c.r_minus == 0 && c.r_plus >= 1 && c.s == 1 && x_half_integral(ctx).value_or(false)) {
            sp.extra_z2_condition = 3;
        }
    }
    sp.extra_z2 = sp.extra_z2_condition != 0;
    const std::int64_t wr = weyl_order_D(sp.real_part.first) * weyl_order_D(sp.real_part.second);
    const std::int64_t wi = weyl_order_D(sp.imag_part.first) * weyl_order_D(sp.imag_part.second);
    sp.real_nontrivial = wr > 1;
    sp.imag_nontrivial = wi > 1;
    const std::int64_t wm = weyl_order_D(c.m);
    sp.order = wm * wm * (sp.extra_z2z2 ? 4 : 1) * (sp.extra_z2 ? 2 : 1) * wr * wi;
    return sp;
}

// The sign character of W(lambda) against epsilon on each generator type:
//   W^i: epsilon = sgn, always agrees.
//   W^r: epsilon trivial, sgn is not, so any reflection there breaks it.
//   D_m x D_m and (Z2 x Z2)*: epsilon trivial on products of two reflections, agrees.
//   Z2 bullet: epsilon = -1 on a product of four reflections, disagrees.
SignTest sign_test(const CartanClass& c, const CountContext& ctx) {
    SignTest t;
    const StabilizerProfile sp = stabilizer_profile(c, ctx);
    t.survives = !sp.real_nontrivial && !sp.extra_z2;

    if (c.s >= 3) t.rules_hit.push_back(1);
    if (c.m >= 1 && c.r_plus >= 1 && c.r_minus >= 1) t.rules_hit.push_back(2);
    if (c.m >= 1 && c.s >= 2) t.rules_hit.push_back(3);
    if (c.m >= 1 && c.s == 1 && c.r_minus == 0 && c.r_plus >= 1 && 2 * ctx.k == ctx.n - 3) t.rules_hit.push_back(4);
    t.literal_survives = t.rules_hit.empty();
    return t;
}

bool survives_sign_test(const CartanClass& c, const CountContext& ctx) { return sign_test(c, ctx).survives; }

int case_for_signature(int a, int b, int n, int k) {
    check_k(n, k);
    check_signature(a, b);
    if (a < b) return mirror_case(case_for_signature(b, a, n, k));
    const auto adm = admissible_groups(n, k);
    if (std::find(adm.begin(), adm.end(), std::make_pair(a, b)) == adm.end())
        throw Error(Errc::InvalidSignature, "signature admits no representation at this infinitesimal character");
    if (a % 2 == 0) return a == b ? 1 : 2;
    const int q = (b - 1) / 2;
    if (q == k) return 5;
    return a == b ? 4 : 7;
}

std::pair<int, int> signature_for_case(int case_id, int n, int k) {
    for (auto [a, b] : admissible_groups(n, k)) {
        if (case_for_signature(a, b, n, k) == case_id) return {a, b};
        if (a != b && case_for_signature(b, a, n, k) == case_id) return {b, a};
    }
    throw Error(Errc::RegimeMismatch, "case " + std::to_string(case_id) + " does not occur for this (n, k)");
}

namespace {

int case_r(int case_id, int a, int b, int k) {
    auto [big, small] = normalized(a, b);
    (void)small;
    switch (case_id) {
        case 2: case 3: return (big - 2 * k - 2) / 2;
        case 5: case 6: return (big - 2 * k - 3) / 2;
        case 7: case 8: return (big - 2 * k - 1) / 2;
        default: return 0;
    }
}

}  // namespace

int count_per_central_char(int a, int b, int n, int k) {
    case_for_signature(a, b, n, k);
    auto [x, y] = normalized(a, b);
    const CountContext ctx{n, k, x, y};
    int count = 0;
    for (const auto& c : enumerate_cartans(x, y))
        if (survives_sign_test(c, ctx)) ++count;
    return count;
}

int genuine_central_char_count(int a, int b, int n, int k) {
    const int cid = case_for_signature(a, b, n, k);
    std::set<std::string> tags;
    for (const auto& rep : rep_list(cid, k, case_r(cid, a, b, k))) tags.insert(rep.id.central_tag);
    return static_cast<int>(tags.size());
}

int theorem_count(int case_id, int a, int b) {
    switch (case_id) {
        case 1: return 16;
        case 2: case 3: return 6;
        case 4: return 4;
        case 5: case 6: return std::abs(a - b) == 2 ? 2 : 1;
        case 7: case 8: return 1;
        default: throw Error(Errc::InvalidArgument, "case id must be 1..8");
    }
}

UnipotentCount count_signature(int a, int b, int n, int k) {
    UnipotentCount out;
    out.n = n;
    out.k = k;
    out.case_id = case_for_signature(a, b, n, k);
    out.signature = {a, b};
    auto [x, y] = normalized(a, b);
    const CountContext ctx{n, k, x, y};
    for (const auto& c : enumerate_cartans(x, y)) {
        CartanRow row{c, cartan_component_count(c), is_abelian_cartan(c), stabilizer_profile(c, ctx), sign_test(c, ctx)};
        if (row.test.survives) out.survivors.push_back(c);
        if (row.test.rule4_conflict())
            out.notes.push_back(c.str() + ": x-integrality test and the literal k = (n-3)/2 rule disagree");
        out.per_cartan.push_back(row);
    }
    out.n_per_chi = static_cast<int>(out.survivors.size());
    out.n_genuine_chi = genuine_central_char_count(a, b, n, k);
    out.n_total = out.n_per_chi * out.n_genuine_chi;
    out.named_reps = static_cast<int>(rep_list(out.case_id, k, case_r(out.case_id, a, b, k)).size());
    out.theorem = theorem_count(out.case_id, a, b);
    if (out.n_total != out.named_reps) out.notes.push_back("count differs from the named representation list");
    if (out.n_total != out.theorem) out.notes.push_back("count differs from the printed theorem table");
    if (x != a) out.notes.push_back("Cartan data computed on the swapped signature");
    return out;
}

UnipotentCount count_unipotent(int case_id, int n, int k) {
    auto [a, b] = signature_for_case(case_id, n, k);
    return count_signature(a, b, n, k);
}

}  // namespace spinorb
