#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spinorb/diagram.hpp"

namespace spinorb {

// theta-stable Cartan class h^{r+, r-, m, s} of so(a, b).
struct CartanClass {
    int r_plus = 0;
    int r_minus = 0;
    int m = 0;
    int s = 0;
    Numeral numeral = Numeral::None;

    int s_prime() const { return s / 2; }
    std::string str() const;
    auto operator<=>(const CartanClass&) const = default;
    bool operator==(const CartanClass&) const = default;
};

struct StabilizerProfile {
    int m = 0;                       // W(D_m x D_m) inside the complex part
    bool extra_z2z2 = false;
    bool extra_z2 = false;
    int extra_z2_condition = 0;      // 1, 2, 3 for (i), (ii), (iii); 0 when absent
    std::pair<int, int> real_part;   // W(D_x) x W(D_y)
    std::pair<int, int> imag_part;
    bool real_nontrivial = false;
    bool imag_nontrivial = false;
    std::int64_t order = 1;
};

// Context fixing lambda and the group.
struct CountContext {
    int n = 0;
    int k = 0;
    int a = 0;  // normalized so that a >= b
    int b = 0;
};

std::int64_t weyl_order_D(int r);

// Signatures (a, b), a >= b, carrying a genuine representation at the
// infinitesimal character of (n, k). Derived from the integrality split of
// lambda against the fundamental Cartan, sorted.
std::vector<std::pair<int, int>> admissible_groups(int n, int k);
// Closed three-family form, normalized and deduplicated.
std::vector<std::pair<int, int>> admissible_groups_closed(int n, int k);

std::vector<CartanClass> enumerate_cartans(int a, int b);
std::int64_t cartan_component_count(const CartanClass& c);
bool is_abelian_cartan(const CartanClass& c);

// Integrality of the lone coordinate x for an odd signature, reading the
// larger side as integral whenever lambda allows it; nullopt for even ones.
std::optional<bool> x_half_integral(const CountContext& ctx);

StabilizerProfile stabilizer_profile(const CartanClass& c, const CountContext& ctx);

struct SignTest {
    bool survives = false;
    // The literal four-rule list, rule (4) read with k = (n-3)/2.
    bool literal_survives = false;
    std::vector<int> rules_hit;  // literal rules, 1..4
    bool rule4_conflict() const { return survives != literal_survives; }
};

SignTest sign_test(const CartanClass& c, const CountContext& ctx);
bool survives_sign_test(const CartanClass& c, const CountContext& ctx);

// Case id (1..8) of the orbit family living on signature (a, b) for (n, k).
int case_for_signature(int a, int b, int n, int k);
// (case id, r) to signature, inverse of the above.
std::pair<int, int> signature_for_case(int case_id, int n, int k);

int count_per_central_char(int a, int b, int n, int k);
// Distinct genuine central characters realized by the case's named spectra.
int genuine_central_char_count(int a, int b, int n, int k);
// The printed theorem table, kept for comparison.
int theorem_count(int case_id, int a, int b);

struct CartanRow {
    CartanClass cartan;
    std::int64_t components = 1;
    bool abelian = true;
    StabilizerProfile profile;
    SignTest test;
};

struct UnipotentCount {
    int n = 0;
    int k = 0;
    int case_id = 0;
    std::pair<int, int> signature;
    std::vector<CartanRow> per_cartan;
    std::vector<CartanClass> survivors;
    int n_per_chi = 0;
    int n_genuine_chi = 0;
    int n_total = 0;
    int named_reps = 0;  // named representations with pi^e / pi^o halves
    int theorem = 0;
    std::vector<std::string> notes;
};

UnipotentCount count_signature(int a, int b, int n, int k);
UnipotentCount count_unipotent(int case_id, int n, int k);

}  // namespace spinorb
