#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spinorb/orbit.hpp"
#include "spinorb/weight.hpp"

namespace spinorb {

struct InflChar {
    std::vector<HalfInt> integral;  // n-k-2, ..., 1, 0
    std::vector<HalfInt> half;      // k+1/2, ..., 1/2
    Weight coords;                  // both blocks as one D_n vector
    bool regular = false;           // for D_{k+1} x D_{n-k-1}
    std::string str() const;
};

InflChar infl_char(int n, int k);

enum class CoordClass { Int, Half, Any };
enum class ChainTail { None, Abs, NonNeg };
enum class ParityReq { Any, Even, Odd };

// One factor of a chain pattern. Coordinates [0, len) carry chain variables x and
// the rest are zero. The K-type coordinate is x + vshift; the chain compares x + off.
struct ChainSide {
    Ambient ambient = Ambient::D;
    int rank = 0;
    int len = 0;
    HalfInt vshift;
    HalfInt off;
    CoordClass cls = CoordClass::Int;
    bool flip = false;  // the last K-type coordinate is -(x + vshift)
};

// Interleaved chain x_f1 + off >= x_o1 + off >= x_f2 + off >= ... where f is the
// side named by `first`. Parity is that of the signed variable sum (a flipped
// variable counts as -x) measured against anchor(), the uniform chain minimum.
struct ChainPattern {
    std::array<ChainSide, 2> side;
    int first = 0;
    ChainTail tail = ChainTail::None;
    ParityReq parity = ParityReq::Any;
    // Off for R(O~, Det^chi) at general chi, where integral chi gives non-genuine K-types.
    bool genuine = true;

    bool member(const KType& v) const;
    // K-type -> number of chain tuples producing it (the multiplicity check).
    std::map<KType, int> enumerate(int bound) const;
    // Chain variables of the anchor, written as a K-type of variables (left | right).
    KType anchor() const;
    std::string describe() const;
};

// Outer automorphisms on K-types, with eta allowed between unequal factors (it
// then moves to the group with the factors exchanged).
KType outer_pair(OuterAut aut, const KType& v);

// V belongs iff outer_pair(aut, V) belongs to the base pattern.
struct Spectrum {
    ChainPattern base;
    OuterAut aut = OuterAut::Identity;

    bool member(const KType& v) const;
    std::map<KType, int> enumerate(int bound) const;
    std::string describe() const;
};

std::pair<int, int> case_signature(int case_id, int k, int r);

// "3/2,1/2|1,0" as a K-type of Spin(a) x Spin(b); short lists are zero-padded.
KType parse_ktype(const std::string& text, int a, int b);

struct PsiChar {
    OrbitCase orbit;
    int index = 0;  // 1-based
    std::string name;
    KType defining;
    HalfInt chi;
    Spectrum spectrum;
    std::vector<std::string> notes;
};

std::vector<PsiChar> psi_list(const OrbitCase& c);
// R(O~, Det^chi) for the designated chi; chi overrides it (Case 1 geometry uses any chi).
Spectrum det_spectrum(const OrbitCase& c, std::optional<HalfInt> chi = std::nullopt);
HalfInt designated_chi(const OrbitCase& c);
int sections_membership(const PsiChar& psi, const KType& v);
std::vector<KType> enumerate_sections(const PsiChar& psi, int bound);

struct RepId {
    int case_id = 0;
    int k = 0;
    int r = 0;
    std::pair<int, int> signature;
    std::string name;
    std::string central_tag;
    bool conjectural = false;  // pi^e / pi^o halves
    bool is_union = false;     // pi = pi^e + pi^o, not a separate representation
};

struct RepSpectrum {
    RepId id;
    Spectrum spectrum;
};

// Named representations of Thm-style lists; unions are appended when asked.
std::vector<RepSpectrum> rep_list(int case_id, int k, int r, bool with_unions = false);
RepSpectrum rep_lookup(int case_id, int k, int r, const std::string& name);
int rep_spectrum_membership(const RepSpectrum& rep, const KType& v);

// Values i^k of the central elements of the double cover on V, in a fixed order.
std::vector<int> central_signature(const KType& v, int a, int b);
std::string central_tag(const std::vector<int>& sig);

struct MatchupCell {
    int row = 0;
    std::string rep;
    std::string orbit;
    std::string psi;
    bool conjectural = false;
    bool equal = false;
    int count = 0;
    std::optional<KType> first_difference;
};

struct MatchupTable {
    int case_id = 0;
    int k = 0;
    int r = 0;
    std::pair<int, int> signature;
    int bound = 0;
    std::vector<MatchupCell> cells;
    // Per row: do all K-types of all cells share one central character.
    std::vector<bool> row_central;
    std::vector<std::string> notes;
    bool all_equal() const;
};

MatchupTable matchup_table(int case_id, int k, int r, int bound);
// Throws MatchupFailure naming the first bad cell.
MatchupTable matchup_verify(int case_id, int k, int r, int bound);

struct BggCheck {
    bool ell0 = false;
    bool w1 = false;
    bool w2 = false;
    bool w3 = false;
    bool bgg = false;
    bool closed_form = false;
    HalfInt ad_h;  // -2 sum a_i
    bool agrees() const { return bgg == closed_form; }
};

// Case 1 geometry, p = rank of each factor.
BggCheck bgg_cross_check(HalfInt chi, const KType& v);

enum class Variant { I = 1, II, III, IV };
const char* variant_name(Variant v);
Variant parse_variant(const std::string& s);

struct ConstructionSpectrum {
    int case_id = 0;
    Variant variant = Variant::I;
    std::pair<int, int> signature;
    // Literal predicate in integer variables (a | b).
    bool member(const KType& v) const;
    // Representation of the same group whose spectrum it should equal.
    RepSpectrum matched;
    std::string note;

    int k = 0;
    int r = 0;
};

ConstructionSpectrum construction_spectrum(int case_id, int k, int r, Variant variant);

struct LsPiece {
    std::vector<KType> members;
    std::string name;  // matched representation, empty if none
    std::string case_label;
    bool equals_named = false;
    // For a union pi, the conjectural halves pi^e, pi^o it splits into by parity.
    std::vector<std::string> halves;
};

struct LsRep {
    std::string label;
    std::map<KType, int> restricted;
    std::vector<LsPiece> pieces;
};

struct LsRestriction {
    std::string regime;
    std::pair<int, int> target;
    std::vector<LsRep> reps;
};

// Restricts the small representations of Spin(pPrime, qPrime) (pPrime odd,
// qPrime even) to the subgroup losing one dimension on the odd factor
// (lose_odd) or on the even factor; odd_right places the odd factor second.
LsRestriction ls_restrict(int p_prime, int q_prime, bool lose_odd, bool odd_right, int bound);

struct VermaCheck {
    int checked = 0;
    int mismatches = 0;
    std::optional<KType> first_mismatch;
    bool metaplectic_identity = true;  // checked for variants III/IV only
    bool ok() const { return mismatches == 0 && metaplectic_identity; }
};

// Evaluates the alternating sum of generalized Verma modules restricted to
// gl(p) x so(2q) with the character oracles and compares with the closed form.
VermaCheck verma_support_check(Variant variant, int p, int q, int bound);

}  // namespace spinorb
