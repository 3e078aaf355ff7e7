#pragma once

#include <map>
#include <vector>

#include "spinorb/weight.hpp"

namespace spinorb {

// Signed permutation acting by (w x)[perm[j]] = signs[j] * x[j].
struct WeylElement {
    std::vector<int> perm;
    std::vector<int> signs;
    Ambient type = Ambient::A;

    int sign() const;  // epsilon(w) = (-1)^length = det
    int length() const;
    std::vector<HalfInt> act(const std::vector<HalfInt>& x) const;
};

// Default rank cap for everything that walks the whole group.
inline constexpr int kDefaultRankCap = 6;

std::vector<WeylElement> weyl_group(Ambient type, int rank, int cap = kDefaultRankCap);
std::vector<Weight> weyl_orbit(const Weight& w, int cap = kDefaultRankCap);

// Moves w into the dominant chamber; returns the sign of the element used.
Weight dominant_rep(const Weight& w, int* sign = nullptr);

std::vector<std::vector<HalfInt>> positive_roots(Ambient type, int rank);
std::vector<HalfInt> rho(Ambient type, int rank);

class FormalCharacter {
public:
    using Key = std::vector<HalfInt>;

    FormalCharacter() = default;
    FormalCharacter(Ambient a, int rank) : ambient_(a), rank_(rank) {}

    static FormalCharacter monomial(Ambient a, const Key& mu, std::int64_t c = 1);

    Ambient ambient() const { return ambient_; }
    int rank() const { return rank_; }
    const std::map<Key, std::int64_t>& terms() const { return terms_; }
    std::int64_t mult(const Key& mu) const;
    bool empty() const { return terms_.empty(); }
    std::int64_t dimension() const;

    void add(const Key& mu, std::int64_t c);
    FormalCharacter& operator+=(const FormalCharacter& o);
    FormalCharacter& operator-=(const FormalCharacter& o);
    FormalCharacter operator*(const FormalCharacter& o) const;
    FormalCharacter scaled(std::int64_t c) const;
    FormalCharacter shifted(const Key& by) const;
    // Exact quotient by (1 - e^{-alpha}); throws if not divisible.
    FormalCharacter divide_one_minus(const Key& alpha) const;
    FormalCharacter with_ambient(Ambient a) const;

    bool operator==(const FormalCharacter& o) const { return terms_ == o.terms_ && rank_ == o.rank_; }

private:
    Ambient ambient_ = Ambient::A;
    int rank_ = 0;
    std::map<Key, std::int64_t> terms_;
};

// Alternating sum over the Weyl group of e^{w x}.
FormalCharacter alternating_sum(Ambient type, const std::vector<HalfInt>& x, int cap = kDefaultRankCap);

// Weyl character formula, expanded and divided out exactly.
FormalCharacter irr_character(const Weight& lambda, int cap = kDefaultRankCap);
// Weyl dimension formula.
std::int64_t weyl_dimension(const Weight& lambda);

using WeightMultiset = std::map<Weight, std::int64_t>;

// Splits a W-invariant (possibly virtual) character into irreducibles.
WeightMultiset decompose(const FormalCharacter& ch, int cap = kDefaultRankCap);
WeightMultiset tensor_decompose(const Weight& lambda, const Weight& mu, int cap = kDefaultRankCap);

std::vector<Weight> pieri_row(const Weight& beta, int k);

// gl(m) irreducible F(lambda) restricted to so(m), via the Littlewood rule.
WeightMultiset littlewood_branch(const std::vector<int>& lambda, int m);
// Same branching computed by restricting the gl(m) character.
WeightMultiset branch_oracle(const std::vector<int>& lambda, int m, int cap = kDefaultRankCap);

// so(2p): all beta + eps/2 that are dominant. With minus_count >= 0 this is the
// gl(p) rule with exactly that many eps_i = -1.
WeightMultiset spin_tensor(const Weight& beta, int minus_count = -1);
WeightMultiset spin_tensor_oracle(const Weight& beta, int minus_count = -1, int cap = kDefaultRankCap);

// Littlewood-Richardson coefficient c^lambda_{mu,nu} for partitions.
std::int64_t lr_coefficient(const std::vector<int>& lambda, const std::vector<int>& mu, const std::vector<int>& nu);

struct DenominatorIdentity {
    Weight lambda;       // D_n vector
    Weight lambda_prime; // B_n vector
    FormalCharacter lhs;
    FormalCharacter rhs;
    bool holds = false;
};

DenominatorIdentity denominator_identity(int n, int k, int cap = kDefaultRankCap);
bool check_denominator_identity(int n, int k, int cap = kDefaultRankCap);

}  // namespace spinorb
