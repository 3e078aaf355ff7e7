#include "spinorb/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace spinorb {

namespace {

int perm_sign(const std::vector<int>& p) {
    int s = 1;
    std::vector<bool> seen(p.size(), false);
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        size_t len = 0;
        for (size_t j = i; !seen[j]; j = static_cast<size_t>(p[j])) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) s = -s;
    }
    return s;
}

void check_cap(int rank, int cap) {
    if (rank > cap)
        throw Error(Errc::RankCapExceeded, "rank " + std::to_string(rank) + " exceeds cap " + std::to_string(cap));
}

HalfInt dot(const std::vector<HalfInt>& x, const std::vector<HalfInt>& y) {
    // Returns twice the half-integer inner product so the value stays exact.
    std::int64_t s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += x[i].doubled() * y[i].doubled();
    return HalfInt::from_doubled(s / 2);
}

}  // namespace

int WeylElement::sign() const {
    int s = perm_sign(perm);
    for (int e : signs) s *= e;
    return s;
}

int WeylElement::length() const {
    // Count positive roots sent to negative ones.
    const int n = static_cast<int>(perm.size());
    auto image = [&](int j) { return std::pair<int, int>{perm[j], signs[j]}; };
    auto neg = [&](std::vector<std::pair<int, int>> terms) {
        // terms: (position, coefficient) of w(alpha); negative iff leading coefficient < 0
        std::sort(terms.begin(), terms.end());
        for (auto& [pos, c] : terms)
            if (c != 0) return c < 0;
        return false;
    };
    int len = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            auto [pi, si] = image(i);
            auto [pj, sj] = image(j);
            if (neg({{pi, si}, {pj, -sj}})) ++len;
            if (type != Ambient::A && neg({{pi, si}, {pj, sj}})) ++len;
        }
        if (type == Ambient::B && signs[i] < 0) ++len;
    }
    return len;
}

std::vector<HalfInt> WeylElement::act(const std::vector<HalfInt>& x) const {
    std::vector<HalfInt> y(x.size());
    for (size_t j = 0; j < x.size(); ++j) y[static_cast<size_t>(perm[j])] = signs[j] < 0 ? -x[j] : x[j];
    return y;
}

std::vector<WeylElement> weyl_group(Ambient type, int rank, int cap) {
    check_cap(rank, cap);
    std::vector<WeylElement> out;
    std::vector<int> p(static_cast<size_t>(rank));
    std::iota(p.begin(), p.end(), 0);
    do {
        const unsigned nmask = (type == Ambient::A) ? 1u : (1u << rank);
        for (unsigned mask = 0; mask < nmask; ++mask) {
            if (type == Ambient::D && __builtin_popcount(mask) % 2) continue;
            WeylElement w;
            w.perm = p;
            w.type = type;
            w.signs.assign(static_cast<size_t>(rank), 1);
            for (int i = 0; i < rank; ++i)
                if (mask >> i & 1u) w.signs[static_cast<size_t>(i)] = -1;
            out.push_back(std::move(w));
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<Weight> weyl_orbit(const Weight& w, int cap) {
    std::set<std::vector<HalfInt>> seen;
    for (const auto& g : weyl_group(w.ambient, w.rank(), cap)) seen.insert(g.act(w.coords));
    std::vector<Weight> out;
    for (auto& c : seen) out.emplace_back(w.ambient, c);
    return out;
}

Weight dominant_rep(const Weight& w, int* sign) {
    const size_t n = w.coords.size();
    std::vector<HalfInt> key(n);
    int s = 1;
    int negs = 0;
    for (size_t i = 0; i < n; ++i) {
        key[i] = w.coords[i];
        if (w.ambient != Ambient::A && key[i] < HalfInt(0)) {
            key[i] = -key[i];
            ++negs;
            s = -s;
        }
    }
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return key[a] > key[b]; });
    // idx[i] = source position placed at i; its sign equals that of the inverse.
    s *= perm_sign(idx);
    std::vector<HalfInt> out(n);
    for (size_t i = 0; i < n; ++i) out[i] = key[static_cast<size_t>(idx[i])];
    if (w.ambient == Ambient::D) {
        s = perm_sign(idx);
        if (negs % 2 == 1 && n > 0) {
            if (out[n - 1] != HalfInt(0)) out[n - 1] = -out[n - 1];
        }
    }
    if (sign) *sign = s;
    return Weight(w.ambient, out);
}

std::vector<std::vector<HalfInt>> positive_roots(Ambient type, int rank) {
    std::vector<std::vector<HalfInt>> out;
    const size_t n = static_cast<size_t>(rank);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            std::vector<HalfInt> a(n);
            a[i] = 1;
            a[j] = -1;
            out.push_back(a);
            if (type != Ambient::A) {
                a[j] = 1;
                out.push_back(a);
            }
        }
        if (type == Ambient::B) {
            std::vector<HalfInt> a(n);
            a[i] = 1;
            out.push_back(a);
        }
    }
    return out;
}

std::vector<HalfInt> rho(Ambient type, int rank) {
    std::vector<HalfInt> r(static_cast<size_t>(rank));
    for (int i = 0; i < rank; ++i) {
        HalfInt v(rank - 1 - i);
        if (type == Ambient::B) v += HalfInt::half();
        r[static_cast<size_t>(i)] = v;
    }
    return r;
}

FormalCharacter FormalCharacter::monomial(Ambient a, const Key& mu, std::int64_t c) {
    FormalCharacter f(a, static_cast<int>(mu.size()));
    f.add(mu, c);
    return f;
}

std::int64_t FormalCharacter::mult(const Key& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? 0 : it->second;
}

std::int64_t FormalCharacter::dimension() const {
    std::int64_t d = 0;
    for (auto& [k, v] : terms_) d += v;
    return d;
}

void FormalCharacter::add(const Key& mu, std::int64_t c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(mu, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

FormalCharacter& FormalCharacter::operator+=(const FormalCharacter& o) {
    if (terms_.empty() && rank_ == 0) {
        ambient_ = o.ambient_;
        rank_ = o.rank_;
    }
    for (auto& [k, v] : o.terms_) add(k, v);
    return *this;
}

FormalCharacter& FormalCharacter::operator-=(const FormalCharacter& o) {
    if (terms_.empty() && rank_ == 0) {
        ambient_ = o.ambient_;
        rank_ = o.rank_;
    }
    for (auto& [k, v] : o.terms_) add(k, -v);
    return *this;
}

FormalCharacter FormalCharacter::operator*(const FormalCharacter& o) const {
    FormalCharacter out(ambient_, rank_);
    Key sum(static_cast<size_t>(rank_));
    for (auto& [a, x] : terms_) {
        for (auto& [b, y] : o.terms_) {
            for (size_t i = 0; i < sum.size(); ++i) sum[i] = a[i] + b[i];
            out.add(sum, x * y);
        }
    }
    return out;
}

FormalCharacter FormalCharacter::scaled(std::int64_t c) const {
    FormalCharacter out(ambient_, rank_);
    if (c == 0) return out;
    out.terms_ = terms_;
    for (auto& [k, v] : out.terms_) v *= c;
    return out;
}

FormalCharacter FormalCharacter::shifted(const Key& by) const {
    FormalCharacter out(ambient_, rank_);
    for (auto& [k, v] : terms_) {
        Key s = k;
        for (size_t i = 0; i < s.size(); ++i) s[i] += by[i];
        out.terms_.emplace(std::move(s), v);
    }
    return out;
}

FormalCharacter FormalCharacter::with_ambient(Ambient a) const {
    FormalCharacter out = *this;
    out.ambient_ = a;
    return out;
}

FormalCharacter FormalCharacter::divide_one_minus(const Key& alpha) const {
    // Q(mu) = sum_{j>=0} P(mu + j alpha), walked down each alpha-string.
    size_t piv = 0;
    while (piv < alpha.size() && alpha[piv] == HalfInt(0)) ++piv;
    const std::int64_t sgn = alpha[piv] < HalfInt(0) ? -1 : 1;
    std::map<Key, std::map<HalfInt, std::int64_t>> lines;
    for (auto& [mu, c] : terms_) {
        HalfInt t = mu[piv] * sgn;
        Key base = mu;
        for (size_t i = 0; i < base.size(); ++i) base[i] -= HalfInt::from_doubled(alpha[i].doubled() * t.doubled() / 2);
        lines[base][t] = c;
    }
    FormalCharacter out(ambient_, rank_);
    for (auto& [base, pts] : lines) {
        std::int64_t acc = 0;
        HalfInt top = pts.rbegin()->first, bottom = pts.begin()->first;
        for (HalfInt t = top; t >= bottom; t -= HalfInt(1)) {
            auto it = pts.find(t);
            if (it != pts.end()) acc += it->second;
            if (acc != 0) {
                Key mu = base;
                for (size_t i = 0; i < mu.size(); ++i) mu[i] += HalfInt::from_doubled(alpha[i].doubled() * t.doubled() / 2);
                out.terms_.emplace(std::move(mu), acc);
            }
        }
        if (acc != 0) throw Error(Errc::InvalidArgument, "character not divisible by 1 - e^{-alpha}");
    }
    return out;
}

FormalCharacter alternating_sum(Ambient type, const std::vector<HalfInt>& x, int cap) {
    FormalCharacter out(type, static_cast<int>(x.size()));
    for (const auto& w : weyl_group(type, static_cast<int>(x.size()), cap)) out.add(w.act(x), w.sign());
    return out;
}

std::int64_t weyl_dimension(const Weight& lambda) {
    auto r = rho(lambda.ambient, lambda.rank());
    std::vector<HalfInt> lr(r.size());
    for (size_t i = 0; i < r.size(); ++i) lr[i] = lambda.coords[i] + r[i];
    __int128 num = 1, den = 1;
    for (auto& a : positive_roots(lambda.ambient, lambda.rank())) {
        num *= dot(lr, a).doubled();
        den *= dot(r, a).doubled();
        __int128 x = num < 0 ? -num : num, y = den;
        while (y) {
            __int128 t = x % y;
            x = y;
            y = t;
        }
        if (x > 1) {
            num /= x;
            den /= x;
        }
    }
    if (den != 1) throw Error(Errc::InvalidArgument, "Weyl dimension is not an integer");
    return static_cast<std::int64_t>(num);
}

FormalCharacter irr_character(const Weight& lambda, int cap) {
    check_cap(lambda.rank(), cap);
    if (!is_dominant(lambda)) throw Error(Errc::NonDominant, "not dominant: " + lambda.str());
    auto r = rho(lambda.ambient, lambda.rank());
    std::vector<HalfInt> lr = lambda.coords;
    for (size_t i = 0; i < r.size(); ++i) lr[i] += r[i];
    FormalCharacter ch = alternating_sum(lambda.ambient, lr, cap);
    for (auto& a : positive_roots(lambda.ambient, lambda.rank())) ch = ch.divide_one_minus(a);
    for (auto& x : r) x = -x;
    ch = ch.shifted(r);
    if (ch.mult(lambda.coords) != 1 || ch.dimension() != weyl_dimension(lambda))
        throw Error(Errc::InvalidArgument, "character check failed for " + lambda.str());
    return ch;
}

WeightMultiset decompose(const FormalCharacter& ch, int cap) {
    WeightMultiset out;
    FormalCharacter rest = ch;
    while (!rest.empty()) {
        auto it = rest.terms().rbegin();
        Weight top(ch.ambient(), it->first);
        std::int64_t m = it->second;
        if (!is_dominant(top)) throw Error(Errc::NonDominant, "character is not Weyl invariant at " + top.str());
        out[top] += m;
        rest -= irr_character(top, cap).scaled(m);
    }
    return out;
}

WeightMultiset tensor_decompose(const Weight& lambda, const Weight& mu, int cap) {
    if (lambda.ambient != mu.ambient || lambda.rank() != mu.rank())
        throw Error(Errc::InvalidArgument, "tensor factors live in different algebras");
    return decompose(irr_character(lambda, cap) * irr_character(mu, cap), cap);
}

std::vector<Weight> pieri_row(const Weight& beta, int k) {
    if (!beta.all_integral() || !is_dominant(Weight(Ambient::A, beta.coords)))
        throw Error(Errc::NonDominant, "pieri_row needs an integral dominant gl weight");
    std::vector<Weight> out;
    const size_t p = beta.coords.size();
    std::vector<HalfInt> cur = beta.coords;
    auto rec = [&](auto&& self, size_t i, std::int64_t left) -> void {
        if (i == p) {
            if (left == 0) out.emplace_back(Ambient::A, cur);
            return;
        }
        std::int64_t cap_i = left;
        if (i > 0) cap_i = std::min(cap_i, (beta.coords[i - 1] - beta.coords[i]).to_int());
        for (std::int64_t m = cap_i; m >= 0; --m) {
            cur[i] = beta.coords[i] + HalfInt(static_cast<int>(m));
            self(self, i + 1, left - m);
        }
        cur[i] = beta.coords[i];
    };
    rec(rec, 0, k);
    return out;
}

std::int64_t lr_coefficient(const std::vector<int>& lambda, const std::vector<int>& mu, const std::vector<int>& nu) {
    auto part = [](std::vector<int> v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
        return v;
    };
    const std::vector<int> L = part(lambda), M0 = part(mu), N = part(nu);
    auto size = [](const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); };
    if (size(L) != size(M0) + size(N)) return 0;
    std::vector<int> M = M0;
    if (M.size() > L.size()) return 0;
    M.resize(L.size(), 0);
    for (size_t i = 0; i < L.size(); ++i)
        if (M[i] > L[i]) return 0;
    // Fill rows top to bottom, each row right to left: the reading word is then
    // produced in order and the lattice condition can be checked on the fly.
    const size_t rows = L.size();
    std::vector<std::vector<int>> T(rows);
    for (size_t i = 0; i < rows; ++i) T[i].assign(static_cast<size_t>(L[i]), 0);
    std::vector<int> content(N.size() + 1, 0);
    std::int64_t count = 0;
    auto rec = [&](auto&& self, size_t r, int c) -> void {
        if (r == rows) {
            ++count;
            return;
        }
        if (c < M[r]) {
            self(self, r + 1, r + 1 < rows ? L[r + 1] - 1 : 0);
            return;
        }
        for (int v = 1; v <= static_cast<int>(N.size()); ++v) {
            if (content[static_cast<size_t>(v)] >= N[static_cast<size_t>(v - 1)]) continue;
            if (v > 1 && content[static_cast<size_t>(v)] >= content[static_cast<size_t>(v - 1)]) continue;
            if (c + 1 < L[r] && v > T[r][static_cast<size_t>(c + 1)]) continue;
            if (r > 0 && c < L[r - 1]) {
                int above = c < M[r - 1] ? 0 : T[r - 1][static_cast<size_t>(c)];
                if (v <= above) continue;
            }
            T[r][static_cast<size_t>(c)] = v;
            ++content[static_cast<size_t>(v)];
            if (c == 0 || c - 1 < M[r])
                self(self, r + 1, r + 1 < rows ? L[r + 1] - 1 : 0);
            else
                self(self, r, c - 1);
            --content[static_cast<size_t>(v)];
            T[r][static_cast<size_t>(c)] = 0;
        }
    };
    rec(rec, 0, rows ? L[0] - 1 : 0);
    return count;
}

namespace {

void partitions_inside(const std::vector<int>& outer, size_t i, int maxpart, std::vector<int>& cur,
                       std::vector<std::vector<int>>& out) {
    if (i == outer.size()) {
        out.push_back(cur);
        return;
    }
    for (int v = std::min(outer[i], maxpart); v >= 0; --v) {
        cur[i] = v;
        partitions_inside(outer, i + 1, v, cur, out);
    }
    cur[i] = 0;
}

Ambient so_type(int m) { return m % 2 ? Ambient::B : Ambient::D; }

}  // namespace

WeightMultiset littlewood_branch(const std::vector<int>& lambda, int m) {
    if (m < 2) throw Error(Errc::InvalidArgument, "so(m) needs m >= 2");
    int len = 0;
    for (int x : lambda)
        if (x != 0) ++len;
    if (static_cast<int>(lambda.size()) > m) {
        for (size_t i = static_cast<size_t>(m); i < lambda.size(); ++i)
            if (lambda[i] != 0) throw Error(Errc::InvalidArgument, "partition has more than m parts");
    }
    if (2 * len > m + 1) throw Error(Errc::OutOfStableRange, "l(lambda) > (m+1)/2");
    for (size_t i = 1; i < lambda.size(); ++i)
        if (lambda[i] > lambda[i - 1] || lambda[i] < 0) throw Error(Errc::NonDominant, "not a partition");
    std::vector<int> L(lambda.begin(), lambda.begin() + len);
    const int r = m / 2;
    WeightMultiset out;
    std::vector<std::vector<int>> taus;
    std::vector<int> cur(L.size(), 0);
    partitions_inside(L, 0, L.empty() ? 0 : L[0], cur, taus);
    for (auto& tau : taus) {
        // S(p+) contributes the partitions with even rows.
        std::vector<std::vector<int>> deltas;
        std::vector<int> dc(L.size(), 0);
        partitions_inside(L, 0, L.empty() ? 0 : L[0], dc, deltas);
        std::int64_t mult = 0;
        for (auto& d : deltas) {
            bool even = std::all_of(d.begin(), d.end(), [](int x) { return x % 2 == 0; });
            if (even) mult += lr_coefficient(L, tau, d);
        }
        if (mult == 0) continue;
        int tl = 0, c2 = 0;
        for (int x : tau) {
            if (x > 0) ++tl;
            if (x > 1) ++c2;
        }
        if (tl + c2 > m) continue;  // not an O(m) label
        std::vector<HalfInt> w(static_cast<size_t>(r));
        for (int i = 0; i < r && i < static_cast<int>(tau.size()); ++i) w[static_cast<size_t>(i)] = tau[static_cast<size_t>(i)];
        out[Weight(so_type(m), w)] += mult;
        if (m % 2 == 0 && r > 0 && w.back() != HalfInt(0)) {
            w.back() = -w.back();
            out[Weight(so_type(m), w)] += mult;
        }
    }
    return out;
}

WeightMultiset branch_oracle(const std::vector<int>& lambda, int m, int cap) {
    std::vector<HalfInt> lc(static_cast<size_t>(m));
    for (size_t i = 0; i < lambda.size() && i < lc.size(); ++i) lc[i] = lambda[i];
    FormalCharacter gl = irr_character(Weight(Ambient::A, lc), cap);
    const int r = m / 2;
    FormalCharacter res(so_type(m), r);
    for (auto& [x, c] : gl.terms()) {
        std::vector<HalfInt> y(static_cast<size_t>(r));
        for (int i = 0; i < r; ++i) y[static_cast<size_t>(i)] = x[static_cast<size_t>(i)] - x[static_cast<size_t>(m - 1 - i)];
        res.add(y, c);
    }
    return decompose(res, cap);
}

WeightMultiset spin_tensor(const Weight& beta, int minus_count) {
    const Ambient amb = minus_count < 0 ? Ambient::D : Ambient::A;
    if (!is_dominant(Weight(amb, beta.coords))) throw Error(Errc::NonDominant, "not dominant: " + beta.str());
    WeightMultiset out;
    const int p = beta.rank();
    for (unsigned mask = 0; mask < (1u << p); ++mask) {
        if (minus_count >= 0 && __builtin_popcount(mask) != minus_count) continue;
        std::vector<HalfInt> c = beta.coords;
        for (int i = 0; i < p; ++i)
            c[static_cast<size_t>(i)] += (mask >> i & 1u) ? -HalfInt::half() : HalfInt::half();
        Weight w(amb, c);
        if (is_dominant(w)) out[w] += 1;
    }
    return out;
}

WeightMultiset spin_tensor_oracle(const Weight& beta, int minus_count, int cap) {
    const int p = beta.rank();
    if (minus_count < 0) {
        std::vector<HalfInt> h(static_cast<size_t>(p), HalfInt::half());
        FormalCharacter spin = irr_character(Weight(Ambient::D, h), cap);
        if (p > 0) {
            h.back() = -h.back();
            if (p > 1) spin += irr_character(Weight(Ambient::D, h), cap);
            else spin += FormalCharacter::monomial(Ambient::D, h);
        }
        return decompose(irr_character(Weight(Ambient::D, beta.coords), cap) * spin, cap);
    }
    std::vector<HalfInt> h(static_cast<size_t>(p), HalfInt::half());
    for (int i = p - minus_count; i < p; ++i) h[static_cast<size_t>(i)] = -HalfInt::half();
    return decompose(irr_character(Weight(Ambient::A, beta.coords), cap) * irr_character(Weight(Ambient::A, h), cap), cap);
}

DenominatorIdentity denominator_identity(int n, int k, int cap) {
    if (n < 2 || k < 0 || k > n - 2) throw Error(Errc::KOutOfRange, "need 0 <= k <= n-2");
    check_cap(n, cap);
    std::vector<HalfInt> lam, lamp;
    for (int x = n - k - 2; x >= 0; --x) lam.push_back(x);
    for (int x = k; x >= 0; --x) lam.push_back(HalfInt(x) + HalfInt::half());
    for (int x = n - k - 2; x >= 0; --x) lamp.push_back(HalfInt(x) + HalfInt::half());
    for (int x = k + 1; x >= 1; --x) lamp.push_back(x);
    auto desc = [](std::vector<HalfInt>& v) { std::sort(v.begin(), v.end(), std::greater<>()); };
    desc(lam);
    desc(lamp);
    DenominatorIdentity r;
    r.lambda = Weight(Ambient::D, lam);
    r.lambda_prime = Weight(Ambient::B, lamp);
    FormalCharacter prod = FormalCharacter::monomial(Ambient::D, std::vector<HalfInt>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i) {
        FormalCharacter f(Ambient::D, n);
        std::vector<HalfInt> e(static_cast<size_t>(n));
        e[static_cast<size_t>(i)] = HalfInt::half();
        f.add(e, 1);
        e[static_cast<size_t>(i)] = -HalfInt::half();
        f.add(e, -1);
        prod = prod * f;
    }
    r.lhs = alternating_sum(Ambient::D, lam, cap) * prod;
    r.rhs = alternating_sum(Ambient::B, lamp, cap).with_ambient(Ambient::D);
    r.holds = r.lhs == r.rhs;
    return r;
}

bool check_denominator_identity(int n, int k, int cap) { return denominator_identity(n, k, cap).holds; }

}  // namespace spinorb
