#include "spinorb/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace spinorb {

const char* numeral_name(Numeral n) {
    switch (n) {
        case Numeral::None: return "";
        case Numeral::I: return "I";
        case Numeral::II: return "II";
    }
    return "";
}

bool SignedDiagram::is_complex() const {
    for (const auto& [k, c] : rows)
        if (k.second == 0) return true;
    return false;
}

int SignedDiagram::count(int len, int sign) const {
    auto it = rows.find({len, sign});
    return it == rows.end() ? 0 : it->second;
}

void SignedDiagram::add_rows(int len, int sign, int n) {
    if (len <= 0 || n < 0) throw Error(Errc::Parse, "row length and count must be positive");
    if (n == 0) return;
    rows[{len, sign}] += n;
}

std::pair<int, int> SignedDiagram::signature() const {
    int a = 0, b = 0;
    for (const auto& [k, c] : rows) {
        auto [len, sign] = k;
        if (sign == 0) {
            a += len * c;
            continue;
        }
        int same = (len + 1) / 2, other = len / 2;
        if (sign > 0) {
            a += same * c;
            b += other * c;
        } else {
            b += same * c;
            a += other * c;
        }
    }
    return {a, b};
}

int SignedDiagram::size() const {
    auto [a, b] = signature();
    return a + b;
}

std::vector<int> SignedDiagram::shape() const {
    std::vector<int> out;
    for (const auto& [k, c] : rows)
        for (int i = 0; i < c; ++i) out.push_back(k.first);
    std::sort(out.rbegin(), out.rend());
    return out;
}

bool SignedDiagram::is_valid() const {
    bool cx = is_complex();
    for (const auto& [k, c] : rows)
        if ((k.second == 0) != cx) return false;
    for (const auto& [k, c] : rows) {
        if (k.first % 2) continue;
        if (cx && c % 2) return false;
        if (!cx && count(k.first, 1) != count(k.first, -1)) return false;
    }
    return true;
}

std::string SignedDiagram::str() const {
    std::vector<int> lens;
    for (const auto& [k, c] : rows) lens.push_back(k.first);
    std::sort(lens.rbegin(), lens.rend());
    lens.erase(std::unique(lens.begin(), lens.end()), lens.end());
    std::vector<std::string> toks;
    auto tok = [](int len, const std::string& sg, int c) {
        std::string t = std::to_string(len) + sg;
        if (c > 1) t += (sg.empty() ? "^" : ",") + std::to_string(c);
        return t;
    };
    for (int len : lens) {
        if (is_complex()) {
            toks.push_back(tok(len, "", count(len, 0)));
            continue;
        }
        int p = count(len, 1), m = count(len, -1);
        if (len % 2 == 0 && p == m) {
            toks.push_back(std::to_string(len) + "^" + std::to_string(p + m));
            continue;
        }
        std::vector<std::pair<int, int>> parts;  // (count, sign order)
        if (p) parts.push_back({p, 0});
        if (m) parts.push_back({m, 1});
        std::sort(parts.begin(), parts.end());
        for (auto [c, s] : parts) toks.push_back(tok(len, s == 0 ? "+" : "-", c));
    }
    std::string out = "[";
    for (std::size_t i = 0; i < toks.size(); ++i) out += (i ? " " : "") + toks[i];
    return out + "]" + numeral_name(numeral);
}

SignedDiagram SignedDiagram::parse(const std::string& text) {
    auto lb = text.find('['), rb = text.find(']');
    if (lb == std::string::npos || rb == std::string::npos || rb < lb) throw Error(Errc::Parse, "diagram needs [ ]");
    std::string body = text.substr(lb + 1, rb - lb - 1), tail = text.substr(rb + 1);
    while (!tail.empty() && std::isspace(static_cast<unsigned char>(tail.back()))) tail.pop_back();
    while (!tail.empty() && std::isspace(static_cast<unsigned char>(tail.front()))) tail.erase(tail.begin());
    SignedDiagram d;
    if (tail == "I") d.numeral = Numeral::I;
    else if (tail == "II") d.numeral = Numeral::II;
    else if (!tail.empty()) throw Error(Errc::Parse, "bad numeral '" + tail + "'");

    struct Tok { int len; int sign; int count; };
    std::vector<Tok> toks;
    std::size_t i = 0;
    auto num = [&]() {
        std::size_t st = i;
        while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) ++i;
        if (st == i) throw Error(Errc::Parse, "expected number in '" + body + "'");
        return std::stoi(body.substr(st, i - st));
    };
    bool any_sign = false;
    while (true) {
        while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
        if (i >= body.size()) break;
        Tok t{num(), 0, 1};
        if (i < body.size() && (body[i] == '+' || body[i] == '-')) {
            t.sign = body[i] == '+' ? 1 : -1;
            any_sign = true;
            ++i;
            if (i < body.size() && body[i] == ',') {
                ++i;
                t.count = num();
            }
        } else if (i < body.size() && body[i] == '^') {
            ++i;
            t.count = num();
        }
        if (i < body.size() && !std::isspace(static_cast<unsigned char>(body[i])))
            throw Error(Errc::Parse, "unexpected character in '" + body + "'");
        toks.push_back(t);
    }
    if (toks.empty()) throw Error(Errc::Parse, "empty diagram");
    for (const Tok& t : toks) {
        if (t.count <= 0) throw Error(Errc::Parse, "row count must be positive");
        if (!any_sign || t.sign != 0) {
            d.add_rows(t.len, t.sign, t.count);
            continue;
        }
        if (t.len % 2 || t.count % 2) throw Error(Errc::Parse, "unsigned rows in a signed diagram must be even and paired");
        d.add_rows(t.len, 1, t.count / 2);
        d.add_rows(t.len, -1, t.count / 2);
    }
    return d;
}

SignedDiagram SignedDiagram::complex_from(const std::vector<int>& parts, Numeral n) {
    SignedDiagram d;
    for (int p : parts) d.add_rows(p, 0, 1);
    d.numeral = n;
    return d;
}

SignedDiagram apply_outer(OuterAut aut, const SignedDiagram& d) {
    SignedDiagram r = d;
    bool zeta = aut == OuterAut::Zeta || aut == OuterAut::ZetaEta;
    bool eta = aut == OuterAut::Eta || aut == OuterAut::ZetaEta;
    if (eta) {
        r.rows.clear();
        for (const auto& [k, c] : d.rows) r.rows[{k.first, -k.second}] = c;
    }
    if (zeta && r.numeral != Numeral::None) r.numeral = r.numeral == Numeral::I ? Numeral::II : Numeral::I;
    return r;
}

std::vector<std::vector<int>> orthogonal_partitions(int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int maxp) {
        if (left == 0) {
            std::map<int, int> mult;
            for (int p : cur) ++mult[p];
            for (auto [p, c] : mult)
                if (p % 2 == 0 && c % 2) return;
            out.push_back(cur);
            return;
        }
        for (int p = std::min(left, maxp); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(m, m);
    return out;
}

}  // namespace spinorb
