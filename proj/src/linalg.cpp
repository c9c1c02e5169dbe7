#include "specht/linalg.hpp"

#include <numeric>

namespace specht {

bool is_prime(uint64_t p) {
    if (p < 2) return false;
    for (uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

RingSpec RingSpec::parse(const std::string& s) {
    if (s == "Q" || s == "QQ" || s == "0") return {RingKind::rationals, 0};
    if (s == "Z" || s == "ZZ") return {RingKind::integers, 0};
    std::string digits;
    if (s.rfind("GF(", 0) == 0 && s.back() == ')')
        digits = s.substr(3, s.size() - 4);
    else if (s.size() > 1 && (s[0] == 'F' || s[0] == 'p'))
        digits = s.substr(1);
    else
        digits = s;
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("unknown ring '" + s + "'");
    unsigned long p = std::stoul(digits);
    if (!is_prime(p) || p > 0xFFFFFFFFul) throw std::invalid_argument("ring characteristic must be a prime: " + s);
    return {RingKind::prime_field, static_cast<uint32_t>(p)};
}

std::string RingSpec::str() const {
    switch (kind) {
        case RingKind::rationals: return "Q";
        case RingKind::integers: return "Z";
        default: return "F" + std::to_string(p);
    }
}

namespace {

using ZRow = std::vector<std::pair<int, mpz_class>>;

void make_primitive(ZRow& r) {
    mpz_class g = 0;
    for (auto& [c, v] : r) g = gcd(g, v);
    if (g > 1)
        for (auto& [c, v] : r) v /= g;
    if (!r.empty() && r.front().second < 0)
        for (auto& [c, v] : r) v = -v;
}

// a*x - b*y
ZRow combine(const mpz_class& a, const ZRow& x, const mpz_class& b, const ZRow& y) {
    ZRow out;
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.emplace_back(x[i].first, a * x[i].second);
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.emplace_back(y[j].first, -b * y[j].second);
            ++j;
        } else {
            mpz_class v = a * x[i].second - b * y[j].second;
            if (v != 0) out.emplace_back(x[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

ZRow integral(const SparseRow<mpq_class>& r) {
    mpz_class l = 1;
    for (const auto& [c, v] : r)
        if (v != 0) l = lcm(l, v.get_den());
    ZRow out;
    for (const auto& [c, v] : r) {
        if (v == 0) continue;
        mpq_class s = v * l;
        out.emplace_back(c, s.get_num());
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

mpz_class entry(const ZRow& r, int col) {
    auto it = std::lower_bound(r.begin(), r.end(), col, [](const auto& p, int c) { return p.first < c; });
    return (it != r.end() && it->first == col) ? it->second : mpz_class(0);
}

std::map<int, ZRow> echelon_q(const std::vector<SparseRow<mpq_class>>& rows) {
    std::map<int, ZRow> piv;
    for (const auto& raw : rows) {
        ZRow r = integral(raw);
        make_primitive(r);
        while (!r.empty()) {
            int lead = r.front().first;
            auto it = piv.find(lead);
            if (it == piv.end()) {
                piv.emplace(lead, std::move(r));
                break;
            }
            mpz_class a = it->second.front().second, b = r.front().second;
            r = combine(a, r, b, it->second);
            make_primitive(r);
        }
    }
    return piv;
}

template <class T>
using FRow = SparseRow<T>;

FRow<uint32_t> axpy_mod(const ModPCtx& k, const FRow<uint32_t>& x, uint32_t f, const FRow<uint32_t>& y) {
    // x - f*y
    FRow<uint32_t> out;
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.push_back(x[i++]);
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.emplace_back(y[j].first, k.neg(k.mul(f, y[j].second)));
            ++j;
        } else {
            uint32_t v = k.sub(x[i].second, k.mul(f, y[j].second));
            if (v) out.emplace_back(x[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

std::map<int, FRow<uint32_t>> echelon_p(const ModPCtx& k, const std::vector<SparseRow<uint32_t>>& rows) {
    std::map<int, FRow<uint32_t>> piv;
    for (const auto& raw : rows) {
        FRow<uint32_t> r;
        for (const auto& [c, v] : raw)
            if (v % k.p) r.emplace_back(c, v % k.p);
        std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        while (!r.empty()) {
            int lead = r.front().first;
            auto it = piv.find(lead);
            if (it == piv.end()) {
                uint32_t inv = k.inv(r.front().second);
                for (auto& [c, v] : r) v = k.mul(v, inv);
                piv.emplace(lead, std::move(r));
                break;
            }
            r = axpy_mod(k, r, r.front().second, it->second);
        }
    }
    return piv;
}

}  // namespace

std::vector<std::vector<mpq_class>> nullspace(const RationalCtx&, const std::vector<SparseRow<mpq_class>>& rows,
                                              int ncols) {
    auto piv = echelon_q(rows);
    // back substitution to reduced form, highest pivot first
    for (auto it = piv.rbegin(); it != piv.rend(); ++it) {
        int c = it->first;
        const ZRow& pr = it->second;
        for (auto& [c2, r] : piv) {
            if (c2 >= c) break;
            mpz_class v = entry(r, c);
            if (v == 0) continue;
            mpz_class a = pr.front().second;
            r = combine(a, r, v, pr);
            make_primitive(r);
        }
    }
    std::vector<std::vector<mpq_class>> basis;
    for (int f = 0; f < ncols; ++f) {
        if (piv.count(f)) continue;
        std::vector<mpq_class> x(ncols, 0);
        x[f] = 1;
        for (const auto& [c, r] : piv) {
            mpz_class v = entry(r, f);
            if (v != 0) x[c] = mpq_class(-v, r.front().second);
        }
        for (auto& q : x) q.canonicalize();
        mpz_class l = 1, g = 0;
        for (const auto& q : x)
            if (q != 0) l = lcm(l, q.get_den());
        for (auto& q : x) {
            q *= l;
            if (q != 0) g = gcd(g, q.get_num());
        }
        int lead_sign = 0;
        for (const auto& q : x)
            if (q != 0) {
                lead_sign = sgn(q);
                break;
            }
        for (auto& q : x) {
            q /= g;
            if (lead_sign < 0) q = -q;
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<std::vector<uint32_t>> nullspace(const ModPCtx& k, const std::vector<SparseRow<uint32_t>>& rows,
                                             int ncols) {
    auto piv = echelon_p(k, rows);
    for (auto it = piv.rbegin(); it != piv.rend(); ++it) {
        int c = it->first;
        const auto& pr = it->second;
        for (auto& [c2, r] : piv) {
            if (c2 >= c) break;
            auto pos = std::lower_bound(r.begin(), r.end(), c, [](const auto& p, int cc) { return p.first < cc; });
            if (pos == r.end() || pos->first != c) continue;
            r = axpy_mod(k, r, pos->second, pr);
        }
    }
    std::vector<std::vector<uint32_t>> basis;
    for (int f = 0; f < ncols; ++f) {
        if (piv.count(f)) continue;
        std::vector<uint32_t> x(ncols, 0);
        x[f] = 1;
        for (const auto& [c, r] : piv) {
            auto pos = std::lower_bound(r.begin(), r.end(), f, [](const auto& p, int cc) { return p.first < cc; });
            if (pos != r.end() && pos->first == f) x[c] = k.neg(pos->second);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<std::vector<int64_t>> nullspace(const Int64Ctx& k, const std::vector<SparseRow<int64_t>>& rows,
                                            int ncols) {
    std::vector<SparseRow<mpq_class>> q;
    for (const auto& r : rows) {
        SparseRow<mpq_class> s;
        for (const auto& [c, v] : r) s.emplace_back(c, mpq_class(mpz_class(static_cast<long>(v))));
        q.push_back(std::move(s));
    }
    std::vector<std::vector<int64_t>> out;
    for (const auto& v : nullspace(RationalCtx{}, q, ncols)) {
        std::vector<int64_t> w;
        for (const auto& x : v) w.push_back(k.from_mpz(x.get_num()));
        out.push_back(std::move(w));
    }
    return out;
}

int matrix_rank(const RationalCtx&, const std::vector<SparseRow<mpq_class>>& rows) {
    return static_cast<int>(echelon_q(rows).size());
}

int matrix_rank(const ModPCtx& k, const std::vector<SparseRow<uint32_t>>& rows) {
    return static_cast<int>(echelon_p(k, rows).size());
}

}  // namespace specht
