#include "specht/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace specht {

namespace {

void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// exact quotient of a by monic b
ZPoly poly_div_exact(ZPoly a, const ZPoly& b) {
    trim(a);
    int db = static_cast<int>(b.size()) - 1;
    if (static_cast<int>(a.size()) - 1 < db) return {};
    ZPoly q(a.size() - db, 0);
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        mpz_class c = a[i];
        if (c == 0) continue;
        q[i - db] = c;
        for (int j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    trim(a);
    if (!a.empty()) throw std::logic_error("cyclotomic: inexact division");
    return q;
}

}  // namespace

ZPoly poly_mod(ZPoly a, const ZPoly& monic) {
    int d = static_cast<int>(monic.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= d; --i) {
        mpz_class c = a[i];
        if (c == 0) continue;
        for (int j = 0; j <= d; ++j) a[i - d + j] -= c * monic[j];
    }
    a.resize(d, 0);
    return a;
}

const ZPoly& cyclotomic_polynomial(int e) {
    static std::mutex mu;
    static std::map<int, ZPoly> cache;
    if (e < 1) throw std::invalid_argument("cyclotomic polynomial needs e >= 1");
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(e);
        if (it != cache.end()) return it->second;
    }
    ZPoly p(e + 1, 0);
    p[0] = -1;
    p[e] = 1;
    for (int d = 1; d < e; ++d)
        if (e % d == 0) p = poly_div_exact(p, cyclotomic_polynomial(d));
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(e, std::move(p)).first->second;
}

mpz_class cyclotomic_at_one(int e) {
    mpz_class s = 0;
    for (const auto& c : cyclotomic_polynomial(e)) s += c;
    return s;
}

int prime_power_base(int e) {
    if (e < 2) return 0;
    int r = 0;
    for (int d = 2; d <= e; ++d)
        if (e % d == 0) {
            r = d;
            break;
        }
    int x = e;
    while (x % r == 0) x /= r;
    return x == 1 ? r : 0;
}

CyclotomicInteger::CyclotomicInteger(int e_, ZPoly c) : e(e_) {
    if (e < 2) throw std::invalid_argument("cyclotomic integers need e >= 2");
    coeffs = poly_mod(std::move(c), cyclotomic_polynomial(e));
}

CyclotomicInteger CyclotomicInteger::zeta_power(int e, int k) {
    k %= e;
    if (k < 0) k += e;
    ZPoly c(k + 1, 0);
    c[k] = 1;
    return CyclotomicInteger(e, c);
}

CyclotomicInteger CyclotomicInteger::constant(int e, long v) { return CyclotomicInteger(e, ZPoly{mpz_class(v)}); }

CyclotomicInteger CyclotomicInteger::operator+(const CyclotomicInteger& o) const {
    if (e != o.e) throw std::invalid_argument("cyclotomic: mismatched e");
    ZPoly c = coeffs;
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs[i];
    CyclotomicInteger r;
    r.e = e;
    r.coeffs = std::move(c);
    return r;
}

CyclotomicInteger CyclotomicInteger::operator-(const CyclotomicInteger& o) const {
    if (e != o.e) throw std::invalid_argument("cyclotomic: mismatched e");
    ZPoly c = coeffs;
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.coeffs[i];
    CyclotomicInteger r;
    r.e = e;
    r.coeffs = std::move(c);
    return r;
}

CyclotomicInteger CyclotomicInteger::operator*(const CyclotomicInteger& o) const {
    if (e != o.e) throw std::invalid_argument("cyclotomic: mismatched e");
    ZPoly c(coeffs.size() + o.coeffs.size(), 0);
    for (size_t i = 0; i < coeffs.size(); ++i)
        for (size_t j = 0; j < o.coeffs.size(); ++j) c[i + j] += coeffs[i] * o.coeffs[j];
    return CyclotomicInteger(e, c);
}

bool CyclotomicInteger::operator==(const CyclotomicInteger& o) const { return e == o.e && coeffs == o.coeffs; }

bool CyclotomicInteger::is_zero() const {
    for (const auto& c : coeffs)
        if (c != 0) return false;
    return true;
}

std::string CyclotomicInteger::str() const {
    std::string out;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        if (!out.empty()) out += " + ";
        out += coeffs[i].get_str();
        if (i == 1) out += "z";
        if (i > 1) out += "z^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

long phi_reduce(const CyclotomicInteger& x, int r) {
    if (prime_power_base(x.e) != r) throw std::invalid_argument("phi_reduce: e is not a power of r");
    mpz_class s = 0;
    for (const auto& c : x.coeffs) s += c;
    mpz_class m = s % r;
    if (m < 0) m += r;
    return m.get_si();
}

bool in_kernel(const CyclotomicInteger& x, int r) { return phi_reduce(x, r) == 0; }

std::vector<std::vector<long>> reduce_matrix(const CycMatrix& m, int r) {
    std::vector<std::vector<long>> out;
    for (const auto& row : m) {
        std::vector<long> o;
        for (const auto& x : row) o.push_back(phi_reduce(x, r));
        out.push_back(std::move(o));
    }
    return out;
}

}  // namespace specht
