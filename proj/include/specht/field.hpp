#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace specht {

enum class RingKind { rationals, prime_field, integers };

struct RingSpec {
    RingKind kind = RingKind::rationals;
    uint32_t p = 0;

    static RingSpec parse(const std::string& s);  // "Q", "F2", "GF(3)", "Z"
    std::string str() const;
    bool operator==(const RingSpec&) const = default;
};

bool is_prime(uint64_t p);

struct RationalCtx {
    using T = mpq_class;
    T zero() const { return T(0); }
    T one() const { return T(1); }
    T from_int(long v) const { return T(v); }
    T from_mpz(const mpz_class& v) const { return T(v); }
    bool is_zero(const T& a) const { return sgn(a) == 0; }
    T add(const T& a, const T& b) const { return a + b; }
    T sub(const T& a, const T& b) const { return a - b; }
    T mul(const T& a, const T& b) const { return a * b; }
    T neg(const T& a) const { return -a; }
    T inv(const T& a) const {
        if (is_zero(a)) throw std::domain_error("division by zero");
        return 1 / a;
    }
    std::string str(const T& a) const { return a.get_str(); }
    T parse(const std::string& s) const {
        T v(s);
        v.canonicalize();
        return v;
    }
    RingSpec spec() const { return {RingKind::rationals, 0}; }
};

struct ModPCtx {
    using T = uint32_t;
    uint32_t p = 2;

    ModPCtx() = default;
    explicit ModPCtx(uint32_t prime) : p(prime) {
        if (!is_prime(prime)) throw std::invalid_argument("modulus must be prime");
    }
    T zero() const { return 0; }
    T one() const { return 1 % p; }
    T from_int(long v) const {
        long r = v % static_cast<long>(p);
        return static_cast<T>(r < 0 ? r + p : r);
    }
    T from_mpz(const mpz_class& v) const {
        mpz_class r = v % p;
        if (r < 0) r += p;
        return static_cast<T>(r.get_ui());
    }
    bool is_zero(T a) const { return a == 0; }
    T add(T a, T b) const { return static_cast<T>((uint64_t(a) + b) % p); }
    T sub(T a, T b) const { return static_cast<T>((uint64_t(a) + p - b) % p); }
    T mul(T a, T b) const { return static_cast<T>((uint64_t(a) * b) % p); }
    T neg(T a) const { return a == 0 ? 0 : p - a; }
    T inv(T a) const {
        if (a == 0) throw std::domain_error("division by zero");
        uint64_t r = 1, b = a, ex = p - 2;
        while (ex) {
            if (ex & 1) r = r * b % p;
            b = b * b % p;
            ex >>= 1;
        }
        return static_cast<T>(r);
    }
    std::string str(T a) const { return std::to_string(a) + " mod " + std::to_string(p); }
    T parse(const std::string& s) const { return from_int(std::stol(s)); }
    RingSpec spec() const { return {RingKind::prime_field, p}; }
};

// machine integers, overflow reported as std::overflow_error
struct Int64Ctx {
    using T = int64_t;
    T zero() const { return 0; }
    T one() const { return 1; }
    T from_int(long v) const { return v; }
    T from_mpz(const mpz_class& v) const {
        if (!v.fits_slong_p()) throw std::overflow_error("integer coefficient overflow");
        return v.get_si();
    }
    bool is_zero(T a) const { return a == 0; }
    T add(T a, T b) const {
        T r;
        if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer coefficient overflow");
        return r;
    }
    T sub(T a, T b) const {
        T r;
        if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer coefficient overflow");
        return r;
    }
    T mul(T a, T b) const {
        T r;
        if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer coefficient overflow");
        return r;
    }
    T neg(T a) const { return sub(0, a); }
    T inv(T a) const {
        if (a == 1 || a == -1) return a;
        throw std::domain_error("non-unit in integer ring");
    }
    std::string str(T a) const { return std::to_string(a); }
    T parse(const std::string& s) const { return std::stoll(s); }
    RingSpec spec() const { return {RingKind::integers, 0}; }
};

}  // namespace specht
