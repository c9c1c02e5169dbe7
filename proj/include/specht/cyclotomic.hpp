#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace specht {

using ZPoly = std::vector<mpz_class>;  // low degree first

// Phi_e, cached
const ZPoly& cyclotomic_polynomial(int e);
mpz_class cyclotomic_at_one(int e);

// prime r with e = r^a, or 0
int prime_power_base(int e);

struct CyclotomicInteger {
    int e = 2;
    ZPoly coeffs;  // length deg Phi_e

    CyclotomicInteger() = default;
    CyclotomicInteger(int e_, ZPoly c);  // reduces c modulo Phi_e
    static CyclotomicInteger zeta_power(int e, int k);
    static CyclotomicInteger constant(int e, long c);

    CyclotomicInteger operator+(const CyclotomicInteger& o) const;
    CyclotomicInteger operator-(const CyclotomicInteger& o) const;
    CyclotomicInteger operator*(const CyclotomicInteger& o) const;
    bool operator==(const CyclotomicInteger& o) const;
    bool is_zero() const;
    std::string str() const;
};

ZPoly poly_mod(ZPoly a, const ZPoly& monic);

// evaluation at zeta = 1 followed by reduction mod r; e must be a power of r
long phi_reduce(const CyclotomicInteger& x, int r);
bool in_kernel(const CyclotomicInteger& x, int r);

using CycMatrix = std::vector<std::vector<CyclotomicInteger>>;
std::vector<std::vector<long>> reduce_matrix(const CycMatrix& m, int r);

}  // namespace specht
