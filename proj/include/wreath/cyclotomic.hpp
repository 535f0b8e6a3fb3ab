#pragma once

#include "wreath/bigint.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wreath {

// Coefficients of the r-th cyclotomic polynomial, low degree first,
// monic leading coefficient included.
std::vector<std::int64_t> cyclotomic_polynomial(int r);

int euler_phi(int r);

// An element of Z[zeta_r], stored as the coefficient vector over the power
// basis 1, z, ..., z^(phi(r)-1) of Z[x]/(Phi_r(x)). All arithmetic is exact.
class CyclotomicInt {
public:
    explicit CyclotomicInt(int r);                    // zero
    CyclotomicInt(int r, std::int64_t constant);
    CyclotomicInt(int r, std::vector<BigInt> coeffs); // length phi(r)

    static CyclotomicInt root_power(int r, std::int64_t k);  // zeta_r^k

    int order() const { return r_; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool operator==(const CyclotomicInt& other) const = default;

    CyclotomicInt operator-() const;
    CyclotomicInt operator+(const CyclotomicInt& other) const;
    CyclotomicInt operator-(const CyclotomicInt& other) const;
    CyclotomicInt operator*(const CyclotomicInt& other) const;
    CyclotomicInt& operator+=(const CyclotomicInt& other);
    CyclotomicInt& operator-=(const CyclotomicInt& other);

    CyclotomicInt scaled(std::int64_t factor) const;
    CyclotomicInt conjugate() const;  // zeta |-> zeta^(r-1)

    // Succeeds iff the value is a rational integer.
    BigInt as_integer() const;
    // Succeeds iff every coefficient is divisible by divisor (> 0).
    CyclotomicInt divide_exact(std::int64_t divisor) const;

    // "c0 + c1*z + c2*z^2 + ...", all phi(r) coefficients listed
    std::string to_string() const;

private:
    int r_ = 1;
    std::vector<BigInt> coeffs_;
};

} // namespace wreath
