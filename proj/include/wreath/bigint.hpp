#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace wreath {

// Signed arbitrary-precision integer, sign + base-2^32 magnitude.
// Provides exactly what exact character arithmetic needs: ring operations,
// comparison, exact division by a machine integer, decimal conversion.
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t value);

    static BigInt from_string(const std::string& text);

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt operator+(const BigInt& other) const;
    BigInt operator-(const BigInt& other) const;
    BigInt operator*(const BigInt& other) const;
    BigInt& operator+=(const BigInt& other);
    BigInt& operator-=(const BigInt& other);
    BigInt& operator*=(const BigInt& other);

    bool operator==(const BigInt& other) const = default;
    std::strong_ordering operator<=>(const BigInt& other) const;

    bool divisible_by(std::int64_t divisor) const;
    // Throws ExactnessError unless divisor (> 0) divides *this exactly.
    BigInt divide_exact(std::int64_t divisor) const;

    bool fits_int64() const;
    std::int64_t to_int64() const;  // throws ExactnessError if out of range

    std::string to_string() const;

private:
    // limbs_ little-endian, no trailing zero limb; empty iff sign_ == 0
    int sign_ = 0;
    std::vector<std::uint32_t> limbs_;

    void normalize();
    static int compare_magnitude(const std::vector<std::uint32_t>& a,
                                 const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_magnitude(const std::vector<std::uint32_t>& a,
                                                    const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_magnitude(const std::vector<std::uint32_t>& a,
                                                    const std::vector<std::uint32_t>& b);
};

BigInt factorial(int n);

} // namespace wreath
