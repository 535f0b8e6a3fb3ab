#include "wreath/bigint.hpp"

#include "wreath/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace wreath {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(std::int64_t value) {
    if (value == 0) return;
    sign_ = value > 0 ? 1 : -1;
    // avoid overflow negating INT64_MIN
    std::uint64_t mag = value > 0 ? static_cast<std::uint64_t>(value)
                                  : ~static_cast<std::uint64_t>(value) + 1;
    while (mag != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
        mag >>= 32;
    }
}

void BigInt::normalize() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
}

int BigInt::compare_magnitude(const std::vector<std::uint32_t>& a,
                              const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(std::max(a.size(), b.size()) + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        std::uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        out.push_back(static_cast<std::uint32_t>(s & 0xffffffffu));
        carry = s >> 32;
    }
    if (carry) out.push_back(static_cast<std::uint32_t>(carry));
    return out;
}

std::vector<std::uint32_t> BigInt::sub_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow;
        if (i < b.size()) d -= b[i];
        if (d < 0) {
            d += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push_back(static_cast<std::uint32_t>(d));
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    out.sign_ = -out.sign_;
    return out;
}

BigInt BigInt::operator+(const BigInt& other) const {
    if (sign_ == 0) return other;
    if (other.sign_ == 0) return *this;
    BigInt out;
    if (sign_ == other.sign_) {
        out.sign_ = sign_;
        out.limbs_ = add_magnitude(limbs_, other.limbs_);
    } else {
        int cmp = compare_magnitude(limbs_, other.limbs_);
        if (cmp == 0) return BigInt();
        if (cmp > 0) {
            out.sign_ = sign_;
            out.limbs_ = sub_magnitude(limbs_, other.limbs_);
        } else {
            out.sign_ = other.sign_;
            out.limbs_ = sub_magnitude(other.limbs_, limbs_);
        }
    }
    return out;
}

BigInt BigInt::operator-(const BigInt& other) const { return *this + (-other); }

BigInt BigInt::operator*(const BigInt& other) const {
    if (sign_ == 0 || other.sign_ == 0) return BigInt();
    BigInt out;
    out.sign_ = sign_ * other.sign_;
    out.limbs_.assign(limbs_.size() + other.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < other.limbs_.size(); ++j) {
            std::uint64_t cur = out.limbs_[i + j] + carry +
                                static_cast<std::uint64_t>(limbs_[i]) * other.limbs_[j];
            out.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + other.limbs_.size();
        while (carry) {
            std::uint64_t cur = out.limbs_[k] + carry;
            out.limbs_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    out.normalize();
    return out;
}

BigInt& BigInt::operator+=(const BigInt& other) { return *this = *this + other; }
BigInt& BigInt::operator-=(const BigInt& other) { return *this = *this - other; }
BigInt& BigInt::operator*=(const BigInt& other) { return *this = *this * other; }

std::strong_ordering BigInt::operator<=>(const BigInt& other) const {
    if (sign_ != other.sign_) return sign_ <=> other.sign_;
    int cmp = compare_magnitude(limbs_, other.limbs_);
    if (sign_ < 0) cmp = -cmp;
    return cmp <=> 0;
}

bool BigInt::divisible_by(std::int64_t divisor) const {
    if (divisor <= 0) throw ExactnessError("divisible_by: divisor must be positive");
    if (sign_ == 0) return true;
    std::uint64_t d = static_cast<std::uint64_t>(divisor);
    unsigned __int128 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        rem = (rem << 32) | limbs_[i];
        rem %= d;
    }
    return rem == 0;
}

BigInt BigInt::divide_exact(std::int64_t divisor) const {
    if (divisor <= 0) throw ExactnessError("divide_exact: divisor must be positive");
    if (sign_ == 0) return BigInt();
    std::uint64_t d = static_cast<std::uint64_t>(divisor);
    BigInt out;
    out.sign_ = sign_;
    out.limbs_.assign(limbs_.size(), 0);
    unsigned __int128 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        unsigned __int128 cur = (rem << 32) | limbs_[i];
        out.limbs_[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
    }
    if (rem != 0) throw ExactnessError("divide_exact: division not exact");
    out.normalize();
    return out;
}

bool BigInt::fits_int64() const {
    if (limbs_.size() < 2) return true;
    if (limbs_.size() > 2) return false;
    std::uint64_t mag = (static_cast<std::uint64_t>(limbs_[1]) << 32) | limbs_[0];
    if (sign_ > 0) return mag <= 0x7fffffffffffffffull;
    return mag <= 0x8000000000000000ull;
}

std::int64_t BigInt::to_int64() const {
    if (!fits_int64()) throw ExactnessError("to_int64: value out of range");
    std::uint64_t mag = 0;
    if (limbs_.size() > 0) mag |= limbs_[0];
    if (limbs_.size() > 1) mag |= static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (sign_ < 0) return static_cast<std::int64_t>(~mag + 1);
    return static_cast<std::int64_t>(mag);
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::vector<std::uint32_t> mag = limbs_;
    std::string digits;
    while (!mag.empty()) {
        std::uint64_t rem = 0;
        for (std::size_t i = mag.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | mag[i];
            mag[i] = static_cast<std::uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!mag.empty() && mag.back() == 0) mag.pop_back();
        for (int k = 0; k < 9; ++k) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

BigInt BigInt::from_string(const std::string& text) {
    std::size_t pos = 0;
    int sign = 1;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') sign = -1;
        ++pos;
    }
    if (pos == text.size()) throw ExactnessError("from_string: empty integer");
    BigInt out;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c < '0' || c > '9') throw ExactnessError("from_string: invalid digit");
        out = out * BigInt(10) + BigInt(c - '0');
    }
    if (sign < 0) out = -out;
    return out;
}

BigInt factorial(int n) {
    BigInt out(1);
    for (int k = 2; k <= n; ++k) out *= BigInt(k);
    return out;
}

} // namespace wreath
