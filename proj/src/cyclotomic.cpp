#include "wreath/cyclotomic.hpp"

#include "wreath/errors.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace wreath {

namespace {

// quotient of exact division a / b over Z, b monic
std::vector<std::int64_t> poly_divide_exact(std::vector<std::int64_t> num,
                                            const std::vector<std::int64_t>& den) {
    if (den.empty() || den.back() != 1)
        throw std::invalid_argument("poly_divide_exact: divisor must be monic");
    if (num.size() < den.size()) throw std::invalid_argument("poly_divide_exact: degree");
    std::vector<std::int64_t> quot(num.size() - den.size() + 1, 0);
    for (std::size_t k = quot.size(); k-- > 0;) {
        std::int64_t c = num[k + den.size() - 1];
        quot[k] = c;
        if (c != 0) {
            for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
        }
    }
    for (std::int64_t c : num)
        if (c != 0) throw std::invalid_argument("poly_divide_exact: not exact");
    return quot;
}

std::vector<std::int64_t> poly_multiply(const std::vector<std::int64_t>& a,
                                        const std::vector<std::int64_t>& b) {
    std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

struct CycloContext {
    int r = 1;
    int phi = 1;
    std::vector<std::int64_t> modulus;                 // Phi_r, monic
    std::vector<std::vector<std::int64_t>> powers;     // x^k mod Phi_r, k = 0..r-1
};

// reduce an int64 polynomial mod the monic modulus, in place
void reduce_small(std::vector<std::int64_t>& p, const std::vector<std::int64_t>& modulus) {
    std::size_t deg_mod = modulus.size() - 1;
    for (std::size_t i = p.size(); i-- > deg_mod;) {
        std::int64_t c = p[i];
        if (c == 0) continue;
        p[i] = 0;
        for (std::size_t j = 0; j < deg_mod; ++j) p[i - deg_mod + j] -= c * modulus[j];
    }
    p.resize(deg_mod, 0);
}

const CycloContext& context(int r) {
    static std::map<int, CycloContext> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(r);
    if (it != cache.end()) return it->second;

    CycloContext ctx;
    ctx.r = r;
    ctx.modulus = cyclotomic_polynomial(r);
    ctx.phi = static_cast<int>(ctx.modulus.size()) - 1;
    for (int k = 0; k < r; ++k) {
        std::vector<std::int64_t> p(static_cast<std::size_t>(std::max(k + 1, ctx.phi)), 0);
        p[k] = 1;
        reduce_small(p, ctx.modulus);
        ctx.powers.push_back(std::move(p));
    }
    return cache.emplace(r, std::move(ctx)).first->second;
}

} // namespace

std::vector<std::int64_t> cyclotomic_polynomial(int r) {
    if (r < 1) throw std::invalid_argument("cyclotomic_polynomial: r must be >= 1");
    if (r > 1000) throw LimitError("cyclotomic_polynomial: r too large");
    // x^r - 1 divided by the product of Phi_d over proper divisors d of r
    std::vector<std::int64_t> num(r + 1, 0);
    num[0] = -1;
    num[r] = 1;
    std::vector<std::int64_t> den{1};
    for (int d = 1; d < r; ++d) {
        if (r % d == 0) den = poly_multiply(den, cyclotomic_polynomial(d));
    }
    return poly_divide_exact(std::move(num), den);
}

int euler_phi(int r) { return static_cast<int>(cyclotomic_polynomial(r).size()) - 1; }

CyclotomicInt::CyclotomicInt(int r) : r_(r), coeffs_(context(r).phi) {}

CyclotomicInt::CyclotomicInt(int r, std::int64_t constant) : CyclotomicInt(r) {
    coeffs_[0] = BigInt(constant);
}

CyclotomicInt::CyclotomicInt(int r, std::vector<BigInt> coeffs) : r_(r), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != static_cast<std::size_t>(context(r).phi))
        throw std::invalid_argument("CyclotomicInt: coefficient vector has wrong length");
}

CyclotomicInt CyclotomicInt::root_power(int r, std::int64_t k) {
    const CycloContext& ctx = context(r);
    std::int64_t e = ((k % r) + r) % r;
    CyclotomicInt out(r);
    const auto& p = ctx.powers[static_cast<std::size_t>(e)];
    for (int j = 0; j < ctx.phi; ++j) out.coeffs_[j] = BigInt(p[j]);
    return out;
}

bool CyclotomicInt::is_zero() const {
    for (const BigInt& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

CyclotomicInt CyclotomicInt::operator-() const {
    CyclotomicInt out(r_);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) out.coeffs_[j] = -coeffs_[j];
    return out;
}

CyclotomicInt CyclotomicInt::operator+(const CyclotomicInt& other) const {
    if (r_ != other.r_) throw std::invalid_argument("CyclotomicInt: mixed orders");
    CyclotomicInt out(r_);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) out.coeffs_[j] = coeffs_[j] + other.coeffs_[j];
    return out;
}

CyclotomicInt CyclotomicInt::operator-(const CyclotomicInt& other) const {
    return *this + (-other);
}

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& other) const {
    if (r_ != other.r_) throw std::invalid_argument("CyclotomicInt: mixed orders");
    const CycloContext& ctx = context(r_);
    std::size_t phi = static_cast<std::size_t>(ctx.phi);
    std::vector<BigInt> prod(2 * phi - 1);
    for (std::size_t i = 0; i < phi; ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < phi; ++j) {
            if (other.coeffs_[j].is_zero()) continue;
            prod[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    // reduce modulo the monic Phi_r
    for (std::size_t i = prod.size(); i-- > phi;) {
        BigInt c = prod[i];
        if (c.is_zero()) continue;
        prod[i] = BigInt();
        for (std::size_t j = 0; j < phi; ++j)
            prod[i - phi + j] -= c * BigInt(ctx.modulus[j]);
    }
    prod.resize(phi);
    return CyclotomicInt(r_, std::move(prod));
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& other) {
    if (r_ != other.r_) throw std::invalid_argument("CyclotomicInt: mixed orders");
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
    return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& other) {
    if (r_ != other.r_) throw std::invalid_argument("CyclotomicInt: mixed orders");
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= other.coeffs_[j];
    return *this;
}

CyclotomicInt CyclotomicInt::scaled(std::int64_t factor) const {
    CyclotomicInt out(r_);
    BigInt f(factor);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) out.coeffs_[j] = coeffs_[j] * f;
    return out;
}

CyclotomicInt CyclotomicInt::conjugate() const {
    CyclotomicInt out(r_);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j].is_zero()) continue;
        std::int64_t e = (static_cast<std::int64_t>(r_ - 1) * static_cast<std::int64_t>(j)) % r_;
        CyclotomicInt term = root_power(r_, e);
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            out.coeffs_[k] += term.coeffs_[k] * coeffs_[j];
    }
    return out;
}

BigInt CyclotomicInt::as_integer() const {
    for (std::size_t j = 1; j < coeffs_.size(); ++j)
        if (!coeffs_[j].is_zero())
            throw ExactnessError("as_integer: value is not a rational integer: " + to_string());
    return coeffs_[0];
}

CyclotomicInt CyclotomicInt::divide_exact(std::int64_t divisor) const {
    CyclotomicInt out(r_);
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        out.coeffs_[j] = coeffs_[j].divide_exact(divisor);
    return out;
}

std::string CyclotomicInt::to_string() const {
    std::string out = coeffs_[0].to_string();
    for (std::size_t j = 1; j < coeffs_.size(); ++j) {
        out += " + " + coeffs_[j].to_string() + "*z";
        if (j > 1) out += "^" + std::to_string(j);
    }
    return out;
}

} // namespace wreath
