#include "hsurf/field.hpp"

#include <charconv>

namespace hsurf {

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return (a * b) % m;  // operands < 2^31, product < 2^62
}

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t acc = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) acc = mulmod_u64(acc, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return acc;
}

} // namespace

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t q : {2u, 3u, 5u, 7u}) {
        if (n % q == 0) return n == q;
    }
    // Miller-Rabin with bases 2,3,5,7 is deterministic below 3,215,031,751,
    // which covers the whole 2 < p < 2^31 range.
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(uint32_t p) {
    if (p <= 2) throw FieldError("prime field modulus must satisfy 2 < p, got " + std::to_string(p));
    if (p >= (1u << 31)) throw FieldError("prime field modulus must be < 2^31, got " + std::to_string(p));
    if (!is_prime_u32(p)) throw FieldError("modulus " + std::to_string(p) + " is not prime");
    return FieldSpec(FieldKind::Prime, p);
}

std::string FieldSpec::to_string() const {
    return is_rationals() ? "Q" : "F" + std::to_string(p_);
}

FieldSpec FieldSpec::parse(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t == "Q" || t == "q") return rationals();
    if (!t.empty() && (t[0] == 'F' || t[0] == 'f')) {
        std::string digits = t.substr(1);
        if (!digits.empty() && (digits[0] == 'p' || digits[0] == 'P')) digits = digits.substr(1);
        uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec == std::errc() && ptr == digits.data() + digits.size() && p < (1ull << 32))
            return prime(static_cast<uint32_t>(p));
    }
    throw FieldError("cannot parse field spec '" + text + "' (expected Q or F<p>)");
}

FieldElement::FieldElement(const FieldSpec& field, long value) : field_(field), q_(0), r_(0) {
    if (field.is_rationals()) {
        q_ = value;
    } else {
        long m = value % static_cast<long>(field.p());
        if (m < 0) m += field.p();
        r_ = static_cast<uint32_t>(m);
    }
}

FieldElement::FieldElement(const FieldSpec& field, const mpz_class& value) : field_(field), q_(0), r_(0) {
    if (field.is_rationals()) {
        q_ = value;
    } else {
        mpz_class m = value % field.p();
        if (m < 0) m += field.p();
        r_ = static_cast<uint32_t>(m.get_ui());
    }
}

FieldElement::FieldElement(const FieldSpec& field, const mpq_class& value) : field_(field), q_(0), r_(0) {
    if (field.is_rationals()) {
        q_ = value;
        q_.canonicalize();
    } else {
        mpz_class den = value.get_den() % field.p();
        if (den < 0) den += field.p();
        FieldElement d(field, den);
        if (d.is_zero()) throw DivisionError("denominator not invertible mod " + std::to_string(field.p()));
        FieldElement n(field, mpz_class(value.get_num()));
        *this = n * d.inverse();
    }
}

FieldElement FieldElement::from_string(const FieldSpec& f, const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return FieldElement(f, mpz_class(text));
        mpz_class num(text.substr(0, slash));
        mpz_class den(text.substr(slash + 1));
        if (den == 0) throw DivisionError("zero denominator in literal '" + text + "'");
        return FieldElement(f, mpq_class(num, den));
    } catch (const std::invalid_argument&) {
        throw FieldError("cannot parse field element '" + text + "'");
    }
}

bool FieldElement::is_zero() const {
    return field_.is_rationals() ? q_ == 0 : r_ == 0;
}

bool FieldElement::is_one() const {
    return field_.is_rationals() ? q_ == 1 : r_ == 1;
}

void FieldElement::check_same(const FieldElement& o) const {
    if (field_ != o.field_)
        throw MismatchError("field mismatch: " + field_.to_string() + " vs " + o.field_.to_string());
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(o);
    FieldElement out(*this);
    if (field_.is_rationals()) {
        out.q_ = q_ + o.q_;
    } else {
        uint64_t s = static_cast<uint64_t>(r_) + o.r_;
        out.r_ = static_cast<uint32_t>(s >= field_.p() ? s - field_.p() : s);
    }
    return out;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(o);
    FieldElement out(*this);
    if (field_.is_rationals()) {
        out.q_ = q_ - o.q_;
    } else {
        uint64_t s = static_cast<uint64_t>(r_) + field_.p() - o.r_;
        out.r_ = static_cast<uint32_t>(s >= field_.p() ? s - field_.p() : s);
    }
    return out;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    FieldElement out(*this);
    if (field_.is_rationals()) {
        out.q_ = q_ * o.q_;
    } else {
        out.r_ = static_cast<uint32_t>(mulmod_u64(r_, o.r_, field_.p()));
    }
    return out;
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    return *this * o.inverse();
}

FieldElement FieldElement::operator-() const {
    FieldElement out(*this);
    if (field_.is_rationals()) {
        out.q_ = -q_;
    } else if (r_ != 0) {
        out.r_ = field_.p() - r_;
    }
    return out;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DivisionError("division by zero in " + field_.to_string());
    FieldElement out(*this);
    if (field_.is_rationals()) {
        out.q_ = 1 / q_;
    } else {
        out.r_ = static_cast<uint32_t>(powmod_u64(r_, field_.p() - 2, field_.p()));
    }
    return out;
}

FieldElement FieldElement::pow(uint64_t e) const {
    FieldElement acc = one(field_);
    FieldElement base(*this);
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (field_ != o.field_) return false;
    return field_.is_rationals() ? q_ == o.q_ : r_ == o.r_;
}

std::string FieldElement::to_string() const {
    if (field_.is_rationals()) return q_.get_str();
    return std::to_string(r_);
}

} // namespace hsurf
