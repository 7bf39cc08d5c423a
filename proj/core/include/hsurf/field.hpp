#ifndef HSURF_FIELD_HPP
#define HSURF_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "hsurf/errors.hpp"

namespace hsurf {

enum class FieldKind { Rationals, Prime };

// Tag describing the coefficient field: Q or F_p with 2 < p < 2^31.
// The bound keeps every product of residues inside 64 bits.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(FieldKind::Rationals, 0); }
    static FieldSpec prime(uint32_t p);

    FieldKind kind() const { return kind_; }
    uint32_t p() const { return p_; }
    bool is_rationals() const { return kind_ == FieldKind::Rationals; }
    bool is_prime() const { return kind_ == FieldKind::Prime; }
    // Characteristic as an integer: 0 for Q, p for F_p.
    uint32_t characteristic() const { return p_; }

    bool operator==(const FieldSpec& o) const = default;

    std::string to_string() const;
    // Parses "Q" or "F<p>" (also accepts "Fp <p>" with whitespace).
    static FieldSpec parse(const std::string& text);

private:
    FieldSpec(FieldKind k, uint32_t p) : kind_(k), p_(p) {}
    FieldKind kind_;
    uint32_t p_;
};

bool is_prime_u32(uint32_t n);

// One element of Q or F_p, tagged with its field. Rationals are kept reduced
// with positive denominator (mpq canonical form); prime-field values are the
// least non-negative residue.
class FieldElement {
public:
    FieldElement() : field_(FieldSpec::rationals()), q_(0), r_(0) {}
    FieldElement(const FieldSpec& field, long value);
    FieldElement(const FieldSpec& field, const mpz_class& value);
    FieldElement(const FieldSpec& field, const mpq_class& value);

    static FieldElement zero(const FieldSpec& f) { return FieldElement(f, 0l); }
    static FieldElement one(const FieldSpec& f) { return FieldElement(f, 1l); }
    // Reads an integer or "a/b" literal.
    static FieldElement from_string(const FieldSpec& f, const std::string& text);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(uint64_t e) const;

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    // Value accessors; only valid for the matching kind.
    const mpq_class& rational() const { return q_; }
    uint32_t residue() const { return r_; }

    std::string to_string() const;

private:
    void check_same(const FieldElement& o) const;
    FieldSpec field_;
    mpq_class q_;  // used when field is Q
    uint32_t r_;   // used when field is F_p
};

} // namespace hsurf

#endif
