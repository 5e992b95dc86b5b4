#pragma once

#include <cstdint>
#include <memory>
#include <string>

namespace twc {

enum class FieldKind {
    Rational,  // the rational numbers
    Prime,     // integers modulo a prime p
    RatFunc,   // rational functions in one parameter over Rational or Prime
};

/// Description of the base field of scalars. Instances are immutable and
/// shared; construct through the factory functions below, which validate
/// (primality of p, identifier shape of the parameter name, nesting depth).
struct FieldSpec {
    FieldKind kind = FieldKind::Rational;
    std::int64_t p = 0;                      // modulus for Prime, or for RatFunc over a prime base
    FieldKind base = FieldKind::Rational;    // RatFunc only: the coefficient field of the parameter
    std::string param;                       // RatFunc only: parameter name

    bool operator==(const FieldSpec& other) const = default;

    bool is_param_field() const { return kind == FieldKind::RatFunc; }
    /// Characteristic of the field (0 or p).
    std::int64_t characteristic() const;
    std::string description() const;
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

FieldPtr rational_field();
FieldPtr prime_field(std::int64_t p);
/// Field of univariate rational functions `base(param)`. The base must not
/// itself be a parameter field.
FieldPtr param_function_field(const FieldPtr& base, const std::string& param);

bool is_prime(std::int64_t p);
bool is_identifier(const std::string& s);

inline bool same_field(const FieldPtr& a, const FieldPtr& b) {
    return a == b || (a && b && *a == *b);
}

} // namespace twc
