#include "twistcalc/field.hpp"

#include <cctype>

#include "twistcalc/error.hpp"

namespace twc {

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::int64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

std::int64_t FieldSpec::characteristic() const {
    switch (kind) {
    case FieldKind::Rational: return 0;
    case FieldKind::Prime: return p;
    case FieldKind::RatFunc: return base == FieldKind::Prime ? p : 0;
    }
    return 0;
}

std::string FieldSpec::description() const {
    switch (kind) {
    case FieldKind::Rational: return "Q";
    case FieldKind::Prime: return "F" + std::to_string(p);
    case FieldKind::RatFunc: {
        std::string b = base == FieldKind::Prime ? "F" + std::to_string(p) : "Q";
        return b + "(" + param + ")";
    }
    }
    return "?";
}

FieldPtr rational_field() {
    static const FieldPtr f = std::make_shared<const FieldSpec>();
    return f;
}

FieldPtr prime_field(std::int64_t p) {
    if (!is_prime(p)) fail(Errc::InvalidArgument, "modulus " + std::to_string(p) + " is not prime");
    FieldSpec s;
    s.kind = FieldKind::Prime;
    s.p = p;
    return std::make_shared<const FieldSpec>(s);
}

FieldPtr param_function_field(const FieldPtr& base, const std::string& param) {
    if (!base) fail(Errc::InvalidArgument, "null base field");
    if (base->kind == FieldKind::RatFunc)
        fail(Errc::InvalidArgument, "parameter fields cannot be nested");
    if (!is_identifier(param))
        fail(Errc::InvalidArgument, "parameter name '" + param + "' is not an identifier");
    FieldSpec s;
    s.kind = FieldKind::RatFunc;
    s.base = base->kind;
    s.p = base->p;
    s.param = param;
    return std::make_shared<const FieldSpec>(s);
}

} // namespace twc
