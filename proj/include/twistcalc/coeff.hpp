#pragma once

#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "twistcalc/scalar.hpp"

namespace twc {

/// Exponent vector of a monomial in the generators x_1..x_n. Polynomial mode
/// keeps all entries >= 0; Laurent mode allows negatives. Rational-function
/// numerators and denominators always use polynomial-mode exponents.
using Exps = std::vector<int>;

inline int total_degree(const Exps& e) { return std::accumulate(e.begin(), e.end(), 0); }

/// Graded lexicographic order with x_1 > x_2 > ... (ascending: smaller total
/// degree first). Used for term storage, echelon pivots and printing.
struct GrlexLess {
    bool operator()(const Exps& a, const Exps& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];  // larger entry on x_i means grlex-larger
        return false;
    }
};

using TermMap = std::map<Exps, Scalar, GrlexLess>;

enum class CoeffMode { Poly, Laurent, RatFunc };

std::string coeff_mode_name(CoeffMode m);

/// The coefficient algebra A: polynomials, Laurent polynomials or rational
/// functions in named generators over a scalar field.
struct CoeffAlgebra {
    FieldPtr field;
    std::vector<std::string> names;
    CoeffMode mode = CoeffMode::Poly;

    int nvars() const { return static_cast<int>(names.size()); }
    std::string description() const;

    bool operator==(const CoeffAlgebra& o) const {
        return same_field(field, o.field) && names == o.names && mode == o.mode;
    }
};

using AlgebraPtr = std::shared_ptr<const CoeffAlgebra>;

AlgebraPtr make_algebra(const FieldPtr& field, std::vector<std::string> names, CoeffMode mode);

inline bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    return a == b || (a && b && *a == *b);
}

/// Element of a CoeffAlgebra. Poly/Laurent values are a sparse term map with
/// no zero coefficients; RatFunc values are a coprime numerator/denominator
/// pair of polynomial term maps with grlex-monic denominator. Canonical, so
/// equality is structural.
class CoeffElem {
public:
    static CoeffElem zero(const AlgebraPtr& a);
    static CoeffElem one(const AlgebraPtr& a);
    static CoeffElem from_scalar(const AlgebraPtr& a, const Scalar& c);
    static CoeffElem from_int(const AlgebraPtr& a, std::int64_t n);
    static CoeffElem generator(const AlgebraPtr& a, int var);
    static CoeffElem monomial(const AlgebraPtr& a, const Exps& e, const Scalar& c);
    static CoeffElem from_terms(const AlgebraPtr& a, TermMap t);
    static CoeffElem fraction(const AlgebraPtr& a, TermMap num, TermMap den);

    const AlgebraPtr& algebra() const { return alg_; }

    CoeffElem operator+(const CoeffElem& o) const;
    CoeffElem operator-(const CoeffElem& o) const;
    CoeffElem operator*(const CoeffElem& o) const;
    CoeffElem operator*(const Scalar& c) const;
    /// Field division in RatFunc mode; exact division otherwise
    /// (NonExactDivision when the quotient does not exist in the algebra).
    CoeffElem operator/(const CoeffElem& o) const;
    CoeffElem operator-() const;
    CoeffElem& operator+=(const CoeffElem& o) { return *this = *this + o; }
    CoeffElem& operator-=(const CoeffElem& o) { return *this = *this - o; }
    CoeffElem& operator*=(const CoeffElem& o) { return *this = *this * o; }

    CoeffElem pow(std::int64_t e) const;

    bool is_zero() const;
    bool is_one() const;
    bool is_scalar() const;
    /// The scalar value of a constant element (precondition: is_scalar()).
    Scalar scalar_value() const;
    bool is_unit() const;
    CoeffElem inv() const;

    bool operator==(const CoeffElem& o) const;
    bool operator!=(const CoeffElem& o) const { return !(*this == o); }

    /// Term access. numer_terms() is the whole value in Poly/Laurent mode.
    const TermMap& numer_terms() const { return num_; }
    const TermMap& denom_terms() const { return den_; }
    bool has_trivial_denominator() const;

    /// Max total degree of the numerator (-1 for zero).
    int degree() const;

    std::string to_string() const;
    /// True when the printed form needs parentheses as a product factor.
    bool prints_as_sum() const;

private:
    CoeffElem(AlgebraPtr a, TermMap num, TermMap den)
        : alg_(std::move(a)), num_(std::move(num)), den_(std::move(den)) {}

    AlgebraPtr alg_;
    TermMap num_;
    TermMap den_;
};

// Raw term-map arithmetic shared by CoeffElem and the solvers; maps are over
// the given field, all with the same exponent width.
namespace tm {
bool is_zero(const TermMap& a);
void add_term(TermMap& a, const Exps& e, const Scalar& c);
TermMap add(const TermMap& a, const TermMap& b);
TermMap sub(const TermMap& a, const TermMap& b);
TermMap neg(TermMap a);
TermMap mul(const TermMap& a, const TermMap& b);
TermMap scale(TermMap a, const Scalar& c);
TermMap one(const FieldPtr& f, int nvars);
/// Exact division; nullopt when b does not divide a (polynomial exponents).
std::optional<TermMap> div_exact(const TermMap& a, const TermMap& b, const FieldPtr& f);
/// Monic gcd under grlex (recursive primitive PRS; polynomial exponents).
TermMap gcd(const TermMap& a, const TermMap& b, const FieldPtr& f, int nvars);
} // namespace tm

std::string terms_to_string(const TermMap& t, const std::vector<std::string>& names);

} // namespace twc
