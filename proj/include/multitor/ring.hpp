#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "multitor/error.hpp"

namespace multitor {

enum class FieldKind { Rationals, PrimeField };

// Exact coefficient field: Q or F_p for a prime 2 <= p < 2^31.
struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    std::uint32_t characteristic = 0;

    static FieldSpec rationals() { return FieldSpec{FieldKind::Rationals, 0}; }
    static FieldSpec prime(std::uint32_t p);

    bool operator==(const FieldSpec&) const = default;
    std::string str() const;
};

// Field elements are stored as gcd-normalized rationals. For F_p the invariant
// is denominator 1 and numerator in [0, p).
using Scalar = mpq_class;

Scalar field_normalize(const FieldSpec& f, const Scalar& a);
Scalar field_add(const FieldSpec& f, const Scalar& a, const Scalar& b);
Scalar field_sub(const FieldSpec& f, const Scalar& a, const Scalar& b);
Scalar field_mul(const FieldSpec& f, const Scalar& a, const Scalar& b);
Scalar field_div(const FieldSpec& f, const Scalar& a, const Scalar& b);
Scalar field_neg(const FieldSpec& f, const Scalar& a);
std::string scalar_str(const Scalar& a);

enum class MonomialOrder { GrevLex, Lex };

enum class Cmp : int { Less = -1, Equal = 0, Greater = 1 };

using Exponents = std::vector<int>;

Cmp monomial_cmp(const Exponents& a, const Exponents& b, MonomialOrder order);
bool monomial_divides(const Exponents& a, const Exponents& b); // a | b
Exponents monomial_mul(const Exponents& a, const Exponents& b);
Exponents monomial_quot(const Exponents& a, const Exponents& b); // a / b, requires b | a
Exponents monomial_lcm(const Exponents& a, const Exponents& b);
int monomial_degree(const Exponents& a);
bool monomial_is_one(const Exponents& a);
bool monomial_coprime(const Exponents& a, const Exponents& b);

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

// Immutable multivariate polynomial ring k[x_1,...,x_n] with a fixed monomial order.
class PolyRing {
  public:
    static RingPtr make(std::vector<std::string> variables,
                        FieldSpec field = FieldSpec::rationals(),
                        MonomialOrder order = MonomialOrder::GrevLex);

    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& variables() const { return vars_; }
    const std::string& var_name(int i) const { return vars_.at(static_cast<std::size_t>(i)); }
    int var_index(std::string_view name) const; // -1 if absent
    const FieldSpec& field() const { return field_; }
    MonomialOrder order() const { return order_; }

    bool same_as(const PolyRing& o) const {
        return vars_ == o.vars_ && field_ == o.field_ && order_ == o.order_;
    }
    std::string str() const;

  private:
    PolyRing(std::vector<std::string> vars, FieldSpec field, MonomialOrder order)
        : vars_(std::move(vars)), field_(field), order_(order) {}

    std::vector<std::string> vars_;
    FieldSpec field_;
    MonomialOrder order_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);
void require_same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
    Exponents exp;
    Scalar coeff;
};

// Sparse polynomial: terms kept in strictly descending monomial order, no zero
// coefficients, zero polynomial = empty term list.
class Poly {
  public:
    Poly() = default; // null poly, only valid as a container placeholder

    static Poly zero(RingPtr ring);
    static Poly constant(RingPtr ring, const Scalar& c);
    static Poly one(RingPtr ring) { return constant(std::move(ring), 1); }
    static Poly variable(RingPtr ring, int var);
    static Poly monomial(RingPtr ring, Exponents e, const Scalar& c);
    static Poly from_terms(RingPtr ring, std::vector<Term> terms);
    // terms must already be strictly descending with nonzero normalized coefficients
    static Poly from_canonical_terms(RingPtr ring, std::vector<Term> terms);

    bool is_null() const { return ring_ == nullptr; }
    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    const Term& lead_term() const;
    const Exponents& lead_monomial() const { return lead_term().exp; }
    const Scalar& lead_coeff() const { return lead_term().coeff; }
    int total_degree() const; // -1 for the zero polynomial

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const Scalar& c) const;
    Poly mul_term(const Exponents& e, const Scalar& c) const;

    // *this + c * x^e * g, the basic reduction step
    Poly add_mul(const Poly& g, const Exponents& e, const Scalar& c) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::string str() const;

  private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

enum class PolyOp { Add, Sub, Mul };
Poly poly_arith(const Poly& a, const Poly& b, PolyOp op);

// Parses the grammar
//   poly  := term (('+'|'-') term)*
//   term  := [coeff '*']? factor ('*' factor)* | coeff
//   factor:= var ('^' nat)?
//   coeff := int ('/' nat)?
// with arbitrary whitespace; a leading sign is accepted.
Poly parse_poly(std::string_view text, const RingPtr& ring);

// Exact division in the polynomial ring; nullopt if b does not divide a.
std::optional<Poly> poly_divexact(const Poly& a, const Poly& b);

} // namespace multitor
