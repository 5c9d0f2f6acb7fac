#include "multitor/ring.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace multitor {

const char* error_code_name(ErrorCode c) {
    switch (c) {
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::MalformedTerm: return "MalformedTerm";
    case ErrorCode::ZeroCharacteristicOverflow: return "ZeroCharacteristicOverflow";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::ZeroDivisorArgument: return "ZeroDivisorArgument";
    case ErrorCode::NotFiniteDimensional: return "NotFiniteDimensional";
    case ErrorCode::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorCode::HasRelations: return "HasRelations";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::NotContained: return "NotContained";
    case ErrorCode::IllFormed: return "IllFormed";
    case ErrorCode::LengthNotLocal: return "LengthNotLocal";
    case ErrorCode::TargetMismatch: return "TargetMismatch";
    case ErrorCode::IllFormedMap: return "IllFormedMap";
    case ErrorCode::ZeroScalar: return "ZeroScalar";
    case ErrorCode::ZeroDivisorGenerator: return "ZeroDivisorGenerator";
    case ErrorCode::ResolutionTruncated: return "ResolutionTruncated";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UndeclaredName: return "UndeclaredName";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

// ---------------------------------------------------------------------------
// FieldSpec / Scalar

FieldSpec FieldSpec::prime(std::uint32_t p) {
    require(p >= 2 && p < (1u << 31), ErrorCode::InvalidField,
            "prime field characteristic must satisfy 2 <= p < 2^31");
    mpz_class z(p);
    require(mpz_probab_prime_p(z.get_mpz_t(), 40) != 0, ErrorCode::InvalidField,
            "characteristic " + std::to_string(p) + " is not prime");
    return FieldSpec{FieldKind::PrimeField, p};
}

std::string FieldSpec::str() const {
    if (kind == FieldKind::Rationals)
        return "Q";
    return "F" + std::to_string(characteristic);
}

namespace {

Scalar fp_reduce(const FieldSpec& f, const Scalar& a) {
    // invariant on entry: a has denominator 1 after clearing
    mpz_class p(f.characteristic);
    mpz_class num = a.get_num();
    mpz_class den = a.get_den();
    if (den != 1) {
        mpz_class dmod = den % p;
        if (dmod < 0)
            dmod += p;
        require(dmod != 0, ErrorCode::ZeroCharacteristicOverflow,
                "denominator divisible by characteristic " + std::to_string(f.characteristic));
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), dmod.get_mpz_t(), p.get_mpz_t());
        num = num * inv;
    }
    mpz_class r = num % p;
    if (r < 0)
        r += p;
    return Scalar(r);
}

} // namespace

Scalar field_normalize(const FieldSpec& f, const Scalar& a) {
    if (f.kind == FieldKind::PrimeField)
        return fp_reduce(f, a);
    Scalar r = a;
    r.canonicalize();
    return r;
}

Scalar field_add(const FieldSpec& f, const Scalar& a, const Scalar& b) {
    Scalar r = a + b;
    if (f.kind == FieldKind::PrimeField)
        return fp_reduce(f, r);
    return r;
}

Scalar field_sub(const FieldSpec& f, const Scalar& a, const Scalar& b) {
    Scalar r = a - b;
    if (f.kind == FieldKind::PrimeField)
        return fp_reduce(f, r);
    return r;
}

Scalar field_mul(const FieldSpec& f, const Scalar& a, const Scalar& b) {
    Scalar r = a * b;
    if (f.kind == FieldKind::PrimeField)
        return fp_reduce(f, r);
    return r;
}

Scalar field_div(const FieldSpec& f, const Scalar& a, const Scalar& b) {
    require(b != 0, ErrorCode::Internal, "division by zero field element");
    if (f.kind == FieldKind::PrimeField) {
        mpz_class p(f.characteristic);
        mpz_class inv;
        mpz_class bn = fp_reduce(f, b).get_num();
        mpz_invert(inv.get_mpz_t(), bn.get_mpz_t(), p.get_mpz_t());
        return fp_reduce(f, a * Scalar(inv));
    }
    return a / b;
}

Scalar field_neg(const FieldSpec& f, const Scalar& a) {
    Scalar r = -a;
    if (f.kind == FieldKind::PrimeField)
        return fp_reduce(f, r);
    return r;
}

std::string scalar_str(const Scalar& a) { return a.get_str(); }

// ---------------------------------------------------------------------------
// Monomials

Cmp monomial_cmp(const Exponents& a, const Exponents& b, MonomialOrder order) {
    require(a.size() == b.size(), ErrorCode::LengthMismatch,
            "exponent vectors of different lengths");
    switch (order) {
    case MonomialOrder::Lex:
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i])
                return a[i] > b[i] ? Cmp::Greater : Cmp::Less;
        }
        return Cmp::Equal;
    case MonomialOrder::GrevLex: {
        int da = monomial_degree(a), db = monomial_degree(b);
        if (da != db)
            return da > db ? Cmp::Greater : Cmp::Less;
        // a > b iff the last nonzero entry of a-b is negative
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i])
                return a[i] < b[i] ? Cmp::Greater : Cmp::Less;
        }
        return Cmp::Equal;
    }
    }
    fail(ErrorCode::Internal, "unreachable monomial order");
}

bool monomial_divides(const Exponents& a, const Exponents& b) {
    require(a.size() == b.size(), ErrorCode::LengthMismatch,
            "exponent vectors of different lengths");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

Exponents monomial_mul(const Exponents& a, const Exponents& b) {
    require(a.size() == b.size(), ErrorCode::LengthMismatch,
            "exponent vectors of different lengths");
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

Exponents monomial_quot(const Exponents& a, const Exponents& b) {
    require(a.size() == b.size(), ErrorCode::LengthMismatch,
            "exponent vectors of different lengths");
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        require(a[i] >= b[i], ErrorCode::Internal, "monomial quotient is not exact");
        r[i] = a[i] - b[i];
    }
    return r;
}

Exponents monomial_lcm(const Exponents& a, const Exponents& b) {
    require(a.size() == b.size(), ErrorCode::LengthMismatch,
            "exponent vectors of different lengths");
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = std::max(a[i], b[i]);
    return r;
}

int monomial_degree(const Exponents& a) {
    int d = 0;
    for (int e : a)
        d += e;
    return d;
}

bool monomial_is_one(const Exponents& a) {
    return std::all_of(a.begin(), a.end(), [](int e) { return e == 0; });
}

bool monomial_coprime(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0)
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// PolyRing

RingPtr PolyRing::make(std::vector<std::string> variables, FieldSpec field, MonomialOrder order) {
    std::set<std::string> seen;
    for (const auto& v : variables) {
        require(!v.empty(), ErrorCode::InvalidField, "empty variable name");
        require(seen.insert(v).second, ErrorCode::InvalidField, "duplicate variable name " + v);
    }
    return RingPtr(new PolyRing(std::move(variables), field, order));
}

int PolyRing::var_index(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name)
            return static_cast<int>(i);
    return -1;
}

std::string PolyRing::str() const {
    std::string s = field_.str() + "[";
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i)
            s += ",";
        s += vars_[i];
    }
    s += "]";
    return s;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    return a->same_as(*b);
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
    require(same_ring(a, b), ErrorCode::RingMismatch, "operands belong to different rings");
}

// ---------------------------------------------------------------------------
// Poly

Poly Poly::zero(RingPtr ring) {
    Poly p;
    p.ring_ = std::move(ring);
    return p;
}

Poly Poly::constant(RingPtr ring, const Scalar& c) {
    Poly p = zero(ring);
    Scalar n = field_normalize(p.ring_->field(), c);
    if (n != 0)
        p.terms_.push_back(Term{Exponents(static_cast<std::size_t>(p.ring_->nvars()), 0), n});
    return p;
}

Poly Poly::variable(RingPtr ring, int var) {
    require(var >= 0 && var < ring->nvars(), ErrorCode::UnknownVariable,
            "variable index out of range");
    Exponents e(static_cast<std::size_t>(ring->nvars()), 0);
    e[static_cast<std::size_t>(var)] = 1;
    return monomial(std::move(ring), std::move(e), 1);
}

Poly Poly::monomial(RingPtr ring, Exponents e, const Scalar& c) {
    require(static_cast<int>(e.size()) == ring->nvars(), ErrorCode::LengthMismatch,
            "exponent vector length does not match variable count");
    Poly p = zero(std::move(ring));
    Scalar n = field_normalize(p.ring_->field(), c);
    if (n != 0)
        p.terms_.push_back(Term{std::move(e), std::move(n)});
    return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
    MonomialOrder order = ring->order();
    const FieldSpec& f = ring->field();
    std::map<Exponents, Scalar, std::function<bool(const Exponents&, const Exponents&)>> acc(
        [order](const Exponents& a, const Exponents& b) {
            return monomial_cmp(a, b, order) == Cmp::Greater;
        });
    for (auto& t : terms) {
        require(static_cast<int>(t.exp.size()) == ring->nvars(), ErrorCode::LengthMismatch,
                "exponent vector length does not match variable count");
        auto it = acc.find(t.exp);
        if (it == acc.end())
            acc.emplace(std::move(t.exp), field_normalize(f, t.coeff));
        else
            it->second = field_add(f, it->second, t.coeff);
    }
    Poly p = zero(std::move(ring));
    for (auto& [e, c] : acc)
        if (c != 0)
            p.terms_.push_back(Term{e, c});
    return p;
}

Poly Poly::from_canonical_terms(RingPtr ring, std::vector<Term> terms) {
    Poly p = zero(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && monomial_is_one(terms_[0].exp));
}

bool Poly::is_one() const {
    return terms_.size() == 1 && monomial_is_one(terms_[0].exp) && terms_[0].coeff == 1;
}

const Term& Poly::lead_term() const {
    require(!terms_.empty(), ErrorCode::Internal, "lead term of the zero polynomial");
    return terms_.front();
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& t : terms_)
        d = std::max(d, monomial_degree(t.exp));
    return d;
}

Poly Poly::operator-() const {
    Poly r = *this;
    const FieldSpec& f = ring_->field();
    for (auto& t : r.terms_)
        t.coeff = field_neg(f, t.coeff);
    return r;
}

namespace {

// merge two descending term lists, combining b scaled by (e, c)
Poly merge_add(const Poly& a, const Poly& b, const Exponents* e, const Scalar* c) {
    require_same_ring(a.ring(), b.ring());
    const RingPtr& ring = a.ring();
    const FieldSpec& f = ring->field();
    MonomialOrder order = ring->order();
    std::vector<Term> out;
    out.reserve(a.terms().size() + b.terms().size());
    std::size_t i = 0, j = 0;
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    auto b_exp = [&](std::size_t k) { return e ? monomial_mul(tb[k].exp, *e) : tb[k].exp; };
    auto b_coeff = [&](std::size_t k) { return c ? field_mul(f, tb[k].coeff, *c) : tb[k].coeff; };
    while (i < ta.size() || j < tb.size()) {
        if (j >= tb.size()) {
            out.push_back(ta[i++]);
            continue;
        }
        Exponents be = b_exp(j);
        if (i >= ta.size()) {
            Scalar bc = b_coeff(j);
            if (bc != 0)
                out.push_back(Term{std::move(be), std::move(bc)});
            ++j;
            continue;
        }
        Cmp cm = monomial_cmp(ta[i].exp, be, order);
        if (cm == Cmp::Greater) {
            out.push_back(ta[i++]);
        } else if (cm == Cmp::Less) {
            Scalar bc = b_coeff(j);
            if (bc != 0)
                out.push_back(Term{std::move(be), std::move(bc)});
            ++j;
        } else {
            Scalar sc = field_add(f, ta[i].coeff, b_coeff(j));
            if (sc != 0)
                out.push_back(Term{ta[i].exp, std::move(sc)});
            ++i;
            ++j;
        }
    }
    return Poly::from_canonical_terms(ring, std::move(out));
}

} // namespace

Poly Poly::operator+(const Poly& o) const { return merge_add(*this, o, nullptr, nullptr); }

Poly Poly::operator-(const Poly& o) const {
    Scalar minus1 = field_normalize(ring_->field(), Scalar(-1));
    return merge_add(*this, o, nullptr, &minus1);
}

Poly Poly::operator*(const Poly& o) const {
    require_same_ring(ring_, o.ring_);
    std::vector<Term> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    const FieldSpec& f = ring_->field();
    for (const auto& ta : terms_)
        for (const auto& tb : o.terms_)
            acc.push_back(Term{monomial_mul(ta.exp, tb.exp), field_mul(f, ta.coeff, tb.coeff)});
    return from_terms(ring_, std::move(acc));
}

Poly Poly::scaled(const Scalar& c) const {
    Poly r = zero(ring_);
    const FieldSpec& f = ring_->field();
    Scalar n = field_normalize(f, c);
    if (n == 0)
        return r;
    for (const auto& t : terms_) {
        Scalar sc = field_mul(f, t.coeff, n);
        if (sc != 0)
            r.terms_.push_back(Term{t.exp, std::move(sc)});
    }
    return r;
}

Poly Poly::mul_term(const Exponents& e, const Scalar& c) const {
    Poly r = zero(ring_);
    const FieldSpec& f = ring_->field();
    Scalar n = field_normalize(f, c);
    if (n == 0)
        return r;
    for (const auto& t : terms_) {
        Scalar sc = field_mul(f, t.coeff, n);
        if (sc != 0)
            r.terms_.push_back(Term{monomial_mul(t.exp, e), std::move(sc)});
    }
    return r;
}

Poly Poly::add_mul(const Poly& g, const Exponents& e, const Scalar& c) const {
    if (c == 0 || g.is_zero())
        return *this;
    return merge_add(*this, g, &e, &c);
}

bool Poly::operator==(const Poly& o) const {
    if (!same_ring(ring_, o.ring_))
        return false;
    if (terms_.size() != o.terms_.size())
        return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].exp != o.terms_[i].exp || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

std::string Poly::str() const {
    if (is_null())
        return "<null>";
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Scalar c = t.coeff;
        bool neg = c < 0;
        if (first) {
            if (neg)
                os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        Scalar ac = neg ? Scalar(-c) : c;
        std::string mono;
        for (std::size_t i = 0; i < t.exp.size(); ++i) {
            if (t.exp[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += ring_->var_name(static_cast<int>(i));
            if (t.exp[i] > 1)
                mono += "^" + std::to_string(t.exp[i]);
        }
        if (mono.empty()) {
            os << scalar_str(ac);
        } else {
            if (ac != 1)
                os << scalar_str(ac) << "*";
            os << mono;
        }
    }
    return os.str();
}

Poly poly_arith(const Poly& a, const Poly& b, PolyOp op) {
    switch (op) {
    case PolyOp::Add: return a + b;
    case PolyOp::Sub: return a - b;
    case PolyOp::Mul: return a * b;
    }
    fail(ErrorCode::Internal, "unreachable poly op");
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Lexer {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        require(pos > start, ErrorCode::MalformedTerm,
                "expected a number in '" + std::string(s) + "'");
        return std::string(s.substr(start, pos - start));
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() &&
            (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        require(pos > start, ErrorCode::MalformedTerm,
                "expected a variable name in '" + std::string(s) + "'");
        return std::string(s.substr(start, pos - start));
    }
    bool peek_digit() {
        skip_ws();
        return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
    }
    bool peek_ident() {
        skip_ws();
        return pos < s.size() &&
               (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_');
    }
};

int parse_exponent(Lexer& lx) {
    std::string n = lx.number();
    require(n.size() <= 6, ErrorCode::MalformedTerm, "exponent too large: " + n);
    return std::stoi(n);
}

} // namespace

Poly parse_poly(std::string_view text, const RingPtr& ring) {
    Lexer lx{text};
    require(!lx.done(), ErrorCode::MalformedTerm, "empty polynomial text");
    std::vector<Term> terms;
    bool first = true;
    while (!lx.done()) {
        int sign = 1;
        if (first) {
            while (lx.peek() == '+' || lx.peek() == '-') {
                if (lx.accept('-'))
                    sign = -sign;
                else
                    lx.accept('+');
            }
            first = false;
        } else {
            bool any = false;
            while (lx.peek() == '+' || lx.peek() == '-') {
                if (lx.accept('-'))
                    sign = -sign;
                else
                    lx.accept('+');
                any = true;
            }
            require(any, ErrorCode::MalformedTerm,
                    "expected '+' or '-' between terms in '" + std::string(text) + "'");
        }
        // term
        Scalar coeff(sign);
        Exponents exp(static_cast<std::size_t>(ring->nvars()), 0);
        bool have_factor = false;
        if (lx.peek_digit()) {
            std::string num = lx.number();
            mpz_class n(num);
            mpz_class d(1);
            if (lx.accept('/')) {
                std::string den = lx.number();
                d = mpz_class(den);
                require(d != 0, ErrorCode::MalformedTerm, "zero denominator in coefficient");
            }
            coeff = coeff * Scalar(mpq_class(n) / mpq_class(d));
            if (lx.accept('*')) {
                // factors follow
            } else {
                // pure constant term
                terms.push_back(Term{exp, coeff});
                continue;
            }
        }
        for (;;) {
            require(lx.peek_ident(), ErrorCode::MalformedTerm,
                    "expected a variable in '" + std::string(text) + "'");
            std::string name = lx.ident();
            int idx = ring->var_index(name);
            require(idx >= 0, ErrorCode::UnknownVariable,
                    "unknown variable '" + name + "' in ring " + ring->str());
            int e = 1;
            if (lx.accept('^'))
                e = parse_exponent(lx);
            exp[static_cast<std::size_t>(idx)] += e;
            have_factor = true;
            if (!lx.accept('*'))
                break;
        }
        require(have_factor, ErrorCode::MalformedTerm, "empty term");
        terms.push_back(Term{std::move(exp), std::move(coeff)});
    }
    return Poly::from_terms(ring, std::move(terms));
}

// ---------------------------------------------------------------------------
// Exact division

std::optional<Poly> poly_divexact(const Poly& a, const Poly& b) {
    require(!b.is_zero(), ErrorCode::ZeroDivisorArgument, "exact division by zero");
    require_same_ring(a.ring(), b.ring());
    const RingPtr& ring = a.ring();
    const FieldSpec& f = ring->field();
    Poly r = a;
    std::vector<Term> quot;
    while (!r.is_zero()) {
        const Term& lr = r.lead_term();
        const Term& lb = b.lead_term();
        if (!monomial_divides(lb.exp, lr.exp))
            return std::nullopt;
        Exponents e = monomial_quot(lr.exp, lb.exp);
        Scalar c = field_div(f, lr.coeff, lb.coeff);
        r = r.add_mul(b, e, field_neg(f, c));
        quot.push_back(Term{std::move(e), std::move(c)});
    }
    return Poly::from_terms(ring, std::move(quot));
}

} // namespace multitor
