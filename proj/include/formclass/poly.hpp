#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "formclass/integer.hpp"

namespace formclass {

// Variable list of a polynomial ring Z[vars...].  Polynomials only combine
// when their contexts agree (same names in the same order).
struct PolyContext {
    std::vector<std::string> vars;

    bool operator==(const PolyContext&) const = default;
};

using PolyContextPtr = std::shared_ptr<const PolyContext>;

// Validates that the names are nonempty and pairwise distinct.
PolyContextPtr make_context(std::vector<std::string> vars);

// Sparse exact multivariate polynomial over Z: a map from exponent vectors
// (one entry per context variable) to nonzero integer coefficients.
class MultiPoly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Int>;

    static MultiPoly zero(PolyContextPtr ctx);
    static MultiPoly constant(PolyContextPtr ctx, const Int& value);
    // Errors if the name is not in the context.
    static MultiPoly variable(PolyContextPtr ctx, const std::string& name);

    const PolyContextPtr& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const MultiPoly& other) const;
    bool operator!=(const MultiPoly& other) const { return !(*this == other); }

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    MultiPoly& operator*=(const MultiPoly& other);

private:
    explicit MultiPoly(PolyContextPtr ctx) : ctx_(std::move(ctx)) {}
    void insert_term(const Exponents& exps, const Int& coeff);

    PolyContextPtr ctx_;
    TermMap terms_;

    friend MultiPoly substitute(const MultiPoly&,
                                const std::map<std::string, MultiPoly>&);
};

MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs);
MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs);
MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
MultiPoly pow(const MultiPoly& base, unsigned exponent);

// Simultaneous substitution: every context variable named in `replacements`
// is replaced by its image (all in the same context) in one parallel step;
// unnamed variables stay themselves.
MultiPoly substitute(const MultiPoly& p,
                     const std::map<std::string, MultiPoly>& replacements);

// Evaluate at an integer point; every context variable must be assigned.
Int evaluate(const MultiPoly& p, const std::map<std::string, Int>& point);

// Canonical human-readable form: terms in the fixed exponent order, e.g.
// "a^2*b - 2*c + 3"; the zero polynomial prints as "0".
std::string to_string(const MultiPoly& p);

// Quotient of the context ring presented by triangular substitution rules:
// each rule eliminates one variable by a replacement that mentions neither
// that variable nor any variable eliminated by an earlier rule, so a single
// ordered pass computes canonical representatives.
struct QuotientContext {
    PolyContextPtr ctx;
    std::vector<std::pair<std::string, MultiPoly>> rules;
};

// Validates triangularity.
QuotientContext make_quotient(
    PolyContextPtr ctx, std::vector<std::pair<std::string, MultiPoly>> rules);

// Canonical representative of p in the quotient ring: applies the rules in
// order and checks no eliminated variable survives.
MultiPoly canonical_form(const MultiPoly& p, const QuotientContext& q);

}  // namespace formclass
