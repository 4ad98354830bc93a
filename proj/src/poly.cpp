#include "formclass/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "formclass/errors.hpp"

namespace formclass {

namespace {

void check_same_context(const MultiPoly& a, const MultiPoly& b) {
    check_input(a.context() == b.context() || *a.context() == *b.context(),
                "context mismatch: polynomials live in different rings");
}

std::size_t var_index(const PolyContextPtr& ctx, const std::string& name) {
    auto it = std::find(ctx->vars.begin(), ctx->vars.end(), name);
    check_input(it != ctx->vars.end(), "unknown variable: " + name);
    return static_cast<std::size_t>(it - ctx->vars.begin());
}

}  // namespace

PolyContextPtr make_context(std::vector<std::string> vars) {
    std::set<std::string> seen;
    for (const std::string& v : vars) {
        check_input(!v.empty(), "variable names must be nonempty");
        check_input(seen.insert(v).second, "duplicate variable: " + v);
    }
    return std::make_shared<const PolyContext>(PolyContext{std::move(vars)});
}

MultiPoly MultiPoly::zero(PolyContextPtr ctx) { return MultiPoly(std::move(ctx)); }

MultiPoly MultiPoly::constant(PolyContextPtr ctx, const Int& value) {
    MultiPoly p(std::move(ctx));
    p.insert_term(Exponents(p.ctx_->vars.size(), 0), value);
    return p;
}

MultiPoly MultiPoly::variable(PolyContextPtr ctx, const std::string& name) {
    std::size_t idx = var_index(ctx, name);
    MultiPoly p(std::move(ctx));
    Exponents e(p.ctx_->vars.size(), 0);
    e[idx] = 1;
    p.insert_term(e, 1);
    return p;
}

void MultiPoly::insert_term(const Exponents& exps, const Int& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

bool MultiPoly::operator==(const MultiPoly& other) const {
    check_same_context(*this, other);
    return terms_ == other.terms_;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(ctx_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    check_same_context(*this, other);
    for (const auto& [e, c] : other.terms_) insert_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
    check_same_context(*this, other);
    for (const auto& [e, c] : other.terms_) insert_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
    check_same_context(*this, other);
    MultiPoly result(ctx_);
    const std::size_t width = ctx_->vars.size();
    Exponents sum(width);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : other.terms_) {
            for (std::size_t i = 0; i < width; ++i) sum[i] = ea[i] + eb[i];
            result.insert_term(sum, ca * cb);
        }
    terms_ = std::move(result.terms_);
    return *this;
}

MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
    MultiPoly r = lhs;
    r *= rhs;
    return r;
}

MultiPoly pow(const MultiPoly& base, unsigned exponent) {
    MultiPoly r = MultiPoly::constant(base.context(), 1);
    for (unsigned i = 0; i < exponent; ++i) r *= base;
    return r;
}

MultiPoly substitute(const MultiPoly& p,
                     const std::map<std::string, MultiPoly>& replacements) {
    const PolyContextPtr& ctx = p.context();
    const std::size_t width = ctx->vars.size();
    // image of each variable, defaulting to itself
    std::vector<MultiPoly> image;
    image.reserve(width);
    for (const std::string& v : ctx->vars) image.push_back(MultiPoly::variable(ctx, v));
    for (const auto& [name, poly] : replacements) {
        check_input(*poly.context() == *ctx,
                    "context mismatch: replacement lives in a different ring");
        image[var_index(ctx, name)] = poly;
    }

    MultiPoly result = MultiPoly::zero(ctx);
    for (const auto& [e, c] : p.terms()) {
        MultiPoly term = MultiPoly::constant(ctx, c);
        for (std::size_t i = 0; i < width; ++i)
            if (e[i] != 0) term *= pow(image[i], static_cast<unsigned>(e[i]));
        result += term;
    }
    return result;
}

Int evaluate(const MultiPoly& p, const std::map<std::string, Int>& point) {
    const PolyContextPtr& ctx = p.context();
    const std::size_t width = ctx->vars.size();
    std::vector<Int> values(width);
    for (std::size_t i = 0; i < width; ++i) {
        auto it = point.find(ctx->vars[i]);
        check_input(it != point.end(),
                    "evaluation point misses variable: " + ctx->vars[i]);
        values[i] = it->second;
    }
    Int total = 0;
    for (const auto& [e, c] : p.terms()) {
        Int term = c;
        for (std::size_t i = 0; i < width; ++i)
            for (int k = 0; k < e[i]; ++k) term *= values[i];
        total += term;
    }
    return total;
}

std::string to_string(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    const auto& vars = p.context()->vars;
    std::ostringstream out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& e = it->first;
        Int coeff = it->second;
        if (first) {
            if (coeff < 0) {
                out << "-";
                coeff = -coeff;
            }
        } else {
            out << (coeff < 0 ? " - " : " + ");
            if (coeff < 0) coeff = -coeff;
        }
        first = false;

        std::string monomial;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (e[i] == 0) continue;
            if (!monomial.empty()) monomial += "*";
            monomial += vars[i];
            if (e[i] > 1) monomial += "^" + std::to_string(e[i]);
        }
        if (monomial.empty()) {
            out << to_string(coeff);
        } else {
            if (coeff != 1) out << to_string(coeff) << "*";
            out << monomial;
        }
    }
    return out.str();
}

QuotientContext make_quotient(
    PolyContextPtr ctx, std::vector<std::pair<std::string, MultiPoly>> rules) {
    std::set<std::string> eliminated;
    for (const auto& [name, replacement] : rules) {
        std::size_t idx = var_index(ctx, name);
        check_input(*replacement.context() == *ctx,
                    "context mismatch: relation lives in a different ring");
        check_input(eliminated.insert(name).second,
                    "duplicate relation for variable: " + name);
        // triangularity: the replacement mentions no eliminated variable
        for (const auto& [e, c] : replacement.terms()) {
            (void)c;
            check_input(e[idx] == 0,
                        "relation is not a substitution: " + name +
                            " occurs in its own replacement");
            for (const std::string& prior : eliminated)
                check_input(e[var_index(ctx, prior)] == 0,
                            "relations are not triangular: " + prior +
                                " reappears in a later replacement");
        }
    }
    return QuotientContext{std::move(ctx), std::move(rules)};
}

MultiPoly canonical_form(const MultiPoly& p, const QuotientContext& q) {
    check_input(*p.context() == *q.ctx,
                "context mismatch: polynomial lives in a different ring");
    MultiPoly r = p;
    for (const auto& [name, replacement] : q.rules)
        r = substitute(r, {{name, replacement}});
    for (const auto& [name, replacement] : q.rules) {
        (void)replacement;
        std::size_t idx = var_index(q.ctx, name);
        for (const auto& [e, c] : r.terms()) {
            (void)c;
            check_internal(e[idx] == 0,
                           "canonical form still mentions an eliminated "
                           "variable");
        }
    }
    return r;
}

}  // namespace formclass
