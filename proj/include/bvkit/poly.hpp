#pragma once

#include "bvkit/context.hpp"
#include "bvkit/scalar.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace bvkit {

/// Sparse exponent list sorted by variable index (canonical form).
/// Odd variables never carry an exponent above 1; such products are zero.
class Monomial {
public:
    using Entry = std::pair<VarId, uint32_t>;

    Monomial() = default;
    explicit Monomial(std::vector<Entry> entries) : e_(std::move(entries)) {}
    static Monomial unit(VarId v, uint32_t exp = 1) { return Monomial({{v, exp}}); }

    bool empty() const { return e_.empty(); }
    const std::vector<Entry> &entries() const { return e_; }
    uint32_t exponent(VarId v) const;
    int degree(const Context &ctx) const;
    bool odd(const Context &ctx) const { return degree(ctx) & 1; }

    friend bool operator==(const Monomial &a, const Monomial &b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial &a, const Monomial &b) { return !(a.e_ == b.e_); }
    /// Canonical order: lexicographic on the dense exponent vector.
    friend bool operator<(const Monomial &a, const Monomial &b);

private:
    std::vector<Entry> e_;
};

/// Koszul product of canonical monomials: nullopt when an odd square appears,
/// otherwise (sign, a*b) with sign = parity of odd-odd transpositions.
std::optional<std::pair<bool, Monomial>> mono_mul(const Context &ctx, const Monomial &a,
                                                  const Monomial &b);

/// Exact graded-commutative polynomial over a shared context, in Koszul
/// canonical form. No zero coefficients are stored; terms above a
/// parameter's truncation order are dropped on construction.
class Poly {
public:
    using Terms = std::map<Monomial, Scalar>;

    Poly() = default;
    explicit Poly(ContextPtr ctx) : ctx_(std::move(ctx)) {}
    Poly(ContextPtr ctx, const Scalar &c);

    static Poly zero(ContextPtr ctx) { return Poly(std::move(ctx)); }
    static Poly constant(ContextPtr ctx, Scalar c) { return Poly(std::move(ctx), c); }
    static Poly variable(const ContextPtr &ctx, VarId v);
    static Poly variable(const ContextPtr &ctx, std::string_view name);

    const ContextPtr &context() const { return ctx_; }
    const Terms &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    /// Adds c * m, dropping zeros and truncation-overflow terms.
    void add_term(const Monomial &m, const Scalar &c);

    Poly operator-() const;
    Poly &operator+=(const Poly &o);
    Poly &operator-=(const Poly &o);
    friend Poly operator+(Poly a, const Poly &b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly &b) { a -= b; return a; }
    friend Poly operator*(const Poly &a, const Poly &b);
    Poly scaled(const Scalar &c) const;

    friend bool operator==(const Poly &a, const Poly &b);
    friend bool operator!=(const Poly &a, const Poly &b) { return !(a == b); }

    /// Total degree when homogeneous; nullopt for 0 or mixed.
    std::optional<int> homogeneous_degree() const;

    Scalar coefficient(const Monomial &m) const;
    Scalar constant_term() const { return coefficient(Monomial()); }

private:
    ContextPtr ctx_;
    Terms terms_;
};

/// Left graded partial derivative: commute one copy of v to the front
/// (collecting Koszul signs), then strike it. |d/dv| = -deg(v).
Poly partial(VarId v, const Poly &f);
Poly partial(std::string_view name, const Poly &f);

/// Right-sided variant (strikes from the back); the Berezin module action
/// is built from this.
Poly right_partial(VarId v, const Poly &f);

/// Homogeneous components, ascending degree. Empty for the zero polynomial.
std::vector<std::pair<int, Poly>> degree_decompose(const Poly &f);

/// Component of the given total degree.
Poly degree_component(const Poly &f, int degree);

/// Algebra morphism on generators. Bindings for non-parameter variables must
/// be homogeneous of the variable's degree; parameter bindings must be even
/// in every term. Unbound variables map to themselves.
Poly substitute(const Poly &f, const std::vector<std::pair<VarId, Poly>> &bindings);

/// Cross-context generator map: image[v] lives in `target` for every v.
Poly map_generators(const Poly &f, const ContextPtr &target, const std::vector<Poly> &image);

/// Multiplicative inverse of c*(1 + nilpotent); throws when the constant
/// term vanishes.
Poly unit_inverse(const Poly &g);

/// exp of a nilpotent polynomial (finite series); throws if the series does
/// not terminate within the nilpotency bound.
Poly nilpotent_exp(const Poly &s);

std::string to_string(const Poly &f);
std::string to_string(const Monomial &m, const Context &ctx);

} // namespace bvkit
