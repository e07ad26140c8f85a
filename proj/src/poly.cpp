#include "bvkit/poly.hpp"

#include <algorithm>
#include <sstream>

namespace bvkit {

uint32_t Monomial::exponent(VarId v) const {
    for (auto &[i, e] : e_)
        if (i == v) return e;
    return 0;
}

int Monomial::degree(const Context &ctx) const {
    int d = 0;
    for (auto &[i, e] : e_) d += static_cast<int>(e) * ctx.degree(i);
    return d;
}

bool operator<(const Monomial &a, const Monomial &b) {
    // dense lexicographic walk over the sparse representations
    size_t ia = 0, ib = 0;
    while (ia < a.e_.size() && ib < b.e_.size()) {
        VarId va = a.e_[ia].first, vb = b.e_[ib].first;
        if (va == vb) {
            if (a.e_[ia].second != b.e_[ib].second)
                return a.e_[ia].second < b.e_[ib].second;
            ++ia; ++ib;
        } else if (va < vb) {
            return false;  // a has a positive exponent where b has zero
        } else {
            return true;
        }
    }
    if (ia < a.e_.size()) return false;
    return ib < b.e_.size();
}

std::optional<std::pair<bool, Monomial>> mono_mul(const Context &ctx, const Monomial &a,
                                                  const Monomial &b) {
    bool sign = false;
    // each odd unit of b crosses the odd units of a with larger index
    for (auto &[i, e] : b.entries()) {
        if (!ctx.odd(i) || e == 0) continue;
        if (a.exponent(i)) return std::nullopt;  // odd square
        uint32_t crossings = 0;
        for (auto &[j, f] : a.entries())
            if (j > i && ctx.odd(j)) crossings += f;
        if (crossings & 1) sign = !sign;
    }
    std::vector<Monomial::Entry> out;
    out.reserve(a.entries().size() + b.entries().size());
    size_t ia = 0, ib = 0;
    const auto &ea = a.entries(), &eb = b.entries();
    while (ia < ea.size() || ib < eb.size()) {
        if (ib == eb.size() || (ia < ea.size() && ea[ia].first < eb[ib].first)) {
            out.push_back(ea[ia++]);
        } else if (ia == ea.size() || eb[ib].first < ea[ia].first) {
            out.push_back(eb[ib++]);
        } else {
            uint32_t e = ea[ia].second + eb[ib].second;
            if (ctx.odd(ea[ia].first) && e > 1) return std::nullopt;
            out.emplace_back(ea[ia].first, e);
            ++ia; ++ib;
        }
    }
    return std::make_pair(sign, Monomial(std::move(out)));
}

Poly::Poly(ContextPtr ctx, const Scalar &c) : ctx_(std::move(ctx)) {
    add_term(Monomial(), c);
}

Poly Poly::variable(const ContextPtr &ctx, VarId v) {
    Poly p(ctx);
    p.add_term(Monomial::unit(v), Scalar(1));
    return p;
}

Poly Poly::variable(const ContextPtr &ctx, std::string_view name) {
    return variable(ctx, ctx->require(name));
}

void Poly::add_term(const Monomial &m, const Scalar &c) {
    if (c.is_zero()) return;
    for (auto &[i, e] : m.entries()) {
        const auto &v = ctx_->var(i);
        if (v.truncation && e > static_cast<uint32_t>(*v.truncation)) return;
    }
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(ctx_);
    for (auto &[m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly &Poly::operator+=(const Poly &o) {
    if (!ctx_) { *this = o; return *this; }
    require_same_context(ctx_, o.ctx_);
    for (auto &[m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly &Poly::operator-=(const Poly &o) {
    if (!ctx_) { *this = -o; return *this; }
    require_same_context(ctx_, o.ctx_);
    for (auto &[m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly &a, const Poly &b) {
    require_same_context(a.ctx_, b.ctx_);
    Poly r(a.ctx_);
    for (auto &[ma, ca] : a.terms_)
        for (auto &[mb, cb] : b.terms_) {
            auto t = mono_mul(*a.ctx_, ma, mb);
            if (!t) continue;
            Scalar c = ca * cb;
            r.add_term(t->second, t->first ? -c : c);
        }
    return r;
}

Poly Poly::scaled(const Scalar &c) const {
    Poly r(ctx_);
    if (c.is_zero()) return r;
    for (auto &[m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

bool operator==(const Poly &a, const Poly &b) {
    if (!same_context(a.ctx_, b.ctx_)) return false;
    return a.terms_ == b.terms_;
}

std::optional<int> Poly::homogeneous_degree() const {
    std::optional<int> d;
    for (auto &[m, c] : terms_) {
        int md = m.degree(*ctx_);
        if (!d) d = md;
        else if (*d != md) return std::nullopt;
    }
    return d;
}

Scalar Poly::coefficient(const Monomial &m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
}

Poly partial(VarId v, const Poly &f) {
    const auto &ctx = *f.context();
    if (v >= ctx.size()) throw kernel_error("unknown variable");
    Poly r(f.context());
    for (auto &[m, c] : f.terms()) {
        uint32_t e = m.exponent(v);
        if (!e) continue;
        bool sign = false;
        if (ctx.odd(v)) {
            uint32_t crossings = 0;
            for (auto &[j, g] : m.entries())
                if (j < v && ctx.odd(j)) crossings += g;
            sign = crossings & 1;
        }
        std::vector<Monomial::Entry> out;
        for (auto &[j, g] : m.entries()) {
            if (j == v) {
                if (g > 1) out.emplace_back(j, g - 1);
            } else {
                out.emplace_back(j, g);
            }
        }
        Scalar coeff = c * Scalar(Rat(e));
        r.add_term(Monomial(std::move(out)), sign ? -coeff : coeff);
    }
    return r;
}

Poly partial(std::string_view name, const Poly &f) {
    return partial(f.context()->require(name), f);
}

Poly right_partial(VarId v, const Poly &f) {
    const auto &ctx = *f.context();
    Poly r(f.context());
    for (auto &[m, c] : f.terms()) {
        uint32_t e = m.exponent(v);
        if (!e) continue;
        bool sign = false;
        if (ctx.odd(v)) {
            uint32_t crossings = 0;
            for (auto &[j, g] : m.entries())
                if (j > v && ctx.odd(j)) crossings += g;
            sign = crossings & 1;
        }
        std::vector<Monomial::Entry> out;
        for (auto &[j, g] : m.entries()) {
            if (j == v) {
                if (g > 1) out.emplace_back(j, g - 1);
            } else {
                out.emplace_back(j, g);
            }
        }
        Scalar coeff = c * Scalar(Rat(e));
        r.add_term(Monomial(std::move(out)), sign ? -coeff : coeff);
    }
    return r;
}

std::vector<std::pair<int, Poly>> degree_decompose(const Poly &f) {
    std::map<int, Poly> comps;
    for (auto &[m, c] : f.terms()) {
        int d = m.degree(*f.context());
        auto it = comps.find(d);
        if (it == comps.end()) it = comps.emplace(d, Poly(f.context())).first;
        it->second.add_term(m, c);
    }
    return {comps.begin(), comps.end()};
}

Poly degree_component(const Poly &f, int degree) {
    Poly r(f.context());
    for (auto &[m, c] : f.terms())
        if (m.degree(*f.context()) == degree) r.add_term(m, c);
    return r;
}

Poly substitute(const Poly &f, const std::vector<std::pair<VarId, Poly>> &bindings) {
    const auto &ctx = f.context();
    std::vector<const Poly *> image(ctx->size(), nullptr);
    for (auto &[v, val] : bindings) {
        if (v >= ctx->size()) throw kernel_error("unknown variable");
        require_same_context(ctx, val.context());
        const auto &decl = ctx->var(v);
        for (auto &[d, comp] : degree_decompose(val)) {
            if ((d & 1) != (decl.degree & 1))
                throw kernel_error("parity mismatch in substitution for " + decl.name);
            if (!decl.is_param && d != decl.degree)
                throw kernel_error("degree mismatch in substitution for " + decl.name);
        }
        image[v] = &val;
    }
    Poly out(ctx);
    for (auto &[m, c] : f.terms()) {
        Poly acc = Poly::constant(ctx, c);
        for (auto &[i, e] : m.entries()) {
            if (image[i]) {
                for (uint32_t k = 0; k < e && !acc.is_zero(); ++k) acc = acc * (*image[i]);
            } else {
                Poly v(ctx);
                v.add_term(Monomial::unit(i, e), Scalar(1));
                acc = acc * v;
            }
            if (acc.is_zero()) break;
        }
        out += acc;
    }
    return out;
}

Poly map_generators(const Poly &f, const ContextPtr &target, const std::vector<Poly> &image) {
    if (image.size() != f.context()->size())
        throw kernel_error("generator image list has wrong length");
    Poly out(target);
    for (auto &[m, c] : f.terms()) {
        Poly acc = Poly::constant(target, c);
        for (auto &[i, e] : m.entries()) {
            for (uint32_t k = 0; k < e && !acc.is_zero(); ++k) acc = acc * image[i];
            if (acc.is_zero()) break;
        }
        out += acc;
    }
    return out;
}

Poly unit_inverse(const Poly &g) {
    Scalar c = g.constant_term();
    if (c.is_zero()) throw kernel_error("no constant term, not invertible");
    Poly h = (g - Poly::constant(g.context(), c)).scaled(Scalar(1) / c);
    Poly inv = Poly::constant(g.context(), Scalar(1));
    Poly term = Poly::constant(g.context(), Scalar(1));
    // h is nilpotent on the contexts we invert over (odd or truncated)
    size_t guard = 0;
    while (true) {
        term = (term * h).scaled(Scalar(-1));
        if (term.is_zero()) break;
        inv += term;
        if (++guard > 10000) throw kernel_error("unit_inverse: series does not terminate");
    }
    return inv.scaled(Scalar(1) / c);
}

Poly nilpotent_exp(const Poly &s) {
    Poly out = Poly::constant(s.context(), Scalar(1));
    Poly term = out;
    int k = 1;
    while (true) {
        term = (term * s).scaled(Scalar(Rat(1, k)));
        if (term.is_zero()) break;
        out += term;
        if (++k > 10000) throw kernel_error("nilpotent_exp: series does not terminate");
    }
    return out;
}

std::string to_string(const Monomial &m, const Context &ctx) {
    if (m.empty()) return "1";
    std::string out;
    for (auto &[i, e] : m.entries()) {
        if (!out.empty()) out += "*";
        out += ctx.name(i);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::string to_string(const Poly &f) {
    if (f.is_zero()) return "0";
    const auto &ctx = *f.context();
    std::string out;
    for (auto &[m, c] : f.terms()) {
        Scalar coeff = c;
        bool negative = coeff.im == 0 ? coeff.re < 0 : (coeff.re == 0 && coeff.im < 0);
        if (out.empty()) {
            if (negative) { out += "-"; coeff = -coeff; }
        } else {
            out += negative ? " - " : " + ";
            if (negative) coeff = -coeff;
        }
        bool unit_coeff = (coeff == Scalar(1));
        if (m.empty()) {
            out += scalar_to_string(coeff);
        } else if (unit_coeff) {
            out += to_string(m, ctx);
        } else {
            out += scalar_to_string(coeff) + "*" + to_string(m, ctx);
        }
    }
    return out;
}

} // namespace bvkit
