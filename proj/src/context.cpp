#include "bvkit/context.hpp"

#include <unordered_set>

namespace bvkit {

namespace {
void validate(const std::vector<VarDecl> &vars) {
    std::unordered_set<std::string> seen;
    for (const auto &v : vars) {
        if (v.name.empty()) throw kernel_error("empty variable name");
        if (!seen.insert(v.name).second)
            throw kernel_error("duplicate variable name: " + v.name);
        if (v.is_param && (v.degree != 0))
            throw kernel_error("parameter must have degree 0: " + v.name);
        if (v.truncation && !v.is_param)
            throw kernel_error("truncation on non-parameter: " + v.name);
        if (v.truncation && *v.truncation < 0)
            throw kernel_error("negative truncation: " + v.name);
    }
}
} // namespace

ContextPtr Context::make(std::vector<VarDecl> vars) {
    validate(vars);
    auto ctx = std::make_shared<Context>();
    ctx->vars_ = std::move(vars);
    ctx->base_count_ = ctx->vars_.size();
    return ctx;
}

ContextPtr Context::make_shifted(const ContextPtr &base, int n) {
    if (base->is_shifted()) throw kernel_error("context is already shifted");
    auto vars = base->vars_;
    for (const auto &v : base->vars_) {
        VarDecl a;
        a.name = "@" + v.name;
        a.degree = n - v.degree;
        vars.push_back(std::move(a));
    }
    validate(vars);
    auto ctx = std::make_shared<Context>();
    ctx->vars_ = std::move(vars);
    ctx->shift_ = n;
    ctx->base_count_ = base->size();
    ctx->base_ = base;
    return ctx;
}

ContextPtr Context::make_dual(const ContextPtr &odd) {
    std::vector<VarDecl> vars;
    for (const auto &v : odd->vars()) {
        if (v.is_param) { vars.push_back(v); continue; }
        VarDecl d;
        d.name = "*" + v.name;
        d.degree = -v.degree;
        vars.push_back(std::move(d));
    }
    return make(std::move(vars));
}

std::optional<VarId> Context::find(std::string_view name) const {
    for (VarId i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == name) return i;
    return std::nullopt;
}

VarId Context::require(std::string_view name) const {
    auto v = find(name);
    if (!v) throw kernel_error("unknown variable: " + std::string(name));
    return *v;
}

bool operator==(const Context &a, const Context &b) {
    if (a.shift_ != b.shift_ || a.base_count_ != b.base_count_) return false;
    if (a.vars_.size() != b.vars_.size()) return false;
    for (size_t i = 0; i < a.vars_.size(); ++i) {
        const auto &x = a.vars_[i], &y = b.vars_[i];
        if (x.name != y.name || x.degree != y.degree || x.is_param != y.is_param ||
            x.truncation != y.truncation)
            return false;
    }
    return true;
}

bool same_context(const ContextPtr &a, const ContextPtr &b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

void require_same_context(const ContextPtr &a, const ContextPtr &b) {
    if (!same_context(a, b)) throw kernel_error("context mismatch");
}

} // namespace bvkit
