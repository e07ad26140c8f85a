#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bvkit {

using VarId = uint32_t;

struct VarDecl {
    std::string name;
    int degree = 0;
    bool is_param = false;            // even degree-0 central formal parameter
    std::optional<int> truncation;    // max exponent, parameters only
};

struct kernel_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Context;
using ContextPtr = std::shared_ptr<const Context>;

/// Ordered alphabet of graded variables. Declaration order is the canonical
/// monomial order and is fixed at construction. Immutable; share freely.
class Context {
public:
    static ContextPtr make(std::vector<VarDecl> vars);

    /// Extend `base` by one conjugate variable "@v" of degree n - deg(v) per
    /// base variable, appended after the base block.
    static ContextPtr make_shifted(const ContextPtr &base, int n);

    /// All-negated twin used for Berezinian forms ("*v" of degree -deg(v)).
    static ContextPtr make_dual(const ContextPtr &odd);

    size_t size() const { return vars_.size(); }
    const VarDecl &var(VarId i) const { return vars_[i]; }
    int degree(VarId i) const { return vars_[i].degree; }
    bool odd(VarId i) const { return vars_[i].degree & 1; }
    const std::string &name(VarId i) const { return vars_[i].name; }
    std::optional<VarId> find(std::string_view name) const;
    VarId require(std::string_view name) const;

    bool is_shifted() const { return shift_.has_value(); }
    int shift() const { return *shift_; }
    size_t base_count() const { return base_count_; }
    bool is_antifield(VarId i) const { return is_shifted() && i >= base_count_; }
    VarId antifield(VarId i) const { return static_cast<VarId>(base_count_ + i); }
    VarId base_of(VarId anti) const { return static_cast<VarId>(anti - base_count_); }
    ContextPtr base() const { return base_; }

    const std::vector<VarDecl> &vars() const { return vars_; }

    friend bool operator==(const Context &a, const Context &b);

private:
    std::vector<VarDecl> vars_;
    std::optional<int> shift_;
    size_t base_count_ = 0;          // == size() when not shifted
    ContextPtr base_;                // underlying plain context when shifted
};

/// Contexts compare by content; pointer equality is the fast path.
bool same_context(const ContextPtr &a, const ContextPtr &b);
void require_same_context(const ContextPtr &a, const ContextPtr &b);

} // namespace bvkit
