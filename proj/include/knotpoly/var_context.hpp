#ifndef KNOTPOLY_VAR_CONTEXT_HPP
#define KNOTPOLY_VAR_CONTEXT_HPP

#include <memory>
#include <string>
#include <vector>

namespace knotpoly {

/*
 * Variable declarations for a Laurent-polynomial ring.
 *
 * Each display variable owns exactly one internal variable. For a plain
 * variable the internal exponent equals the display exponent. For a variable
 * declared with a square root, the internal variable is its square root
 * (internal u with display t = u^2), so display exponents are internal/2 and
 * odd internal exponents print as t^(k/2). All arithmetic happens on internal
 * exponents — an honest Laurent ring with no fractional powers.
 *
 * At most four variables per context (exponent vectors are bit-packed; the
 * widest ring in use has two variables, so the cap is generous).
 */
class VarContext {
public:
    struct Var {
        std::string name;
        bool sqrt = false; // true: internal variable is name^(1/2)
    };

    static constexpr size_t kMaxVars = 4;

    static std::shared_ptr<const VarContext> make(std::vector<Var> vars);

    size_t size() const { return vars_.size(); }
    const Var& var(size_t i) const { return vars_[i]; }
    // Index of a display variable, or -1.
    int index_of(const std::string& name) const;

    bool same_as(const VarContext& o) const;

private:
    explicit VarContext(std::vector<Var> vars) : vars_(std::move(vars)) {}
    std::vector<Var> vars_;
};

using CtxPtr = std::shared_ptr<const VarContext>;

} // namespace knotpoly

#endif // KNOTPOLY_VAR_CONTEXT_HPP
