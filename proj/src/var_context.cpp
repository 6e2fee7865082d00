#include "knotpoly/var_context.hpp"

#include <stdexcept>

namespace knotpoly {

std::shared_ptr<const VarContext> VarContext::make(std::vector<Var> vars) {
    if (vars.size() > kMaxVars)
        throw std::invalid_argument("VarContext: too many variables");
    for (size_t i = 0; i < vars.size(); ++i)
        for (size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i].name == vars[j].name)
                throw std::invalid_argument("VarContext: duplicate variable '" + vars[i].name + "'");
    return std::shared_ptr<const VarContext>(new VarContext(std::move(vars)));
}

int VarContext::index_of(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == name) return static_cast<int>(i);
    return -1;
}

bool VarContext::same_as(const VarContext& o) const {
    if (this == &o) return true;
    if (vars_.size() != o.vars_.size()) return false;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name != o.vars_[i].name || vars_[i].sqrt != o.vars_[i].sqrt) return false;
    return true;
}

} // namespace knotpoly
