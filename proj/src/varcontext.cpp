#include "qweyl/varcontext.hpp"

#include <cctype>

#include "qweyl/error.hpp"

namespace qweyl {

VarContext::VarContext(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        const std::string& nm = names_[i];
        if (!valid_name(nm))
            throw DomainError("invalid indeterminate name '" + nm + "'");
        if (reserved_name(nm))
            throw DomainError("indeterminate name '" + nm +
                              "' collides with a generator token");
        for (std::size_t j = 0; j < i; ++j)
            if (names_[j] == nm)
                throw DomainError("duplicate indeterminate name '" + nm + "'");
    }
}

std::shared_ptr<const VarContext> VarContext::make(std::vector<std::string> names) {
    return std::make_shared<const VarContext>(std::move(names));
}

const std::shared_ptr<const VarContext>& VarContext::empty() {
    static const std::shared_ptr<const VarContext> k0 = std::make_shared<const VarContext>();
    return k0;
}

std::optional<std::size_t> VarContext::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

bool VarContext::valid_name(std::string_view s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s.substr(1))
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

bool VarContext::reserved_name(std::string_view s) {
    if (s.size() < 2) return false;
    if (s[0] != 'x' && s[0] != 'y') return false;
    for (char c : s.substr(1))
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

bool same_context(const VarCtxPtr& a, const VarCtxPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

}  // namespace qweyl
