#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qweyl {

// Ordered list of indeterminate names for the coefficient field
// Q(t_1,...,t_k).  k = 0 gives plain rationals.  Immutable and shared
// by every Scalar built over it.
class VarContext {
public:
    VarContext() = default;
    explicit VarContext(std::vector<std::string> names);

    static std::shared_ptr<const VarContext> make(std::vector<std::string> names);
    // The shared k = 0 context.
    static const std::shared_ptr<const VarContext>& empty();

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    bool operator==(const VarContext& other) const { return names_ == other.names_; }
    bool operator!=(const VarContext& other) const { return !(*this == other); }

    // [A-Za-z][A-Za-z0-9_]*
    static bool valid_name(std::string_view s);
    // x<digits> and y<digits> are generator tokens and may not be used
    // as indeterminate names.
    static bool reserved_name(std::string_view s);

private:
    std::vector<std::string> names_;
};

using VarCtxPtr = std::shared_ptr<const VarContext>;

// Pointer identity or componentwise name equality.
bool same_context(const VarCtxPtr& a, const VarCtxPtr& b);

}  // namespace qweyl
