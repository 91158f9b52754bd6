#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sctk {

/// Ordered variable set of F(z)(s): the parameters z1..zq followed by the
/// pencil indeterminate. Variable indices are 0..q-1 for parameters and q
/// for the indeterminate; the order is fixed at construction and drives the
/// monomial order.
class ParamSpace {
 public:
  ParamSpace(std::vector<std::string> params, std::string s_name = "s");

  static std::shared_ptr<const ParamSpace> make(std::vector<std::string> params,
                                                std::string s_name = "s");

  const std::vector<std::string>& params() const { return params_; }
  const std::string& sName() const { return s_name_; }

  std::size_t numParams() const { return params_.size(); }
  std::size_t numVars() const { return params_.size() + 1; }
  std::size_t sIndex() const { return params_.size(); }

  // Parameters and the indeterminate are both resolvable.
  std::optional<std::size_t> indexOf(std::string_view name) const;
  const std::string& varName(std::size_t var) const;

  friend bool operator==(const ParamSpace&, const ParamSpace&) = default;

 private:
  std::vector<std::string> params_;
  std::string s_name_;
};

using SpacePtr = std::shared_ptr<const ParamSpace>;

// Throws UsageError unless both pointers denote equal spaces.
void requireSameSpace(const SpacePtr& a, const SpacePtr& b);
bool sameSpace(const SpacePtr& a, const SpacePtr& b);

}  // namespace sctk
