#include "sctk/param_space.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "sctk/errors.hpp"

namespace sctk {
namespace {

bool isIdentifier(std::string_view name) {
  if (name.empty()) return false;
  auto head = static_cast<unsigned char>(name.front());
  if (!(std::isalpha(head) || head == '_')) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

}  // namespace

ParamSpace::ParamSpace(std::vector<std::string> params, std::string s_name)
    : params_(std::move(params)), s_name_(std::move(s_name)) {
  if (!isIdentifier(s_name_)) {
    throw UsageError("indeterminate name '" + s_name_ + "' is not an identifier");
  }
  std::set<std::string_view> seen;
  for (const auto& p : params_) {
    if (!isIdentifier(p)) {
      throw UsageError("parameter name '" + p + "' is not an identifier");
    }
    if (p == s_name_) {
      throw UsageError("parameter '" + p + "' collides with the indeterminate");
    }
    if (!seen.insert(p).second) {
      throw UsageError("duplicate parameter '" + p + "'");
    }
  }
}

std::shared_ptr<const ParamSpace> ParamSpace::make(std::vector<std::string> params,
                                                   std::string s_name) {
  return std::make_shared<const ParamSpace>(std::move(params), std::move(s_name));
}

std::optional<std::size_t> ParamSpace::indexOf(std::string_view name) const {
  if (name == s_name_) return sIndex();
  for (std::size_t i = 0; i < params_.size(); ++i) {
    if (params_[i] == name) return i;
  }
  return std::nullopt;
}

const std::string& ParamSpace::varName(std::size_t var) const {
  if (var == sIndex()) return s_name_;
  return params_.at(var);
}

bool sameSpace(const SpacePtr& a, const SpacePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void requireSameSpace(const SpacePtr& a, const SpacePtr& b) {
  if (!sameSpace(a, b)) {
    throw UsageError("operands belong to different parameter spaces");
  }
}

}  // namespace sctk
