#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gts/ast.hpp"

namespace gts {

// Γ: lexically scoped bindings; lookup returns the innermost one.
class TypeEnv {
 public:
  void push(std::string name, SurfaceTypePtr ty) {
    entries_.emplace_back(std::move(name), std::move(ty));
  }
  void pop() { entries_.pop_back(); }

  const SurfaceTypePtr* lookup(const std::string& name) const {
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
      if (it->first == name) return &it->second;
    return nullptr;
  }

  bool empty() const { return entries_.empty(); }

 private:
  std::vector<std::pair<std::string, SurfaceTypePtr>> entries_;
};

// Γ ⊢ s : U. Throws type_error naming the rule, the offending types, and the span.
SurfaceTypePtr typecheck_surface(TypeEnv& env, const SurfaceExprPtr& s);

inline SurfaceTypePtr typecheck_surface(const SurfaceExprPtr& s) {
  TypeEnv env;
  return typecheck_surface(env, s);
}

}  // namespace gts
