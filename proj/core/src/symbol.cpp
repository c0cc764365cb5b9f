#include "airycoef/symbol.hpp"

#include <array>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace airycoef {

namespace {

struct Registry {
  std::mutex mutex;
  std::vector<std::string> names{"s", "t", "w", "b", "u", "eta", "xi"};
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

Var Var::intern(std::string_view name) {
  auto& reg = registry();
  std::lock_guard lock(reg.mutex);
  for (std::size_t i = 0; i < reg.names.size(); ++i) {
    if (reg.names[i] == name) return Var(static_cast<std::uint8_t>(i));
  }
  if (reg.names.size() >= kMaxVars) {
    throw std::length_error("too many symbols; cannot intern '" + std::string(name) + "'");
  }
  reg.names.emplace_back(name);
  return Var(static_cast<std::uint8_t>(reg.names.size() - 1));
}

bool Var::lookup(std::string_view name, Var& out) {
  auto& reg = registry();
  std::lock_guard lock(reg.mutex);
  for (std::size_t i = 0; i < reg.names.size(); ++i) {
    if (reg.names[i] == name) {
      out = Var(static_cast<std::uint8_t>(i));
      return true;
    }
  }
  return false;
}

std::string Var::name() const {
  auto& reg = registry();
  std::lock_guard lock(reg.mutex);
  if (index_ < reg.names.size()) return reg.names[index_];
  return "v" + std::to_string(index_);
}

}  // namespace airycoef
