#pragma once

#include <cstddef>
#include <vector>

namespace weilheis {

struct CodeHash {
  std::size_t operator()(const std::vector<int>& c) const noexcept {
    std::size_t h = 14695981039346656037ull;
    for (int x : c) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace weilheis
