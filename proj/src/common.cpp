#include "ctclass/common.hpp"

#include <cstdio>

namespace ctclass {

void default_warn(std::string_view message) {
  std::fprintf(stderr, "[warn] %.*s\n", static_cast<int>(message.size()), message.data());
}

}  // namespace ctclass
