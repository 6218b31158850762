#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <string>
#include <string_view>
#include <vector>

#include "support.hpp"

int main(int argc, char** argv) {
  std::vector<char*> rest;
  for (int i = 0; i < argc; ++i) {
    const std::string_view arg = argv[i];
    if (arg.rfind("--seed=", 0) == 0) {
      test::seed() = std::stoull(std::string(arg.substr(7)));
    } else {
      rest.push_back(argv[i]);
    }
  }
  doctest::Context ctx;
  ctx.applyCommandLine(static_cast<int>(rest.size()), rest.data());
  return ctx.run();
}
