#include <cstdlib>
#include <iostream>

#include "pseudoconvex/cli.hpp"

int main(int argc, char** argv) {
  pseudoconvex::cli::Environment env;
  if (const char* v = std::getenv("PSEUDOCONVEX_MAX_N")) env.max_n = v;
  return pseudoconvex::cli::run({argv + 1, argv + argc}, std::cin, std::cout, std::cerr, env);
}
