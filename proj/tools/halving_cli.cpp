#include <halving/cli.hpp>

int main(int argc, char** argv) {
  return halving::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
