#include <iostream>

#include "cli_app.hpp"

int main(int argc, char** argv) {
  return unicomm::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
