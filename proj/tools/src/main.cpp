#include <exception>
#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  alcovekit::cli::Config cfg;
  try {
    cfg = alcovekit::cli::Config::from_environment();
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
  auto res = alcovekit::cli::run_cli({argv + 1, argv + argc}, cfg);
  std::cout << res.out;
  std::cerr << res.err;
  return res.exit_code;
}
