#include "cli.hpp"

int main(int argc, char **argv) {
  return almostperm::cli::run(argc, argv, std::cout, std::cerr);
}
