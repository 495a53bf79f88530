#include "entropy_extremes/cli.hpp"

int main(int argc, char** argv) { return entropy_extremes::cli::run(argc, argv); }
