#include "smcov/cli.hpp"

int main(int argc, char** argv) { return smcov::cli::run(argc, argv); }
