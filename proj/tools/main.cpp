#include "rhydro/cli.hpp"

int main(int argc, char** argv) { return rhydro::cli::run(argc, argv); }
