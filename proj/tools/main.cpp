#include "intpart/cli.hpp"

int main(int argc, char** argv) { return intpart::cli::run(argc, argv); }
