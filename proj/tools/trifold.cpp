#include "trifold/cli.hpp"

int main(int argc, char** argv) { return trifold::cli::run(argc, argv); }
