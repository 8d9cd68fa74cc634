#include "argmine/cli.hpp"

int main(int argc, char** argv) { return argmine::cli::run(argc, argv); }
