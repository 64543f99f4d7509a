#include "cli.hpp"

int main(int argc, char** argv) { return oddfactor::cli::run(argc, argv); }
