#include "sset/cli.hpp"

int main(int argc, char** argv) { return sset::cli_main(argc, argv); }
