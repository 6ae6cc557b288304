#include "sbrauer/cli.hpp"

int main(int argc, char** argv) { return sbrauer::cli::main(argc, argv); }
