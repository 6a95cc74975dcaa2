#include "suzree/cli.hpp"

int main(int argc, char** argv) { return suzree::cli::run(argc, argv); }
