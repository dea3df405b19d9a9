#include "cli.hpp"

int main(int argc, char** argv) { return cyclelab::cli::main_impl(argc, argv); }
