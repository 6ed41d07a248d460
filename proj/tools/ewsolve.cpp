#include "ew/cli.hpp"

int main(int argc, char** argv) { return ew::cli::main_entry(argc, argv); }
