#include "cli.hpp"

int main(int argc, char** argv) { return illtp::cli::run_main(argc, argv); }
