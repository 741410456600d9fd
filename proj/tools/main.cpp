#include "cli.hpp"

int main(int argc, char** argv) { return ciqw::cli::run_cli(argc, argv); }
