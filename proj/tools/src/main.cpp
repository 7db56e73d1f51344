#include "cli.hpp"

int main(int argc, char** argv) { return spinfer::cli::run(argc, argv); }
