#include "cli.hpp"

int main(int argc, char** argv) { return tanhscatter::cli::run(argc, argv); }
