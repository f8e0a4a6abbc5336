#include "higgs/cli.hpp"

int main(int argc, char** argv) { return higgs::cli::run(argc, argv); }
