#include "fpg/cli/run.hpp"

int main(int argc, char** argv) { return fpg::cli::run(argc, argv); }
