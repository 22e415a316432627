#include "enumkit/cli/run.hpp"

int main(int argc, char** argv) { return enumkit::cli::run(argc, argv); }
