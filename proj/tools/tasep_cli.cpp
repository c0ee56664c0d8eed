#include "tasep/cli.hpp"

int main(int argc, char** argv) { return tasep::cli::run(argc, argv); }
