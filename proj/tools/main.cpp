#include "bdm/cli.hpp"

int main(int argc, char **argv) { return bdm::cli::run(argc, argv); }
