#include "bes/cli.hpp"

int main(int argc, char** argv) { return bes::cli::run(argc, argv); }
