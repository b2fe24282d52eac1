#include "symwalk/cli.hpp"

int main(int argc, char** argv) { return symwalk::run(argc, argv); }
