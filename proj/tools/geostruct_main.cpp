#include "geostruct/cli.hpp"

int main(int argc, char** argv) { return geostruct::run(argc, argv); }
