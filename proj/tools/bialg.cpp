#include "bialg/cli.hpp"

#include <cstdio>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string out;
    int code = bialg::dispatch(args, out);
    std::fputs(out.c_str(), stdout);
    return code;
}
