// placeholder main; the full command set lands with the mesh module
#include <cstdio>

int main() {
    std::puts("tpms: under construction");
    return 0;
}
