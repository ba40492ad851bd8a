#include <cstdio>

int main() {
    std::puts("drabi: CLI wiring pending");
    return 0;
}
