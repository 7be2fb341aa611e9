#include <cstdio>

int main() {
    std::puts("findim: not wired up yet");
    return 2;
}
