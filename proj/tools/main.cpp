#include <iostream>

int main() {
    std::cout << "troplin cli placeholder\n";
    return 0;
}
