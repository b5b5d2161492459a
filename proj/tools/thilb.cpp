#include "thilb/local_equations.hpp"
int main() { return 0; }
