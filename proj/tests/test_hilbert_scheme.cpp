#include "doctest.h"
#include "thilb/hilbert_scheme.hpp"
TEST_CASE("placeholder") { CHECK(true); }
