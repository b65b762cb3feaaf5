// Header-only module; this translation unit just checks the header
// compiles standalone.
#include "manin/triple.hpp"
