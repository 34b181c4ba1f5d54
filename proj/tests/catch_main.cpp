// Default Catch2 main comes from the amalgamated translation unit.
#include <catch2/catch_amalgamated.hpp>
