#include <doctest.h>
#include <set>
