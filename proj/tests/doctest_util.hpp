#pragma once

#include <doctest.h>

#include "pcf/error.hpp"

// Asserts that an expression throws pcf::Error with the given kind.
#define CHECK_KIND(expr, k)                                       \
  do {                                                            \
    bool thrown_ = false;                                         \
    try {                                                         \
      (void)(expr);                                               \
    } catch (const pcf::Error& e_) {                              \
      thrown_ = true;                                             \
      CHECK_MESSAGE(e_.kind() == pcf::ErrorKind::k, e_.what());   \
    }                                                             \
    CHECK_MESSAGE(thrown_, #expr " did not throw");               \
  } while (0)
