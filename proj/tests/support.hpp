#pragma once

#include <doctest.h>

#include "corelate/error.hpp"

// Checks that `expr` throws corelate::Error of the given kind.
#define CHECK_KIND(expr, k)                                \
  do {                                                     \
    bool thrown_ = false;                                  \
    try {                                                  \
      (void)(expr);                                        \
    } catch (const corelate::Error& e_) {                  \
      thrown_ = true;                                      \
      CHECK_MESSAGE(e_.kind() == (k), e_.what());          \
    }                                                      \
    CHECK_MESSAGE(thrown_, "expected an error from " #expr); \
  } while (0)
