#pragma once

#include <doctest.h>

#include "tms/errors.hpp"

#include <utility>

// Runs fn and checks that it throws a tms::Error carrying the expected code.
template <typename Fn>
void check_throws_code(tms::ErrorCode expected, Fn&& fn) {
    bool threw = false;
    try {
        std::forward<Fn>(fn)();
    } catch (const tms::Error& e) {
        threw = true;
        CHECK_MESSAGE(e.code() == expected,
                      "expected ", tms::error_code_name(expected), ", got ",
                      tms::error_code_name(e.code()), ": ", e.what());
    }
    CHECK_MESSAGE(threw, "expected error ", tms::error_code_name(expected));
}
