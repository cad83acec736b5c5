#pragma once

// Minimal check/report harness shared by the test executables. Each test
// binary defines TESTKIT_MAIN-style sections via RUN() and returns the number
// of failed checks as its exit code.

#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace testkit {

inline int& failures() {
    static int n = 0;
    return n;
}
inline int& checks() {
    static int n = 0;
    return n;
}

inline void fail(const std::string& what, const char* file, int line) {
    ++failures();
    std::cout << "FAIL " << file << ":" << line << "  " << what << "\n";
}

#define CHECK(cond)                                                          \
    do {                                                                     \
        ++testkit::checks();                                                 \
        if (!(cond)) testkit::fail(#cond, __FILE__, __LINE__);               \
    } while (0)

#define CHECK_MSG(cond, msg)                                                 \
    do {                                                                     \
        ++testkit::checks();                                                 \
        if (!(cond)) {                                                       \
            std::ostringstream os__;                                         \
            os__ << #cond << "  [" << msg << "]";                            \
            testkit::fail(os__.str(), __FILE__, __LINE__);                   \
        }                                                                    \
    } while (0)

#define CHECK_EQ(a, b)                                                       \
    do {                                                                     \
        ++testkit::checks();                                                 \
        if (!((a) == (b))) testkit::fail(#a " == " #b, __FILE__, __LINE__);  \
    } while (0)

#define CHECK_THROWS(expr, ExType)                                           \
    do {                                                                     \
        ++testkit::checks();                                                 \
        bool caught__ = false;                                               \
        try {                                                                \
            (void)(expr);                                                    \
        } catch (const ExType&) {                                            \
            caught__ = true;                                                 \
        } catch (...) {                                                      \
        }                                                                    \
        if (!caught__)                                                       \
            testkit::fail(#expr " should throw " #ExType, __FILE__, __LINE__); \
    } while (0)

inline void run(const char* name, const std::function<void()>& body) {
    int before = failures();
    try {
        body();
    } catch (const std::exception& e) {
        ++failures();
        std::cout << "FAIL " << name << "  (exception: " << e.what() << ")\n";
        return;
    }
    std::cout << (failures() == before ? "ok   " : "FAIL ") << name << "\n";
}

#define RUN(name, ...) testkit::run(name, [&]() __VA_ARGS__)

inline int summary(const char* suite) {
    std::cout << suite << ": " << checks() << " checks, " << failures()
              << " failures\n";
    return failures() == 0 ? 0 : 1;
}

} // namespace testkit
