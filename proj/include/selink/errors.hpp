// Error hierarchy. usage_error maps to CLI exit code 1, inconsistency_error
// (a computed quantity violating a structural invariant, e.g. a non-integer
// genus) maps to exit code 2.
#pragma once

#include <stdexcept>
#include <string>

namespace selink {

class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

class overflow_error : public error {
public:
    explicit overflow_error(const std::string& msg) : error(msg) {}
};

class usage_error : public error {
public:
    explicit usage_error(const std::string& msg) : error(msg) {}
};

class inconsistency_error : public error {
public:
    explicit inconsistency_error(const std::string& msg) : error(msg) {}
};

}  // namespace selink
