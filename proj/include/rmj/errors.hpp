#pragma once

#include <stdexcept>
#include <string>

namespace rmj {

// Bad user-supplied input (indices out of range, malformed files, ...).
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A requested computation exceeds a configured resource cap.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal cross-check failed (non-integral transform, bad restriction image, ...).
class verification_error : public std::runtime_error {
public:
    explicit verification_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace rmj
