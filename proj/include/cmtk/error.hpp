#pragma once

#include <stdexcept>
#include <string>

namespace cmtk {

/// Invalid user input or violated operation precondition (frame mismatch,
/// malformed CM type, bad config...).  The CLI maps this to exit code 2.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cmtk
