#pragma once

#include <stdexcept>
#include <string>

namespace oriental {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidCharacter : Error { using Error::Error; };
struct ArityMismatch    : Error { using Error::Error; };
struct NotACell         : Error { using Error::Error; };
struct EmptyInput       : Error { using Error::Error; };
struct ParseError       : Error { using Error::Error; };
struct StructureError   : Error { using Error::Error; };
struct NotDistinguished : Error { using Error::Error; };
struct LevelMismatch    : Error { using Error::Error; };
struct MalformedForm    : Error { using Error::Error; };
struct HasZeros         : Error { using Error::Error; };

} // namespace oriental
