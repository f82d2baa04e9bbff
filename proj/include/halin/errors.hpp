#ifndef HALIN_ERRORS_HPP
#define HALIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace halin {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// graph / decomposition
struct TooSmallError : Error {
    using Error::Error;
};
struct NotTucError : Error {
    using Error::Error;
};
struct NotInternalError : Error {
    using Error::Error;
};
struct IsWheelError : Error {
    using Error::Error;
};

// geometry
struct DegenerateShapeError : Error {
    using Error::Error;
};
struct DegenerateHeightError : Error {
    using Error::Error;
};
struct MissingShapeError : Error {
    using Error::Error;
};

// search
struct GridTooSmallError : Error {
    using Error::Error;
};

// file formats; line is 1-based, 0 when not tied to a line
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& msg)
        : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};
struct SyntaxError : ParseError {
    using ParseError::ParseError;
};
struct DuplicateEdgeError : ParseError {
    using ParseError::ParseError;
};
struct IdOutOfRangeError : ParseError {
    using ParseError::ParseError;
};

}  // namespace halin

#endif
