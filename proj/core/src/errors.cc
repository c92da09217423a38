#include <hgw/errors.hh>

using std::size_t;
using std::string;

namespace hgw
{
    ParseError::ParseError(const string & message, size_t line, size_t column) :
        Error(line == 0 ? "parse error: " + message
                        : "parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        _line(line),
        _column(column)
    {
    }
}
