#ifndef HGW_GUARD_HGW_ERRORS_HH
#define HGW_GUARD_HGW_ERRORS_HH 1

#include <stdexcept>
#include <string>

namespace hgw
{
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

#define HGW_DECLARE_ERROR(name) \
    class name : public Error   \
    {                           \
    public:                     \
        using Error::Error;     \
    }

    HGW_DECLARE_ERROR(InvalidFamily);
    HGW_DECLARE_ERROR(InvalidGraph);
    HGW_DECLARE_ERROR(InvalidType);
    HGW_DECLARE_ERROR(IndexOutOfRange);
    HGW_DECLARE_ERROR(ArityTooLarge);
    HGW_DECLARE_ERROR(ArityMismatch);
    HGW_DECLARE_ERROR(IncoherentSpec);
    HGW_DECLARE_ERROR(SchemaError);
    HGW_DECLARE_ERROR(NotSimple);
    HGW_DECLARE_ERROR(NotMinimal);
    HGW_DECLARE_ERROR(NotRealizable);
    HGW_DECLARE_ERROR(TooManyVariables);
    HGW_DECLARE_ERROR(TooFewVariables);
    HGW_DECLARE_ERROR(MinimalityMismatch);
    HGW_DECLARE_ERROR(MTooSmall);
    HGW_DECLARE_ERROR(TooLarge);
    HGW_DECLARE_ERROR(InvalidParameters);

#undef HGW_DECLARE_ERROR

    /// Malformed input text. Carries the line and column of the failure when known
    /// (zero when not).
    class ParseError : public Error
    {
    private:
        std::size_t _line, _column;

    public:
        ParseError(const std::string & message, std::size_t line = 0, std::size_t column = 0);

        [[nodiscard]] auto line() const noexcept -> std::size_t { return _line; }
        [[nodiscard]] auto column() const noexcept -> std::size_t { return _column; }
    };
}

#endif
