#ifndef NILALG_ERRORS_HPP
#define NILALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nilalg {

/// Base class of every precondition failure raised by the library.
/// `kind()` is the stable, scriptable error name printed by the CLI.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string &what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string &kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

#define NILALG_DEFINE_ERROR(Name)                                              \
  class Name : public Error {                                                  \
  public:                                                                      \
    explicit Name(const std::string &what) : Error(#Name, what) {}             \
  }

NILALG_DEFINE_ERROR(ParseError);
NILALG_DEFINE_ERROR(DimensionMismatch);
NILALG_DEFINE_ERROR(NotNilpotent);
NILALG_DEFINE_ERROR(NotLie);
NILALG_DEFINE_ERROR(SingularBasisChange);
NILALG_DEFINE_ERROR(DegreeOutOfRange);
NILALG_DEFINE_ERROR(Not2Step);
NILALG_DEFINE_ERROR(OrderMismatch);
NILALG_DEFINE_ERROR(DataCorrupt);
NILALG_DEFINE_ERROR(CharSeqMismatch);
NILALG_DEFINE_ERROR(BaseNot2Step);
NILALG_DEFINE_ERROR(IndexOutOfRange);
NILALG_DEFINE_ERROR(InvalidArgument);

#undef NILALG_DEFINE_ERROR

} // namespace nilalg

#endif
