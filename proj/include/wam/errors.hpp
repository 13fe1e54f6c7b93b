#ifndef WAM_ERRORS_HPP
#define WAM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wam {

/// Malformed user input: bad descriptors, inconsistent dimensions, corrupt
/// data files. Maps to exit code 1.
class InputError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// A configured size or search cap would be exceeded. Exit code 2.
class ResourceCapError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed (orthogonality, lift bounds, rank).
/// Exit code 3.
class InvariantError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

} // namespace wam

#endif // WAM_ERRORS_HPP
