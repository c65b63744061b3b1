#ifndef HYPEREXT_ERRORS_HPP
#define HYPEREXT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hyperext {

/// Base class for every error raised by the engine itself.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A computation could not be completed within the configured caps.
class Inconclusive : public Error {
public:
    using Error::Error;
};

class DegreeCapExceeded : public Inconclusive {
public:
    DegreeCapExceeded(int degree, int cap)
        : Inconclusive("degree cap exceeded: S-pair of degree " + std::to_string(degree) +
                       " > cap " + std::to_string(cap)),
          degree_(degree), cap_(cap) {}
    int degree() const noexcept { return degree_; }
    int cap() const noexcept { return cap_; }

private:
    int degree_;
    int cap_;
};

/// A hypothesis that must be verified before an invariant is defined failed
/// (for instance an infinite length inside an Euler characteristic).
class HypothesisViolation : public Error {
public:
    using Error::Error;
};

/// Two maps handed to homology_at do not compose to zero.
class InvalidComplex : public Error {
public:
    using Error::Error;
};

/// Something theory guarantees did not happen; always a defect in this library.
class EngineBug : public Error {
public:
    using Error::Error;
};

}  // namespace hyperext

#endif
