#ifndef SPINEVO_ERRORS_HPP
#define SPINEVO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spinevo {

// Quadrature non-convergence, vanishing denominators, oracle route
// disagreement.  Carries diagnostics in the message.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace spinevo

#endif
