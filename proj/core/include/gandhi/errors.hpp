#ifndef GANDHI_ERRORS_HPP
#define GANDHI_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gandhi {

// Exact strategies refuse work whose primorial exceeds the configured bit
// budget. required_bits names what would have been needed.
class resource_error : public std::runtime_error {
public:
    resource_error(const std::string& what, std::uint64_t required_bits)
        : std::runtime_error(what), required_bits_(required_bits) {}

    std::uint64_t required_bits() const noexcept { return required_bits_; }

private:
    std::uint64_t required_bits_;
};

// Requested fixed-point precision cannot represent the quantity at all
// (e.g. reciprocal_mersenne with B < d).
class precision_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A formula result disagreed with the sieve oracle. Signals an
// implementation bug, never an expected runtime condition.
class oracle_mismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace gandhi

#endif
