#pragma once

// Plain-text storage of enumerated generator lists.
//
//   polar-instance 1
//   family C
//   rank 2
//   q 2
//   field-order 2
//   modulus 0 1 1        (coefficients of the defining polynomial, low degree first)
//   form alternating 4 0 (kind, dim(V), delta)
//   isotropic-counts 1 15 15
//   generators 15
//   1000 0010            (one generator per line: RREF rows, one hex digit per
//   ...                   element, two when the field has more than 16 elements)

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>

#include "polar/oracle/polar_space.hpp"

namespace polar::oracle {

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void write_instance(std::ostream& out, const PolarSpaceInstance& instance);
PolarSpaceInstance read_instance(std::istream& in);

// Loads <dir>/<family>-n<rank>-q<q>.txt when present, otherwise enumerates
// and writes it. Without a directory this is plain enumeration.
PolarSpaceInstance load_or_enumerate(const SchemeSpec& spec, const std::optional<std::filesystem::path>& cache_dir,
                                     const EnumerateOptions& options = {});

}  // namespace polar::oracle
