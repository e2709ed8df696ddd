#pragma once

namespace pns {

/// Which kernel family runs an operation. Both produce bitwise-identical results.
enum class Exec {
  serial,    ///< reference loops
  parallel,  ///< OpenMP loops
};

}  // namespace pns
