#pragma once

namespace regrade {

// Execution policy for the data-parallel sweeps (table validation, radical
// Gram assembly, per-tuple codimension ranks). The serial path is the
// reference implementation; both must produce identical results.
enum class Exec { serial, parallel };

}  // namespace regrade
