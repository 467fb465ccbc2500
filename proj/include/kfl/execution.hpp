#pragma once

namespace kfl {

/// Selects between the serial reference kernel and the OpenMP kernel.
/// Both produce identical results; the serial path is kept for testing.
enum class Execution { Serial, Parallel };

}  // namespace kfl
