#pragma once

namespace kh {

// Execution policy for the data-parallel kernels. Every parallel kernel has a
// serial twin used as reference in the test suite; results are summed in a
// fixed order either way, so the two paths agree to the last bit.
enum class Exec { serial, parallel };

}  // namespace kh
