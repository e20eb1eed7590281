#pragma once

#include "pm/kernels.hpp"

namespace pm::kernels::detail {

/// The AVX2 set compiled into this build, or nullptr. Does not probe the CPU.
const KernelSet* avx2_compiled();

}  // namespace pm::kernels::detail
