#pragma once

#include <span>

#include "gcs/core.hpp"

namespace gcs::detail {

// In-place unnormalized DFT; forward uses exp(-2*pi*i*m*j/n).
void dft_forward(std::span<Complex> data);

// In-place inverse DFT scaled by 1/n, so dft_inverse(dft_forward(x)) == x.
void dft_inverse(std::span<Complex> data);

}  // namespace gcs::detail
