#pragma once

#include <iosfwd>
#include <string>

#include "spssot/nn.hpp"

namespace spssot {

// Versioned flat binary: magic, version, layer counts, then per layer the
// shape followed by row-major 64-bit weights and the bias vector.
void save_checkpoint(const ModelParams& params, const std::string& path);
ModelParams load_checkpoint(const std::string& path);

// Text rendering of the same content, for diffing.
void dump_checkpoint_text(const ModelParams& params, std::ostream& out);

}  // namespace spssot
