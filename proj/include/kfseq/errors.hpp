#pragma once

#include <stdexcept>

namespace kfseq {

// Thrown when a request would exceed a configured materialization cap.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Materialization cap for partition / stack / point-block levels.
// Defaults to 25 (t_25 = 196418 intervals); the KFSEQ_MAX_LEVEL
// environment variable overrides it.
unsigned level_cap();

} // namespace kfseq
