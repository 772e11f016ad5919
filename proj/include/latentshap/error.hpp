#pragma once

#include <stdexcept>
#include <string>

namespace latentshap {

/// Base class for every error thrown by this library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid argument values: non-finite inputs, bad ranges, space mismatches.
class validation_error : public error {
public:
    using error::error;
};

/// Shape mismatches between vectors/matrices.
class dimension_error : public validation_error {
public:
    using validation_error::validation_error;
};

/// Kernel weight requested for the empty or full coalition.
class excluded_coalition_error : public validation_error {
public:
    using validation_error::validation_error;
};

/// Cosine similarity of a zero vector.
class undefined_similarity_error : public validation_error {
public:
    using validation_error::validation_error;
};

/// Rank-deficient or numerically unusable linear system.
class conditioning_error : public error {
public:
    using error::error;
};

/// A required capability is missing (e.g. transform has no inverse).
class capability_error : public error {
public:
    using error::error;
};

/// Black-box model misbehaved (wrong output length, non-finite outputs).
class model_error : public error {
public:
    using error::error;
};

/// Training failed to reach the required quality.
class training_error : public error {
public:
    using error::error;
};

/// Problem size exceeds a hard cap (brute-force oracle).
class size_cap_error : public validation_error {
public:
    using validation_error::validation_error;
};

/// Subprocess model adapter failure; carries captured stderr when available.
class external_model_error : public error {
public:
    explicit external_model_error(const std::string& what, std::string child_stderr = {})
        : error(child_stderr.empty() ? what : what + " [child stderr: " + child_stderr + "]"),
          stderr_text(std::move(child_stderr)) {}
    std::string stderr_text;
};

/// File / stream I/O failure; message includes the path.
class io_error : public error {
public:
    using error::error;
};

/// Bad experiment / CLI configuration.
class config_error : public validation_error {
public:
    using validation_error::validation_error;
};

}  // namespace latentshap
