#ifndef ARCHREC_CORE_ERROR_HPP
#define ARCHREC_CORE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace archrec {

// Bad user input: unreadable files, malformed JSON, schema violations.
// The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Failure inside a pipeline stage on otherwise well-formed input.
// The CLI maps this to exit code 1.
class PipelineError : public std::runtime_error {
public:
    explicit PipelineError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace archrec

#endif
