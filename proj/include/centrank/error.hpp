#ifndef CENTRANK_ERROR_HPP_
#define CENTRANK_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace centrank {

enum class ErrorCode {
    id_out_of_range,
    self_loop,
    duplicate_edge,
    not_square,
    negative_entry,
    nonzero_diagonal,
    parse,
    invalid_probability,
    non_convergence,
    zero_matrix,
    non_finite_score,
    length_mismatch,
    degenerate_ranking,
    zero_variance,
    invalid_k,
    invalid_argument,
    io,
};

const char *error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string &message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// Iteration budget exhausted before the residual dropped below tolerance.
class NonConvergenceError : public Error {
public:
    NonConvergenceError(const std::string &message, int iterations, double residual)
        : Error(ErrorCode::non_convergence, message),
          iterations_(iterations),
          residual_(residual) {}

    int iterations() const { return iterations_; }
    double residual() const { return residual_; }

private:
    int iterations_;
    double residual_;
};

} // namespace centrank

#endif // CENTRANK_ERROR_HPP_
