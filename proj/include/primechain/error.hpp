#pragma once

#include <stdexcept>
#include <string>

namespace primechain {

enum class ErrorKind { capacity, domain, integrity, numerical, infeasible, censoring };

inline const char* to_string(ErrorKind k)
{
    switch (k) {
    case ErrorKind::capacity: return "capacity";
    case ErrorKind::domain: return "domain";
    case ErrorKind::integrity: return "integrity";
    case ErrorKind::numerical: return "numerical";
    case ErrorKind::infeasible: return "infeasible";
    case ErrorKind::censoring: return "censoring";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

struct CapacityError : Error {
    explicit CapacityError(const std::string& w) : Error(ErrorKind::capacity, w) {}
};
struct DomainError : Error {
    explicit DomainError(const std::string& w) : Error(ErrorKind::domain, w) {}
};
struct IntegrityError : Error {
    explicit IntegrityError(const std::string& w) : Error(ErrorKind::integrity, w) {}
};
struct NumericalError : Error {
    explicit NumericalError(const std::string& w) : Error(ErrorKind::numerical, w) {}
};
struct InfeasibleError : Error {
    explicit InfeasibleError(const std::string& w) : Error(ErrorKind::infeasible, w) {}
};
struct CensoringError : Error {
    explicit CensoringError(const std::string& w) : Error(ErrorKind::censoring, w) {}
};

} // namespace primechain
