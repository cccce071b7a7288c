#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quadlattice {

enum class ErrorKind {
    NotSquareFree,
    InvalidFieldParameter,
    InvalidConductor,
    ZeroIdeal,
    RingMismatch,
    NotPrimary,
    IsFO,
    IterationCapExceeded,
    BudgetExceeded,
    NotNested,
    NotBasicElement,
    NotAnIdeal,
    Overflow,
};

constexpr std::string_view error_kind_name(ErrorKind k)
{
    switch (k) {
    case ErrorKind::NotSquareFree: return "NotSquareFree";
    case ErrorKind::InvalidFieldParameter: return "InvalidFieldParameter";
    case ErrorKind::InvalidConductor: return "InvalidConductor";
    case ErrorKind::ZeroIdeal: return "ZeroIdeal";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::NotPrimary: return "NotPrimary";
    case ErrorKind::IsFO: return "IsFO";
    case ErrorKind::IterationCapExceeded: return "IterationCapExceeded";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotNested: return "NotNested";
    case ErrorKind::NotBasicElement: return "NotBasicElement";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::Overflow: return "Overflow";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
    ErrorKind kind_;

  public:
    Error(ErrorKind kind, std::string const& detail)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + detail), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }
};

} // namespace quadlattice
