#pragma once

#include <stdexcept>
#include <string>

namespace chromata {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct NonSimpleError : std::runtime_error {
    explicit NonSimpleError(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidParam : std::invalid_argument {
    explicit InvalidParam(const std::string& what) : std::invalid_argument(what) {}
};

struct SameColor : std::invalid_argument {
    explicit SameColor(const std::string& what) : std::invalid_argument(what) {}
};

struct EdgeAlreadyColored : std::logic_error {
    explicit EdgeAlreadyColored(const std::string& what) : std::logic_error(what) {}
};

struct NotCandidate : std::logic_error {
    explicit NotCandidate(const std::string& what) : std::logic_error(what) {}
};

struct NonMaximalSwap : std::logic_error {
    explicit NonMaximalSwap(const std::string& what) : std::logic_error(what) {}
};

struct PaletteExceeded : std::runtime_error {
    explicit PaletteExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct InfeasiblePalette : std::runtime_error {
    explicit InfeasiblePalette(const std::string& what) : std::runtime_error(what) {}
};

struct DisconnectedInput : std::runtime_error {
    explicit DisconnectedInput(const std::string& what) : std::runtime_error(what) {}
};

struct AmbiguousRuleMatch : std::runtime_error {
    explicit AmbiguousRuleMatch(const std::string& what) : std::runtime_error(what) {}
};

struct ConstraintCatalogIncomplete : std::runtime_error {
    explicit ConstraintCatalogIncomplete(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownLemmaId : std::invalid_argument {
    explicit UnknownLemmaId(const std::string& what) : std::invalid_argument(what) {}
};

struct PreconditionUnverified : std::logic_error {
    explicit PreconditionUnverified(const std::string& what) : std::logic_error(what) {}
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace chromata
