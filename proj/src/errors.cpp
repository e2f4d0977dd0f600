#include <bdom/errors.hpp>

namespace bdom
{
    using std::to_string;

    auto to_string(ErrorKind kind) -> std::string_view
    {
        switch (kind) {
            case ErrorKind::invalid_input: return "InvalidInput";
            case ErrorKind::pair_coverage_violation: return "PairCoverageViolation";
            case ErrorKind::block_size_violation: return "BlockSizeViolation";
            case ErrorKind::trivial_design: return "TrivialDesign";
            case ErrorKind::not_symmetric: return "NotSymmetric";
            case ErrorKind::degenerate_residual: return "DegenerateResidual";
            case ErrorKind::degenerate_derived: return "DegenerateDerived";
            case ErrorKind::not_prime: return "NotPrime";
            case ErrorKind::bad_order: return "BadOrder";
            case ErrorKind::difference_coverage_violation: return "DifferenceCoverageViolation";
            case ErrorKind::not_steiner: return "NotSteiner";
            case ErrorKind::not_sts: return "NotSts";
            case ErrorKind::girth_too_small: return "GirthTooSmall";
            case ErrorKind::inconsistent_tau_beta: return "InconsistentTauBeta";
            case ErrorKind::instance_too_large: return "InstanceTooLarge";
            case ErrorKind::budget_exceeded: return "BudgetExceeded";
            case ErrorKind::incomplete_enumeration: return "IncompleteEnumeration";
            case ErrorKind::invalid_configuration: return "InvalidConfiguration";
            case ErrorKind::syntax_error: return "SyntaxError";
        }
        return "Unknown";
    }
}
