#include "extalg/errors.hpp"

namespace extalg {

const char* errc_name(errc c) {
    switch (c) {
    case errc::size_cap_exceeded: return "SizeCapExceeded";
    case errc::invalid_component: return "InvalidComponent";
    case errc::not_subring: return "NotSubring";
    case errc::mixed_owners: return "MixedOwners";
    case errc::not_maximal: return "NotMaximal";
    case errc::not_prime: return "NotPrime";
    case errc::not_invertible: return "NotInvertible";
    case errc::not_integral: return "NotIntegral";
    case errc::not_comaximal: return "NotComaximal";
    case errc::not_invertible_member: return "NotInvertibleMember";
    case errc::no_regular_subideal: return "NoRegularSubideal";
    case errc::not_almost_prufer: return "NotAlmostPrufer";
    case errc::not_prufer_ring: return "NotPruferRing";
    case errc::partial_assignment: return "PartialAssignment";
    case errc::empty_gamma: return "EmptyGamma";
    case errc::hypotheses_fail: return "HypothesesFail";
    case errc::bound_too_small: return "BoundTooSmall";
    case errc::factor_bound_exceeded: return "FactorBoundExceeded";
    case errc::parse_error: return "ParseError";
    case errc::config_invalid: return "ConfigInvalid";
    }
    return "UnknownError";
}

} // namespace extalg
