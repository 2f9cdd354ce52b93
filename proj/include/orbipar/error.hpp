#pragma once

#include <stdexcept>
#include <string>

namespace orbipar {

enum class errc {
  order_bound,
  not_an_action,
  relation_violation,
  infinite_group,
  product_not_one,
  order_violation,
  not_generating,
  unsupported_genus,
  incompatible_enrichment,
  not_normal,
  group_mismatch,
  orbifold_mismatch,
  closure_mismatch,
  denominator_mismatch,
  non_integral,
  negative_multiplicity,
  incomplete_input,
  path_mismatch,
  search_exhausted,
  bad_input,
  internal_check,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::order_bound: return "OrderBound";
    case errc::not_an_action: return "NotAnAction";
    case errc::relation_violation: return "RelationViolation";
    case errc::infinite_group: return "InfiniteGroup";
    case errc::product_not_one: return "ProductNotOne";
    case errc::order_violation: return "OrderViolation";
    case errc::not_generating: return "NotGenerating";
    case errc::unsupported_genus: return "UnsupportedGenus";
    case errc::incompatible_enrichment: return "IncompatibleEnrichment";
    case errc::not_normal: return "NotNormal";
    case errc::group_mismatch: return "GroupMismatch";
    case errc::orbifold_mismatch: return "OrbifoldMismatch";
    case errc::closure_mismatch: return "ClosureMismatch";
    case errc::denominator_mismatch: return "DenominatorMismatch";
    case errc::non_integral: return "NonIntegral";
    case errc::negative_multiplicity: return "NegativeMultiplicity";
    case errc::incomplete_input: return "IncompleteInput";
    case errc::path_mismatch: return "PathMismatch";
    case errc::search_exhausted: return "SearchExhausted";
    case errc::bad_input: return "BadInput";
    case errc::internal_check: return "InternalCheck";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

inline void check(bool cond, errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

// Internal consistency assertions. These guard identities the library relies
// on (dual-route computations, conservation laws); a failure is a bug, not a
// user error.
inline void internal_check(bool cond, const std::string& what) {
  if (!cond) fail(errc::internal_check, what);
}

}  // namespace orbipar
