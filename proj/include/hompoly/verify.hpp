#ifndef HOMPOLY_VERIFY_HPP
#define HOMPOLY_VERIFY_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hompoly/hom.hpp"

namespace hompoly {

/// Source and target of a claim instance; claims that need one polytope use the target.
struct ClaimParams
{
    StandardKind source = StandardKind::simplex;
    std::size_t m = 1;
    StandardKind target = StandardKind::simplex;
    std::size_t n = 1;

    /// "cube:2 -> simplex:3"
    std::string str() const;
    friend bool operator==(const ClaimParams&, const ClaimParams&) = default;
};

struct VerificationResult
{
    std::string claim_id;
    ClaimParams params;
    bool passed = false;
    std::string detail;                 // what was checked, with the counts involved
    std::optional<std::string> witness; // always present on failure
    double elapsed_seconds = 0;
};

struct ClaimInfo
{
    std::string id;
    std::string statement;
    std::vector<ClaimParams> core;
    std::vector<ClaimParams> extended;
};

/// Every registered claim with the parameter sets of each suite level.
const std::vector<ClaimInfo>& claim_registry();
const ClaimInfo& find_claim(const std::string& id);

/**
 * Runs one claim instance. Throws std::invalid_argument for an unknown
 * claim or parameters outside the claim's scope; a failed check is a
 * result, not an exception.
 */
VerificationResult run_claim(const std::string& claim_id, const ClaimParams& params);

enum class SuiteLevel { core, extended };

/// Core instances, plus the extended ones for SuiteLevel::extended; registry order.
std::vector<VerificationResult> run_suite(SuiteLevel level, std::size_t threads = 1);

/// Enumerated vertex maps of Hom(source, target), memoized for the process.
struct EnumeratedHom
{
    HomPolytope hom;
    std::vector<AffineMapRep> maps;
};
std::shared_ptr<const EnumeratedHom> enumerate_standard_hom(StandardKind source, std::size_t m, StandardKind target,
                                                            std::size_t n);

/// 2n points in n antipodal pairs about `center` spanning R^n.
bool is_crosspolytope_image(const Polytope& image, const QVector& center);

std::string describe(const AffineMapRep& f);

} // namespace hompoly

#endif // HOMPOLY_VERIFY_HPP
