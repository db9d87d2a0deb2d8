#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "qweyl/charvariety.hpp"
#include "qweyl/groebner.hpp"
#include "qweyl/knots.hpp"

namespace qweyl {

using Json = nlohmann::ordered_json;

struct VerifyResult {
    std::string id;
    std::string title;
    std::string status = "pass"; // pass | fail | exceeded
    double seconds = 0;
    Json details = Json::object();

    bool passed() const { return status == "pass"; }
};

/// A1: the unknot recursion generators annihilate the unknot function,
/// |lambda| <= radius, exactly.
VerifyResult verify_unknot_recursion(int radius = 30);

/// A2: sum of shifts minus [n] annihilates the sl(n) unknot function for
/// n = 2, 3, 4.
VerifyResult verify_rec_unknot_sln(int radius = 6);

/// A3: quantized vs Goldman bracket sweeps over the built-in algebra/range
/// table (or one algebra when `algebra` is nonempty).
VerifyResult verify_goldman(int workers = 1, const std::string& algebra = "", int range = -1);

/// A4: classical limits of the built-in recursion generators generate the
/// same ideals as the listed classical forms.
VerifyResult verify_iva();

/// A5: annihilation of the independent colored-Jones oracle by the trefoil
/// generators, with the framing/misprint search.
VerifyResult verify_trefoil_annihilation(int lambda_max = 15);

/// A6: membership, non-membership, point-probe and radical claims for the
/// trefoil A-ideal versus the classical limit of the recursion ideal.
VerifyResult verify_ivacor();

/// Equivariance of the unknot function (radius 20, four algebras).
VerifyResult verify_j_sym();

/// A7: the seed-pinned property suites.
VerifyResult verify_properties(std::uint64_t seed = 0);

/// All acceptance criteria in order A1..A7.
std::vector<VerifyResult> verify_all(int workers = 1, std::uint64_t seed = 0);

/// Dispatch by proposition id: inv-rec-unknot, rec-unknot-sln, goldman,
/// iva, trefoil-annihilation, ivacor, j-sym, properties, all.
std::vector<VerifyResult> verify_by_id(const std::string& id, int workers = 1,
                                       std::uint64_t seed = 0);

} // namespace qweyl
