/*
   Copyright 2026 The hsconst Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef HSCONST_CRITERION_HPP
#define HSCONST_CRITERION_HPP

#include <optional>
#include <string>
#include <vector>

#include "hsconst/cone.hpp"
#include "hsconst/graded.hpp"
#include "hsconst/polyhedron.hpp"

namespace hsc {

enum class Verdict { False, True, Inconclusive };

std::string to_string(Verdict v);
/// Three-valued conjunction: false dominates, then inconclusive.
Verdict verdict_and(Verdict a, Verdict b);

struct RadicalCertificate {
    Verdict verdict = Verdict::Inconclusive;
    /// Generators of I outside (J).
    std::vector<Polynomial> outside;
    /// Per linear form of J, the least N <= nmax with l^N in I, if any.
    std::vector<std::optional<std::uint32_t>> exponents;
    /// A point of V(I) off V(J), printed, when one was found.
    std::optional<std::string> counterexample;
    std::uint32_t nmax = 0;
    std::string explanation;
};

/// sum of generator degrees + the largest p-power below the top degree.
std::uint32_t default_nmax(const std::vector<Polynomial>& gens);

/// Decides sqrt(I) == (J) for homogeneous I and linearly independent linear
/// forms J. False needs a non-member of (J) or a point of V(I) off V(J);
/// when neither turns up and some power search runs out, the answer is
/// inconclusive.
RadicalCertificate radical_equal_linear(const std::vector<Polynomial>& I, const std::vector<Polynomial>& J,
                                        std::optional<std::uint32_t> nmax = std::nullopt);

struct ScanPoint {
    std::string label;
    std::uint32_t extension = 1;
    HSFunction hs;
    bool in_stratum = false;
    bool on_ridge_cone = false;
    bool in_derivative_zero_set = false;
};

struct StratumScan {
    HSFunction origin;
    std::uint32_t max_extension = 0;
    std::uint32_t box = 0;
    std::uint32_t truncation = 0;
    /// Sampled points of X other than the origin, by extension degree and
    /// then by encoding.
    std::vector<ScanPoint> points;
    /// Labels of the sampled points sharing the origin's HS, origin first.
    std::vector<std::string> stratum;
    /// Every sampled point lies in the origin's stratum.
    bool constant = false;
    /// Cone inputs: the stratum equals the sampled points of the ridge's cone.
    std::optional<bool> ridge_coincides;
    /// Cone inputs: the stratum equals the sampled zero set of the
    /// derivative ideal of a reduced minimal generating system.
    std::optional<bool> derivative_matches;
};

constexpr std::uint32_t default_scan_extension = 3;
constexpr std::uint32_t default_scan_truncation = 8;

/// Samples the closed points of X = V(I) over F_p defined over F_(p^j),
/// j <= max_extension, one per Frobenius orbit, and compares their local HS
/// with the origin's. Homogeneous inputs are scanned on the cone; other
/// inputs on affine space, which requires the origin to lie on X. Only prime
/// fields can be enumerated.
StratumScan stratum_scan(const std::vector<Polynomial>& gens, std::uint32_t max_extension = default_scan_extension,
                         std::uint32_t box = 0, std::uint32_t D = default_scan_truncation);

struct NormalFlatness {
    bool flat = false;
    HSFunction origin;
    HSFunction generic;
    HSFunction origin_iterated;
    HSFunction generic_iterated;
    std::optional<std::size_t> first_difference;
};

/// Compares the origin's HS iterated (N - dim D) times with the HS at the
/// generic point of D = V(y) iterated N times, N the number of variables.
NormalFlatness normal_flatness_check(const std::vector<Polynomial>& gens, const std::vector<std::string>& y,
                                     std::uint32_t D);

struct PolyhedronEvidence {
    std::vector<std::string> u;
    std::vector<std::string> y;
    PreparedSystem system;
    bool empty = false;
};

struct CriterionReport {
    bool homogeneous = true;

    // Cone path.
    std::optional<DirectrixResult> directrix;
    std::optional<RidgeResult> ridge;
    bool translation_stable = false;
    Verdict ridge_verdict = Verdict::Inconclusive;
    std::string ridge_witness;
    std::vector<Polynomial> ridge_reduced;

    // Declared reduction path.
    std::vector<std::string> reduction;
    std::optional<NormalFlatness> normal_flatness;

    /// I_red = J on cones, sqrt(I) = (y) for a declared reduction.
    RadicalCertificate radical;
    Verdict predicted = Verdict::Inconclusive;
    std::optional<PolyhedronEvidence> polyhedron;
    std::optional<StratumScan> scan;
    std::vector<std::string> notes;
    std::vector<std::string> disagreements;
    std::string summary;
};

CriterionReport cone_constancy_criterion(const std::vector<Polynomial>& gens,
                                         std::optional<std::uint32_t> nmax = std::nullopt);

struct ReportOptions {
    std::optional<std::vector<std::string>> u;
    std::optional<std::vector<std::string>> y;
    bool scan = true;
    std::uint32_t max_extension = default_scan_extension;
    std::uint32_t box = 0;
    std::uint32_t truncation = default_scan_truncation;
    std::optional<std::uint32_t> nmax;
    std::size_t max_steps = default_prepare_steps;
};

/// Cone inputs run the criterion and, over prime fields, the scan. With a
/// declared (u, y) split the reduction V(y) is checked, normal flatness is
/// tested along it and the system is prepared in (u, y).
CriterionReport theorem_report(const std::vector<Polynomial>& gens, const ReportOptions& options = {});

}  // namespace hsc

#endif  // HSCONST_CRITERION_HPP
