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

#include "hsconst/criterion.hpp"

#include <algorithm>
#include <map>

#include "hsconst/error.hpp"
#include "hsconst/scan.hpp"
#include "hsconst/univariate.hpp"

namespace hsc {

namespace {

constexpr std::uint64_t enumeration_limit = 250000;

RingPtr ring_of(const std::vector<Polynomial>& gens) {
    if (gens.empty()) throw InputError("empty generator list");
    RingPtr r = gens.front().ring();
    for (const auto& g : gens)
        if (!(*g.ring() == *r)) throw InputError("generators live in different rings");
    return r;
}

std::uint32_t max_degree(const std::vector<Polynomial>& gens) {
    std::uint32_t d = 0;
    for (const auto& g : gens) d = std::max(d, g.degree());
    return d;
}

bool all_homogeneous(const std::vector<Polynomial>& gens) {
    return std::all_of(gens.begin(), gens.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

std::string join(const std::vector<std::string>& parts, const std::string& sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

std::string ideal_string(const std::vector<Polynomial>& gens) {
    std::vector<std::string> parts;
    for (const auto& g : gens) parts.push_back(g.to_string());
    return "(" + join(parts) + ")";
}

FieldElement evaluate_exact(const Polynomial& f, const std::vector<FieldElement>& x) {
    FieldElement acc = f.field().zero();
    for (const auto& [m, c] : f.terms()) {
        FieldElement t = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) t *= x[i].pow(m[i]);
        acc += t;
    }
    return acc;
}

std::uint64_t checked_power(std::uint64_t base, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (r > enumeration_limit) return enumeration_limit + 1;
        r *= base;
    }
    return r;
}

// Points of F_(p^j)-affine space, one per Frobenius orbit, via the chart
// x_0 = 1 of projective space one dimension up.
std::vector<GFPoint> affine_orbit_representatives(const GaloisField& F, std::size_t n, std::uint32_t box) {
    std::vector<GFPoint> out;
    for (auto& x : projective_orbit_representatives(F, n + 1, box)) {
        if (x[0] != 1) continue;
        out.emplace_back(x.begin() + 1, x.end());
    }
    return out;
}

// A point of V(I) where one of the forms is nonzero, searched over small
// finite fields or a rational box.
std::optional<std::string> find_separating_point(const std::vector<Polynomial>& I,
                                                 const std::vector<Polynomial>& forms, bool homogeneous) {
    RingPtr ring = ring_of(I);
    Field k = ring->field();
    std::size_t n = ring->size();
    if (k.is_prime_field()) {
        std::uint64_t p = k.characteristic();
        for (std::uint32_t j = 1; j <= 3; ++j) {
            if (checked_power(p, j) > 65536) break;
            std::uint64_t q = checked_power(p, j);
            if (checked_power(q, homogeneous ? n - 1 : n) > enumeration_limit) break;
            GaloisField F(p, j);
            auto pts = homogeneous ? projective_orbit_representatives(F, n) : affine_orbit_representatives(F, n, 0);
            for (const auto& x : pts) {
                bool on = std::all_of(I.begin(), I.end(), [&](const Polynomial& g) { return evaluate(F, g, x) == 0; });
                if (!on) continue;
                for (const auto& l : forms)
                    if (evaluate(F, l, x) != 0) return point_string(F, x) + " over " + F.describe();
            }
        }
        return std::nullopt;
    }
    if (k.is_rationals()) {
        const long lo = -2, width = 5;
        std::uint64_t total = checked_power(width, n);
        if (total > enumeration_limit) return std::nullopt;
        for (std::uint64_t code = 1; code < total; ++code) {
            std::vector<FieldElement> x;
            std::uint64_t c = code;
            for (std::size_t i = 0; i < n; ++i) {
                x.push_back(k.from_int(lo + static_cast<long>(c % width)));
                c /= width;
            }
            bool on = std::all_of(I.begin(), I.end(), [&](const Polynomial& g) { return evaluate_exact(g, x).is_zero(); });
            if (!on) continue;
            for (const auto& l : forms) {
                if (evaluate_exact(l, x).is_zero()) continue;
                std::vector<std::string> parts;
                for (const auto& v : x) parts.push_back(v.to_string());
                return "(" + join(parts) + ") over Q";
            }
        }
    }
    return std::nullopt;
}

// Membership through a Macaulay matrix: f = sum c_i g_i with deg(c_i g_i) <= bound.
bool bounded_membership(const Polynomial& f, const std::vector<Polynomial>& gens, std::uint32_t bound) {
    if (f.is_zero()) return true;
    if (f.degree() > bound) return false;
    RingPtr ring = f.ring();
    Field k = ring->field();
    std::map<Monomial, std::size_t> index;
    for (std::uint32_t d = 0; d <= bound; ++d)
        for (auto& m : monomials_of_degree(ring->size(), d)) index.emplace(std::move(m), index.size());
    auto vec = [&](const Polynomial& g) {
        Vector v = zero_vector(k, index.size());
        for (const auto& [m, c] : g.terms()) v[index.at(m)] = c;
        return v;
    };
    EchelonBuilder eb(k, index.size());
    for (const auto& g : gens) {
        if (g.is_zero() || g.degree() > bound) continue;
        for (std::uint32_t s = 0; s + g.degree() <= bound; ++s)
            for (const auto& m : monomials_of_degree(ring->size(), s)) eb.add(vec(g.times_monomial(m)));
    }
    return is_zero_vector(eb.reduce(vec(f)));
}

// Generators reduced degree by degree against the part generated in lower
// degrees, so that each one only uses monomials outside that part's pivots.
std::vector<Polynomial> reduced_minimal_generators(const std::vector<Polynomial>& gens) {
    RingPtr ring = ring_of(gens);
    std::uint32_t D = max_degree(gens);
    GradedIdeal full(ring, gens, D);
    std::vector<Polynomial> out;
    for (std::uint32_t d = 0; d <= D; ++d) {
        const SubspaceBasis& piece = full.piece(d);
        if (piece.dim() == 0) continue;
        std::optional<GradedIdeal> lower;
        if (!out.empty()) lower.emplace(ring, out, d);
        Matrix rows;
        for (const auto& row : piece.rows()) {
            Vector r = lower ? lower->piece(d).reduce(row) : row;
            if (!is_zero_vector(r)) rows.push_back(std::move(r));
        }
        SubspaceBasis fresh = echelon(ring->field(), full.monomials(d).size(), rows);
        for (const auto& row : fresh.rows()) out.push_back(full.from_coordinates(row, d));
    }
    return out;
}

std::vector<std::string> variable_names(const RingPtr& ring, const std::vector<std::size_t>& idx) {
    std::vector<std::string> out;
    for (auto i : idx) out.push_back(ring->variables()[i]);
    return out;
}

std::string hs_list(const HSFunction& h) {
    std::vector<std::string> parts;
    for (auto v : h.values) parts.push_back(std::to_string(v));
    return "[" + join(parts) + "]";
}

const char* normalization_note =
    "vertex normalization is reduced: a generator is only reduced by monomial multiples of earlier leading forms";

// The closed point (g(X_0), X_1 - 1, ..., X_(n-1) - 1) cut out by the first
// generator, when it is irreducible and lies on X.
void derivative_probe(const std::vector<Polynomial>& gens, std::uint32_t D, CriterionReport& report) {
    RingPtr ring = ring_of(gens);
    Field k = ring->field();
    std::size_t n = ring->size();
    if (n < 2) return;
    std::vector<Polynomial> images;
    images.push_back(Polynomial::variable(ring, 0));
    for (std::size_t i = 1; i < n; ++i) images.push_back(Polynomial::constant(ring, k.one()));
    UPoly g = to_upoly(substitute(gens.front(), images), 0);
    if (udegree(g) < 1 || is_irreducible(g) != std::optional<bool>(true)) return;
    g = umonic(g);
    auto on_point = [&](const Polynomial& f) {
        UPoly r = udivmod(to_upoly(substitute(f, images), 0), g).second;
        return udegree(r) < 0;
    };
    if (!std::all_of(gens.begin(), gens.end(), on_point)) return;
    std::vector<Polynomial> M = {from_upoly(g, ring, 0)};
    for (std::size_t i = 1; i < n; ++i)
        M.push_back(Polynomial::variable(ring, i) - Polynomial::constant(ring, k.one()));
    HSFunction at_point = hs_local_truncated(gens, M, D);
    HSFunction origin = hs_at_origin(gens, D);
    auto der = hs_stratum_derivative_ideal(reduced_minimal_generators(gens));
    bool der_vanishes = std::all_of(der.begin(), der.end(), on_point);
    report.notes.push_back("derivative-ideal probe (informational) at " + ideal_string(M) + ": HS " +
                           hs_list(at_point) + " against " + hs_list(origin) + " at the origin; derivative ideal " +
                           (der_vanishes ? "vanishes" : "does not vanish") + " there; same stratum: " +
                           (at_point.same_values(origin) ? "yes" : "no"));
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::True: return "true";
        case Verdict::False: return "false";
        default: return "inconclusive";
    }
}

Verdict verdict_and(Verdict a, Verdict b) {
    if (a == Verdict::False || b == Verdict::False) return Verdict::False;
    if (a == Verdict::Inconclusive || b == Verdict::Inconclusive) return Verdict::Inconclusive;
    return Verdict::True;
}

std::uint32_t default_nmax(const std::vector<Polynomial>& gens) {
    std::uint32_t sum = 0;
    for (const auto& g : gens) sum += g.degree();
    std::uint64_t p = gens.empty() ? 0 : gens.front().field().characteristic();
    std::uint32_t maxdeg = max_degree(gens);
    std::uint64_t q = 1;
    if (p != 0)
        while (q * p <= maxdeg) q *= p;
    return sum + static_cast<std::uint32_t>(q);
}

RadicalCertificate radical_equal_linear(const std::vector<Polynomial>& I, const std::vector<Polynomial>& J,
                                        std::optional<std::uint32_t> nmax) {
    RingPtr ring = ring_of(I);
    require_homogeneous(I);
    Matrix rows;
    for (const auto& l : J) {
        if (!(*l.ring() == *ring)) throw InputError("linear forms live in a different ring");
        if (l.is_zero() || l.degree() != 1 || !l.is_homogeneous()) throw InputError("'" + l.to_string() + "' is not a linear form");
        Vector v = zero_vector(ring->field(), ring->size());
        for (const auto& [m, c] : l.terms())
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i]) v[i] = c;
        rows.push_back(std::move(v));
    }
    if (rank(ring->field(), ring->size(), rows) != J.size()) throw InputError("linear forms are not independent");

    RadicalCertificate cert;
    cert.nmax = nmax.value_or(default_nmax(I));
    for (const auto& g : I)
        if (!g.is_zero() && !graded_membership(g, J)) cert.outside.push_back(g);
    if (!cert.outside.empty()) {
        cert.verdict = Verdict::False;
        cert.explanation = cert.outside.front().to_string() + " is not in " + ideal_string(J);
        return cert;
    }

    std::vector<Polynomial> nonzero;
    for (const auto& g : I)
        if (!g.is_zero()) nonzero.push_back(g);
    std::uint32_t built = 0;
    std::optional<GradedIdeal> gi;
    for (const auto& l : J) {
        std::optional<std::uint32_t> found;
        Polynomial power = Polynomial::constant(ring, ring->field().one());
        for (std::uint32_t N = 1; N <= cert.nmax && !found && !nonzero.empty(); ++N) {
            power = power * l;
            if (N > built) {
                built = std::min(cert.nmax, std::max(2 * built, std::max<std::uint32_t>(N, max_degree(nonzero))));
                gi.emplace(ring, nonzero, built);
            }
            if (gi->contains(power)) found = N;
        }
        cert.exponents.push_back(found);
    }
    bool all_found = std::all_of(cert.exponents.begin(), cert.exponents.end(), [](const auto& e) { return e.has_value(); });
    if (all_found) {
        cert.verdict = Verdict::True;
        std::vector<std::string> parts;
        for (std::size_t i = 0; i < J.size(); ++i)
            parts.push_back("(" + J[i].to_string() + ")^" + std::to_string(*cert.exponents[i]));
        cert.explanation = J.empty() ? "I is zero" : join(parts) + " in I";
        return cert;
    }
    cert.counterexample = find_separating_point(nonzero, J, true);
    if (cert.counterexample) {
        cert.verdict = Verdict::False;
        cert.explanation = "V(I) contains " + *cert.counterexample + " outside V(J)";
    } else {
        cert.verdict = Verdict::Inconclusive;
        cert.explanation = "no power up to " + std::to_string(cert.nmax) + " lies in I and no separating point was found";
    }
    return cert;
}

NormalFlatness normal_flatness_check(const std::vector<Polynomial>& gens, const std::vector<std::string>& y,
                                     std::uint32_t D) {
    RingPtr ring = ring_of(gens);
    if (y.empty()) throw InputError("normal flatness needs at least one y-variable");
    std::vector<bool> is_y(ring->size(), false);
    for (const auto& name : y) is_y[ring->require_index(name)] = true;
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < ring->size(); ++i)
        images.push_back(is_y[i] ? Polynomial(ring) : Polynomial::variable(ring, i));
    for (const auto& g : gens)
        if (!substitute(g, images).is_zero())
            throw InputError("V(" + join(y) + ") is not contained in V(I): " + g.to_string() + " does not vanish on it");
    NormalFlatness nf;
    std::uint32_t N = static_cast<std::uint32_t>(ring->size());
    nf.origin = hs_at_origin(gens, D);
    nf.generic = hs_generic_point(gens, y, D);
    nf.origin_iterated = hs_iterate(nf.origin, static_cast<std::uint32_t>(y.size()));
    nf.generic_iterated = hs_iterate(nf.generic, N);
    for (std::size_t i = 0; i < nf.origin_iterated.values.size() && i < nf.generic_iterated.values.size(); ++i)
        if (nf.origin_iterated.values[i] != nf.generic_iterated.values[i]) {
            nf.first_difference = i;
            break;
        }
    nf.flat = !nf.first_difference;
    return nf;
}

StratumScan stratum_scan(const std::vector<Polynomial>& gens, std::uint32_t max_extension, std::uint32_t box,
                         std::uint32_t D) {
    RingPtr ring = ring_of(gens);
    Field k = ring->field();
    if (!k.is_prime_field()) throw InputError("enumeration unsupported over " + k.to_string());
    if (max_extension == 0) throw InputError("extension degree must be positive");
    std::uint64_t p = k.characteristic();
    if (checked_power(p, max_extension) > 65536) throw InputError("extension degree out of range");
    for (const auto& g : gens)
        if (g.is_zero()) throw InputError("zero generator");
    std::size_t n = ring->size();
    bool cone = all_homogeneous(gens);
    if (!cone)
        for (const auto& g : gens)
            if (!g.coefficient(Monomial(n, 0)).is_zero()) throw InputError("the origin is not on X");

    StratumScan scan;
    scan.max_extension = max_extension;
    scan.box = box;
    scan.truncation = D;
    scan.origin = cone ? hs_cone_origin(gens, D) : hs_at_origin(gens, D);
    scan.stratum.push_back("origin");

    std::vector<Polynomial> sigmas, derivative;
    if (cone) {
        sigmas = ridge(gens).sigmas;
        derivative = hs_stratum_derivative_ideal(reduced_minimal_generators(gens));
    }
    for (std::uint32_t j = 1; j <= max_extension; ++j) {
        GaloisField F(p, j);
        auto reps = cone ? projective_orbit_representatives(F, n, box) : affine_orbit_representatives(F, n, box);
        for (const auto& x : reps) {
            if (!cone && std::all_of(x.begin(), x.end(), [](GaloisField::Elem e) { return e == 0; })) continue;
            bool on = std::all_of(gens.begin(), gens.end(), [&](const Polynomial& g) { return evaluate(F, g, x) == 0; });
            if (!on) continue;
            ScanPoint pt;
            pt.label = "GF(" + std::to_string(F.order()) + "):" + point_string(F, x);
            pt.extension = j;
            pt.hs = cone ? hs_at_cone_point(gens, F, x, D) : hs_local_truncated(gens, closed_point_ideal(F, x, ring), D);
            pt.in_stratum = pt.hs.same_values(scan.origin);
            auto vanish = [&](const std::vector<Polynomial>& fs) {
                return std::all_of(fs.begin(), fs.end(), [&](const Polynomial& f) { return evaluate(F, f, x) == 0; });
            };
            if (cone) {
                pt.on_ridge_cone = vanish(sigmas);
                pt.in_derivative_zero_set = vanish(derivative);
            }
            if (pt.in_stratum) scan.stratum.push_back(pt.label);
            scan.points.push_back(std::move(pt));
        }
    }
    scan.constant = std::all_of(scan.points.begin(), scan.points.end(), [](const ScanPoint& q) { return q.in_stratum; });
    if (cone) {
        scan.ridge_coincides = std::all_of(scan.points.begin(), scan.points.end(),
                                           [](const ScanPoint& q) { return q.in_stratum == q.on_ridge_cone; });
        scan.derivative_matches = std::all_of(scan.points.begin(), scan.points.end(),
                                              [](const ScanPoint& q) { return q.in_stratum == q.in_derivative_zero_set; });
    }
    return scan;
}

CriterionReport cone_constancy_criterion(const std::vector<Polynomial>& gens, std::optional<std::uint32_t> nmax) {
    RingPtr ring = ring_of(gens);
    require_homogeneous(gens);
    for (const auto& g : gens) {
        if (g.is_zero()) throw InputError("zero generator");
        if (g.degree() == 0) throw InputError("the unit ideal has an empty cone");
    }
    CriterionReport rep;
    rep.homogeneous = true;
    rep.directrix = directrix(gens);
    rep.ridge = ridge(gens);
    rep.translation_stable = verify_translation_stability(gens, rep.ridge->basis);
    rep.radical = radical_equal_linear(gens, rep.directrix->forms, nmax);

    LinearReduction lin = ridge_reduced_as_linear(rep.ridge->basis);
    if (!lin.forms) {
        rep.ridge_verdict = Verdict::False;
        rep.ridge_witness = lin.witness;
    } else {
        SubspaceBasis span = linear_span(ring, *lin.forms);
        rep.ridge_reduced = linear_polynomials(ring, span);
        if (span == rep.directrix->space) {
            rep.ridge_verdict = Verdict::True;
        } else {
            rep.ridge_verdict = Verdict::False;
            rep.ridge_witness = "reduced ridge " + ideal_string(rep.ridge_reduced) + " differs from the directrix " +
                                ideal_string(rep.directrix->forms);
        }
    }
    rep.predicted = verdict_and(rep.radical.verdict, rep.ridge_verdict);

    AdaptedCoordinates ad = adapt_coordinates(gens, rep.directrix->space);
    PolyhedronEvidence ev;
    ev.u = variable_names(ring, ad.others);
    ev.y = variable_names(ring, ad.pivots);
    ev.system = prepare(linear_space_generators(gens, rep.directrix->space), Coordinates{ad.others, ad.pivots});
    ev.empty = ev.system.prepared && ev.system.polyhedron.empty();
    rep.polyhedron = std::move(ev);
    rep.notes.push_back(normalization_note);
    if (!rep.translation_stable) rep.disagreements.push_back("the ridge failed the translation-stability check");
    if (rep.predicted == Verdict::True && !rep.polyhedron->empty)
        rep.disagreements.push_back("constancy predicted but the prepared polyhedron is not empty");

    if (rep.predicted == Verdict::True) {
        rep.reduction = rep.polyhedron->y;
        rep.normal_flatness = normal_flatness_check(ad.gens, rep.polyhedron->y, default_truncation(gens));
        if (!rep.normal_flatness->flat)
            rep.disagreements.push_back("constancy predicted but the cone is not normally flat along the directrix");
    }

    std::string constancy = rep.predicted == Verdict::True    ? "HS constant on the cone"
                            : rep.predicted == Verdict::False ? "HS non-constant on the cone"
                                                              : "HS constancy undecided";
    rep.summary = "directrix " + ideal_string(rep.directrix->forms) + "; I_red = J: " + to_string(rep.radical.verdict) +
                  "; reduced ridge = J: " + to_string(rep.ridge_verdict) + "; " + constancy;
    return rep;
}

CriterionReport theorem_report(const std::vector<Polynomial>& gens, const ReportOptions& options) {
    RingPtr ring = ring_of(gens);
    bool split = options.u.has_value() || options.y.has_value();
    if (!split) {
        if (!all_homogeneous(gens))
            throw InputError("unsupported input: a non-homogeneous ideal needs a declared u/y split");
        CriterionReport rep = cone_constancy_criterion(gens, options.nmax);
        if (!options.scan) return rep;
        if (!ring->field().is_prime_field()) {
            rep.notes.push_back("scan skipped: enumeration unsupported over " + ring->field().to_string());
            if (ring->field().has_parameters()) derivative_probe(gens, options.truncation, rep);
            return rep;
        }
        rep.scan = stratum_scan(gens, options.max_extension, options.box, options.truncation);
        const StratumScan& s = *rep.scan;
        if (rep.predicted != Verdict::Inconclusive && (rep.predicted == Verdict::True) != s.constant) {
            std::string where;
            for (const auto& pt : s.points)
                if (!pt.in_stratum) {
                    where = " (first point off the stratum: " + pt.label + ")";
                    break;
                }
            rep.disagreements.push_back("criterion predicts " + to_string(rep.predicted) + " but the scan found " +
                                        (s.constant ? "a constant" : "a non-constant") + " HS" + where);
        }
        if (s.ridge_coincides == false)
            rep.disagreements.push_back("the sampled stratum differs from the sampled ridge cone");
        if (s.derivative_matches == false)
            rep.disagreements.push_back("the sampled stratum differs from the zero set of the derivative ideal");
        return rep;
    }

    if (!options.u || !options.y) throw InputError("a split needs both u and y variables");
    Coordinates c = make_coordinates(ring, *options.u, *options.y);
    for (const auto& g : gens)
        if (g.is_zero()) throw InputError("zero generator");

    CriterionReport rep;
    rep.homogeneous = all_homogeneous(gens);
    rep.reduction = *options.y;
    std::vector<Polynomial> ys;
    for (auto i : c.y) ys.push_back(Polynomial::variable(ring, i));

    RadicalCertificate& cert = rep.radical;
    if (rep.homogeneous && !ys.empty()) {
        cert = radical_equal_linear(gens, ys, options.nmax);
    } else {
        cert.nmax = options.nmax.value_or(default_nmax(gens));
        std::vector<Polynomial> images;
        for (std::size_t i = 0; i < ring->size(); ++i) images.push_back(Polynomial::variable(ring, i));
        for (auto i : c.y) images[i] = Polynomial(ring);
        for (const auto& g : gens)
            if (!substitute(g, images).is_zero()) cert.outside.push_back(g);
        if (!cert.outside.empty()) {
            cert.verdict = Verdict::False;
            cert.explanation = cert.outside.front().to_string() + " does not vanish on V(" + join(*options.y) + ")";
        } else {
            std::uint32_t bound = cert.nmax + max_degree(gens);
            for (const auto& yv : ys) {
                std::optional<std::uint32_t> found;
                for (std::uint32_t N = 1; N <= cert.nmax && !found; ++N)
                    if (bounded_membership(yv.pow(N), gens, std::max(bound, N))) found = N;
                cert.exponents.push_back(found);
            }
            bool all_found =
                std::all_of(cert.exponents.begin(), cert.exponents.end(), [](const auto& e) { return e.has_value(); });
            if (all_found) {
                cert.verdict = Verdict::True;
                std::vector<std::string> parts;
                for (std::size_t i = 0; i < ys.size(); ++i)
                    parts.push_back(ys[i].to_string() + "^" + std::to_string(*cert.exponents[i]));
                cert.explanation = join(parts) + " in I";
            } else if ((cert.counterexample = find_separating_point(gens, ys, false))) {
                cert.verdict = Verdict::False;
                cert.explanation = "V(I) contains " + *cert.counterexample + " outside V(y)";
            } else {
                cert.verdict = Verdict::Inconclusive;
                cert.explanation = "no power of the y-variables up to " + std::to_string(cert.nmax) +
                                   " was certified in I";
            }
        }
    }

    if (cert.outside.empty()) rep.normal_flatness = normal_flatness_check(gens, *options.y, options.truncation);
    if (cert.verdict == Verdict::True)
        rep.predicted = rep.normal_flatness->flat ? Verdict::True : Verdict::False;
    else
        rep.predicted = Verdict::Inconclusive;

    PolyhedronEvidence ev;
    ev.u = *options.u;
    ev.y = *options.y;
    ev.system = prepare(gens, c, options.max_steps);
    ev.empty = ev.system.prepared && ev.system.polyhedron.empty();
    rep.polyhedron = std::move(ev);
    rep.notes.push_back(normalization_note);
    if (!rep.polyhedron->system.prepared)
        rep.notes.push_back("preparation stopped after " + std::to_string(options.max_steps) + " steps");
    if (rep.predicted == Verdict::True && rep.polyhedron->system.prepared && !rep.polyhedron->empty)
        rep.disagreements.push_back("constancy predicted but the prepared polyhedron is not empty");

    std::string reduction = cert.verdict == Verdict::True    ? "reduction regular"
                            : cert.verdict == Verdict::False ? "reduction is not V(" + join(*options.y) + ")"
                                                             : "reduction unverified";
    std::string flatness = !rep.normal_flatness       ? "normal flatness not tested"
                           : rep.normal_flatness->flat ? "normally flat"
                                                       : "not normally flat";
    std::string constancy = rep.predicted == Verdict::True    ? "HS constant"
                            : rep.predicted == Verdict::False ? "HS non-constant"
                                                              : "HS constancy undecided";
    rep.summary = reduction + ", " + flatness + ", " + constancy;
    return rep;
}

}  // namespace hsc
