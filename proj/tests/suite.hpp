// Homogeneous test ideals over F_2 and F_3 with the expected answer to
// "is the HS constant on the cone".
#ifndef HSCONST_TEST_SUITE_HPP
#define HSCONST_TEST_SUITE_HPP

#include <string>
#include <vector>

#include "hsconst/parser.hpp"
#include "hsconst/polynomial.hpp"

namespace hsc::testing {

struct SuiteIdeal {
    std::uint64_t p;
    std::vector<std::string> vars;
    std::vector<std::string> gens;
    bool constant;
};

inline const std::vector<SuiteIdeal>& cone_suite() {
    static const std::vector<SuiteIdeal> suite = {
        {2, {"x", "y"}, {"x*y"}, false},
        {2, {"x", "y", "z"}, {"x^2", "y^2"}, true},
        {2, {"x", "y"}, {"(x + y)^4"}, true},
        {2, {"x", "y", "z"}, {"x^2 + y*z"}, false},
        {2, {"x", "y", "z"}, {"x^2 + y^2"}, true},
        {2, {"x", "y", "z"}, {"x^3 + y^3"}, false},
        {2, {"x", "y", "z"}, {"x^2", "x*y", "y^2"}, true},
        {2, {"x", "y", "z", "w"}, {"x^4 + y^4 + z^4"}, true},
        {2, {"x", "y", "z", "w"}, {"x^2 + y^2", "z^2"}, true},
        {2, {"x", "y", "z"}, {"x*y*z"}, false},
        {2, {"x", "y", "z", "w"}, {"x^2 + y^2 + z^2 + w^2"}, true},
        {2, {"x", "y", "z"}, {"x^2*y + x*y^2"}, false},
        {2, {"x", "y", "z"}, {"x^2", "y^3"}, true},
        {2, {"x", "y", "z"}, {"x^2", "y^2 + x*z"}, false},
        {3, {"x", "y"}, {"x*y"}, false},
        {3, {"x", "y", "z"}, {"x^3 + y^3"}, true},
        {3, {"x", "y", "z"}, {"x^2 + y^2"}, false},
        {3, {"x", "y", "z"}, {"x^3 + y^2*z"}, false},
        {3, {"x", "y", "z", "w"}, {"x^2", "y^2"}, true},
        {3, {"x", "y", "z"}, {"x^3 - y^3", "z^3"}, true},
        {3, {"x", "y", "z", "w"}, {"x^2 - y*z", "x*w"}, false},
        {3, {"x", "y", "z", "w"}, {"x^3 + y^3 + z^3"}, true},
        {3, {"x", "y", "z"}, {"x^4 + y^4"}, false},
        {3, {"x", "y", "z"}, {"x^2*y - x*y^2"}, false},
        {3, {"x", "y", "z"}, {"x^3", "y^3"}, true},
    };
    return suite;
}

inline std::vector<Polynomial> suite_generators(const SuiteIdeal& s) {
    return parse_polynomials(s.gens, make_ring(Field::prime(s.p), s.vars));
}

inline std::string suite_label(const SuiteIdeal& s) {
    std::string out = "F" + std::to_string(s.p) + " (";
    for (std::size_t i = 0; i < s.gens.size(); ++i) out += (i ? ", " : "") + s.gens[i];
    return out + ")";
}

}  // namespace hsc::testing

#endif
