#ifndef TPK_SUITES_HPP
#define TPK_SUITES_HPP

#include <optional>

#include "tpk/dirac.hpp"
#include "tpk/liegroup.hpp"
#include "tpk/report.hpp"

namespace tpk {

// Identity suite for a bivector against a background 3-form: the Poisson
// condition, the twisted Jacobi identity on seeded function triples, graph
// closure, and square-zero of the twisted differential.
VerificationReport run_verify_suite(const Graded& pi, const Graded& phi, int trials,
                                    uint64_t seed);

// All five algebroid axioms on seeded random polynomial sections. A
// non-closed phi is reported as failing checks, not as an input error.
VerificationReport run_axioms_suite(int dim, const Graded& phi, int trials,
                                    uint64_t seed);

struct GaugeOutcome {
    VerificationReport report;
    GaugeResult result;
};

// Gauge transform pi by B against background phi; when a bivector comes out,
// verify it against the transported background phi - dB.
GaugeOutcome run_gauge(const Graded& pi, const Graded& B, const Graded& phi,
                       uint64_t seed);

// Example suite: the Lie-Poisson structure on R^3 with primitive
// B = lambda(x1 dx2^dx3 + c.p.), gauge identity pi/(1 + lambda r^2),
// the exact singular locus, Casimir preservation and pointwise leaf ranks.
VerificationReport run_example_lie_poisson(const Rational& lambda, int samples,
                                           uint64_t seed);

// Example suite: the group Dirac structure spanned by the e_a sections,
// its twisted Poisson form, and the quasi-Poisson companion.
VerificationReport run_example_group(const std::string& algebra, int samples,
                                     uint64_t seed, double tol, double fd_step);

} // namespace tpk

#endif
