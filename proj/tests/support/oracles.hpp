#pragma once

// Reference values frozen from independent multi-precision computations,
// plus an alternating-series zeta evaluator that shares no code or method
// with the library's Euler-Maclaurin path. Tests compare against these, never
// against the library itself.

#include "rhxi/complex_value.hpp"
#include "rhxi/real.hpp"

#include <string_view>

namespace oracles {

using rhxi::ComplexValue;
using rhxi::Real;

// ---- frozen decimal strings ----

// log Gamma(1/4)
inline constexpr std::string_view kLogGammaQuarter =
    "1.28802252469807745737061044021971729592537756511286055049999";
// Gamma(1/4)
inline constexpr std::string_view kGammaQuarter =
    "3.6256099082219083119306851558676720029951676828801";
// zeta(1/2)
inline constexpr std::string_view kZetaHalf =
    "-1.46035450880958681288949915251529801246722933101258149054289";
// xi(1/2) (completed, (s-1)-fused form: value 1/2 at s = 0 and 1)
inline constexpr std::string_view kXiHalf =
    "0.497120778188314109912773739685397719807293609557705185933234";
// xi(3/2)
inline constexpr std::string_view kXiThreeHalves =
    "0.50873103872632395802567123667211223887449950820222";
// xi(3)
inline constexpr std::string_view kXiThree =
    "0.5739398940467555133752297103612992055389755928257";
// xi(0.3 + 2i) for the exact decimal 0.3 (not the binary double!)
inline constexpr std::string_view kXiP3P2Re =
    "0.45344861882575758070614943018679188900760518126762";
inline constexpr std::string_view kXiP3P2Im =
    "-0.0084367380614749766431950998722977721402256422199589";
// f(2) = 2 pi / 5
inline constexpr std::string_view kFTwo =
    "1.25663706143591729538505735331180115367886775975004232838998";
// zeta(0.75 + 10i)
inline constexpr std::string_view kZeta75T10Re =
    "1.461434953126222010456482778263893679221179272177";
inline constexpr std::string_view kZeta75T10Im =
    "-0.11416177125806473004257405409880549921673316023746";
// zeta(-0.5 + 3i)
inline constexpr std::string_view kZetaM5T3Re =
    "0.35291387981928725272490934214837092586377";
inline constexpr std::string_view kZetaM5T3Im =
    "0.0121249544160369820486715138575714825359429";
// zeta(4 + 40i)
inline constexpr std::string_view kZeta4T40Re =
    "0.959985302694129875617496218355204244550725";
inline constexpr std::string_view kZeta4T40Im =
    "-0.0311281073739514968393069288507242790223466";
// log Gamma(2.5 + 7i)
inline constexpr std::string_view kLogGamma25T7Re =
    "-6.1598232615412958690893268650297730508407525186437";
inline constexpr std::string_view kLogGamma25T7Im =
    "9.4865224125738955893677537208000127725803865517566";
// eta(0.3 + 7i), eta(1.7 - 4i), eta(1/2): checks for the oracle itself
inline constexpr std::string_view kEta37Re =
    "1.49407645295823374344528128406701613777701";
inline constexpr std::string_view kEta37Im =
    "-1.29617044422707413651476499024739140472696";
inline constexpr std::string_view kEta174Re =
    "1.20920018256052805193471850909085197339076";
inline constexpr std::string_view kEta174Im =
    "-0.200465662645402803076826560576684655990786";
inline constexpr std::string_view kEtaHalf =
    "0.60489864342163037024726591423595549975976254513025";
// the exact value of the entire-integrand line integral (every eps)
inline constexpr std::string_view kClosedJ =
    "5.61335880355538436610182854763630912830996005700451271188494";
// the sigma = 3/2 comparison integral (tail-truncation limited, ~1e-12 here)
inline constexpr std::string_view kReferenceI = "1.01026350500242988813125918";
// first six zero ordinates on the critical line
inline constexpr std::string_view kGamma1 =
    "14.1347251417346937904572519835624702707843";
inline constexpr std::string_view kGamma2 =
    "21.0220396387715549926284795938969027773343";
inline constexpr std::string_view kGamma3 =
    "25.0108575801456887632137909925628218186595";
inline constexpr std::string_view kGamma4 =
    "30.4248761258595132103118975305840913201816";
inline constexpr std::string_view kGamma5 =
    "32.9350615877391896906623689640749034888127";
inline constexpr std::string_view kGamma6 =
    "37.5861781588256712572177634807053328214056";
// residue of the ratio at 1/2 + i gamma1
inline constexpr std::string_view kResRho1Re =
    "-0.0000815897158046503674289153071094379926159432";
inline constexpr std::string_view kResRho1Im =
    "0.000162125792056360096800121450175739997540411";

inline Real real_at(std::string_view s, mpfr_prec_t prec) {
    return Real::from_string(s, prec);
}

inline ComplexValue complex_at(std::string_view re, std::string_view im, mpfr_prec_t prec) {
    return {Real::from_string(re, prec), Real::from_string(im, prec)};
}

// ---- independent zeta: accelerated alternating series ----
// eta(s) by Chebyshev-weighted acceleration (error ~ (3+sqrt 8)^-n), then
// zeta(s) = eta(s) / (1 - 2^(1-s)). Valid well away from s = 1.

ComplexValue eta_series(const ComplexValue& s, long n, mpfr_prec_t prec);
ComplexValue zeta_via_eta(const ComplexValue& s, long n, mpfr_prec_t prec);

}  // namespace oracles
