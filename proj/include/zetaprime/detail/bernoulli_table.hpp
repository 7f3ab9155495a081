// SPDX-License-Identifier: Apache-2.0
#pragma once

// B_{2k}/(2k)! for k = 1..44, 40 significant digits, generated offline from
// the exact rationals. Parsed once per scalar lane; the asymptotic part of
// the Euler-Maclaurin formula and the Stirling series both read from here.

namespace zetaprime::detail {

inline constexpr int kBernoulliCount = 44;

inline constexpr const char* kBernoulliOverFactorial[kBernoulliCount] = {
    "0.08333333333333333333333333333333333333333",
    "-0.001388888888888888888888888888888888888889",
    "0.00003306878306878306878306878306878306878307",
    "-0.0000008267195767195767195767195767195767195767",
    "0.00000002087675698786809897921009032120143231254",
    "-0.0000000005284190138687493184847682202179556676911",
    "0.00000000001338253653068467883282698097512912327727",
    "-3.389680296322582866830195391249442499572e-13",
    "8.586062056277844564135905450425627133954e-15",
    "-2.174868698558061873041516423865917899852e-16",
    "5.509002828360229515202652608902254877862e-18",
    "-1.395446468581252334070768626406354976392e-19",
    "3.534707039629467471693229977803799214725e-21",
    "-8.953517427037546850402611318112741051627e-23",
    "2.267952452337683060310950738868166063220e-24",
    "-5.744790668872202445263881987607018399625e-26",
    "1.455172475614864901866264867271329335721e-27",
    "-3.685994940665310178181782479908660374446e-29",
    "9.336734257095044672032555152785623295444e-31",
    "-2.365022415700629934559635196369838240070e-32",
    "5.990671762482134304659912396819657826449e-34",
    "-1.517454884468290261710813135864718931541e-35",
    "3.843758125454188232229445290990232105902e-37",
    "-9.736353072646691035267621279250454180955e-39",
    "2.466247044200680957106400280288842885924e-40",
    "-6.247076741820743693148756794723368692577e-42",
    "1.582403024464491429751081706828763940329e-43",
    "-4.008273685948935968530012190521982662681e-45",
    "1.015307585556955631163071394537876232707e-46",
    "-2.571804158241871749924819409764454885573e-48",
    "6.514456035233814931558434858641858023142e-50",
    "-1.650130990689652455506098780479323009188e-51",
    "4.179830628539475894850187234709407032931e-53",
    "-1.058763466770290877027042024279117287335e-54",
    "2.681879191260770666140984858841510339769e-56",
    "-6.793279351107421209527180299533894611895e-58",
    "1.720757761668140490536349940758230664282e-59",
    "-4.358730329348893843400199849773161109128e-61",
    "1.104079290368466675083839597644427323087e-62",
    "-2.796665513378134507204793753118626553864e-64",
    "7.084036501679470198509388422380349334323e-66",
    "-1.794407408289224066605257309336755986705e-67",
    "4.545287063611096107085079124639448185863e-69",
    "-1.151334663198205181273002900786243377460e-70",
};

} // namespace zetaprime::detail
