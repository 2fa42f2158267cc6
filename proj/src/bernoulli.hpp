#pragma once

namespace zetak::detail {

// B_2, B_4, ..., B_60 rendered from the exact rationals.
inline constexpr long double kBernoulli2m[30] = {
    0.16666666666666666666666666666666666667L,   // 1/6
    -0.033333333333333333333333333333333333333L, // -1/30
    0.023809523809523809523809523809523809524L,  // 1/42
    -0.033333333333333333333333333333333333333L, // -1/30
    0.075757575757575757575757575757575757576L,  // 5/66
    -0.25311355311355311355311355311355311355L,  // -691/2730
    1.1666666666666666666666666666666666667L,    // 7/6
    -7.0921568627450980392156862745098039216L,   // -3617/510
    54.971177944862155388471177944862155388L,    // 43867/798
    -529.12424242424242424242424242424242424L,   // -174611/330
    6192.1231884057971014492753623188405797L,    // 854513/138
    -86580.253113553113553113553113553113553L,   // -236364091/2730
    1425517.1666666666666666666666666666667L,    // 8553103/6
    -27298231.067816091954022988505747126437L,   // -23749461029/870
    601580873.90064236838430386817483591677L,    // 8615841276005/14322
    -15116315767.092156862745098039215686275L,   // -7709321041217/510
    429614643061.16666666666666666666666667L,    // 2577687858367/6
    -13711655205088.332772159087948561632772L,   // -26315271553053477373/1919190
    488332318973593.16666666666666666666667L,    // 2929993913841559/6
    -19296579341940068.148632668144863266814L,   // -261082718496449122051/13530
    841693047573682615.00055370985603543743L,
    -40338071854059455413.076811594202898551L,
    2115074863808199160560.1453900709219858L,
    -120866265222965259346027.31193708252532L,
    7500866746076964366855720.0757575757576L,
    -503877810148106891413789303.05220125786L,
    36528776484818123335110430842.971177945L,
    -2849876930245088222626914643291.0678161L,
    238654274996836276446459819192192.14972L,
    -21399949257225333665810744765191097.393L,
};

// B_{2m}/(2m)!, m = 1..30: the Euler-Maclaurin correction weights.
inline constexpr long double kBernoulliOverFact[30] = {
    0.083333333333333333333333333333333333333L,
    -0.0013888888888888888888888888888888888889L,
    0.000033068783068783068783068783068783068783L,
    -0.00000082671957671957671957671957671957671958L,
    0.000000020876756987868098979210090321201432313L,
    -0.00000000052841901386874931848476822021795566769L,
    0.000000000013382536530684678832826980975129123277L,
    -3.3896802963225828668301953912494424996e-13L,
    8.5860620562778445641359054504256271340e-15L,
    -2.1748686985580618730415164238659178999e-16L,
    5.5090028283602295152026526089022548779e-18L,
    -1.3954464685812523340707686264063549764e-19L,
    3.5347070396294674716932299778037992147e-21L,
    -8.9535174270375468504026113181127410516e-23L,
    2.2679524523376830603109507388681660632e-24L,
    -5.7447906688722024452638819876070183996e-26L,
    1.4551724756148649018662648672713293357e-27L,
    -3.6859949406653101781817824799086603744e-29L,
    9.3367342570950446720325551527856232954e-31L,
    -2.3650224157006299345596351963698382401e-32L,
    5.9906717624821343046599123968196578264e-34L,
    -1.5174548844682902617108131358647189315e-35L,
    3.8437581254541882322294452909902321059e-37L,
    -9.7363530726466910352676212792504541810e-39L,
    2.4662470442006809571064002802888428859e-40L,
    -6.2470767418207436931487567947233686926e-42L,
    1.5824030244644914297510817068287639403e-43L,
    -4.0082736859489359685300121905219826627e-45L,
    1.0153075855569556311630713945378762327e-46L,
    -2.5718041582418717499248194097644548856e-48L,
};

} // namespace zetak::detail
