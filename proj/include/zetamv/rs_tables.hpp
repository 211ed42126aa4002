#pragma once
// Generated by tools/gen_rs_tables.py; do not edit by hand.
//
// Taylor coefficients about p = 1/2 of the Riemann-Siegel
// correction terms C_0..C_4.  C_k(p) multiplies
// (t/2pi)^{-(2k+1)/4} in the asymptotic expansion of Z(t).
// Derived from the Psi-derivative representation and verified
// against 50-digit reference values of Z(t).

namespace zetamv::rs_tables {

inline constexpr int order_max = 4;
inline constexpr int taylor_len = 57;

inline constexpr double coeff[order_max + 1][taylor_len] = {
    { // C_0
        0.3826834323650897717, 4.371437762604014867e-74, 1.748961872310081797, 1.444030066966869506e-74,
        2.118025207685496373, 2.578257040019889061e-76, -0.8707216670511480739, -1.555249504145632562e-76,
        -3.473311224346516707, -1.180968351465891973e-77, -1.662694730899932450, 1.518004462994374561e-78,
        1.216731288919232134, 2.122198497626764770e-79, 1.301430416100797577, -7.925865988458206313e-81,
        0.03051102182736167242, -2.962402695073743816e-81, -0.3755803051545095243, -1.027895922951618106e-83,
        -0.1085784416564065974, 3.223872425546859892e-83, 0.05183290299954962338, 1.150262375086526733e-84,
        0.02999948061990227592, -3.517509282688745346e-85, -0.002275939670612564226, -2.485294774515123306e-86,
        -0.004382647416580338306, 3.178657280063510401e-87, -0.0004064230183729846993, 3.443203068602454486e-88,
        0.0004006097785422113928, -1.941182632443360147e-89, 0.00008971057991388841298, -4.328157420650063402e-90,
        -0.00002302565002723910712, 3.544690738827815541e-92, -9.380006601906792485e-6, 3.957509580121829976e-92,
        6.323514947609107504e-7, 9.113561673794003967e-94, 6.551022819231501666e-7, -3.747361348608194414e-94,
        2.210523745552697259e-8, -1.910359385282059342e-95, -3.322316176445628835e-8, 3.051596420850774813e-96,
        -3.734910989933656082e-9, 3.880275210574449307e-97, 1.244506706079773920e-9, -1.665969908185016112e-98,
        2.476820537650219184e-10, -2.077591634668320818e-99, -3.284272816891627194e-11, 2.868107809225425405e-101,
        -1.130540685229840368e-11,
    },
    { // C_1
        -9.144427225012968454e-77, -0.05365020525675069406, -1.632700343931283653e-77, 0.1102781874108148244,
        3.447056388544877412e-77, 1.231720015431522631, 6.281998338769888236e-78, 1.263496486279945788,
        -1.586124467450957740e-78, -1.695108997559503018, -3.843547988700683701e-79, -2.999871196765010089,
        2.283696538251346700e-80, -0.1081994495989920864, 1.275655126833023349e-80, 1.940766294621271269,
        6.307440937236178017e-83, 0.7838423561500686533, -2.715249613692762831e-82, -0.5054829667900365919,
        -1.290017932515481636e-83, -0.3845072349605797405, 5.123224182427178736e-84, 0.03747264646531532068,
        4.603456557143241006e-85, 0.09092026610973176317, -7.355166700038960482e-86, 0.01044923755006450922,
        -9.801049999316421177e-87, -0.01258297965158341650, 6.706887639692263163e-88, -0.003399503721151274085,
        1.793878278129616709e-88, 0.001041095053771489127, -1.744133168957875629e-90, 0.0005010949051118486860,
        -2.290345095337698685e-90, -0.00003956359669003181560, -6.152131553008413782e-92, -0.00004762459245357189639,
        2.928573965821093321e-92, -1.853935533808513227e-6, 1.716634133415745985e-93, 3.193691808006897204e-6,
        -3.133461202775879044e-94, 4.090780760850606633e-7, -4.527169198882284784e-95, -1.544662433257663213e-7,
        2.197012028549722453e-96, -3.466307491769133172e-8, 3.082042327626637477e-97, 5.158711258806154785e-9,
        -4.764933154686770038e-99, 1.984539255640794420e-9, -1.003212475168088096e-98, -8.920820862551490848e-11,
        1.577179984669970626e-99,
    },
    { // C_2
        0.005188542830293168494, 1.367298335834829654e-76, 0.001237863355225389841, 7.765689527579315355e-78,
        -0.1813750572516699741, -1.005993015085377578e-77, 0.1429149274853212654, -1.200105189314496068e-78,
        1.330339176668756533, 2.484462329104248743e-79, 0.3522472353403733678, 3.770972958938334832e-80,
        -2.421001595891950724, -2.746873008978200872e-81, -1.676078702253810885, -5.741187497364580073e-82,
        1.368941672332837218, 4.099867468155572482e-83, 1.553901943022298322, -3.545079866517591418e-84,
        -0.1722164273472998052, -2.028713614771950811e-84, -0.6359068055045430989, 2.713794679516564076e-85,
        -0.09911649873041208105, 7.404316256280053869e-86, 0.1403348006738700895, -4.535584291792781767e-87,
        0.04782352019827292236, -2.310296129947151307e-87, -0.01735604064147978080, 5.935160117787260579e-91,
        -0.01022501253402859184, 4.362450153620029349e-89, 0.0009274149159794887899, 1.718031937000982232e-90,
        0.001357219437237338535, -8.232914894166178225e-91, 0.00006413690120293880090, -6.003168612395504952e-92,
        -0.0001230080569819662988, 1.206852224098627465e-92, -0.00001831350740478920255, 2.116066724018953162e-93,
        7.821628604322627309e-6, -1.098725152266051492e-94, 2.008754248475994550e-6, -1.768207458740781180e-95,
        -3.353276539318571374e-7, 2.661704530298223628e-97, -1.461602091741823093e-7, 7.788239625420366081e-97,
        7.261497384040072462e-9, -1.382934031570193705e-97, 7.894805679006706236e-9, -1.288508969379610375e-98,
        1.958985823464410454e-10,
    },
    { // C_3
        -6.928800639155930825e-77, -0.002679432181438913809, -6.754136124371118291e-77, 0.02995372109103514964,
        -1.574290040364128037e-78, -0.04257017254182869799, 1.501357635395458968e-78, -0.2899796577980388751,
        8.576610864004498424e-80, 0.4888831999235445973, -1.873212466176529292e-80, 1.230855876395746081,
        8.394633371238838501e-82, -0.8297560708527408704, 1.597241047879191215e-82, -2.249763536666566867,
        -7.963526192819248691e-83, 0.07845139961005471379, -3.825508910286118148e-84, 1.746749280086889400,
        2.660124665099247775e-84, 0.4596808097974993511, 1.082109439003313970e-85, -0.6619353471039774946,
        -5.394559433782144144e-86, -0.3159044103617363458, 4.023253414600675592e-87, 0.1284479254520749599,
        1.018532492744804954e-87, 0.1007338271662615230, -1.624635333589192519e-88, -0.009530183848825267760,
        -2.664567257448496669e-89, -0.01926442168751408890, 7.955920717053492203e-90, -0.001246463715876929171,
        9.825450944659329199e-91, 0.002424396964110308574, -1.823919618848772106e-91, 0.0004376476977418570183,
        -4.925510207091500404e-92, -0.0002071403268700179128, 2.127677129247022283e-93, -0.00006274344504186515561,
        4.186523833076143632e-94, 0.00001157534381459566935, -6.392881631001255144e-97, 5.883854924540379784e-6,
        -3.275191151082066566e-95, -3.124677400696336221e-7, 6.814469608030370660e-96, -4.024065775498959501e-7,
        6.561529633568781007e-97, -1.199110779489632961e-8, -6.502883449227443487e-98, 2.096375406393870832e-8,
        -3.719088561037484912e-98,
    },
    { // C_4
        0.0004648338936176338185, 3.484037721931904405e-77, -0.004022642946136188304, 1.041317022651547001e-77,
        0.003847177051796126884, -5.844492626135568955e-80, 0.06581175135809486002, -3.169081268031739505e-80,
        -0.1960412434369444912, 1.415692798240942545e-80, -0.2085405368635885324, -8.814294059391799585e-82,
        0.9507754185141750946, -7.071986901078060765e-82, 0.5341535312914873976, 1.955011279700944044e-83,
        -1.676349441176340080, 8.736974149745565045e-84, -1.076747157875128993, -1.180169090378929255e-84,
        1.235339301656596985, 7.447775611814724134e-86, 1.025782534005727577, 4.083721666560313705e-86,
        -0.4012409579398854438, -5.351873784232751655e-87, -0.5036663995108303448, -2.090602107965864508e-87,
        0.03573487795502744986, 1.365224290320697212e-88, 0.1443176308678541662, 5.194940483922310807e-90,
        0.01509152741790346942, -6.365052821884466167e-90, -0.02609887477919436132, 3.152139361925549018e-91,
        -0.006126628379519261749, 5.821458214299563251e-91, 0.003077503129870841185, 7.788276989582456319e-94,
        0.001156247893408875232, -5.809346668834042733e-94, -0.0002277596675847212747, -4.147206428771172539e-94,
        -0.0001418963711818144443, 8.199818922571563867e-94, 7.464860307955919453e-6, -2.104610827639657637e-94,
        0.00001247970164540911662, -1.861360293729390350e-95, 4.863945184002094619e-7, 1.709747919478245651e-96,
        -8.210237414123167234e-7, 1.549350142007667594e-96, -9.223258397495269289e-8, -1.409578848709607948e-97,
        4.103687848816232530e-8,
    },
};

} // namespace zetamv::rs_tables
