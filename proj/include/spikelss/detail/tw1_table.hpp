// Generated by tools/gen_tw1_table.py. Do not edit.
// TW1 CDF on an equispaced grid: Fredholm determinant of the Airy
// kernel, 80-point Gauss-Legendre on [0, 16.0].
#pragma once

#include <array>

namespace spikelss::detail {

inline constexpr double kTw1GridMin = -6.0;
inline constexpr double kTw1GridStep = 0.05;
inline constexpr int kTw1GridSize = 241;

// {cdf, 1 - cdf}
inline constexpr std::array<std::array<double, 2>, 241> kTw1Table{{
    {2.70731932598927097e-06, 9.99997292680674055e-01},  // s = -6.00
    {3.53530692643909233e-06, 9.99996464693073572e-01},  // s = -5.95
    {4.59856958655185965e-06, 9.99995401430413433e-01},  // s = -5.90
    {5.95853733933643791e-06, 9.99994041462660688e-01},  // s = -5.85
    {7.69114667784636523e-06, 9.99992308853322132e-01},  // s = -5.80
    {9.88986372258067864e-06, 9.99990110136277366e-01},  // s = -5.75
    {1.26692399129916373e-05, 9.99987330760087056e-01},  // s = -5.70
    {1.61690723339932167e-05, 9.99983830927665962e-01},  // s = -5.65
    {2.05592460960690577e-05, 9.99979440753903881e-01},  // s = -5.60
    {2.60453409508241656e-05, 9.99973954659049147e-01},  // s = -5.55
    {3.28750883422075586e-05, 9.99967124911657845e-01},  // s = -5.50
    {4.13457681047351553e-05, 9.99958654231895228e-01},  // s = -5.45
    {5.18126357044468853e-05, 9.99948187364295582e-01},  // s = -5.40
    {6.46984710213515573e-05, 9.99935301528978693e-01},  // s = -5.35
    {8.05043378406772141e-05, 9.99919495662159319e-01},  // s = -5.30
    {9.98216391619375612e-05, 9.99900178360838110e-01},  // s = -5.25
    {1.23345546790388892e-04, 9.99876654453209612e-01},  // s = -5.20
    {1.51889874187127874e-04, 9.99848110125812872e-01},  // s = -5.15
    {1.86403448889990416e-04, 9.99813596551110018e-01},  // s = -5.10
    {2.27988024795968271e-04, 9.99772011975204045e-01},  // s = -5.05
    {2.77917754920043011e-04, 9.99722082245079968e-01},  // s = -5.00
    {3.37660221929475762e-04, 9.99662339778070508e-01},  // s = -4.95
    {4.08898996589606236e-04, 9.99591101003410420e-01},  // s = -4.90
    {4.93557663444063946e-04, 9.99506442336555945e-01},  // s = -4.85
    {5.93825218551768670e-04, 9.99406174781448220e-01},  // s = -4.80
    {7.12182706386149992e-04, 9.99287817293613823e-01},  // s = -4.75
    {8.51430922234718088e-04, 9.99148569077765281e-01},  // s = -4.70
    {1.01471896329761698e-03, 9.98985281036702366e-01},  // s = -4.65
    {1.20557336668850306e-03, 9.98794426633311527e-01},  // s = -4.60
    {1.42792752653090964e-03, 9.98572072473469130e-01},  // s = -4.55
    {1.68615103614360492e-03, 9.98313848963856443e-01},  // s = -4.50
    {1.98507855594649146e-03, 9.98014921444053460e-01},  // s = -4.45
    {2.33003776429354693e-03, 9.97669962235706476e-01},  // s = -4.40
    {2.72687590806920286e-03, 9.97273124091930807e-01},  // s = -4.35
    {3.18198443375973788e-03, 9.96818015566240279e-01},  // s = -4.30
    {3.70232114926609575e-03, 9.96297678850733948e-01},  // s = -4.25
    {4.29542934283651257e-03, 9.95704570657163446e-01},  // s = -4.20
    {4.96945326970604263e-03, 9.95030546730294008e-01},  // s = -4.15
    {5.73314941022762259e-03, 9.94266850589772377e-01},  // s = -4.10
    {6.59589290652004296e-03, 9.93404107093479927e-01},  // s = -4.05
    {7.56767859880210642e-03, 9.92432321401197859e-01},  // s = -4.00
    {8.65911610831098487e-03, 9.91340883891689062e-01},  // s = -3.95
    {9.88141845135843966e-03, 9.90118581548641519e-01},  // s = -3.90
    {1.12463837190337132e-02, 9.88753616280966252e-01},  // s = -3.85
    {1.27663694191061088e-02, 9.87233630580893862e-01},  // s = -3.80
    {1.44542591505394634e-02, 9.85545740849460561e-01},  // s = -3.75
    {1.63234213661448378e-02, 9.83676578633855159e-01},  // s = -3.70
    {1.83876600741651013e-02, 9.81612339925834854e-01},  // s = -3.65
    {2.06611574340568663e-02, 9.79338842565943168e-01},  // s = -3.60
    {2.31584083136741753e-02, 9.76841591686325783e-01},  // s = -3.55
    {2.58941469930234272e-02, 9.74105853006976607e-01},  // s = -3.50
    {2.88832663215238920e-02, 9.71116733678476063e-01},  // s = -3.45
    {3.21407297594772379e-02, 9.67859270240522762e-01},  // s = -3.40
    {3.56814768576620214e-02, 9.64318523142338013e-01},  // s = -3.35
    {3.95203228496206344e-02, 9.60479677150379407e-01},  // s = -3.30
    {4.36718531465944138e-02, 9.56328146853405614e-01},  // s = -3.25
    {4.81503136331560000e-02, 9.51849686366843972e-01},  // s = -3.20
    {5.29694977599281872e-02, 9.47030502240071792e-01},  // s = -3.15
    {5.81426315162753629e-02, 9.41857368483724589e-01},  // s = -3.10
    {6.36822574386328444e-02, 9.36317742561367128e-01},  // s = -3.05
    {6.96001188673708027e-02, 9.30399881132629170e-01},  // s = -3.00
    {7.59070457054591974e-02, 9.24092954294540858e-01},  // s = -2.95
    {8.26128429544899651e-02, 9.17387157045509993e-01},  // s = -2.90
    {8.97261833070941150e-02, 9.10273816692905857e-01},  // s = -2.85
    {9.72545050590234716e-02, 9.02745494940976556e-01},  // s = -2.80
    {1.05203916569175382e-01, 8.94796083430824618e-01},  // s = -2.75
    {1.13579108441816526e-01, 8.86420891558183488e-01},  // s = -2.70
    {1.22383274533146277e-01, 8.77616725466853764e-01},  // s = -2.65
    {1.31618042794922452e-01, 8.68381957205077493e-01},  // s = -2.60
    {1.41283416862838740e-01, 8.58716583137161260e-01},  // s = -2.55
    {1.51377729178142656e-01, 8.48622270821857372e-01},  // s = -2.50
    {1.61897606299762714e-01, 8.38102393700237314e-01},  // s = -2.45
    {1.72837946923029145e-01, 8.27162053076970882e-01},  // s = -2.40
    {1.84191912972345467e-01, 8.15808087027654505e-01},  // s = -2.35
    {1.95950933981322711e-01, 8.04049066018677316e-01},  // s = -2.30
    {2.08104724817491288e-01, 7.91895275182508684e-01},  // s = -2.25
    {2.20641316652202574e-01, 7.79358683347797454e-01},  // s = -2.20
    {2.33547100922394890e-01, 7.66452899077605054e-01},  // s = -2.15
    {2.46806885881708515e-01, 7.53193114118291485e-01},  // s = -2.10
    {2.60403965196465581e-01, 7.39596034803534419e-01},  // s = -2.05
    {2.74320197909208585e-01, 7.25679802090791415e-01},  // s = -2.00
    {2.88536098970813448e-01, 7.11463901029186552e-01},  // s = -1.95
    {3.03030939433189372e-01, 6.96969060566810628e-01},  // s = -1.90
    {3.17782855299636680e-01, 6.82217144700363320e-01},  // s = -1.85
    {3.32768963950194674e-01, 6.67231036049805382e-01},  // s = -1.80
    {3.47965486995379436e-01, 6.52034513004620564e-01},  // s = -1.75
    {3.63347878364270460e-01, 6.36652121635729484e-01},  // s = -1.70
    {3.78890956401959189e-01, 6.21109043598040866e-01},  // s = -1.65
    {3.94569038736916511e-01, 6.05430961263083489e-01},  // s = -1.60
    {4.10356078680458980e-01, 5.89643921319541020e-01},  // s = -1.55
    {4.26225801937565429e-01, 5.73774198062434571e-01},  // s = -1.50
    {4.42151842439978793e-01, 5.57848157560021152e-01},  // s = -1.45
    {4.58107876157750615e-01, 5.41892123842249385e-01},  // s = -1.40
    {4.74067751802930093e-01, 5.25932248197069963e-01},  // s = -1.35
    {4.90005617407640037e-01, 5.09994382592359963e-01},  // s = -1.30
    {5.05896041836754851e-01, 4.94103958163245205e-01},  // s = -1.25
    {5.21714130381438990e-01, 4.78285869618561010e-01},  // s = -1.20
    {5.37435633672090796e-01, 4.62564366327909204e-01},  // s = -1.15
    {5.53037049246455803e-01, 4.46962950753544197e-01},  // s = -1.10
    {5.68495715209000330e-01, 4.31504284790999726e-01},  // s = -1.05
    {5.83789895519719049e-01, 4.16210104480281007e-01},  // s = -1.00
    {5.98898856552830705e-01, 4.01101143447169295e-01},  // s = -0.95
    {6.13802934666971334e-01, 3.86197065333028611e-01},  // s = -0.90
    {6.28483594627221143e-01, 3.71516405372778857e-01},  // s = -0.85
    {6.42923478814466987e-01, 3.57076521185533013e-01},  // s = -0.80
    {6.57106447248217984e-01, 3.42893552751782016e-01},  // s = -0.75
    {6.71017608534089982e-01, 3.28982391465910018e-01},  // s = -0.70
    {6.84643341926123972e-01, 3.15356658073876028e-01},  // s = -0.65
    {6.97971310766218433e-01, 3.02028689233781622e-01},  // s = -0.60
    {7.10990467627828138e-01, 2.89009532372171918e-01},  // s = -0.55
    {7.23691051548369990e-01, 2.76308948451630010e-01},  // s = -0.50
    {7.36064577784308005e-01, 2.63935422215691995e-01},  // s = -0.45
    {7.48103820564592015e-01, 2.51896179435408041e-01},  // s = -0.40
    {7.59802789352042929e-01, 2.40197210647957043e-01},  // s = -0.35
    {7.71156699148588087e-01, 2.28843300851411913e-01},  // s = -0.30
    {7.82161935399171337e-01, 2.17838064600828690e-01},  // s = -0.25
    {7.92816014061044294e-01, 2.07183985938955706e-01},  // s = -0.20
    {8.03117537410386939e-01, 1.96882462589613005e-01},  // s = -0.15
    {8.13066146157221836e-01, 1.86933853842778108e-01},  // s = -0.10
    {8.22662468432944438e-01, 1.77337531567055562e-01},  // s = -0.05
    {8.31908066202943441e-01, 1.68091933797056531e-01},  // s = -0.00
    {8.40805379640353623e-01, 1.59194620359646405e-01},  // s = +0.05
    {8.49357669976474217e-01, 1.50642330023525756e-01},  // s = +0.10
    {8.57568961319424949e-01, 1.42431038680575023e-01},  // s = +0.15
    {8.65443981905695936e-01, 1.34556018094304064e-01},  // s = +0.20
    {8.72988105219987043e-01, 1.27011894780012929e-01},  // s = +0.25
    {8.80207291387615220e-01, 1.19792708612384766e-01},  // s = +0.30
    {8.87108029211294613e-01, 1.12891970788705373e-01},  // s = +0.35
    {8.93697279190780569e-01, 1.06302720809219459e-01},  // s = +0.40
    {8.99982417830090475e-01, 1.00017582169909552e-01},  // s = +0.45
    {9.05971183503228472e-01, 9.40288164967715001e-02},  // s = +0.50
    {9.11671624115872103e-01, 8.83283758841278688e-02},  // s = +0.55
    {9.17092046767687741e-01, 8.29079532323122176e-02},  // s = +0.60
    {9.22240969588071891e-01, 7.77590304119281511e-02},  // s = +0.65
    {9.27127075887455798e-01, 7.28729241125442573e-02},  // s = +0.70
    {9.31759170737035736e-01, 6.82408292629642366e-02},  // s = +0.75
    {9.36146140062088850e-01, 6.38538599379111504e-02},  // s = +0.80
    {9.40296912308034361e-01, 5.97030876919656672e-02},  // s = +0.85
    {9.44220422714207253e-01, 5.57795772857926919e-02},  // s = +0.90
    {9.47925580207990337e-01, 5.20744197920096769e-02},  // s = +0.95
    {9.51421236911547563e-01, 4.85787630884524368e-02},  // s = +1.00
    {9.54716160234939548e-01, 4.52838397650604033e-02},  // s = +1.05
    {9.57819007512855203e-01, 4.21809924871447486e-02},  // s = +1.10
    {9.60738303127555593e-01, 3.92616968724443932e-02},  // s = +1.15
    {9.63482418047835631e-01, 3.65175819521643963e-02},  // s = +1.20
    {9.66059551702812547e-01, 3.39404482971874533e-02},  // s = +1.25
    {9.68477716100068831e-01, 3.15222838999311208e-02},  // s = +1.30
    {9.70744722090031265e-01, 2.92552779099687355e-02},  // s = +1.35
    {9.72868167672353734e-01, 2.71318323276462554e-02},  // s = +1.40
    {9.74855428235410271e-01, 2.51445717645897050e-02},  // s = +1.45
    {9.76713648616658769e-01, 2.32863513833412167e-02},  // s = +1.50
    {9.78449736869538511e-01, 2.15502631304615166e-02},  // s = +1.55
    {9.80070359621572851e-01, 1.99296403784271943e-02},  // s = +1.60
    {9.81581938908377638e-01, 1.84180610916223828e-02},  // s = +1.65
    {9.82990650369207630e-01, 1.70093496307923905e-02},  // s = +1.70
    {9.84302422691410439e-01, 1.56975773085895297e-02},  // s = +1.75
    {9.85522938193595266e-01, 1.44770618064047132e-02},  // s = +1.80
    {9.86657634440370024e-01, 1.33423655596299345e-02},  // s = +1.85
    {9.87711706785060595e-01, 1.22882932149393585e-02},  // s = +1.90
    {9.88690111740813893e-01, 1.13098882591860777e-02},  // s = +1.95
    {9.89597571084826155e-01, 1.04024289151738343e-02},  // s = +2.00
    {9.90438576605045418e-01, 9.56142339495455809e-03},  // s = +2.05
    {9.91217395403513057e-01, 8.78260459648697207e-03},  // s = +2.10
    {9.91938075675462105e-01, 8.06192432453792934e-03},  // s = +2.15
    {9.92604452888329991e-01, 7.39554711167003925e-03},  // s = +2.20
    {9.93220156289909561e-01, 6.77984371009040469e-03},  // s = +2.25
    {9.93788615679919940e-01, 6.21138432008003401e-03},  // s = +2.30
    {9.94313068384275911e-01, 5.68693161572410809e-03},  // s = +2.35
    {9.94796566376246361e-01, 5.20343362375359081e-03},  // s = +2.40
    {9.95241983493480031e-01, 4.75801650651995998e-03},  // s = +2.45
    {9.95652022704517581e-01, 4.34797729548245908e-03},  // s = +2.50
    {9.96029223382887130e-01, 3.97077661711282229e-03},  // s = +2.55
    {9.96375968551166835e-01, 3.62403144883313147e-03},  // s = +2.60
    {9.96694492061487747e-01, 3.30550793851219988e-03},  // s = +2.65
    {9.96986885682835444e-01, 3.01311431716453195e-03},  // s = +2.70
    {9.97255106069168784e-01, 2.74489393083117775e-03},  // s = +2.75
    {9.97500981585822455e-01, 2.49901841417758978e-03},  // s = +2.80
    {9.97726218974877788e-01, 2.27378102512217030e-03},  // s = +2.85
    {9.97932409843189761e-01, 2.06759015681025771e-03},  // s = +2.90
    {9.98121036959530583e-01, 1.87896304046939302e-03},  // s = +2.95
    {9.98293480349880413e-01, 1.70651965011956136e-03},  // s = +3.00
    {9.98451023182239106e-01, 1.54897681776085326e-03},  // s = +3.05
    {9.98594857434485283e-01, 1.40514256551469460e-03},  // s = +3.10
    {9.98726089340754242e-01, 1.27391065924578432e-03},  // s = +3.15
    {9.98845744613568010e-01, 1.15425538643199889e-03},  // s = +3.20
    {9.98954773440529853e-01, 1.04522655947014058e-03},  // s = +3.25
    {9.99054055255803042e-01, 9.45944744196943973e-04},  // s = +3.30
    {9.99144403287842042e-01, 8.55596712157961100e-04},  // s = +3.35
    {9.99226568885938082e-01, 7.73431114061887853e-04},  // s = +3.40
    {9.99301245629095281e-01, 6.98754370904771847e-04},  // s = +3.45
    {9.99369073221572313e-01, 6.30926778427634712e-04},  // s = +3.50
    {9.99430641180127366e-01, 5.69358819872595981e-04},  // s = +3.55
    {9.99486492318582886e-01, 5.13507681417136978e-04},  // s = +3.60
    {9.99537126035815571e-01, 4.62873964184451719e-04},  // s = +3.65
    {9.99583001413659078e-01, 4.16998586340969288e-04},  // s = +3.70
    {9.99624540131508588e-01, 3.75459868491449951e-04},  // s = +3.75
    {9.99662129204640593e-01, 3.37870795359383595e-04},  // s = +3.80
    {9.99696123553412086e-01, 3.03876446587884852e-04},  // s = +3.85
    {9.99726848410593449e-01, 2.73151589406504520e-04},  // s = +3.90
    {9.99754601574124657e-01, 2.45398425875339575e-04},  // s = +3.95
    {9.99779655512566978e-01, 2.20344487433021249e-04},  // s = +4.00
    {9.99802259330466514e-01, 1.97740669533445843e-04},  // s = +4.05
    {9.99822640600748214e-01, 1.77359399251806536e-04},  // s = +4.10
    {9.99841007071131660e-01, 1.58992928868335545e-04},  // s = +4.15
    {9.99857548251406603e-01, 1.42451748593344413e-04},  // s = +4.20
    {9.99872436888224803e-01, 1.27563111775166242e-04},  // s = +4.25
    {9.99885830333870573e-01, 1.14169666129475836e-04},  // s = +4.30
    {9.99897871815259576e-01, 1.02128184740428517e-04},  // s = +4.35
    {9.99908691609192157e-01, 9.13083908078618348e-05},  // s = +4.40
    {9.99918408129652603e-01, 8.15918703473918796e-05},  // s = +4.45
    {9.99927128932710962e-01, 7.28710672889716773e-05},  // s = +4.50
    {9.99934951644337988e-01, 6.50483556619680617e-05},  // s = +4.55
    {9.99941964816201012e-01, 5.80351837989423431e-05},  // s = +4.60
    {9.99948248714265686e-01, 5.17512857342709130e-05},  // s = +4.65
    {9.99953876044784140e-01, 4.61239552158905085e-05},  // s = +4.70
    {9.99958912622012530e-01, 4.10873779874229724e-05},  // s = +4.75
    {9.99963417981767466e-01, 3.65820182325498047e-05},  // s = +4.80
    {9.99967445944697220e-01, 3.25540553027689768e-05},  // s = +4.85
    {9.99971045132927228e-01, 2.89548670727493891e-05},  // s = +4.90
    {9.99974259443516256e-01, 2.57405564837377431e-05},  // s = +4.95
    {9.99977128481955635e-01, 2.28715180443229797e-05},  // s = +5.00
    {9.99979687958741037e-01, 2.03120412589266998e-05},  // s = +5.05
    {9.99981970051852631e-01, 1.80299481473533138e-05},  // s = +5.10
    {9.99984003737796612e-01, 1.59962622034084781e-05},  // s = +5.15
    {9.99985815093683117e-01, 1.41849063168585644e-05},  // s = +5.20
    {9.99987427572649135e-01, 1.25724273508172305e-05},  // s = +5.25
    {9.99988862254773903e-01, 1.11377452260390292e-05},  // s = +5.30
    {9.99990138075485313e-01, 9.86192451464962616e-06},  // s = +5.35
    {9.99991272033311285e-01, 8.72796668868503407e-06},  // s = +5.40
    {9.99992279378696391e-01, 7.72062130361653677e-06},  // s = +5.45
    {9.99993173785476031e-01, 6.82621452400915614e-06},  // s = +5.50
    {9.99993967506482173e-01, 6.03249351783460733e-06},  // s = +5.55
    {9.99994671514642053e-01, 5.32848535798666466e-06},  // s = +5.60
    {9.99995295630825454e-01, 4.70436917450229181e-06},  // s = +5.65
    {9.99995848639600782e-01, 4.15136039915884472e-06},  // s = +5.70
    {9.99996338393964179e-01, 3.66160603578897794e-06},  // s = +5.75
    {9.99996771910024895e-01, 3.22808997513063219e-06},  // s = +5.80
    {9.99997155452547415e-01, 2.84454745260792763e-06},  // s = +5.85
    {9.99997494612178572e-01, 2.50538782142178382e-06},  // s = +5.90
    {9.99997794375117932e-01, 2.20562488201389086e-06},  // s = +5.95
    {9.99998059185927324e-01, 1.94081407264644911e-06},  // s = +6.00
}};

}  // namespace spikelss::detail
