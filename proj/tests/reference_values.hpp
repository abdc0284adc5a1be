#pragma once

// Frozen reference values, generated once with mpmath (mp.dps = 75) and
// spot-checked there against direct backward evaluation of the matching
// continued fractions. Regenerate only if a value is shown to be wrong.

namespace gammacf::testref {

inline constexpr const char* t1_lhs_x3 =
    "0.4364127619199096004654947738269050960449713469795483190";
inline constexpr const char* t1_lhs_x21_2 =
    "0.03622665167393494648435509864944635658203494379807934722";
inline constexpr const char* t2_lhs_x3 =
    "0.6568481671031437166837018132845826977338411565363572292";
inline constexpr const char* t3_lhs_x3 =
    "0.5077707818948851780115246579268870059809828046997060215";
inline constexpr const char* t4_lhs_x3 =
    "0.6657439140399605667262212181708074078417330106062812282";
inline constexpr const char* t5_P_x3 =
    "0.9981874889813955785824413126241244756664955159170670933";
inline constexpr const char* t5_value_x3 =
    "0.0009070775533322824596162253441887547909469706454640804112";
inline constexpr const char* cor1_lhs_x3 =
    "0.4358680186329960981407604953482713165558043687841455017";
inline constexpr const char* cor2_lhs_x3 =
    "0.6564506802014601750908198579046781801798592087640048536";
inline constexpr const char* cor3a_lhs_x5_2 =
    "1.042569631062581550002795204525989900586414087947801549";
inline constexpr const char* cor3b_lhs_x5_2 =
    "0.7645510627792264700020498166523925937633703311617211357";
inline constexpr const char* bauer_lhs_x5_2 =
    "1.502646603831506983513701286558637460566208622237045771";
inline constexpr const char* bauer_lhs_x1 =
    "3.141592653589793238462643383279502884197169399375105821";
inline constexpr const char* conj1_P_x3 =
    "0.8382898508635520910440842264430210202852881591504369595";
inline constexpr const char* conj1_value_x3 =
    "0.08796771034800807323204938316441552202831298167545060053";
inline constexpr const char* conj2_P_x3 =
    "1.188271302787985812830054872926298972807348677700017936";
inline constexpr const char* conj2_value_x3 =
    "-0.08603654517066377716023241268694071548275436145750605348";
inline constexpr const char* conj3_P_x3 =
    "0.8120854203746234964717132086752186719363064539462075345";
inline constexpr const char* conj3_value_x3 =
    "0.1037007292882074917504009857533947655551941476212985098";
inline constexpr const char* conj3_eta0_value_x3 =
    "0.1540281340650104283854519728693251382542881445247354376";
inline constexpr const char* gamma_1_3 =
    "2.678938534707747633655692940974677644128689377957301101";
inline constexpr const char* gamma_1_2 =
    "1.772453850905516027298167483341145182797549456122387128";
inline constexpr const char* gamma_2_3 =
    "1.354117939426400416945288028154513785519327266056793698";
inline constexpr const char* gamma_5_4 =
    "0.9064024770554770779826712889669180007487919207200163669";
inline constexpr const char* lgamma_1_10 =
    "2.252712651734205959869701646368495118615627222294953765";
inline constexpr const char* lgamma_1_3 =
    "0.9854206469277670691871740369779613917355564963858858542";
inline constexpr const char* lgamma_5_4 =
    "-0.09827183642181316146385380269663584022562270360764995774";
inline constexpr const char* lgamma_7_2 =
    "1.200973602347074224816021881450712995770238915468157197";
inline constexpr const char* lgamma_41_2 =
    "40.83150097453079810977608746076652040769425287525974754";
inline constexpr const char* pi_ref =
    "3.141592653589793238462643383279502884197169399375105821";
inline constexpr const char* e_ref =
    "2.718281828459045235360287471352662497757247093699959575";
inline constexpr const char* sqrt2_ref =
    "1.414213562373095048801688724209698078569671875376948073";

// Bernoulli numbers B_2 .. B_24 as exact rationals.
inline constexpr const char* bernoulli_even[] = {
    "1/6",  // B_2
    "-1/30",  // B_4
    "1/42",  // B_6
    "-1/30",  // B_8
    "5/66",  // B_10
    "-691/2730",  // B_12
    "7/6",  // B_14
    "-3617/510",  // B_16
    "43867/798",  // B_18
    "-174611/330",  // B_20
    "854513/138",  // B_22
    "-236364091/2730",  // B_24
};

}  // namespace gammacf::testref
