#pragma once

// Reference values: decrement before the step, worst case after a full step
// (NaN where no value is listed), worst case after the optimally damped step,
// and the optimal damping coefficient.

#include <array>
#include <limits>

namespace refdata {

struct Row {
    double a;
    double full;
    double opt;
    double gamma;
};

inline constexpr double kNoValue = std::numeric_limits<double>::quiet_NaN();

inline constexpr std::array<Row, 59> kRows{{
    {0.02, 0.0004002129, 0.0004002020, 0.9999959049},
    {0.04, 0.0016030061, 0.0016027905, 0.9999672844},
    {0.05, 0.0025070365, 0.0025064667, 0.9999357402},
    {0.06, 0.0036140910, 0.0036128237, 0.9998883080},
    {0.08, 0.0064421367, 0.0064376124, 0.9997320984},
    {0.10, 0.0100985841, 0.0100863025, 0.9994703910},
    {0.12, 0.0145975978, 0.0145695698, 0.9990735080},
    {0.14, 0.0199560957, 0.0198993569, 0.9985103062},
    {0.15, 0.0229637111, 0.0228857123, 0.9981561975},
    {0.16, 0.0261938350, 0.0260886230, 0.9977481582},
    {0.18, 0.0333335449, 0.0331510886, 0.9967529721},
    {0.20, 0.0414011017, 0.0411009637, 0.9954892620},
    {0.22, 0.0504257486, 0.0499526517, 0.9939202785},
    {0.24, 0.0604403592, 0.0597204227, 0.9920082112},
    {0.25, 0.0658302428, 0.0649521741, 0.9909114838},
    {0.26, 0.0714817517, 0.0704180523, 0.9897144751},
    {0.28, 0.0835910576, 0.0820584243, 0.9870000911},
    {0.30, 0.0968141551, 0.0946530992, 0.9838261704},
    {0.32, 0.1112021742, 0.1082118504, 0.9801545078},
    {0.34, 0.1268120901, 0.1227421781, 0.9759482831},
    {0.35, 0.1350948306, 0.1303732829, 0.9736337787},
    {0.36, 0.1437074168, 0.1382488115, 0.9711728663},
    {0.38, 0.1619590244, 0.1547332145, 0.9657967079},
    {0.40, 0.1816461018, 0.1721931153, 0.9597922905},
    {0.42, 0.2028572983, 0.1906220829, 0.9531371033},
    {0.44, 0.2256920826, 0.2100091752, 0.9458145937},
    {0.45, 0.2377527563, 0.2200572997, 0.9418997667},
    {0.46, 0.2502623689, 0.2303386829, 0.9378150396},
    {0.48, 0.2766944756, 0.2515899946, 0.9291362838},
    {0.50, 0.3051314992, 0.2737375986, 0.9197842716},
    {0.52, 0.3357362119, 0.2967512350, 0.9097733400},
    {0.54, 0.3686946267, 0.3205961990, 0.8991262221},
    {0.55, 0.3861220234, 0.3328184758, 0.8935734256},
    {0.56, 0.4042204205, 0.3452337887, 0.8878737471},
    {0.58, 0.4425604721, 0.3706218774, 0.8760542409},
    {0.60, 0.4840018685, 0.3967155859, 0.8637126540},
    {0.62, 0.5288808639, 0.4234680202, 0.8508994659},
    {0.64, 0.5775944788, 0.4508310379, 0.8376694301},
    {0.65, 0.6035336028, 0.4647263175, 0.8309160437},
    {0.66, 0.6306157177, 0.4787560083, 0.8240802319},
    {0.68, 0.6885138337, 0.5071945318, 0.8101911337},
    {0.70, 0.7519817648, 0.5360990922, 0.7960616771},
    {0.72, 0.8218739745, 0.5654236219, 0.7817504964},
    {0.74, 0.8992597480, 0.5951239679, 0.7673142876},
    {0.75, 0.9411738550, 0.6101018892, 0.7600662717},
    {0.76, 0.9855000696, 0.6251582547, 0.7528069572},
    {0.78, 1.0823615911, 0.6554871449, 0.7382789623},
    {0.80, 1.1921910478, 0.6860740057, 0.7237768386},
    {0.82, 1.3181923462, 0.7168849922, 0.7093429029},
    {0.84, 1.4648868491, 0.7478890580, 0.6950151115},
    {0.85, 1.5479540249, 0.7634545483, 0.6879016840},
    {0.86, 1.6389206049, 0.7790579083, 0.6808270495},
    {0.88, 1.8505789254, 0.8103659079, 0.6668080264},
    {0.90, 2.1168852322, 0.8417899549, 0.6529832527},
    {0.92, 2.4687193058, 0.8733093323, 0.6393740764},
    {0.94, 2.9700851395, 0.9049055446, 0.6259982580},
    {0.95, 3.3195687439, 0.9207272500, 0.6194025003},
    {0.96, kNoValue, 0.9365621489, 0.6128702685},
    {0.98, kNoValue, 0.9682645833, 0.6000015959},
}};

}  // namespace refdata
