#include "hilbk3/curves.hpp"

namespace hilbk3 {

// Byte-for-byte copy of data/curve_points.txt (checked by the test suite).
const std::string& embedded_point_table() {
  static const std::string table = R"(# hilbk3 curve point table, version 1
# fields: curve-id  x  y  tag
# "integral" records list y >= 0; both signs are verified.
C1 0 0 integral
E-1 -39196 156792 integral
E-1 -27900 2266200 integral
E-1 166980 85186200 integral
E-2 0 15523200 integral
E14 564480 49392000 integral
E14 604905 101433675 integral
E14 632100 129859800 integral
E14 683844 180931128 integral
E14 755825 251976375 integral
E14 940800 451113600 integral
E14 1063680 599510400 integral
E14 1317120 945033600 integral
E14 1361220 1010272200 integral
E14 2257920 2617776000 integral
E14 3066624 4451914368 integral
E14 3327780 5110549800 integral
E14 11863929 38995732083 integral
E14 12603780 42818542200 integral
E14 13848576 49513570176 integral
E14 72195620 608777597400 integral
E14 1964277504 87032792472192 integral
E-11 -91775 144883425 integral
E-22 -853776 58056768 integral
E7 23929444/81 22042862072/729 generator
E77 142777144885734591204/47183614355089 51150220299670713464643520008/324105804064380058937 generator
E154 267909856900/23409 -74537431985630600/3581577 generator
E14 564480 49392000 generator
E14 940800 451113600 generator
E14 1317120 945033600 generator
E14 2257920 2617776000 generator
E-1 -27900 2266200 generator
E-1 138825/4 125561925/8 generator
E-1 166980 85186200 generator
E-2 -40566784/529 27776430464/12167 generator
E-2 -3296728575/65536 -114720819732225/16777216 generator
E'-11 195693/4 144883425/8 generator
E'-22 -17428 -907137 generator
E-11 -91775 144883425 generator
E-22 -853776 58056768 generator
)";
  return table;
}

}  // namespace hilbk3
