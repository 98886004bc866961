#include "gpjac/golden.hpp"

namespace gpjac {

std::span<const GoldenTable> golden_tables() {
  static const std::vector<GoldenTable> tables{
      {1,
       2,
       {
           {3, {"5", "15"}, "75"},
           {4, {"7", "28"}, "196"},
           {5, {"2", "10", "10", "10"}, "2000"},
           {6, {"35", "210"}, "7350"},
           {7, {"83", "581"}, "48223"},
           {8, {"161", "1288"}, "207368"},
           {9, {"355", "3195"}, "1134225"},
           {10, {"2", "12", "60", "60", "60"}, "5184000"},
           {11, {"1541", "16951"}, "26121491"},
           {12, {"7", "7", "1365", "1820"}, "121730700"},
           {13, {"6733", "87529"}, "583332757"},
           {14, {"14027", "196378"}, "2754594206"},
           {15, {"5", "10", "10", "2950", "8850"}, "13053750000"},
           {16, {"61663", "986608"}, "60837209104"},
           {17, {"129403", "2199851"}, "284667318953"},
           {18, {"270865", "4875570"}, "1320621268050"},
           {19, {"567911", "10790309"}, "6127935174499"},
           {20, {"4", "24", "120", "49560", "49560"}, "28295350272000"},
       }},
      {2,
       3,
       {
           {4, {"2", "8", "24"}, "384"},
           {5, {"2", "10", "10", "10"}, "2000"},
           {6, {"3", "9", "108"}, "2916"},
           {7, {"83", "581"}, "48223"},
           {8, {"3", "3", "12", "48", "48"}, "248832"},
           {9, {"289", "2601"}, "751689"},
           {10, {"4", "8", "40", "40", "120"}, "6144000"},
           {11, {"1693", "18623"}, "31528739"},
           {12, {"6", "2664", "7992"}, "127744128"},
           {13, {"5", "5", "1555", "20215"}, "785858125"},
           {14, {"83", "83", "83", "6972"}, "3986498964"},
           {15, {"2", "10", "52230", "17410"}, "18186486000"},
           {16, {"3", "3", "24", "21408", "21408"}, "98993332224"},
           {17, {"170917", "2905589"}, "496614555113"},
           {18, {"9", "148257", "1779084"}, "2373854909292"},
           {19, {"802141", "15240679"}, "12225173493739"},
           {20, {"2", "8", "8", "16", "80", "11120", "33360"}, "60778610688000"},
       }},
      {3,
       4,
       {
           {5, {"19", "95"}, "1805"},
           {6, {"35", "210"}, "7350"},
           {7, {"83", "581"}, "48223"},
           {8, {"73", "584"}, "42632"},
           {9, {"355", "3195"}, "1134225"},
           {10, {"779", "7790"}, "6068410"},
           {11, {"1693", "18623"}, "31528739"},
           {12, {"2555", "30660"}, "78336300"},
           {13, {"5", "5", "1555", "20215"}, "785858125"},
           {14, {"17513", "245182"}, "4293872366"},
           {15, {"2", "2", "2", "10", "10", "10", "950", "2850"}, "21660000000"},
           {16, {"71321", "1141136"}, "81386960656"},
           {17, {"103", "1751", "1751", "1751"}, "552962478353"},
           {18, {"405055", "7290990"}, "2953251954450"},
           {19, {"37", "37", "23939", "454841"}, "14906272578931"},
           {20, {"1823639", "36472780"}, "66513184046420"},
       }},
  };
  return tables;
}

}  // namespace gpjac
