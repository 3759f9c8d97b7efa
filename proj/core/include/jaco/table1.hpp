#pragma once

#include <string_view>
#include <vector>

#include "jaco/graph_params.hpp"

namespace jaco {

// Reference parameters of J_1 .. J_32 as published in the Jaco graph
// literature, in the CSV layout produced by `jaco table --format csv`.
inline constexpr std::string_view kTable1Csv =
    "n,t1,t2_star,size,delta_set,gamma,diam,delta\n"
    "1,0,1,0,1,0,0,0\n"
    "2,1,1,1,1;2,1,1,1\n"
    "3,1,2,2,2,1,2,2\n"
    "4,1,3,3,2;3,2,3,2\n"
    "5,2,3,5,3,2,3,3\n"
    "6,2,4,7,3;4;5,2,4,3\n"
    "7,3,4,10,4;5,2,4,4\n"
    "8,3,5,13,5,2,4,5\n"
    "9,3,6,16,5;6;7,2,5,5\n"
    "10,4,6,20,6;7,2,5,6\n"
    "11,4,7,24,7,2,5,7\n"
    "12,4,8,28,7;8,3,5,7\n"
    "13,5,8,33,8,3,5,8\n"
    "14,5,9,38,8;9;10,3,6,8\n"
    "15,6,9,44,9;10,3,6,9\n"
    "16,6,10,50,10,3,6,10\n"
    "17,6,11,56,10;11,3,6,10\n"
    "18,7,11,63,11,3,6,11\n"
    "19,7,12,70,11;12;13,3,6,11\n"
    "20,8,12,78,12;13,3,6,12\n"
    "21,8,13,86,13,3,6,13\n"
    "22,8,14,94,13;14;15,3,7,13\n"
    "23,9,14,103,14;15,3,7,14\n"
    "24,9,15,112,15,3,7,15\n"
    "25,9,16,121,15;16,3,7,15\n"
    "26,10,16,131,16,3,7,16\n"
    "27,10,17,141,16;17;18,3,7,16\n"
    "28,11,17,152,17;18,3,7,17\n"
    "29,11,18,163,18,3,7,18\n"
    "30,11,19,174,18;19;20,3,7,18\n"
    "31,12,19,186,19;20,3,7,19\n"
    "32,12,20,198,20,3,7,20\n";

/// kTable1Csv parsed into rows; throws std::runtime_error on a malformed row.
std::vector<ParamRow> parse_param_csv(std::string_view csv);

inline std::vector<ParamRow> table1_rows() { return parse_param_csv(kTable1Csv); }

/// Figure-style edge list of J_8, "i j" per line with i < j.
inline constexpr std::string_view kJ8Edges =
    "1 2\n2 3\n3 4\n3 5\n4 5\n4 6\n4 7\n5 6\n5 7\n5 8\n6 7\n6 8\n7 8\n";

}  // namespace jaco
