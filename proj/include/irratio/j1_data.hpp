#pragma once

#include <cstdint>

namespace irratio::j1data {

// Degree-266 permutation generators for J1 (images on points 0..265): the
// action on the cosets of a point stabilizer of order 660, derived from
// Janko's 7x7 matrix generators over GF(11) of orders 7 and 5. The group
// closure is order-gated (175560) where these are consumed.

inline constexpr uint16_t kGenA[266] = {
    1,3,5,7,9,11,13,15,17,19,21,23,25,27,29,31,
    24,34,36,38,40,42,44,46,48,50,52,54,14,57,59,60,
    62,64,66,68,70,72,74,76,78,80,82,84,86,6,88,8,
    91,92,61,95,97,99,101,28,79,104,106,107,0,109,111,113,
    115,20,117,119,121,118,123,125,127,45,128,83,130,89,132,134,
    136,138,140,93,143,144,145,146,148,149,151,153,155,154,114,157,
    159,161,163,81,166,73,41,168,170,120,133,172,77,174,176,177,
    139,179,180,43,181,182,124,185,186,187,18,190,173,193,150,195,
    196,198,200,71,202,102,204,183,58,205,51,162,142,39,208,197,
    75,156,210,211,2,87,152,215,35,217,219,220,222,53,110,224,
    171,178,227,175,30,229,231,226,131,233,55,105,116,235,236,96,
    203,239,241,230,100,164,47,216,169,188,244,126,147,135,232,67,
    214,243,37,201,4,33,249,250,199,251,221,253,228,112,63,255,
    10,16,108,191,160,247,257,192,184,209,258,85,129,65,225,26,
    254,22,165,261,252,237,260,262,122,189,218,263,12,240,206,213,
    242,223,167,103,212,56,69,32,259,49,141,194,245,264,98,234,
    90,256,248,207,238,137,94,246,265,158};

inline constexpr uint16_t kGenB[266] = {
    2,4,6,8,10,12,14,16,18,20,22,24,26,28,30,32,
    33,35,37,39,41,43,45,47,49,51,53,55,56,58,0,61,
    63,65,67,69,71,73,75,77,79,81,83,85,87,1,89,90,
    78,93,94,96,98,100,15,102,103,105,52,60,108,110,112,114,
    64,116,118,120,70,122,124,126,46,3,92,129,50,131,133,135,
    137,139,141,142,44,143,62,147,38,150,152,154,115,156,128,158,
    160,162,164,165,5,104,167,169,171,155,113,31,173,175,159,178,
    153,138,54,82,7,183,184,136,144,188,189,191,192,151,194,109,
    197,199,34,201,186,203,121,196,166,182,206,9,207,74,132,198,
    130,209,36,212,213,195,214,168,216,218,202,221,11,97,223,107,
    225,226,148,228,29,230,210,205,232,13,134,234,170,211,237,204,
    238,240,176,242,117,57,243,174,217,80,42,125,172,17,215,245,
    246,193,146,247,248,76,21,88,177,19,252,231,235,27,254,220,
    249,140,256,59,84,157,72,123,23,222,86,259,145,181,66,260,
    244,25,99,111,257,229,161,48,187,239,250,127,179,180,227,163,
    224,262,241,185,200,190,68,253,40,258,101,91,251,261,106,255,
    119,233,219,208,265,149,236,263,264,95};

}  // namespace irratio::j1data
