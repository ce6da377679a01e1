#pragma once

// Published values of v(n) for n = 1..72 with their residues mod 64 in binary.

namespace cli {

struct ReferenceValue {
  unsigned n;
  const char* value;
  const char* mod64;
};

inline constexpr ReferenceValue kReferenceValues[] = {
    {1, "1", "000001"},
    {2, "2", "000010"},
    {3, "3", "000011"},
    {4, "6", "000110"},
    {5, "10", "001010"},
    {6, "18", "010010"},
    {7, "31", "011111"},
    {8, "56", "111000"},
    {9, "98", "100010"},
    {10, "174", "101110"},
    {11, "306", "110010"},
    {12, "542", "011110"},
    {13, "956", "111100"},
    {14, "1690", "011010"},
    {15, "2983", "100111"},
    {16, "5272", "011000"},
    {17, "9310", "011110"},
    {18, "16448", "000000"},
    {19, "29050", "111010"},
    {20, "51318", "110110"},
    {21, "90644", "010100"},
    {22, "160118", "110110"},
    {23, "282826", "001010"},
    {24, "499590", "000110"},
    {25, "882468", "100100"},
    {26, "1558798", "001110"},
    {27, "2753448", "101000"},
    {28, "4863696", "010000"},
    {29, "8591212", "101100"},
    {30, "15175514", "011010"},
    {31, "26805983", "011111"},
    {32, "47350056", "101000"},
    {33, "83639030", "110110"},
    {34, "147739848", "001000"},
    {35, "260967362", "000010"},
    {36, "460972286", "111110"},
    {37, "814260544", "000000"},
    {38, "1438308328", "101000"},
    {39, "2540625074", "110010"},
    {40, "4487755390", "111110"},
    {41, "7927162604", "101100"},
    {42, "14002525142", "010110"},
    {43, "24734033936", "010000"},
    {44, "43690150992", "010000"},
    {45, "77174200244", "110100"},
    {46, "136320361910", "110110"},
    {47, "240796030130", "110010"},
    {48, "425341653750", "110110"},
    {49, "751322695068", "011100"},
    {50, "1327134992166", "100110"},
    {51, "2344248747712", "000000"},
    {52, "4140876568224", "100000"},
    {53, "7314436562436", "000100"},
    {54, "12920206953182", "011110"},
    {55, "22822229201360", "010000"},
    {56, "40313142631496", "001000"},
    {57, "71209059135432", "001000"},
    {58, "125783547796216", "111000"},
    {59, "222183821668104", "001000"},
    {60, "392465083678728", "001000"},
    {61, "693249583836156", "111100"},
    {62, "1224554757801706", "101010"},
    {63, "2163051215343439", "001111"},
    {64, "3820809588459176", "101000"},
    {65, "6749070853108302", "001110"},
    {66, "11921546029897416", "001000"},
    {67, "21058196429732338", "110010"},
    {68, "37197158469308174", "001110"},
    {69, "65704990586807960", "011000"},
    {70, "116061171489076784", "110000"},
    {71, "205010234490786986", "101010"},
    {72, "362129691668018062", "001110"},
};

}  // namespace cli
