#pragma once
// Frozen expected values for the test suite, computed by an independent
// exact-arithmetic route and pinned here.  Generated file -- do not edit.
#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace frozen {

inline const std::string kF5PlusValue = "-4537/6107270400*x^18";
inline const std::vector<int> kF5PlusFirstViolation = {0, 0, 1, 0, 1};
inline const std::string kF5PlusFirstViolationValue = "-19/56700*x^10";
inline const int kF5PlusZeroBefore = 26;
inline const std::string kF4pValue0123 = "0";
inline const std::string kF4Value0123 = "1/88704*x^12";
inline const std::vector<int> kF4FirstViolation = {0, 0, 1, 0};
inline const std::string kF4FirstViolationValue = "1/504*x^7";
inline const int kTable1Rank = 12;
inline const int kTable1KernelDim = 3;
inline const std::vector<int> kTable1FreeParams = {1, 2, 4};
inline const std::vector<int> kLie4LineEqualsG = {3, 1, 2};
inline const std::vector<std::pair<std::string, std::string>> kLie4Decompose = {{"1", "bacd"}, {"1", "badc"}, {"1", "cadb"}};
inline const int kRcom4SeqRank = 52;
inline const int kRcom4SeqKernelDim = 12;
inline const std::vector<int> kRcom4FreeParams = {5, 6, 8, 9, 11, 12, 14, 15, 17, 23, 29, 35};
inline const int kRcom4F4PermRank = 12;
inline const int kDeg4RcomLiftRank = 56;
inline const int kDeg4RcomPlusF4Rank = 68;
inline const int kDeg4SeqRank = 52;
inline const int kDeg4SeqKernelDim = 68;
inline const int kDeg5SeqRank = 85;
inline const int kDeg5KernelDim = 20;
inline const std::vector<int> kDeg5FreeParams = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 16, 17, 18, 19, 20, 22};
inline const int kDeg5F5PermRank = 20;
inline const std::vector<bool> kDeg5DecompExact = {false, false, false, false, false, false, true, true, true, true, true, true, true, true, true, true, false, true, true, true};
inline const std::map<int, std::pair<std::string, std::string>> kDeg5Corrections = {{1, {"3", "cedab"}}, {17, {"2", "beacd"}}};
inline const std::string kBracket1X3X4 = "-1/20*x^8";
inline const std::string kBracket2X3X4 = "-1/60*x^9";
inline const std::string kBracket3X3X4 = "-11/2100*x^10";
inline const std::vector<int> kStar20ZinbielWitness = {0, 0, 0};
inline const std::string kStar20ZinbielWitnessValue = "1/6*x^4";
inline const std::vector<int> kM1AssocWitness = {0, 0, 0};
inline const std::string kM1AssocWitnessValue = "5/8*x^4";
inline const std::vector<int> kCirc3F4Witness = {0, 0, 1, 0};
inline const std::string kCirc3F4WitnessValue = "11/32400*x^10";
inline const std::vector<int> kCirc4F4Witness = {0, 0, 1, 0};
inline const std::string kCirc4F4WitnessValue = "5/179712*x^13";
inline const int kEpsPrintedGFailures = 70;
inline const int kStdSkew5DistinctTuples = 27216;
inline const int kZinbielDeg3Rank = 3;
inline const int kZinbielDeg3Kernel = 9;
inline const int kZinbielDeg3CommSpan = 9;
inline const int kZinbielDeg4Rank = 15;
inline const int kZinbielDeg4Kernel = 105;
inline const int kZinbielDeg4CommSpan = 105;
inline const int kZinbielDeg5CommRank = 105;
inline const int kZinbielDeg5CommKernel = 0;
inline const std::vector<int> kS13AltStar20Witness = {0, 0, 1, 2};
inline const std::string kS13AltStar20WitnessValue = "-1/15120*x^9";
inline const int kEvidenceBoundDeg3Star01 = 7;
inline const int kEvidenceBoundDeg4Plain = 1;
inline const std::vector<int> kBasisCounts = {12, 120, 15, 105, 64, 3, 1680};

}  // namespace frozen
