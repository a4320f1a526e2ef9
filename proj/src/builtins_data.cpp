#include "rbident/builtins_data.hpp"

namespace rbident::data {

const std::vector<std::vector<SignedWord>>& gLie4Defs() {
    static const std::vector<std::vector<SignedWord>> v = {
        {{-1, "ab.cd.."}, {1, "ac.bd.."}, {1, "ab.c.d."}, {-1, "ac.b.d."}, {1, "bc.a.d."}, {1, "bc.d.a."}, {-1, "bd.c.a."}, {1, "cd.b.a."}},
        {{1, "ab.cd.."}, {1, "ad.bc.."}, {1, "ab.d.c."}, {-1, "ad.b.c."}, {-1, "bc.d.a."}, {1, "bd.a.c."}, {1, "bd.c.a."}, {-1, "cd.b.a."}},
        {{1, "ac.bd.."}, {-1, "ad.bc.."}, {1, "ac.d.b."}, {-1, "ad.c.b."}, {1, "bc.d.a."}, {-1, "bd.c.a."}, {1, "cd.a.b."}, {1, "cd.b.a."}}};
    return v;
}

const std::vector<std::vector<SignedWord>>& gRcom4Defs() {
    static const std::vector<std::vector<SignedWord>> v = {
        {{-1, "abdc..."}, {1, "adbc..."}, {1, "abc.d.."}, {-1, "adb.c.."}, {1, "ab.dc.."}, {-1, "ad.bc.."}},
        {{-1, "acdb..."}, {1, "adcb..."}, {1, "acb.d.."}, {-1, "adb.c.."}, {1, "ac.db.."}, {-1, "ad.cb.."}},
        {{-1, "abcd..."}, {1, "abdc..."}, {1, "acbd..."}, {-1, "acdb..."}, {-1, "adbc..."}, {1, "adcb..."}, {1, "ab.cd.."}, {-1, "ab.dc.."}, {-1, "ac.bd.."}, {1, "ac.db.."}, {1, "ad.bc.."}, {-1, "ad.cb.."}},
        {{-1, "badc..."}, {1, "bdac..."}, {1, "bac.d.."}, {-1, "bda.c.."}, {1, "ba.dc.."}, {-1, "bd.ac.."}},
        {{-1, "bcda..."}, {1, "bdca..."}, {1, "bca.d.."}, {-1, "bda.c.."}, {1, "bc.da.."}, {-1, "bd.ca.."}},
        {{-1, "bacd..."}, {1, "badc..."}, {1, "bcad..."}, {-1, "bcda..."}, {-1, "bdac..."}, {1, "bdca..."}, {1, "ba.cd.."}, {-1, "ba.dc.."}, {-1, "bc.ad.."}, {1, "bc.da.."}, {1, "bd.ac.."}, {-1, "bd.ca.."}},
        {{-1, "cadb..."}, {1, "cdab..."}, {1, "cab.d.."}, {-1, "cda.b.."}, {1, "ca.db.."}, {-1, "cd.ab.."}},
        {{-1, "cbda..."}, {1, "cdba..."}, {1, "cba.d.."}, {-1, "cda.b.."}, {1, "cb.da.."}, {-1, "cd.ba.."}},
        {{-1, "cabd..."}, {1, "cadb..."}, {1, "cbad..."}, {-1, "cbda..."}, {-1, "cdab..."}, {1, "cdba..."}, {1, "ca.bd.."}, {-1, "ca.db.."}, {-1, "cb.ad.."}, {1, "cb.da.."}, {1, "cd.ab.."}, {-1, "cd.ba.."}},
        {{-1, "dacb..."}, {1, "dcab..."}, {1, "dab.c.."}, {-1, "dca.b.."}, {1, "da.cb.."}, {-1, "dc.ab.."}},
        {{-1, "dbca..."}, {1, "dcba..."}, {1, "dba.c.."}, {-1, "dca.b.."}, {1, "db.ca.."}, {-1, "dc.ba.."}},
        {{-1, "dabc..."}, {1, "dacb..."}, {1, "dbac..."}, {-1, "dbca..."}, {-1, "dcab..."}, {1, "dcba..."}, {1, "da.bc.."}, {-1, "da.cb.."}, {-1, "db.ac.."}, {1, "db.ca.."}, {1, "dc.ab.."}, {-1, "dc.ba.."}}};
    return v;
}

const std::vector<std::vector<SignedWord>>& gJor5Defs() {
    static const std::vector<std::vector<SignedWord>> v = {
        {{-1, "ac.d.be.."}, {1, "ad.c.be.."}, {1, "bc.e.ad.."}, {-1, "bd.e.ac.."}, {-1, "be.c.ad.."}, {1, "be.d.ac.."}, {1, "ac.d.b.e."}, {-1, "ad.c.b.e."}, {-1, "bc.d.a.e."}, {1, "bc.d.e.a."}, {-1, "bc.e.d.a."}, {1, "bd.c.a.e."}, {-1, "bd.c.e.a."}, {1, "bd.e.c.a."}, {1, "be.c.d.a."}, {-1, "be.d.c.a."}},
        {{-1, "ad.e.bc.."}, {1, "ae.d.bc.."}, {-1, "bc.d.ae.."}, {1, "bc.e.ad.."}, {1, "bd.c.ae.."}, {-1, "be.c.ad.."}, {1, "ad.e.b.c."}, {-1, "ae.d.b.c."}, {1, "bc.d.e.a."}, {-1, "bc.e.d.a."}, {-1, "bd.c.e.a."}, {-1, "bd.e.a.c."}, {1, "bd.e.c.a."}, {1, "be.c.d.a."}, {1, "be.d.a.c."}, {-1, "be.d.c.a."}},
        {{-1, "ac.e.bd.."}, {1, "ae.c.bd.."}, {1, "bc.d.ae.."}, {-1, "bd.c.ae.."}, {1, "bd.e.ac.."}, {-1, "be.d.ac.."}, {1, "ac.e.b.d."}, {-1, "ae.c.b.d."}, {-1, "bc.d.e.a."}, {-1, "bc.e.a.d."}, {1, "bc.e.d.a."}, {1, "bd.c.e.a."}, {-1, "bd.e.c.a."}, {1, "be.c.a.d."}, {-1, "be.c.d.a."}, {1, "be.d.c.a."}},
        {{-1, "ad.b.ce.."}, {1, "ad.c.be.."}, {1, "bd.a.ce.."}, {-1, "be.c.ad.."}, {-1, "cd.a.be.."}, {1, "ce.b.ad.."}, {1, "ad.b.c.e."}, {-1, "ad.c.b.e."}, {-1, "bd.a.c.e."}, {1, "bd.c.a.e."}, {-1, "bd.c.e.a."}, {1, "be.c.d.a."}, {1, "cd.a.b.e."}, {-1, "cd.b.a.e."}, {1, "cd.b.e.a."}, {-1, "ce.b.d.a."}},
        {{-1, "ae.b.cd.."}, {1, "ae.c.bd.."}, {-1, "bd.c.ae.."}, {1, "be.a.cd.."}, {1, "cd.b.ae.."}, {-1, "ce.a.bd.."}, {1, "ae.b.c.d."}, {-1, "ae.c.b.d."}, {1, "bd.c.e.a."}, {-1, "be.a.c.d."}, {1, "be.c.a.d."}, {-1, "be.c.d.a."}, {-1, "cd.b.e.a."}, {1, "ce.a.b.d."}, {-1, "ce.b.a.d."}, {1, "ce.b.d.a."}},
        {{-1, "ab.d.ce.."}, {1, "ad.c.be.."}, {1, "bc.e.ad.."}, {1, "bd.a.ce.."}, {-1, "be.c.ad.."}, {-1, "cd.a.be.."}, {-1, "cd.e.ab.."}, {1, "ce.d.ab.."}, {1, "ab.d.c.e."}, {-1, "ad.c.b.e."}, {-1, "bc.d.a.e."}, {1, "bc.d.e.a."}, {-1, "bc.e.d.a."}, {-1, "bd.a.c.e."}, {1, "bd.c.a.e."}, {-1, "bd.c.e.a."}, {1, "be.c.d.a."}, {1, "cd.a.b.e."}, {1, "cd.e.b.a."}, {-1, "ce.d.b.a."}},
        {{-1, "ad.e.bc.."}, {1, "ae.d.bc.."}, {-1, "bc.d.ae.."}, {1, "bc.e.ad.."}, {1, "cd.b.ae.."}, {-1, "ce.b.ad.."}, {1, "ad.e.c.b."}, {-1, "ae.d.c.b."}, {1, "bc.d.e.a."}, {-1, "bc.e.d.a."}, {-1, "cd.b.e.a."}, {-1, "cd.e.a.b."}, {1, "cd.e.b.a."}, {1, "ce.b.d.a."}, {1, "ce.d.a.b."}, {-1, "ce.d.b.a."}},
        {{-1, "ab.e.cd.."}, {1, "ae.c.bd.."}, {1, "bc.d.ae.."}, {-1, "bd.c.ae.."}, {1, "be.a.cd.."}, {1, "cd.e.ab.."}, {-1, "ce.a.bd.."}, {-1, "ce.d.ab.."}, {1, "ab.e.c.d."}, {-1, "ae.c.b.d."}, {-1, "bc.d.e.a."}, {-1, "bc.e.a.d."}, {1, "bc.e.d.a."}, {1, "bd.c.e.a."}, {-1, "be.a.c.d."}, {1, "be.c.a.d."}, {-1, "be.c.d.a."}, {-1, "cd.e.b.a."}, {1, "ce.a.b.d."}, {1, "ce.d.b.a."}},
        {{-1, "ac.b.de.."}, {1, "ad.c.be.."}, {1, "bc.a.de.."}, {1, "bc.e.ad.."}, {-1, "bd.e.ac.."}, {-1, "be.c.ad.."}, {-1, "cd.a.be.."}, {1, "de.b.ac.."}, {1, "ac.b.d.e."}, {-1, "ad.c.b.e."}, {-1, "bc.a.d.e."}, {-1, "bc.e.d.a."}, {1, "bd.c.a.e."}, {-1, "bd.c.e.a."}, {1, "bd.e.c.a."}, {1, "be.c.d.a."}, {1, "cd.a.b.e."}, {-1, "cd.b.a.e."}, {1, "cd.b.e.a."}, {-1, "de.b.c.a."}},
        {{-1, "ac.b.de.."}, {1, "ae.c.bd.."}, {1, "bc.a.de.."}, {1, "bc.d.ae.."}, {-1, "bd.c.ae.."}, {-1, "be.d.ac.."}, {-1, "ce.a.bd.."}, {1, "de.b.ac.."}, {1, "ac.b.e.d."}, {-1, "ae.c.b.d."}, {-1, "bc.a.e.d."}, {-1, "bc.d.e.a."}, {1, "bd.c.e.a."}, {1, "be.c.a.d."}, {-1, "be.c.d.a."}, {1, "be.d.c.a."}, {1, "ce.a.b.d."}, {-1, "ce.b.a.d."}, {1, "ce.b.d.a."}, {-1, "de.b.c.a."}},
        {{-1, "ac.d.be.."}, {1, "ae.d.bc.."}, {-1, "bc.d.ae.."}, {1, "be.d.ac.."}, {1, "cd.a.be.."}, {1, "cd.b.ae.."}, {-1, "de.a.bc.."}, {-1, "de.b.ac.."}, {1, "ac.d.e.b."}, {-1, "ae.d.c.b."}, {1, "bc.d.e.a."}, {-1, "be.d.c.a."}, {-1, "cd.a.e.b."}, {-1, "cd.b.e.a."}, {1, "de.a.c.b."}, {1, "de.b.c.a."}},
        {{-1, "ac.e.bd.."}, {1, "ae.d.bc.."}, {-1, "bc.d.ae.."}, {1, "bd.e.ac.."}, {1, "cd.b.ae.."}, {1, "ce.a.bd.."}, {-1, "de.a.bc.."}, {-1, "de.b.ac.."}, {1, "ac.e.d.b."}, {-1, "ae.d.c.b."}, {1, "bc.d.e.a."}, {-1, "bd.e.c.a."}, {-1, "cd.b.e.a."}, {-1, "cd.e.a.b."}, {1, "cd.e.b.a."}, {-1, "ce.a.d.b."}, {1, "ce.d.a.b."}, {-1, "ce.d.b.a."}, {1, "de.a.c.b."}, {1, "de.b.c.a."}},
        {{-1, "ae.b.cd.."}, {1, "ae.d.bc.."}, {-1, "bc.d.ae.."}, {1, "be.a.cd.."}, {1, "cd.b.ae.."}, {-1, "de.a.bc.."}, {1, "ae.b.d.c."}, {-1, "ae.d.b.c."}, {1, "bc.d.e.a."}, {-1, "be.a.d.c."}, {1, "be.d.a.c."}, {-1, "be.d.c.a."}, {-1, "cd.b.e.a."}, {1, "de.a.b.c."}, {-1, "de.b.a.c."}, {1, "de.b.c.a."}},
        {{-1, "ad.b.ce.."}, {1, "ae.d.bc.."}, {-1, "bc.d.ae.."}, {1, "bd.a.ce.."}, {1, "bd.c.ae.."}, {-1, "be.c.ad.."}, {1, "ce.b.ad.."}, {-1, "de.a.bc.."}, {1, "ad.b.e.c."}, {-1, "ae.d.b.c."}, {1, "bc.d.e.a."}, {-1, "bd.a.e.c."}, {-1, "bd.c.e.a."}, {1, "be.c.d.a."}, {1, "be.d.a.c."}, {-1, "be.d.c.a."}, {-1, "ce.b.d.a."}, {1, "de.a.b.c."}, {-1, "de.b.a.c."}, {1, "de.b.c.a."}},
        {{-1, "ab.c.de.."}, {1, "ad.c.be.."}, {1, "bc.a.de.."}, {1, "bc.e.ad.."}, {-1, "be.c.ad.."}, {-1, "cd.a.be.."}, {-1, "cd.e.ab.."}, {1, "de.c.ab.."}, {1, "ab.c.d.e."}, {-1, "ad.c.b.e."}, {-1, "bc.a.d.e."}, {-1, "bc.e.d.a."}, {1, "be.c.d.a."}, {1, "cd.a.b.e."}, {1, "cd.e.b.a."}, {-1, "de.c.b.a."}},
        {{-1, "ab.c.de.."}, {1, "ae.c.bd.."}, {1, "bc.a.de.."}, {1, "bc.d.ae.."}, {-1, "bd.c.ae.."}, {-1, "ce.a.bd.."}, {-1, "ce.d.ab.."}, {1, "de.c.ab.."}, {1, "ab.c.e.d."}, {-1, "ae.c.b.d."}, {-1, "bc.a.e.d."}, {-1, "bc.d.e.a."}, {1, "bd.c.e.a."}, {1, "ce.a.b.d."}, {1, "ce.d.b.a."}, {-1, "de.c.b.a."}},
        {{-1, "ab.e.cd.."}, {1, "ae.d.bc.."}, {-1, "bc.d.ae.."}, {1, "bd.c.ae.."}, {1, "be.a.cd.."}, {1, "cd.e.ab.."}, {-1, "de.a.bc.."}, {-1, "de.c.ab.."}, {1, "ab.e.d.c."}, {-1, "ae.d.b.c."}, {1, "bc.d.e.a."}, {-1, "bd.c.e.a."}, {-1, "bd.e.a.c."}, {1, "bd.e.c.a."}, {-1, "be.a.d.c."}, {1, "be.d.a.c."}, {-1, "be.d.c.a."}, {-1, "cd.e.b.a."}, {1, "de.a.b.c."}, {1, "de.c.b.a."}},
        {{-1, "ab.d.ce.."}, {1, "ae.d.bc.."}, {-1, "bc.d.ae.."}, {1, "bd.a.ce.."}, {1, "bd.c.ae.."}, {1, "ce.d.ab.."}, {-1, "de.a.bc.."}, {-1, "de.c.ab.."}, {1, "ab.d.e.c."}, {-1, "ae.d.b.c."}, {1, "bc.d.e.a."}, {-1, "bd.a.e.c."}, {-1, "bd.c.e.a."}, {-1, "ce.d.b.a."}, {1, "de.a.b.c."}, {1, "de.c.b.a."}},
        {{-1, "ae.c.bd.."}, {1, "ae.d.bc.."}, {-1, "bc.d.ae.."}, {1, "bd.c.ae.."}, {1, "ce.a.bd.."}, {-1, "de.a.bc.."}, {1, "ae.c.d.b."}, {-1, "ae.d.c.b."}, {1, "bc.d.e.a."}, {-1, "bd.c.e.a."}, {-1, "ce.a.d.b."}, {1, "ce.d.a.b."}, {-1, "ce.d.b.a."}, {1, "de.a.c.b."}, {-1, "de.c.a.b."}, {1, "de.c.b.a."}},
        {{-1, "ad.c.be.."}, {1, "ae.d.bc.."}, {-1, "bc.d.ae.."}, {1, "be.c.ad.."}, {1, "cd.a.be.."}, {1, "cd.b.ae.."}, {-1, "ce.b.ad.."}, {-1, "de.a.bc.."}, {1, "ad.c.e.b."}, {-1, "ae.d.c.b."}, {1, "bc.d.e.a."}, {-1, "be.c.d.a."}, {-1, "cd.a.e.b."}, {-1, "cd.b.e.a."}, {1, "ce.b.d.a."}, {1, "ce.d.a.b."}, {-1, "ce.d.b.a."}, {1, "de.a.c.b."}, {-1, "de.c.a.b."}, {1, "de.c.b.a."}}};
    return v;
}

const std::vector<std::vector<ComboTerm>>& gLie4PrintedCombos() {
    static const std::vector<std::vector<ComboTerm>> v = {
        {{1, "cadb"}},
        {{1, "acbd"}, {-1, "badc"}},
        {{1, "badc"}}};
    return v;
}

const std::vector<std::vector<ComboTerm>>& gRcom4PrintedCombos() {
    static const std::vector<std::vector<ComboTerm>> v = {
        {{1, "abdc"}},
        {{1, "acdb"}},
        {{1, "abcd"}, {-1, "abdc"}, {1, "acdb"}},
        {{1, "badc"}},
        {{1, "bcda"}},
        {{1, "bacd"}, {-1, "badc"}, {1, "bcda"}},
        {{1, "cadb"}},
        {{1, "cbda"}},
        {{1, "cabd"}, {-1, "cadb"}, {1, "cbda"}},
        {{1, "dacb"}},
        {{1, "dbca"}},
        {{1, "dabc"}, {-1, "dacb"}, {1, "dbca"}}};
    return v;
}

const std::vector<Decomp>& gJor5PrintedDecomps() {
    static const std::vector<Decomp> v = {
        {3, {{1, "acbde"}, {-1, "adbce"}, {-2, "adcbe"}, {1, "aebcd"}, {2, "aecbd"}, {-2, "aedbc"}, {2, "bcade"}, {-2, "bdace"}, {2, "bdcae"}, {2, "beacd"}, {-2, "becad"}, {2, "bedac"}, {-1, "cdabe"}, {1, "cdbae"}, {1, "ceabd"}, {-1, "cebad"}, {-2, "cedab"}, {-1, "deabc"}, {1, "debac"}, {-1, "decab"}}},
        {3, {{-1, "acbde"}, {1, "adbce"}, {2, "adcbe"}, {-1, "aebcd"}, {-2, "aecbd"}, {2, "aedbc"}, {-2, "bcade"}, {2, "bdace"}, {-2, "bdcae"}, {-2, "beacd"}, {2, "becad"}, {-2, "bedac"}, {1, "cdabe"}, {-1, "cdbae"}, {-1, "ceabd"}, {1, "cebad"}, {-1, "cedab"}, {1, "deabc"}, {-1, "debac"}, {-2, "decab"}}},
        {3, {{2, "acbde"}, {1, "adbce"}, {-1, "adcbe"}, {-1, "aebcd"}, {1, "aecbd"}, {-1, "aedbc"}, {1, "bcade"}, {-1, "bdace"}, {1, "bdcae"}, {1, "beacd"}, {-1, "becad"}, {1, "bedac"}, {1, "cdabe"}, {-1, "cdbae"}, {-1, "ceabd"}, {1, "cebad"}, {-1, "cedab"}, {-2, "deabc"}, {2, "debac"}, {-2, "decab"}}},
        {3, {{-2, "acbde"}, {-1, "adbce"}, {1, "adcbe"}, {1, "aebcd"}, {-1, "aecbd"}, {1, "aedbc"}, {-1, "bcade"}, {1, "bdace"}, {-1, "bdcae"}, {-1, "beacd"}, {1, "becad"}, {-1, "bedac"}, {-1, "cdabe"}, {1, "cdbae"}, {1, "ceabd"}, {-1, "cebad"}, {1, "cedab"}, {-1, "deabc"}, {1, "debac"}, {-1, "decab"}}},
        {3, {{1, "acbde"}, {-1, "adbce"}, {-2, "adcbe"}, {1, "aebcd"}, {2, "aecbd"}, {1, "aedbc"}, {2, "bcade"}, {-2, "bdace"}, {2, "bdcae"}, {2, "beacd"}, {-2, "becad"}, {2, "bedac"}, {-1, "cdabe"}, {1, "cdbae"}, {1, "ceabd"}, {-1, "cebad"}, {1, "cedab"}, {-1, "deabc"}, {1, "debac"}, {-1, "decab"}}},
        {3, {{-1, "acbde"}, {-2, "adbce"}, {-1, "adcbe"}, {2, "aebcd"}, {1, "aecbd"}, {2, "aedbc"}, {1, "bcade"}, {-1, "bdace"}, {1, "bdcae"}, {1, "beacd"}, {-1, "becad"}, {-2, "bedac"}, {-2, "cdabe"}, {2, "cdbae"}, {2, "ceabd"}, {-2, "cebad"}, {2, "cedab"}, {1, "deabc"}, {-1, "debac"}, {1, "decab"}}},
        {3, {{-1, "acbde"}, {-2, "adbce"}, {-1, "adcbe"}, {2, "aebcd"}, {1, "aecbd"}, {2, "aedbc"}, {1, "bcade"}, {-1, "bdace"}, {1, "bdcae"}, {1, "beacd"}, {-1, "becad"}, {-2, "bedac"}, {-2, "cdabe"}, {2, "cdbae"}, {2, "ceabd"}, {-2, "cebad"}, {2, "cedab"}, {1, "deabc"}, {-1, "debac"}, {1, "decab"}}},
        {3, {{-1, "acbde"}, {1, "adbce"}, {2, "adcbe"}, {-1, "aebcd"}, {-2, "aecbd"}, {-1, "aedbc"}, {-2, "bcade"}, {2, "bdace"}, {-2, "bdcae"}, {-2, "beacd"}, {2, "becad"}, {-2, "bedac"}, {1, "cdabe"}, {-1, "cdbae"}, {-1, "ceabd"}, {1, "cebad"}, {-1, "cedab"}, {-2, "deabc"}, {-1, "debac"}, {-2, "decab"}}},
        {3, {{2, "acbde"}, {1, "adbce"}, {-1, "adcbe"}, {2, "aebcd"}, {1, "aecbd"}, {-1, "aedbc"}, {1, "bcade"}, {-1, "bdace"}, {1, "bdcae"}, {1, "beacd"}, {-1, "becad"}, {1, "bedac"}, {1, "cdabe"}, {-1, "cdbae"}, {-1, "ceabd"}, {1, "cebad"}, {-1, "cedab"}, {-2, "deabc"}, {2, "debac"}, {-2, "decab"}}},
        {3, {{-2, "acbde"}, {2, "adbce"}, {1, "adcbe"}, {1, "aebcd"}, {-1, "aecbd"}, {1, "aedbc"}, {-1, "bcade"}, {1, "bdace"}, {-1, "bdcae"}, {-1, "beacd"}, {1, "becad"}, {-1, "bedac"}, {-1, "cdabe"}, {1, "cdbae"}, {1, "ceabd"}, {-1, "cebad"}, {1, "cedab"}, {-1, "deabc"}, {1, "debac"}, {-1, "decab"}}},
        {1, {{-1, "adbce"}, {-1, "bdace"}}},
        {3, {{-1, "acbde"}, {-2, "adbce"}, {-1, "adcbe"}, {-1, "aebcd"}, {1, "aecbd"}, {2, "aedbc"}, {1, "bcade"}, {-1, "bdace"}, {1, "bdcae"}, {-2, "beacd"}, {-1, "becad"}, {-2, "bedac"}, {-2, "cdabe"}, {2, "cdbae"}, {2, "ceabd"}, {-2, "cebad"}, {2, "cedab"}, {1, "deabc"}, {-1, "debac"}, {1, "decab"}}},
        {3, {{-1, "acbde"}, {-2, "adbce"}, {-1, "adcbe"}, {-1, "aebcd"}, {1, "aecbd"}, {-1, "aedbc"}, {1, "bcade"}, {-1, "bdace"}, {1, "bdcae"}, {1, "beacd"}, {-1, "becad"}, {1, "bedac"}, {-2, "cdabe"}, {2, "cdbae"}, {-1, "ceabd"}, {1, "cebad"}, {-1, "cedab"}, {1, "deabc"}, {-1, "debac"}, {1, "decab"}}},
        {3, {{2, "acbde"}, {-2, "adbce"}, {-1, "adcbe"}, {-1, "aebcd"}, {1, "aecbd"}, {-1, "aedbc"}, {1, "bcade"}, {-1, "bdace"}, {1, "bdcae"}, {1, "beacd"}, {-1, "becad"}, {1, "bedac"}, {-2, "cdabe"}, {2, "cdbae"}, {-1, "ceabd"}, {1, "cebad"}, {-1, "cedab"}, {1, "deabc"}, {-1, "debac"}, {1, "decab"}}},
        {1, {{1, "aecbd"}}},
        {1, {{1, "adcbe"}}},
        {3, {{1, "acbde"}, {-1, "adbce"}, {-2, "adcbe"}, {1, "aebcd"}, {-1, "aecbd"}, {-2, "aedbc"}, {2, "bcade"}, {-2, "bdace"}, {2, "bdcae"}, {2, "beacd"}, {-2, "beacd"}, {-2, "becad"}, {2, "bedac"}, {-1, "cdabe"}, {1, "cdbae"}, {-2, "ceabd"}, {-1, "cebad"}, {-2, "cedab"}, {-1, "deabc"}, {1, "debac"}, {-1, "decab"}}},
        {1, {{-1, "adcbe"}, {-1, "cdabe"}}},
        {3, {{1, "acbde"}, {-1, "adbce"}, {-2, "adcbe"}, {1, "aebcd"}, {-1, "aecbd"}, {1, "aedbc"}, {2, "bcade"}, {-2, "bdace"}, {2, "bdcae"}, {-1, "beacd"}, {1, "becad"}, {-1, "bedac"}, {-1, "cdabe"}, {1, "cdbae"}, {1, "ceabd"}, {-1, "cebad"}, {1, "cedab"}, {-1, "deabc"}, {1, "debac"}, {-1, "decab"}}},
        {3, {{-2, "acbde"}, {-1, "adbce"}, {-2, "adcbe"}, {1, "aebcd"}, {-1, "aecbd"}, {1, "aedbc"}, {-1, "bcade"}, {-2, "bdace"}, {2, "bdcae"}, {-1, "beacd"}, {1, "becad"}, {-1, "bedac"}, {-1, "cdabe"}, {1, "cdbae"}, {1, "ceabd"}, {-1, "cebad"}, {1, "cedab"}, {-1, "deabc"}, {1, "debac"}, {-1, "decab"}}}};
    return v;
}

const int kTable1A[4] = {0, 1, 0, 1};

const std::vector<TableRow>& table1Rows() {
    static const std::vector<TableRow> v = {
        {{1, 0, 1, 0}, {0, 1, 1, 1}, {1, 1, 1, 1}, {14, 14, 7, 8, 9, 8, -3, -5, -5, -6, -2, 1, 4, -2, -2}},
        {{1, 0, 1, 0}, {0, 1, 1, 1}, {1, 1, 2, 1}, {18, 19, 9, 10, 14, 14, -4, -8, -2, -4, 2, 4, 2, -3, -5}},
        {{1, 0, 1, 0}, {0, 1, 1, 1}, {1, 2, 1, 1}, {18, 19, 9, 10, 13, 12, -4, -7, -6, -8, -2, 2, 6, -2, -3}},
        {{1, 0, 1, 0}, {0, 1, 1, 2}, {1, 1, 2, 1}, {18, 22, 1, 2, 16, 16, -12, -16, -2, -3, 10, 12, 2, -2, -7}},
        {{1, 0, 1, 0}, {0, 1, 1, 2}, {1, 2, 1, 1}, {18, 22, 1, 2, 14, 12, -12, -15, -8, -8, 6, 10, 6, -2, -3}},
        {{1, 0, 1, 0}, {0, 1, 2, 1}, {1, 1, 1, 1}, {21, 20, 14, 16, 13, 12, 1, -2, -7, -9, -8, -3, 8, -4, -4}},
        {{1, 0, 1, 0}, {0, 1, 2, 1}, {1, 2, 1, 1}, {27, 27, 18, 20, 19, 18, 1, -3, -8, -12, -10, -3, 12, -4, -6}},
        {{1, 0, 1, 0}, {0, 1, 2, 2}, {1, 1, 2, 1}, {27, 30, 10, 12, 22, 22, -7, -13, -3, -6, 4, 8, 6, -5, -10}},
        {{1, 0, 1, 0}, {0, 1, 2, 2}, {1, 2, 2, 1}, {33, 38, 12, 14, 28, 28, -9, -16, -5, -9, 4, 10, 10, -5, -12}},
        {{1, 0, 2, 0}, {0, 1, 1, 1}, {1, 1, 1, 1}, {24, 24, 10, 12, 14, 12, -10, -11, -13, -12, -3, 3, 7, -1, 0}},
        {{1, 0, 2, 0}, {0, 1, 1, 1}, {1, 1, 2, 1}, {31, 31, 13, 15, 21, 21, -13, -15, -10, -10, 3, 7, 5, -2, -3}},
        {{1, 0, 2, 0}, {0, 1, 1, 1}, {1, 2, 1, 1}, {31, 32, 13, 15, 20, 18, -13, -15, -17, -16, -3, 5, 11, 0, 0}}};
    return v;
}

const int kComp3Row1[15] = {-4, -4, -2, -2, -3, -2, 0, 1, 1, 2, 1, 0, -2, 1, 1};

const std::vector<Relation>& deg4Relations() {
    static const std::vector<Relation> v = {
        {3, {-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
        {5, {0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
        {6, {0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
        {7, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
        {8, {1, -1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
        {9, {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
        {10, {-1, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
        {11, {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
        {12, {1, -1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
        {13, {-1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
        {14, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
        {15, {0, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}};
    return v;
}

const std::vector<std::string>& basisAnticomm4() {
    static const std::vector<std::string> v = {"ab.c.d.", "ab.d.c.", "ac.b.d.", "ac.d.b.", "ad.b.c.", "ad.c.b.", "bc.a.d.", "bc.d.a.", "bd.a.c.", "bd.c.a.", "cd.a.b.", "cd.b.a.", "ab.cd..", "ac.bd..", "ad.bc.."};
    return v;
}

const std::vector<std::string>& basisRcom4() {
    static const std::vector<std::string> v = {"ab.c.d.", "ba.c.d.", "ca.b.d.", "da.b.c.", "abc.d..", "acb.d..", "adb.c..", "bac.d..", "bca.d..", "bda.c..", "cab.d..", "cba.d..", "cda.b..", "dab.c..", "dba.c..", "dca.b..", "ab.cd..", "ab.dc..", "ac.bd..", "ac.db..", "ad.bc..", "ad.cb..", "ba.cd..", "ba.dc..", "bc.ad..", "bc.da..", "bd.ac..", "bd.ca..", "ca.bd..", "ca.db..", "cb.ad..", "cb.da..", "cd.ab..", "cd.ba..", "da.bc..", "da.cb..", "db.ac..", "db.ca..", "dc.ab..", "dc.ba..", "abcd...", "abdc...", "acbd...", "acdb...", "adbc...", "adcb...", "bacd...", "badc...", "bcad...", "bcda...", "bdac...", "bdca...", "cabd...", "cadb...", "cbad...", "cbda...", "cdab...", "cdba...", "dabc...", "dacb...", "dbac...", "dbca...", "dcab...", "dcba..."};
    return v;
}

const std::vector<std::string>& basisComm5() {
    static const std::vector<std::string> v = {"ab.c.d.e.", "ab.c.e.d.", "ab.d.c.e.", "ab.d.e.c.", "ab.e.c.d.", "ab.e.d.c.", "ac.b.d.e.", "ac.b.e.d.", "ac.d.b.e.", "ac.d.e.b.", "ac.e.b.d.", "ac.e.d.b.", "ad.b.c.e.", "ad.b.e.c.", "ad.c.b.e.", "ad.c.e.b.", "ad.e.b.c.", "ad.e.c.b.", "ae.b.c.d.", "ae.b.d.c.", "ae.c.b.d.", "ae.c.d.b.", "ae.d.b.c.", "ae.d.c.b.", "bc.a.d.e.", "bc.a.e.d.", "bc.d.a.e.", "bc.d.e.a.", "bc.e.a.d.", "bc.e.d.a.", "bd.a.c.e.", "bd.a.e.c.", "bd.c.a.e.", "bd.c.e.a.", "bd.e.a.c.", "bd.e.c.a.", "be.a.c.d.", "be.a.d.c.", "be.c.a.d.", "be.c.d.a.", "be.d.a.c.", "be.d.c.a.", "cd.a.b.e.", "cd.a.e.b.", "cd.b.a.e.", "cd.b.e.a.", "cd.e.a.b.", "cd.e.b.a.", "ce.a.b.d.", "ce.a.d.b.", "ce.b.a.d.", "ce.b.d.a.", "ce.d.a.b.", "ce.d.b.a.", "de.a.b.c.", "de.a.c.b.", "de.b.a.c.", "de.b.c.a.", "de.c.a.b.", "de.c.b.a.", "ab.cd..e.", "ab.ce..d.", "ab.de..c.", "ac.bd..e.", "ac.be..d.", "ac.de..b.", "ad.bc..e.", "ad.be..c.", "ad.ce..b.", "ae.bc..d.", "ae.bd..c.", "ae.cd..b.", "bc.de..a.", "bd.ce..a.", "be.cd..a.", "ab.c.de..", "ab.d.ce..", "ab.e.cd..", "ac.b.de..", "ac.d.be..", "ac.e.bd..", "ad.b.ce..", "ad.c.be..", "ad.e.bc..", "ae.b.cd..", "ae.c.bd..", "ae.d.bc..", "bc.a.de..", "bc.d.ae..", "bc.e.ad..", "bd.a.ce..", "bd.c.ae..", "bd.e.ac..", "be.a.cd..", "be.c.ad..", "be.d.ac..", "cd.a.be..", "cd.b.ae..", "cd.e.ab..", "ce.a.bd..", "ce.b.ad..", "ce.d.ab..", "de.a.bc..", "de.b.ac..", "de.c.ab.."};
    return v;
}

}  // namespace rbident::data
