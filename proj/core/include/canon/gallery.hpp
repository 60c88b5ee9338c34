#pragma once

#include "canon/bigint.hpp"
#include "canon/canonical.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace canon::gallery {

enum class CheckStatus { Pass, Fail, Skipped };

struct Check {
    std::string name;
    CheckStatus status = CheckStatus::Fail;
    nlohmann::json witness;
};

struct GalleryReport {
    std::string item;
    std::vector<Check> checks;

    void add(std::string name, bool pass, nlohmann::json witness = {});
    void skip(std::string name, nlohmann::json witness = {});
    bool ok() const;
    nlohmann::json to_json() const;
};

// a*x = (2b-1)(3b-1), built by the CRT construction. x != 0.
std::pair<BigInt, BigInt> lemma1_witness(const BigInt& x);

struct Lemma2Witness {
    BigInt D, y, z;      // z^2 = 1 + D y^2
    BigInt lemma3_bound; // x + x^(x-2)
};
// Smallest y >= 1 with 1 + x^3(2+x)y^2 a square. 2 <= x <= cap.
Lemma2Witness lemma2_witness(long x, long cap = 6);

GalleryReport lemma1_check(long range = 1000);
GalleryReport lemma2_check(const std::vector<long>& xs = {2, 3, 4});
GalleryReport theorem2_verify(const BigInt& k);
GalleryReport theorem3_verify(const BigInt& p, bool desk_mode);
GalleryReport theorem4_verify();
GalleryReport theorem5_verify(const BigInt& p, long obs2_q = 50, long obs2_box = 20);

struct Obs2Result {
    std::size_t units = 0, violations = 0;
};
Obs2Result observation2_scan(long q_max, long box);

CanonicalSystem theorem2_system();
CanonicalSystem theorem3_system();
CanonicalSystem theorem4_system();
CanonicalSystem theorem5_system();
CanonicalSystem z21_build();
// The same shape with 2^16 replaced by 2^2 (18 variables).
CanonicalSystem z21_scaled_build();
GalleryReport z21_verify();

CanonicalSystem sevenvar_system();
GalleryReport sevenvar_field_check(unsigned precision_bits = 512, long scan = 50);

const std::vector<std::string>& item_names();
// params: k (thm2), p (thm3, thm5), desk (thm3), range (lemma1), precision (sevenvar).
GalleryReport run_item(const std::string& item, const std::map<std::string, std::string>& params = {});

}  // namespace canon::gallery
